import os
import subprocess

BIN = os.environ["CRANKMEX_BIN"]


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def test_stats_matches_reference_rows():
    r = run("stats", "m_1_2", "--max-n", "15")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "n,m_1_2"
    values = {int(row.split(",")[0]): int(row.split(",")[1]) for row in lines[1:]}
    expected = [1, 2, 3, 4, 6, 8, 12, 16, 23, 30, 42, 54, 73, 94]
    assert [values[n] for n in range(2, 16)] == expected


def test_stats_crank_ge_equals_m12():
    a = run("stats", "crank_ge", "--j", "0", "--max-n", "10")
    b = run("stats", "m_1_2", "--max-n", "10")
    strip = lambda out: [line.split(",")[1] for line in out.strip().splitlines()[1:]]
    assert strip(a.stdout) == strip(b.stdout)


def test_stats_unknown_name_is_usage_error():
    assert run("stats", "nonsense").returncode == 2


TABLE1_CSV = """stat,2,3,4,5,6,7,8,9,10,11,12,13,14,15
m_1_2,1,2,3,4,6,8,12,16,23,30,42,54,73,94
m_1_4,1,1,2,2,4,4,7,8,13,15,23,27,39,47
m_3_4,0,1,1,2,2,4,5,8,10,15,19,27,34,47
m_1_2_o,1,1,2,2,3,4,6,8,11,15,21,27,36,47
m_1_2_e,0,1,1,2,3,4,6,8,12,15,21,27,37,47
m_1_4_o,1,1,1,1,2,2,3,4,6,8,11,14,19,24
m_1_4_e,0,0,1,1,2,2,4,4,7,7,12,13,20,23
m_3_4_o,0,0,1,1,1,2,3,4,5,7,10,13,17,23
m_3_4_e,0,1,0,1,1,2,2,4,5,8,9,14,17,24
"""


def test_table1_bit_exact():
    r = run("table1")
    assert r.returncode == 0
    assert r.stdout == TABLE1_CSV


def test_table1_deterministic():
    assert run("table1").stdout == run("table1").stdout


def test_verify_single_and_bogus():
    assert run("verify", "ewell", "--order", "20").returncode == 0
    assert run("verify", "thm2.1", "--j", "2", "--order", "16").returncode == 0
    assert run("verify", "bogus-id").returncode == 2
    assert run("verify", "thm2.1", "--j", "99", "--order", "10").returncode == 2


def test_verify_json_report():
    r = run("verify", "ewell", "--order", "16", "--format", "json")
    assert r.returncode == 0
    assert '"id":"ewell"' in r.stdout
    assert '"pass":true' in r.stdout


def test_bijection_trace():
    r = run("bijection", "franklin", "--trace", "4,1")
    assert r.returncode == 0
    assert r.stdout.startswith("4,1 → 5")

    r = run("bijection", "crank0", "--trace", "2,2")
    assert r.returncode == 1
    assert "crank" in r.stderr


def test_bijection_check():
    r = run("bijection", "first_cancellation", "--j", "3", "--check", "9")
    assert r.returncode == 0

    r = run("bijection", "nonsense", "--check", "5")
    assert r.returncode == 2


def test_sequence():
    r = run("sequence", "a064428")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "n,m_1_2"
    assert lines[1] == "2,1"
    assert lines[-1] == "30,2953"

    r = run("sequence", "p", "--max-n", "10")
    assert r.stdout.strip().splitlines()[-1] == "10,42"
