import crankmex as cm


def test_partition_statistics():
    assert cm.crank([5, 4, 4, 2, 2]) == 5
    assert cm.crank([5, 4, 2, 2, 1, 1]) == 0
    assert cm.crank([1]) == -1
    assert cm.mex([5, 4, 4, 2, 2]) == 1
    assert cm.mex([4, 3, 2, 1]) == 5
    assert cm.conjugate([5, 4, 4, 2, 2]) == [5, 5, 3, 3, 1]
    assert cm.durfee_rect([5, 4, 4, 2, 2], 2) == 2


def test_frobenius_roundtrip():
    top, bottom = cm.frobenius([5, 4, 4, 2, 2])
    assert top == [4, 2, 1] and bottom == [4, 3, 0]
    assert cm.from_frobenius(top, bottom) == [5, 4, 4, 2, 2]


def test_counting():
    assert len(cm.enumerate_partitions(10)) == 42
    assert cm.M(0, 4) == 1
    assert cm.M(0, 1) == -1
    assert cm.mex_count(1, 2, 10) == 23
    assert cm.distinct_count(5) == 3
    assert cm.frobenius_count(4, "no_zero") == 2
    assert cm.crank_count(6, lambda m: m == 0) == 1
    assert cm.crank_ge_count(10, 0) == cm.mex_count(1, 2, 10)


def test_reference_table():
    ref = cm.odd_mex_reference()
    assert ref["first_n"] == 2
    assert ref["values"][:4] == [1, 2, 3, 4]
    rows = cm.table1()
    assert rows[0]["name"] == "m_1_2"
    assert rows[0]["values"] == [1, 2, 3, 4, 6, 8, 12, 16, 23, 30, 42, 54, 73, 94]


def test_verify():
    report = cm.verify("ewell", order=24)
    assert report["pass"] is True
    report = cm.verify("thm2.1", {"j": 1}, order=20)
    assert report["pass"] is True


def test_bijections():
    assert cm.franklin([4, 1]) == [5]
    assert cm.franklin([5]) == [4, 1]
    assert cm.crank0_map([4, 3, 1, 1]) == [4, 3, 2]
    assert cm.kth_excess_split([7, 1], 5, 2) == ([5], [2, 1])
    report = cm.check_involution("cor36", 8)
    assert report["all_ok"] is True


def test_series():
    assert cm.pentagonal_coeffs(7) == [1, -1, -1, 0, 0, 1, 0, 1]
    assert cm.gaussian_binomial_coeffs(4, 2, 4) == [1, 1, 2, 1, 1]
