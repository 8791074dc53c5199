#include "crankmex/stats.hpp"

#include <algorithm>
#include <sstream>

namespace crankmex {

const StatTable& odd_mex_reference() {
    static const StatTable table{
        "m_1_2",
        2,
        {1,   2,   3,   4,   6,   8,   12,  16,  23,   30,   42,   54,   73,   94,  124,
         158, 206, 260, 334, 420, 532, 664, 835, 1034, 1288, 1588, 1962, 2404, 2953}};
    return table;
}

namespace {

struct StatSpec {
    std::string name;
    bool uses_j;
};

const std::vector<StatSpec>& specs() {
    static const std::vector<StatSpec> s{
        {"m_1_2", false},   {"m_1_4", false},   {"m_3_4", false},
        {"m_1_2_o", false}, {"m_1_2_e", false}, {"m_1_4_o", false},
        {"m_1_4_e", false}, {"m_3_4_o", false}, {"m_3_4_e", false},
        {"crank_ge", true}, {"crank_le_neg", true},
        {"crank0", false},  {"m_le0_e", false}, {"m_le0_o", false},
        {"p", false},       {"q", false},       {"q_o", false},
        {"q_e", false},     {"frob_no_zero", false}, {"frob_no_j_top", true}};
    return s;
}

// p(n) by Euler's pentagonal recurrence; enumeration stays the oracle
// for it in the tests.
Count partition_count(int n) {
    std::vector<Count> memo{1};
    for (int m = 1; m <= n; ++m) {
        Count total = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            Count term = 0;
            if (g1 <= m) term = checked_add(term, memo[static_cast<std::size_t>(m - g1)]);
            if (g2 <= m) term = checked_add(term, memo[static_cast<std::size_t>(m - g2)]);
            total = checked_add(total, k % 2 == 1 ? term : -term);
        }
        memo.push_back(total);
    }
    return memo[static_cast<std::size_t>(n)];
}

Count stat_value(const std::string& name, int n, int j, const CrankTable* crank,
                 const MexTable* mex) {
    if (name == "m_1_2") return mex->at(n).m12;
    if (name == "m_1_4") return mex->at(n).m14;
    if (name == "m_3_4") return mex->at(n).m34;
    if (name == "m_1_2_o") return mex->at(n).m12_odd;
    if (name == "m_1_2_e") return mex->at(n).m12_even;
    if (name == "m_1_4_o") return mex->at(n).m14_odd;
    if (name == "m_1_4_e") return mex->at(n).m14_even;
    if (name == "m_3_4_o") return mex->at(n).m34_odd;
    if (name == "m_3_4_e") return mex->at(n).m34_even;
    if (name == "crank_ge") return crank->crank_ge(n, j);
    if (name == "crank_le_neg") return crank->crank_le_neg(n, j);
    if (name == "crank0") return crank->enumerated(0, n);
    if (name == "m_le0_e") return crank->le0_even_length(n);
    if (name == "m_le0_o") return crank->le0_odd_length(n);
    if (name == "p") return partition_count(n);
    if (name == "q") return distinct_count(n);
    if (name == "q_o") return distinct_count(n, LengthParity::odd);
    if (name == "q_e") return distinct_count(n, LengthParity::even);
    if (name == "frob_no_zero") return frobenius_count(n, symbol_has_no_zero);
    if (name == "frob_no_j_top")
        return frobenius_count(n, [j](const FrobeniusSymbol& f) {
            return symbol_top_row_lacks(f, j);
        });
    throw std::invalid_argument("unknown statistic: " + name);
}

} // namespace

const std::vector<std::string>& stat_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const StatSpec& s : specs()) out.push_back(s.name);
        return out;
    }();
    return names;
}

bool stat_uses_j(const std::string& name) {
    for (const StatSpec& s : specs())
        if (s.name == name) return s.uses_j;
    throw std::invalid_argument("unknown statistic: " + name);
}

StatTable stat_table(const std::string& name, int max_n, int j) {
    if (max_n < 0) throw std::invalid_argument("stat_table: max_n must be >= 0");
    stat_uses_j(name);  // validates the name
    bool needs_crank = name.starts_with("crank") || name.starts_with("m_le0");
    bool needs_mex = name.starts_with("m_1") || name.starts_with("m_3");
    std::optional<CrankTable> crank;
    std::optional<MexTable> mex;
    if (needs_crank) crank.emplace(max_n);
    if (needs_mex) mex.emplace(max_n);
    StatTable out{name, 0, {}};
    out.values.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n)
        out.values.push_back(
            stat_value(name, n, j, crank ? &*crank : nullptr, mex ? &*mex : nullptr));
    return out;
}

std::vector<StatTable> table1() {
    static const char* row_names[] = {"m_1_2",   "m_1_4",   "m_3_4",
                                      "m_1_2_o", "m_1_2_e", "m_1_4_o",
                                      "m_1_4_e", "m_3_4_o", "m_3_4_e"};
    MexTable mex(15);
    std::vector<StatTable> rows;
    for (const char* name : row_names) {
        StatTable row{name, 2, {}};
        for (int n = 2; n <= 15; ++n)
            row.values.push_back(stat_value(name, n, 0, nullptr, &mex));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string rows_to_csv(const std::vector<StatTable>& rows) {
    std::ostringstream os;
    os << "stat";
    if (!rows.empty())
        for (int n = rows.front().first_n; n <= rows.front().last_n(); ++n) os << "," << n;
    os << "\n";
    for (const StatTable& row : rows) {
        os << row.name;
        for (Count v : row.values) os << "," << v;
        os << "\n";
    }
    return os.str();
}

std::string table_to_csv(const StatTable& table) {
    std::ostringstream os;
    os << "n," << table.name << "\n";
    for (std::size_t i = 0; i < table.values.size(); ++i)
        os << table.first_n + static_cast<int>(i) << "," << table.values[i] << "\n";
    return os.str();
}

std::string table_to_json(const StatTable& table) {
    std::ostringstream os;
    os << "{\"name\":\"" << table.name << "\",\"first_n\":" << table.first_n << ",\"values\":[";
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        if (i) os << ",";
        os << table.values[i];
    }
    os << "]}";
    return os.str();
}

std::string rows_to_json(const std::vector<StatTable>& rows) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ",";
        os << table_to_json(rows[i]);
    }
    os << "]";
    return os.str();
}

} // namespace crankmex
