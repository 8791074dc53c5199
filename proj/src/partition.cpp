#include "crankmex/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace crankmex {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

long long Partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

long long FrobeniusSymbol::weight() const noexcept {
    long long w = static_cast<long long>(top.size());
    w = std::accumulate(top.begin(), top.end(), w);
    return std::accumulate(bottom.begin(), bottom.end(), w);
}

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = (comma == std::string::npos) ? text.size() : comma;
        std::size_t b = pos, e = end;
        while (b < e && text[b] == ' ') ++b;
        while (e > b && text[e - 1] == ' ') --e;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + b, text.data() + e, value);
        if (ec != std::errc() || ptr != text.data() + e)
            throw std::invalid_argument(std::string(what) + ": expected an integer, got \"" +
                                        text.substr(pos, end - pos) + "\"");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size())
            throw std::invalid_argument(std::string(what) + ": trailing comma");
    }
    return out;
}

std::string format_int_list(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

void require_strictly_decreasing_nonneg(const std::vector<int>& row, const char* which) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] < 0)
            throw std::invalid_argument(std::string("frobenius ") + which +
                                        " row entries must be nonnegative");
        if (i > 0 && row[i - 1] <= row[i])
            throw std::invalid_argument(std::string("frobenius ") + which +
                                        " row must be strictly decreasing");
    }
}

} // namespace

Partition parse_partition(const std::string& text) {
    return Partition(parse_int_list(text, "partition"));
}

std::string format_partition(const Partition& p) {
    return format_int_list(p.parts());
}

FrobeniusSymbol parse_frobenius(const std::string& text) {
    std::size_t bar = text.find('|');
    if (bar == std::string::npos)
        throw std::invalid_argument("frobenius symbol needs a '|' between rows");
    FrobeniusSymbol f{parse_int_list(text.substr(0, bar), "frobenius top"),
                      parse_int_list(text.substr(bar + 1), "frobenius bottom")};
    require_strictly_decreasing_nonneg(f.top, "top");
    require_strictly_decreasing_nonneg(f.bottom, "bottom");
    if (f.top.size() != f.bottom.size())
        throw std::invalid_argument("frobenius rows must have equal length");
    return f;
}

std::string format_frobenius(const FrobeniusSymbol& f) {
    return format_int_list(f.top) + "|" + format_int_list(f.bottom);
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(p.part(0)), 0);
    for (int part : p.parts())
        for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
    return Partition(std::move(cols));
}

int omega(const Partition& p) {
    int count = 0;
    for (auto it = p.parts().rbegin(); it != p.parts().rend() && *it == 1; ++it) ++count;
    return count;
}

int mu(const Partition& p) {
    int w = omega(p);
    int count = 0;
    for (int part : p.parts()) {
        if (part > w)
            ++count;
        else
            break;
    }
    return count;
}

int crank(const Partition& p) {
    if (p.empty()) return 0;
    int w = omega(p);
    if (w == 0) return p.part(0);
    return mu(p) - w;
}

int mex(const Partition& p) {
    // Parts are sorted decreasing; scan from the tail for 1, 2, 3, ...
    int want = 1;
    for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) {
        if (*it == want) ++want;
        else if (*it > want) break;
    }
    return want;
}

int durfee_rect(const Partition& p, int j) {
    if (j < 0) throw std::invalid_argument("durfee_rect: j must be >= 0");
    int d = 0;
    while (d < p.length() && p.part(static_cast<std::size_t>(d)) >= d + 1 + j) ++d;
    return d;
}

FrobeniusSymbol frobenius(const Partition& p) {
    int d = durfee_rect(p, 0);
    FrobeniusSymbol f;
    f.top.reserve(static_cast<std::size_t>(d));
    f.bottom.reserve(static_cast<std::size_t>(d));
    Partition conj = conjugate(p);
    for (int i = 0; i < d; ++i) {
        f.top.push_back(p.part(static_cast<std::size_t>(i)) - (i + 1));
        f.bottom.push_back(conj.part(static_cast<std::size_t>(i)) - (i + 1));
    }
    return f;
}

Partition from_frobenius(const FrobeniusSymbol& f) {
    require_strictly_decreasing_nonneg(f.top, "top");
    require_strictly_decreasing_nonneg(f.bottom, "bottom");
    if (f.top.size() != f.bottom.size())
        throw std::invalid_argument("frobenius rows must have equal length");
    int d = f.columns();
    if (d == 0) return {};
    std::vector<int> parts;
    for (int i = 0; i < d; ++i) parts.push_back(f.top[static_cast<std::size_t>(i)] + i + 1);
    // Row r > d of the partition counts the columns j <= d whose height
    // bottom[j] + j reaches r; columns beyond d never reach below row d.
    int rows = f.bottom[0] + 1;
    for (int r = d + 1; r <= rows; ++r) {
        int len = 0;
        for (int i = 0; i < d; ++i)
            if (f.bottom[static_cast<std::size_t>(i)] + i + 1 >= r) ++len;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

bool symbol_has_no_zero(const FrobeniusSymbol& f) {
    // Rows are strictly decreasing, so only the last entries can be 0.
    if (f.columns() == 0) return true;
    return f.top.back() != 0 && f.bottom.back() != 0;
}

bool symbol_top_row_lacks(const FrobeniusSymbol& f, int j) {
    return std::find(f.top.begin(), f.top.end(), j) == f.top.end();
}

bool symbol_bottom_first_two_differ_by_one(const FrobeniusSymbol& f) {
    if (f.columns() == 0) return true;
    if (f.columns() == 1) return f.bottom[0] == 1;
    return f.bottom[0] - f.bottom[1] == 1;
}

} // namespace crankmex
