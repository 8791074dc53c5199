// Python bindings for the main operations: partition statistics,
// counting tables, the identity catalog, and the combinatorial maps.
// Partitions cross the boundary as plain lists of ints.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crankmex/bijections.hpp"
#include "crankmex/builders.hpp"
#include "crankmex/identities.hpp"
#include "crankmex/stats.hpp"

namespace py = pybind11;
using namespace crankmex;
namespace bij = crankmex::bijections;
namespace ids = crankmex::identities;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

LengthParity parse_parity(const std::string& parity) {
    if (parity == "any") return LengthParity::any;
    if (parity == "odd") return LengthParity::odd;
    if (parity == "even") return LengthParity::even;
    throw std::invalid_argument("parity must be any, odd, or even");
}

std::function<bool(const FrobeniusSymbol&)> named_predicate(const std::string& name, int j) {
    if (name == "no_zero") return symbol_has_no_zero;
    if (name == "no_j_in_top_row")
        return [j](const FrobeniusSymbol& f) { return symbol_top_row_lacks(f, j); };
    if (name == "bottom_first_two_differ_by_one") return symbol_bottom_first_two_differ_by_one;
    throw std::invalid_argument("unknown Frobenius predicate: " + name);
}

py::list series_coeffs(const Series& s) {
    py::list out;
    for (int k = 0; k <= s.order(); ++k) out.append(py::int_(py::str(s.coeff(k).str())));
    return out;
}

py::dict report_to_dict(const ids::VerifyReport& r) {
    py::dict d;
    d["id"] = r.id;
    py::dict params;
    for (const auto& [key, value] : r.params) params[py::str(key)] = value;
    d["params"] = params;
    d["order"] = r.order;
    d["pass"] = r.pass;
    if (r.first_mismatch) {
        py::dict m;
        m["exponents"] = r.first_mismatch->exponents;
        m["lhs"] = r.first_mismatch->lhs;
        m["rhs"] = r.first_mismatch->rhs;
        d["first_mismatch"] = m;
    } else {
        d["first_mismatch"] = py::none();
    }
    d["ms"] = r.ms;
    return d;
}

py::dict map_report_to_dict(const bij::MapReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["domain_size"] = r.domain_size;
    d["involution_ok"] = r.involution_ok;
    d["weight_ok"] = r.weight_ok;
    d["sign_ok"] = r.sign_ok;
    d["fixed_point_ok"] = r.fixed_point_ok;
    d["fixed_points"] = r.fixed_points;
    py::dict checks;
    for (const auto& [label, ok] : r.named_checks) checks[py::str(label)] = ok;
    d["checks"] = checks;
    d["all_ok"] = r.all_ok();
    d["ms"] = r.ms;
    return d;
}

py::dict stat_to_dict(const StatTable& t) {
    py::dict d;
    d["name"] = t.name;
    d["first_n"] = t.first_n;
    d["values"] = t.values;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact integer-partition statistics: crank, mex, Frobenius symbols, "
              "q-series identity checks, and executable bijections";

    m.def("parse_partition",
          [](const std::string& text) { return parse_partition(text).parts(); });
    m.def("format_partition",
          [](const std::vector<int>& p) { return format_partition(to_partition(p)); });
    m.def("crank", [](const std::vector<int>& p) { return crank(to_partition(p)); });
    m.def("mex", [](const std::vector<int>& p) { return mex(to_partition(p)); });
    m.def("omega", [](const std::vector<int>& p) { return omega(to_partition(p)); });
    m.def("mu", [](const std::vector<int>& p) { return mu(to_partition(p)); });
    m.def("conjugate",
          [](const std::vector<int>& p) { return conjugate(to_partition(p)).parts(); });
    m.def("durfee_rect",
          [](const std::vector<int>& p, int j) { return durfee_rect(to_partition(p), j); },
          py::arg("parts"), py::arg("j") = 0);
    m.def("frobenius", [](const std::vector<int>& p) {
        FrobeniusSymbol f = frobenius(to_partition(p));
        return py::make_tuple(f.top, f.bottom);
    });
    m.def("from_frobenius", [](const std::vector<int>& top, const std::vector<int>& bottom) {
        return from_frobenius(FrobeniusSymbol{top, bottom}).parts();
    });

    m.def("enumerate_partitions", [](int n) {
        py::list out;
        for_each_partition(n, [&out](const Partition& p) { out.append(p.parts()); });
        return out;
    });

    m.def(
        "M",
        [](int mm, int n) {
            CrankTable t(n < 0 ? 0 : n);
            return t.M(mm, n);
        },
        py::arg("m"), py::arg("n"));
    m.def(
        "crank_ge_count",
        [](int n, int j) {
            CrankTable t(n < 0 ? 0 : n);
            return t.crank_ge(n, j);
        },
        py::arg("n"), py::arg("j") = 0);
    m.def(
        "crank_count",
        [](int n, const std::function<bool(int)>& predicate) {
            CrankTable t(n < 0 ? 0 : n);
            return t.crank_count(n, predicate);
        },
        py::arg("n"), py::arg("predicate"));
    m.def(
        "mex_count",
        [](int a, int b, int n, const std::string& parity) {
            return mex_count(a, b, n, parse_parity(parity));
        },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("parity") = "any");
    m.def(
        "distinct_count",
        [](int n, const std::string& parity) { return distinct_count(n, parse_parity(parity)); },
        py::arg("n"), py::arg("parity") = "any");
    m.def(
        "frobenius_count",
        [](int n, const std::string& predicate, int j) {
            return frobenius_count(n, named_predicate(predicate, j));
        },
        py::arg("n"), py::arg("predicate"), py::arg("j") = 0);

    m.def("stat_table",
          [](const std::string& name, int max_n, int j) {
              return stat_to_dict(stat_table(name, max_n, j));
          },
          py::arg("name"), py::arg("max_n"), py::arg("j") = 0);
    m.def("stat_names", [] { return stat_names(); });
    m.def("table1", [] {
        py::list out;
        for (const StatTable& row : table1()) out.append(stat_to_dict(row));
        return out;
    });
    m.def("odd_mex_reference", [] { return stat_to_dict(odd_mex_reference()); });

    m.def("pochhammer_coeffs",
          [](int base, int step, int count, int order, bool plus) {
              return series_coeffs(pochhammer(base, step, count, order,
                                              plus ? FactorSign::plus : FactorSign::minus));
          },
          py::arg("base"), py::arg("step"), py::arg("count"), py::arg("order"),
          py::arg("plus") = false);
    m.def("pentagonal_coeffs", [](int order) { return series_coeffs(pentagonal_series(order)); });
    m.def("gaussian_binomial_coeffs", [](int n, int d, int order) {
        return series_coeffs(gaussian_binomial(n, d, order));
    });

    m.def(
        "verify",
        [](const std::string& id, const std::map<std::string, int>& params, int order) {
            return report_to_dict(ids::verify(id, params, order));
        },
        py::arg("id"), py::arg("params") = std::map<std::string, int>{}, py::arg("order") = 40);
    m.def(
        "verify_all",
        [](int order) {
            py::list out;
            for (const auto& r : ids::verify_all(order)) out.append(report_to_dict(r));
            return out;
        },
        py::arg("order") = 40);
    m.def("catalog_ids", [] {
        std::vector<std::string> out;
        for (const auto& e : ids::catalog()) out.push_back(e.id);
        return out;
    });

    m.def("franklin",
          [](const std::vector<int>& p) { return bij::franklin(to_partition(p)).parts(); });
    m.def("cor38_involution", [](const std::vector<int>& p) {
        return bij::cor38_involution(to_partition(p)).parts();
    });
    m.def("crank0_map",
          [](const std::vector<int>& p) { return bij::crank0_map(to_partition(p)).parts(); });
    m.def(
        "crank_le_neg_j_map",
        [](const std::vector<int>& p, int j) {
            return bij::crank_le_neg_j_map(to_partition(p), j).parts();
        },
        py::arg("parts"), py::arg("j") = 0);
    m.def(
        "kth_excess_split",
        [](const std::vector<int>& p, int n, int d) {
            auto [high, low] = bij::kth_excess_split(to_partition(p), n, d);
            return py::make_tuple(high.parts(), low.parts());
        },
        py::arg("parts"), py::arg("n"), py::arg("d"));
    m.def(
        "kth_excess_merge",
        [](const std::vector<int>& high, const std::vector<int>& low, int n, int d) {
            return bij::kth_excess_merge(to_partition(high), to_partition(low), n, d).parts();
        },
        py::arg("high"), py::arg("low"), py::arg("n"), py::arg("d"));

    m.def(
        "check_involution",
        [](const std::string& name, int max_weight, int j) {
            return map_report_to_dict(bij::check_named_involution(name, max_weight, j));
        },
        py::arg("name"), py::arg("max_weight"), py::arg("j") = 0);
    m.def(
        "check_bijection",
        [](const std::string& name, int max_n, int j) {
            return map_report_to_dict(bij::check_named_bijection(name, max_n, j));
        },
        py::arg("name"), py::arg("max_n"), py::arg("j") = 0);
    m.def("involution_names", [] { return bij::involution_names(); });
    m.def("bijection_names", [] { return bij::bijection_names(); });
}
