#include "doctest.h"

#include <set>

#include "crankmex/identities.hpp"
#include "crankmex/builders.hpp"

using namespace crankmex;
namespace ids = crankmex::identities;

TEST_CASE("catalog is the fixed twenty-entry registry") {
    const auto& entries = ids::catalog();
    CHECK(entries.size() == 20);
    std::set<std::string> ids_seen;
    for (const auto& e : entries) ids_seen.insert(e.id);
    for (const char* id :
         {"garvan-bivariate", "garvan-fixed-m", "crank-symmetry", "qbinomial-excess", "thm1.2",
          "thm2.1", "lemma2.2", "fine-specialized", "ewell", "m14-gf", "m34-gf", "prop-o13",
          "thm-4ways", "cor-oe", "carlitz", "parity-m12", "oddstats", "huh-kim", "cor3.8",
          "frobenius-crank"})
        CHECK(ids_seen.contains(id));
}

TEST_CASE("verify runs single entries") {
    CHECK(ids::verify("thm2.1", {{"j", 0}}, 24).pass);
    CHECK(ids::verify("thm2.1", {{"j", 3}}, 24).pass);
    CHECK(ids::verify("ewell", {}, 30).pass);
    CHECK(ids::verify("garvan-fixed-m", {{"m", -5}}, 20).pass);

    CHECK_THROWS_AS(ids::verify("bogus-id", {}, 10), std::invalid_argument);
    CHECK_THROWS_AS(ids::verify("thm2.1", {{"j", 9}}, 10), std::invalid_argument);
    CHECK_THROWS_AS(ids::verify("thm2.1", {}, 10), std::invalid_argument);
    CHECK_THROWS_AS(ids::verify("ewell", {{"j", 1}}, 10), std::invalid_argument);
    CHECK_THROWS_AS(ids::verify("ewell", {}, 0), std::invalid_argument);
}

TEST_CASE("a corrupted entry fails with a deterministic first mismatch") {
    ids::IdentityEntry corrupted{
        "corrupted-self-test",
        "harness self-test",
        {},
        [](const ids::Params&, int order, const ids::Tables&, ids::VerifyReport& r) {
            Series lhs = pochhammer(1, 1, kInfinite, order);
            Series rhs = lhs;
            rhs.add_coeff(3, 1);
            ids::compare_series(lhs, rhs, r);
        }};
    ids::Tables tables(10);
    ids::VerifyReport r = ids::verify(corrupted, {}, 10, tables);
    CHECK_FALSE(r.pass);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(r.first_mismatch->exponents == std::vector<long long>{3});
    CHECK(r.first_mismatch->lhs == "0");
    CHECK(r.first_mismatch->rhs == "1");
    CHECK(r.to_json().find("\"pass\":false") != std::string::npos);
}

TEST_CASE("run_jobs with an empty grid yields no reports") {
    CHECK(ids::run_jobs({}, 10).empty());
}

TEST_CASE("whole catalog passes at a small order") {
    for (const auto& r : ids::verify_all(12)) {
        INFO(r.to_json());
        CHECK(r.pass);
    }
}

TEST_CASE("degenerate truncation order 1 still passes") {
    for (const auto& r : ids::verify_all(1)) {
        INFO(r.to_json());
        CHECK(r.pass);
    }
}
