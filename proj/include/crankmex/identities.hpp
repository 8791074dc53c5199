#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crankmex/enumerate.hpp"
#include "crankmex/series.hpp"

namespace crankmex::identities {

/// Named integer parameters for a catalog entry, e.g. {"j": 2}.
using Params = std::map<std::string, int>;

struct ParamRange {
    std::string name;
    int lo, hi;
};

/// Shared enumeration tables so a catalog sweep builds them only once.
struct Tables {
    CrankTable crank;
    MexTable mex;

    explicit Tables(int max_n) : crank(max_n), mex(max_n) {}
};

struct Mismatch {
    std::vector<long long> exponents;
    std::string lhs, rhs;
};

struct VerifyReport {
    std::string id;
    Params params;
    int order = 0;
    bool pass = true;
    std::optional<Mismatch> first_mismatch;
    long long ms = 0;

    std::string to_json() const;
};

/// One verifiable identity. `run` fills in pass/first_mismatch.
struct IdentityEntry {
    std::string id;
    std::string description;
    std::vector<ParamRange> params;
    std::function<void(const Params&, int order, const Tables&, VerifyReport&)> run;
};

/// The fixed registry of twenty entries; ids are a stable contract.
const std::vector<IdentityEntry>& catalog();

/// Looks up an entry by id; throws std::invalid_argument if unknown.
const IdentityEntry& find_entry(const std::string& id);

/// Runs one entry. Throws std::invalid_argument for an unknown id,
/// missing/unknown parameters, parameters outside their declared range,
/// or order < 1.
VerifyReport verify(const std::string& id, const Params& params, int order);
VerifyReport verify(const IdentityEntry& entry, const Params& params, int order,
                    const Tables& tables);

/// (id, params) pairs covering an entry's default grid.
std::vector<std::pair<std::string, Params>> default_grid();

/// Runs an explicit job list in the given order; failures are reported,
/// never thrown. An empty job list yields an empty report list.
std::vector<VerifyReport> run_jobs(const std::vector<std::pair<std::string, Params>>& jobs,
                                   int order);

/// Runs the whole catalog over the default grid.
std::vector<VerifyReport> verify_all(int order);

// Comparison helpers shared by the entries (exposed for harness tests).
void compare_series(const Series& lhs, const Series& rhs, VerifyReport& report,
                    std::vector<long long> tag = {});
void compare_counts(Count lhs, Count rhs, std::vector<long long> exponents,
                    VerifyReport& report);

} // namespace crankmex::identities
