#pragma once

#include <map>

#include "qhn/git_kempf.hpp"

namespace qhn {

enum class TheoremStatus { Pass, Fail, NotApplicable };

struct TheoremCheck {
    TheoremStatus status = TheoremStatus::NotApplicable;
    HNResult hn;               // valid unless NotApplicable
    Filtration kempf;          // weighted; valid unless NotApplicable
    KempfValue kempf_value;
    bool weights_match_v = false;  // Gamma_i = Theta(M) - sigma(M) mu(M^i)
};

/// Computes the HN filtration (recursion) and the Kempf filtration (argmax)
/// by their independent code paths and compares them. Semistable input gives
/// NotApplicable, distinct from Fail.
TheoremCheck verify_theorem(const Representation& m, const StabilityWeights& w,
                            std::uint64_t subspace_guard = 1000000);

struct ScanGuards {
    std::uint64_t subspaces = 1000000;
    std::uint64_t representations = 100000;
};

struct ScanReport {
    Quiver quiver;
    DimVec dims;
    std::uint32_t p = 0;
    StabilityWeights weights;
    long long total = 0;
    long long semistable = 0;
    long long unstable = 0;
    long long theorem_pass = 0;
    long long theorem_fail = 0;
    std::vector<std::string> counterexamples;            // serialized payloads
    std::map<std::string, long long> strata;             // HN type -> point count
};

/// Iterates every matrix tuple over F_p, checks GIT/slope semistability
/// agreement, runs verify_theorem on unstable points, and accumulates the
/// HN-type stratification. Counts are representation points, not orbits.
ScanReport exhaustive_scan(const Quiver& quiver, const DimVec& d, std::uint32_t p,
                           const StabilityWeights& w, const ScanGuards& guards = {});

std::string scan_report_to_string(const ScanReport& report);

}  // namespace qhn
