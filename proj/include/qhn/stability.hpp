#pragma once

#include "qhn/quiver.hpp"

namespace qhn {

/// All subrepresentations of M over its prime field, zero and M included,
/// sorted by subrep_less (total dim first). Throws ResourceLimit when a
/// per-vertex subspace lattice exceeds the guard.
std::vector<Subrep> enumerate_subreps(const Representation& m,
                                      std::uint64_t subspace_guard = 1000000);

bool is_semistable(const Representation& m, const StabilityWeights& w,
                   std::uint64_t subspace_guard = 1000000);
bool is_stable(const Representation& m, const StabilityWeights& w,
               std::uint64_t subspace_guard = 1000000);

/// The unique nonzero subrep maximizing (slope, total dimension). May be M
/// itself (always is when M is semistable). A surviving tie between distinct
/// maximizers raises InternalContradiction.
Subrep max_destabilizing(const Representation& m, const StabilityWeights& w,
                         std::uint64_t subspace_guard = 1000000,
                         bool reverse_enumeration = false);

/// Restriction of M to a subrepresentation, in the RREF basis coordinates of
/// each U_v.
Representation restrict_representation(const Representation& m, const Subrep& s);

/// Coordinates of `sub` inside `big`'s per-vertex RREF bases (requires
/// sub <= big vertexwise).
Subrep transport_into(const Subrep& sub, const Subrep& big);

/// The representation M_i / M_{i-1} for two nested subreps of M.
Representation layer_representation(const Representation& m, const Subrep& lower,
                                    const Subrep& upper);

struct HNResult {
    Filtration filtration;             // unweighted
    std::vector<Rational> slopes;      // strictly decreasing quotient slopes
    std::vector<DimVec> quotient_dims;
};

/// Harder-Narasimhan filtration by recursion on maximal destabilizing
/// subreps. Each quotient is re-verified semistable; a failed certificate
/// raises InternalContradiction.
HNResult hn_filtration(const Representation& m, const StabilityWeights& w,
                       std::uint64_t subspace_guard = 1000000,
                       bool reverse_enumeration = false);

/// Numerical invariants of the HN filtration: (quotient dims, quotient slope).
using HNType = std::vector<std::pair<DimVec, Rational>>;

HNType hn_type(const Representation& m, const StabilityWeights& w,
               std::uint64_t subspace_guard = 1000000);

std::string hn_type_to_string(const HNType& t);

}  // namespace qhn
