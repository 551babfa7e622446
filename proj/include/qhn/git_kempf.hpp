#pragma once

#include "qhn/envelope.hpp"
#include "qhn/stability.hpp"

namespace qhn {

/// Character exponents e_v = Theta(d) sigma_v - sigma(d) Theta_v. Always
/// satisfies sum e_v d_v = 0.
std::vector<long long> character_exponents(const DimVec& d, const StabilityWeights& w);

/// Diagonal 1-PS weight data: per vertex, (weight, multiplicity) pairs with
/// positive multiplicity, weights increasing.
struct OnePSWeights {
    std::vector<std::vector<std::pair<Rational, long long>>> per_vertex;
};

OnePSWeights one_ps_from_filtration(const Filtration& f);

/// Hilbert-Mumford pairing from weight-space data:
/// sum_v e_v * sum_i Gamma_{v,i} dim M_v^i.
Rational numerical_mu_weights(const Representation& m, const OnePSWeights& ops,
                              const StabilityWeights& w);

/// Same pairing from filtration data: sum_i Gamma_i [Theta(M) sigma(M^i) -
/// sigma(M) Theta(M^i)].
Rational numerical_mu_filtration(const Representation& m, const Filtration& f,
                                 const StabilityWeights& w);

/// Kempf function value: numerator = numerical_mu, denominator^2 =
/// sum sigma(M^i) Gamma_i^2.
KempfValue kempf_value(const Representation& m, const Filtration& f,
                       const StabilityWeights& w);

/// All strictly increasing chains of proper nonzero subreps, each extended by
/// the full representation, in a deterministic order.
std::vector<Filtration> enumerate_chains(const Representation& m,
                                         std::uint64_t subspace_guard = 1000000);

/// Hilbert-Mumford semistability: no chain admits envelope-optimal weights
/// with positive pairing. Agrees with is_semistable (checked by callers and
/// the verify module).
bool hm_semistable(const Representation& m, const StabilityWeights& w,
                   std::uint64_t subspace_guard = 1000000);

struct KempfResult {
    Filtration filtration;  // weighted, strictly increasing Gamma
    KempfValue value;       // positive
};

/// Argmax of the Kempf function over chains with envelope-optimal weights.
/// Throws NotUnstable on semistable input; a tie between distinct coarsened
/// maximizers raises InternalContradiction.
KempfResult kempf_filtration(const Representation& m, const StabilityWeights& w,
                             std::uint64_t subspace_guard = 1000000);

}  // namespace qhn
