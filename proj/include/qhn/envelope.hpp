#pragma once

#include <optional>
#include <string>

#include "qhn/quiver.hpp"

namespace qhn {

/// The graph data of a filtration: block widths b^i = sigma(M^i), the vector
/// v with v_i = Theta(M) - (sigma(M)/sigma(M^i)) Theta(M^i), and cumulative
/// points (b_i, w_i) with w^i = -b^i v_i.
struct WeightVectorData {
    std::vector<long long> block_widths;  // b^i, all >= 1
    std::vector<Rational> v;

    std::size_t size() const { return v.size(); }
    /// Cumulative graph points (b_i, w_i), i = 1..t+1; (0,0) is implicit.
    std::vector<std::pair<Rational, Rational>> points() const;
    /// Sum b^i v_i, zero for every filtration vector.
    Rational pairing_with_ones() const;
};

struct EnvelopeResult {
    std::vector<Rational> w_tilde;  // least concave majorant heights at the b_i
    std::vector<Rational> gamma;    // Gamma_i = -(w~_i - w~_{i-1}) / b^i, non-decreasing
    /// block id per index; consecutive indices share a block iff they share a
    /// Gamma value on the envelope
    std::vector<std::size_t> blocks;
};

WeightVectorData vector_of_filtration(const Representation& m, const Filtration& f,
                                      const StabilityWeights& w);

/// Least concave piecewise-linear majorant of {(0,0)} u {(b_i, w_i)}, with
/// breakpoints only at the b_i. Upper hull by monotone chain on exact
/// rationals.
EnvelopeResult concave_majorant(const WeightVectorData& data);

/// The envelope weights Gamma_v: maximizer of mu_v over the closed cone
/// x_1 <= ... <= x_{t+1}. The all-zero vector signals that no direction in
/// the cone pairs positively with v.
EnvelopeResult gamma_opt(const WeightVectorData& data);

/// Exact value of a Rayleigh quotient N / sqrt(D): N = (Gamma, v),
/// D = ||Gamma||^2 in the diagonal inner product with entries b^i.
/// zero_direction marks Gamma = 0, which compares equal to 0.
struct KempfValue {
    Rational num;
    Rational norm_square;  // > 0 unless zero_direction
    bool zero_direction = false;

    static KempfValue zero() { return {Rational(0), Rational(1), true}; }
};

/// -1, 0, +1 comparing a.num/sqrt(a.norm_square) with b's value, exactly.
int compare(const KempfValue& a, const KempfValue& b);

KempfValue mu_v_eval(const std::vector<Rational>& gamma, const WeightVectorData& data);

/// Drop chain steps whose Gamma equals the next one, restoring strictly
/// increasing weights.
Filtration coarsen(const Filtration& f, const std::vector<Rational>& gamma);

/// CSV rows (i, b_i, w_i, w~_i, Gamma_i), exact fractions, header line first.
std::string envelope_csv(const WeightVectorData& data, const EnvelopeResult& env);

/// Static SVG figure: thin polyline for the graph, thick for the envelope.
/// Coordinates scaled by `unit` (default 40 units per 1 on each axis).
std::string envelope_svg(const WeightVectorData& data, const EnvelopeResult& env,
                         long long unit = 40);

}  // namespace qhn
