#pragma once

#include <string>

#include "qhn/envelope.hpp"
#include "qhn/git_kempf.hpp"
#include "qhn/stability.hpp"

namespace qhn {

std::string format_dimvec(const DimVec& d);
std::string format_subspace(const Subspace& s);

/// One indented line per vertex: "  v: dim k, basis [[...]]".
std::string format_subrep(const Quiver& q, const Subrep& s, const std::string& indent = "  ");

std::string format_representation(const Representation& m);

/// "HN filtration: ..." block with steps, quotient dims, quotient slopes.
std::string format_hn(const Quiver& q, const HNResult& hn);

/// "Kempf filtration: ..." block with weighted steps and the Kempf value.
std::string format_kempf(const Quiver& q, const KempfResult& kempf);

/// Truncated decimal rendering of |num|/sqrt(norm_square) with sign.
std::string decimal_of_ratio_root(const Rational& num, const Rational& norm_square,
                                  unsigned digits);

/// Self-describing header: quiver, field, d, theta, sigma, character exponents.
std::string format_header(const Quiver& q, const Field& f, const DimVec& d,
                          const StabilityWeights& w);

}  // namespace qhn
