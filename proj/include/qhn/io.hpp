#pragma once

#include <string>

#include "qhn/quiver.hpp"

namespace qhn {

/// A parsed problem file. Matrices are optional: the scan command works from
/// quiver + weights + dims alone.
struct Problem {
    Quiver quiver;
    Field field;
    DimVec dims;
    StabilityWeights weights;
    bool has_matrices = false;
    std::vector<Matrix> matrices;  // aligned with quiver.arrows when present

    Representation representation() const;
};

/// Parses and validates a JSON problem. Error messages name the offending
/// key, vertex, or arrow.
Problem parse_problem(const std::string& text);

std::string serialize_problem(const Problem& p);

}  // namespace qhn
