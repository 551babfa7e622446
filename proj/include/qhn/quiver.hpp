#pragma once

#include <string>
#include <vector>

#include "qhn/linalg.hpp"

namespace qhn {

/// Finite quiver: ordered vertices, ordered arrows. Loops and parallel
/// arrows allowed; arrowless quivers allowed.
struct Quiver {
    struct Arrow {
        std::string id;
        std::size_t src = 0;  // index into vertices
        std::size_t tgt = 0;

        bool operator==(const Arrow&) const = default;
    };

    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    bool operator==(const Quiver&) const = default;

    std::size_t vertex_index(const std::string& name) const;
    void validate() const;
};

/// Per-vertex non-negative integers, indexed by the quiver's vertex order.
using DimVec = std::vector<long long>;

bool is_zero(const DimVec& d);
DimVec dimvec_sub(const DimVec& a, const DimVec& b);

/// Theta arbitrary, sigma strictly positive, both integral.
struct StabilityWeights {
    std::vector<long long> theta;
    std::vector<long long> sigma;

    void validate(std::size_t n_vertices) const;
};

long long theta_of(const DimVec& d, const StabilityWeights& w);
long long sigma_of(const DimVec& d, const StabilityWeights& w);

/// mu = Theta(d) / sigma(d); throws UndefinedSlope for d = 0.
Rational slope(const DimVec& d, const StabilityWeights& w);

/// King's integral reformulation: Theta(M) sigma(S) - sigma(M) Theta(S).
long long king_theta(const DimVec& m_dims, const DimVec& s_dims, const StabilityWeights& w);

/// Theta' = a*Theta + b*sigma, sigma unchanged. Requires a > 0.
StabilityWeights transform_weights(const StabilityWeights& w, long long a, long long b);

struct Representation {
    Quiver quiver;
    Field field;
    DimVec dims;
    std::vector<Matrix> maps;  // aligned with quiver.arrows, shape d_tgt x d_src

    void validate() const;
};

/// Per-vertex subspaces of a representation's vertex spaces. Validity
/// (invariance under all arrow maps) is checked by validate_subrep.
struct Subrep {
    std::vector<Subspace> spaces;

    DimVec dims() const;
    long long total_dim() const;
    bool operator==(const Subrep&) const = default;
};

Subrep zero_subrep(const Representation& m);
Subrep full_subrep(const Representation& m);

/// True iff every arrow maps U_src into U_tgt.
bool validate_subrep(const Representation& m, const Subrep& s);

/// a <= b vertexwise; strict iff additionally some vertex grows.
bool subrep_leq(const Subrep& a, const Subrep& b);
bool subrep_lt(const Subrep& a, const Subrep& b);

/// Deterministic total order compatible with total dimension.
bool subrep_less(const Subrep& a, const Subrep& b);

/// M/S in the non-pivot standard coordinates of each U_v's RREF basis.
Representation quotient_representation(const Representation& m, const Subrep& s);

/// Express a subspace of the quotient (in quotient coordinates) as its
/// preimage in the ambient space.
Subspace pullback_subspace(const Subspace& quotient_space, const Subspace& u);

/// Strictly increasing chain of subreps ending at the full representation,
/// with optional strictly increasing rational weights.
struct Filtration {
    std::vector<Subrep> chain;       // M_1 < ... < M_{t+1} = M
    std::vector<Rational> weights;   // empty, or size chain.size(), strictly increasing

    std::size_t length() const { return chain.size(); }
    bool operator==(const Filtration&) const = default;
};

void validate_filtration(const Representation& m, const Filtration& f);

/// Dimension vectors of the successive quotients M^i = M_i / M_{i-1}.
std::vector<DimVec> filtration_quotient_dims(const Filtration& f);

}  // namespace qhn
