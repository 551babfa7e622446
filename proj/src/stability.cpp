#include "qhn/stability.hpp"

#include <algorithm>
#include <sstream>

namespace qhn {

std::vector<Subrep> enumerate_subreps(const Representation& m, std::uint64_t subspace_guard) {
    if (!m.field.is_prime_field())
        throw MalformedInput("subrepresentation enumeration requires a prime field");
    std::vector<std::vector<Subspace>> per_vertex;
    for (auto d : m.dims)
        per_vertex.push_back(
            enumerate_subspaces(static_cast<std::size_t>(d), m.field.p, subspace_guard));
    std::vector<Subrep> out;
    std::vector<std::size_t> idx(per_vertex.size(), 0);
    while (true) {
        Subrep s;
        for (std::size_t v = 0; v < per_vertex.size(); ++v) s.spaces.push_back(per_vertex[v][idx[v]]);
        if (validate_subrep(m, s)) out.push_back(std::move(s));
        std::size_t v = per_vertex.size();
        bool done = true;
        while (v > 0) {
            --v;
            if (++idx[v] < per_vertex[v].size()) {
                done = false;
                break;
            }
            idx[v] = 0;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end(), subrep_less);
    return out;
}

bool is_semistable(const Representation& m, const StabilityWeights& w,
                   std::uint64_t subspace_guard) {
    if (is_zero(m.dims)) throw UndefinedSlope("semistability of the zero representation");
    Rational mu = slope(m.dims, w);
    for (const auto& s : enumerate_subreps(m, subspace_guard)) {
        DimVec d = s.dims();
        if (is_zero(d) || d == m.dims) continue;
        if (slope(d, w) > mu) return false;
    }
    return true;
}

bool is_stable(const Representation& m, const StabilityWeights& w, std::uint64_t subspace_guard) {
    if (is_zero(m.dims)) throw UndefinedSlope("stability of the zero representation");
    Rational mu = slope(m.dims, w);
    for (const auto& s : enumerate_subreps(m, subspace_guard)) {
        DimVec d = s.dims();
        if (is_zero(d) || d == m.dims) continue;
        if (slope(d, w) >= mu) return false;
    }
    return true;
}

Subrep max_destabilizing(const Representation& m, const StabilityWeights& w,
                         std::uint64_t subspace_guard, bool reverse_enumeration) {
    if (is_zero(m.dims)) throw UndefinedSlope("max_destabilizing of the zero representation");
    auto subreps = enumerate_subreps(m, subspace_guard);
    if (reverse_enumeration) std::reverse(subreps.begin(), subreps.end());
    const Subrep* best = nullptr;
    Rational best_slope;
    long long best_sigma = 0;
    bool tie = false;
    for (const auto& s : subreps) {
        DimVec d = s.dims();
        if (is_zero(d)) continue;
        Rational mu = slope(d, w);
        long long sig = sigma_of(d, w);
        if (!best || mu > best_slope || (mu == best_slope && sig > best_sigma)) {
            best = &s;
            best_slope = mu;
            best_sigma = sig;
            tie = false;
        } else if (mu == best_slope && sig == best_sigma && !(s == *best)) {
            tie = true;
        }
    }
    if (tie)
        throw InternalContradiction(
            "two distinct subrepresentations maximize (slope, total dimension)");
    return *best;
}

Representation restrict_representation(const Representation& m, const Subrep& s) {
    if (!validate_subrep(m, s))
        throw MalformedInput("restriction to a tuple that is not a subrepresentation");
    Representation r;
    r.quiver = m.quiver;
    r.field = m.field;
    r.dims = s.dims();
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
        const auto& arrow = m.quiver.arrows[a];
        const auto& u_src = s.spaces[arrow.src];
        const auto& u_tgt = s.spaces[arrow.tgt];
        Matrix rm(m.field, u_tgt.dim(), u_src.dim());
        for (std::size_t j = 0; j < u_src.dim(); ++j) {
            // image of the j-th basis vector of U_src, coordinates read off at
            // U_tgt's pivot columns (valid since the basis is in RREF)
            for (std::size_t i = 0; i < u_tgt.dim(); ++i) {
                Rational acc(0);
                for (std::size_t c = 0; c < u_src.ambient_dim; ++c)
                    acc = m.field.add(
                        acc, m.field.mul(m.maps[a].at(u_tgt.pivots[i], c), u_src.basis.at(j, c)));
                rm.at(i, j) = acc;
            }
        }
        r.maps.push_back(std::move(rm));
    }
    return r;
}

Subrep transport_into(const Subrep& sub, const Subrep& big) {
    Subrep out;
    for (std::size_t v = 0; v < sub.spaces.size(); ++v) {
        const auto& small = sub.spaces[v];
        const auto& ambient = big.spaces[v];
        if (!subspace_leq(small, ambient))
            throw MalformedInput("transport_into: not a subspace of the target");
        Matrix coords(small.basis.field, small.dim(), ambient.dim());
        for (std::size_t i = 0; i < small.dim(); ++i)
            for (std::size_t j = 0; j < ambient.dim(); ++j)
                coords.at(i, j) = small.basis.at(i, ambient.pivots[j]);
        out.spaces.push_back(Subspace::span(coords));
    }
    return out;
}

Representation layer_representation(const Representation& m, const Subrep& lower,
                                    const Subrep& upper) {
    Representation restricted = restrict_representation(m, upper);
    Subrep lower_in_upper = transport_into(lower, upper);
    return quotient_representation(restricted, lower_in_upper);
}

HNResult hn_filtration(const Representation& m, const StabilityWeights& w,
                       std::uint64_t subspace_guard, bool reverse_enumeration) {
    if (is_zero(m.dims)) throw UndefinedSlope("HN filtration of the zero representation");
    HNResult result;
    // Build the chain by recursion on quotients, pulling subreps of M/M_i
    // back to ambient coordinates.
    Representation current = m;
    Subrep accumulated = zero_subrep(m);
    while (true) {
        Subrep md = max_destabilizing(current, w, subspace_guard, reverse_enumeration);
        // pull back along the quotient coordinates of `accumulated`
        Subrep ambient_step;
        for (std::size_t v = 0; v < md.spaces.size(); ++v)
            ambient_step.spaces.push_back(pullback_subspace(md.spaces[v], accumulated.spaces[v]));
        result.filtration.chain.push_back(ambient_step);
        if (ambient_step.dims() == m.dims) break;
        accumulated = ambient_step;
        current = quotient_representation(m, accumulated);
    }
    result.quotient_dims = filtration_quotient_dims(result.filtration);
    for (const auto& d : result.quotient_dims) result.slopes.push_back(slope(d, w));
    for (std::size_t i = 0; i + 1 < result.slopes.size(); ++i)
        if (!(result.slopes[i] > result.slopes[i + 1]))
            throw InternalContradiction("HN quotient slopes fail to decrease strictly");
    // certificate: every quotient semistable
    Subrep prev = zero_subrep(m);
    for (const auto& step : result.filtration.chain) {
        Representation layer = layer_representation(m, prev, step);
        if (!is_semistable(layer, w, subspace_guard))
            throw InternalContradiction("HN quotient fails its semistability certificate");
        prev = step;
    }
    return result;
}

HNType hn_type(const Representation& m, const StabilityWeights& w, std::uint64_t subspace_guard) {
    HNResult hn = hn_filtration(m, w, subspace_guard);
    HNType t;
    for (std::size_t i = 0; i < hn.quotient_dims.size(); ++i)
        t.emplace_back(hn.quotient_dims[i], hn.slopes[i]);
    return t;
}

std::string hn_type_to_string(const HNType& t) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ", ";
        os << "(";
        for (std::size_t v = 0; v < t[i].first.size(); ++v) {
            if (v) os << ",";
            os << t[i].first[v];
        }
        os << ") @ " << to_string(t[i].second);
    }
    os << "]";
    return os.str();
}

}  // namespace qhn
