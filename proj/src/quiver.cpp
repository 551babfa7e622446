#include "qhn/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qhn {

std::size_t Quiver::vertex_index(const std::string& name) const {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) throw MalformedInput("unknown vertex '" + name + "'");
    return static_cast<std::size_t>(it - vertices.begin());
}

void Quiver::validate() const {
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) throw MalformedInput("duplicate vertex ids");
    for (const auto& a : arrows) {
        if (a.src >= vertices.size() || a.tgt >= vertices.size())
            throw MalformedInput("arrow '" + a.id + "' references a missing vertex");
    }
}

bool is_zero(const DimVec& d) {
    return std::all_of(d.begin(), d.end(), [](long long x) { return x == 0; });
}

DimVec dimvec_sub(const DimVec& a, const DimVec& b) {
    if (a.size() != b.size()) throw MalformedInput("dimension vector size mismatch");
    DimVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

void StabilityWeights::validate(std::size_t n_vertices) const {
    if (theta.size() != n_vertices || sigma.size() != n_vertices)
        throw MalformedInput("stability weights not indexed by the quiver's vertices");
    for (auto s : sigma)
        if (s < 1) throw MalformedInput("sigma must be strictly positive");
}

long long theta_of(const DimVec& d, const StabilityWeights& w) {
    if (d.size() != w.theta.size()) throw MalformedInput("theta_of: vertex mismatch");
    long long acc = 0;
    for (std::size_t v = 0; v < d.size(); ++v) acc += w.theta[v] * d[v];
    return acc;
}

long long sigma_of(const DimVec& d, const StabilityWeights& w) {
    if (d.size() != w.sigma.size()) throw MalformedInput("sigma_of: vertex mismatch");
    long long acc = 0;
    for (std::size_t v = 0; v < d.size(); ++v) acc += w.sigma[v] * d[v];
    return acc;
}

Rational slope(const DimVec& d, const StabilityWeights& w) {
    if (is_zero(d)) throw UndefinedSlope("slope of the zero dimension vector");
    return Rational(theta_of(d, w), sigma_of(d, w));
}

long long king_theta(const DimVec& m_dims, const DimVec& s_dims, const StabilityWeights& w) {
    return theta_of(m_dims, w) * sigma_of(s_dims, w) - sigma_of(m_dims, w) * theta_of(s_dims, w);
}

StabilityWeights transform_weights(const StabilityWeights& w, long long a, long long b) {
    if (a <= 0) throw MalformedInput("transform_weights: scale must be positive");
    StabilityWeights out = w;
    for (std::size_t v = 0; v < w.theta.size(); ++v) out.theta[v] = a * w.theta[v] + b * w.sigma[v];
    return out;
}

void Representation::validate() const {
    quiver.validate();
    if (dims.size() != quiver.vertices.size())
        throw MalformedInput("dimension vector not indexed by the quiver's vertices");
    for (auto d : dims)
        if (d < 0) throw MalformedInput("negative vertex dimension");
    if (maps.size() != quiver.arrows.size())
        throw MalformedInput("one matrix per arrow required");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const auto& arrow = quiver.arrows[a];
        if (maps[a].field != field) throw MalformedInput("arrow matrix over a different field");
        if (maps[a].rows != static_cast<std::size_t>(dims[arrow.tgt]) ||
            maps[a].cols != static_cast<std::size_t>(dims[arrow.src]))
            throw MalformedInput("matrix for arrow '" + arrow.id + "' has the wrong shape");
    }
}

DimVec Subrep::dims() const {
    DimVec d(spaces.size());
    for (std::size_t v = 0; v < spaces.size(); ++v) d[v] = static_cast<long long>(spaces[v].dim());
    return d;
}

long long Subrep::total_dim() const {
    long long acc = 0;
    for (const auto& s : spaces) acc += static_cast<long long>(s.dim());
    return acc;
}

Subrep zero_subrep(const Representation& m) {
    Subrep s;
    for (auto d : m.dims) s.spaces.push_back(Subspace::zero(m.field, static_cast<std::size_t>(d)));
    return s;
}

Subrep full_subrep(const Representation& m) {
    Subrep s;
    for (auto d : m.dims) s.spaces.push_back(Subspace::full(m.field, static_cast<std::size_t>(d)));
    return s;
}

bool validate_subrep(const Representation& m, const Subrep& s) {
    if (s.spaces.size() != m.dims.size())
        throw MalformedInput("subrepresentation not indexed by the quiver's vertices");
    for (std::size_t v = 0; v < s.spaces.size(); ++v)
        if (s.spaces[v].ambient_dim != static_cast<std::size_t>(m.dims[v]))
            throw MalformedInput("subrepresentation ambient dimension mismatch");
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
        const auto& arrow = m.quiver.arrows[a];
        if (!subspace_leq(apply_map(m.maps[a], s.spaces[arrow.src]), s.spaces[arrow.tgt]))
            return false;
    }
    return true;
}

bool subrep_leq(const Subrep& a, const Subrep& b) {
    if (a.spaces.size() != b.spaces.size()) throw MalformedInput("subrep_leq: vertex mismatch");
    for (std::size_t v = 0; v < a.spaces.size(); ++v)
        if (!subspace_leq(a.spaces[v], b.spaces[v])) return false;
    return true;
}

bool subrep_lt(const Subrep& a, const Subrep& b) {
    return subrep_leq(a, b) && !(a == b);
}

bool subrep_less(const Subrep& a, const Subrep& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    for (std::size_t v = 0; v < a.spaces.size(); ++v) {
        if (a.spaces[v] == b.spaces[v]) continue;
        return subspace_less(a.spaces[v], b.spaces[v]);
    }
    return false;
}

namespace {

// Non-pivot standard coordinates of the complement of u.
std::vector<std::size_t> quotient_coordinates(const Subspace& u) {
    std::vector<bool> is_pivot(u.ambient_dim, false);
    for (auto c : u.pivots) is_pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < u.ambient_dim; ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

// Reduce an ambient vector modulo u and read off its non-pivot coordinates.
std::vector<Rational> project_mod(const Subspace& u, std::vector<Rational> v,
                                  const std::vector<std::size_t>& coords) {
    const Field& f = u.basis.field;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        Rational coef = v[u.pivots[i]];
        if (coef == 0) continue;
        for (std::size_t j = 0; j < u.ambient_dim; ++j)
            v[j] = f.sub(v[j], f.mul(coef, u.basis.at(i, j)));
    }
    std::vector<Rational> out;
    out.reserve(coords.size());
    for (auto c : coords) out.push_back(v[c]);
    return out;
}

}  // namespace

Representation quotient_representation(const Representation& m, const Subrep& s) {
    if (!validate_subrep(m, s))
        throw MalformedInput("quotient by a tuple that is not a subrepresentation");
    Representation q;
    q.quiver = m.quiver;
    q.field = m.field;
    q.dims = dimvec_sub(m.dims, s.dims());
    std::vector<std::vector<std::size_t>> coords;
    for (const auto& u : s.spaces) coords.push_back(quotient_coordinates(u));
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
        const auto& arrow = m.quiver.arrows[a];
        const auto& u_tgt = s.spaces[arrow.tgt];
        const auto& src_coords = coords[arrow.src];
        const auto& tgt_coords = coords[arrow.tgt];
        Matrix qmap(m.field, tgt_coords.size(), src_coords.size());
        for (std::size_t j = 0; j < src_coords.size(); ++j) {
            // image of the j-th quotient basis vector e_{src_coords[j]}
            std::vector<Rational> img(static_cast<std::size_t>(m.dims[arrow.tgt]), Rational(0));
            for (std::size_t r = 0; r < img.size(); ++r)
                img[r] = m.maps[a].at(r, src_coords[j]);
            auto col = project_mod(u_tgt, std::move(img), tgt_coords);
            for (std::size_t i = 0; i < tgt_coords.size(); ++i) qmap.at(i, j) = col[i];
        }
        q.maps.push_back(std::move(qmap));
    }
    return q;
}

Subspace pullback_subspace(const Subspace& quotient_space, const Subspace& u) {
    auto coords = quotient_coordinates(u);
    if (quotient_space.ambient_dim != coords.size())
        throw MalformedInput("pullback: quotient ambient dimension mismatch");
    Matrix rows(u.basis.field, u.dim() + quotient_space.dim(), u.ambient_dim);
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < u.ambient_dim; ++j) rows.at(i, j) = u.basis.at(i, j);
    for (std::size_t i = 0; i < quotient_space.dim(); ++i)
        for (std::size_t j = 0; j < coords.size(); ++j)
            rows.at(u.dim() + i, coords[j]) = quotient_space.basis.at(i, j);
    return Subspace::span(rows);
}

void validate_filtration(const Representation& m, const Filtration& f) {
    if (f.chain.empty()) throw MalformedInput("empty filtration");
    if (!(f.chain.back() == full_subrep(m)))
        throw MalformedInput("filtration must end at the full representation");
    for (const auto& s : f.chain)
        if (!validate_subrep(m, s)) throw MalformedInput("filtration step is not a subrepresentation");
    for (std::size_t i = 0; i + 1 < f.chain.size(); ++i)
        if (!subrep_lt(f.chain[i], f.chain[i + 1]))
            throw MalformedInput("filtration chain is not strictly increasing");
    if (!f.weights.empty()) {
        if (f.weights.size() != f.chain.size())
            throw MalformedInput("one weight per filtration step required");
        for (std::size_t i = 0; i + 1 < f.weights.size(); ++i)
            if (!(f.weights[i] < f.weights[i + 1]))
                throw MalformedInput("filtration weights must be strictly increasing");
    }
}

std::vector<DimVec> filtration_quotient_dims(const Filtration& f) {
    if (f.chain.empty()) throw MalformedInput("empty filtration");
    std::vector<DimVec> out;
    DimVec prev(f.chain.front().spaces.size(), 0);
    for (const auto& s : f.chain) {
        DimVec cur = s.dims();
        DimVec diff = dimvec_sub(cur, prev);
        if (is_zero(diff)) throw MalformedInput("filtration chain is not strictly increasing");
        for (auto x : diff)
            if (x < 0) throw MalformedInput("filtration chain is not increasing");
        out.push_back(std::move(diff));
        prev = std::move(cur);
    }
    return out;
}

}  // namespace qhn
