#include "qhn/git_kempf.hpp"

#include <algorithm>
#include <functional>

namespace qhn {

std::vector<long long> character_exponents(const DimVec& d, const StabilityWeights& w) {
    long long theta_d = theta_of(d, w);
    long long sigma_d = sigma_of(d, w);
    std::vector<long long> e(d.size());
    long long pairing = 0;
    for (std::size_t v = 0; v < d.size(); ++v) {
        e[v] = theta_d * w.sigma[v] - sigma_d * w.theta[v];
        pairing += e[v] * d[v];
    }
    if (pairing != 0)
        throw InternalContradiction("character exponents fail sum e_v d_v = 0");
    return e;
}

OnePSWeights one_ps_from_filtration(const Filtration& f) {
    if (f.weights.size() != f.chain.size())
        throw MalformedInput("one_ps_from_filtration: weighted filtration required");
    std::size_t n_vertices = f.chain.front().spaces.size();
    OnePSWeights ops;
    ops.per_vertex.resize(n_vertices);
    DimVec prev(n_vertices, 0);
    for (std::size_t i = 0; i < f.chain.size(); ++i) {
        DimVec cur = f.chain[i].dims();
        for (std::size_t v = 0; v < n_vertices; ++v) {
            long long mult = cur[v] - prev[v];
            if (mult > 0) ops.per_vertex[v].emplace_back(f.weights[i], mult);
        }
        prev = std::move(cur);
    }
    return ops;
}

Rational numerical_mu_weights(const Representation& m, const OnePSWeights& ops,
                              const StabilityWeights& w) {
    if (ops.per_vertex.size() != m.dims.size())
        throw MalformedInput("numerical_mu_weights: vertex mismatch");
    auto e = character_exponents(m.dims, w);
    Rational total(0);
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        long long mult_sum = 0;
        Rational acc(0);
        for (const auto& [weight, mult] : ops.per_vertex[v]) {
            acc += weight * Rational(mult);
            mult_sum += mult;
        }
        if (mult_sum != m.dims[v])
            throw MalformedInput("1-PS multiplicities inconsistent with the dimension vector");
        total += Rational(e[v]) * acc;
    }
    return total;
}

Rational numerical_mu_filtration(const Representation& m, const Filtration& f,
                                 const StabilityWeights& w) {
    if (f.weights.size() != f.chain.size())
        throw MalformedInput("numerical_mu_filtration: weighted filtration required");
    Rational total(0);
    auto qdims = filtration_quotient_dims(f);
    for (std::size_t i = 0; i < qdims.size(); ++i)
        total += f.weights[i] * Rational(king_theta(m.dims, qdims[i], w));
    return total;
}

KempfValue kempf_value(const Representation& m, const Filtration& f, const StabilityWeights& w) {
    Rational num = numerical_mu_filtration(m, f, w);
    Rational norm2(0);
    auto qdims = filtration_quotient_dims(f);
    for (std::size_t i = 0; i < qdims.size(); ++i)
        norm2 += Rational(sigma_of(qdims[i], w)) * f.weights[i] * f.weights[i];
    if (norm2 == 0) return KempfValue::zero();
    return {num, norm2, false};
}

std::vector<Filtration> enumerate_chains(const Representation& m, std::uint64_t subspace_guard) {
    auto subreps = enumerate_subreps(m, subspace_guard);
    std::vector<Subrep> proper;
    for (auto& s : subreps) {
        DimVec d = s.dims();
        if (!is_zero(d) && d != m.dims) proper.push_back(std::move(s));
    }
    Subrep full = full_subrep(m);
    std::vector<Filtration> out;
    std::vector<std::size_t> stack;
    // DFS over index-increasing chains; subrep_less order is compatible with
    // inclusion (strict inclusion strictly raises total dimension)
    auto emit = [&]() {
        Filtration f;
        for (auto i : stack) f.chain.push_back(proper[i]);
        f.chain.push_back(full);
        out.push_back(std::move(f));
    };
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        emit();
        for (std::size_t i = from; i < proper.size(); ++i) {
            if (!stack.empty() && !subrep_lt(proper[stack.back()], proper[i])) continue;
            stack.push_back(i);
            extend(i + 1);
            stack.pop_back();
        }
    };
    extend(0);
    return out;
}

bool hm_semistable(const Representation& m, const StabilityWeights& w,
                   std::uint64_t subspace_guard) {
    // Per chain, the supremum of the pairing over the ordered-weight cone has
    // the sign of its value at the envelope-optimal weights.
    for (const auto& f : enumerate_chains(m, subspace_guard)) {
        WeightVectorData data = vector_of_filtration(m, f, w);
        EnvelopeResult env = gamma_opt(data);
        KempfValue val = mu_v_eval(env.gamma, data);
        if (!val.zero_direction && val.num > 0) return false;
    }
    return true;
}

KempfResult kempf_filtration(const Representation& m, const StabilityWeights& w,
                             std::uint64_t subspace_guard) {
    if (is_semistable(m, w, subspace_guard))
        throw NotUnstable("representation is (Θ,σ)-semistable");
    bool have_best = false;
    KempfResult best;
    bool tie = false;
    for (const auto& f : enumerate_chains(m, subspace_guard)) {
        WeightVectorData data = vector_of_filtration(m, f, w);
        EnvelopeResult env = gamma_opt(data);
        bool all_zero = std::all_of(env.gamma.begin(), env.gamma.end(),
                                    [](const Rational& g) { return g == 0; });
        if (all_zero) continue;  // no destabilizing direction along this chain
        Filtration coarse = coarsen(f, env.gamma);
        KempfValue val = kempf_value(m, coarse, w);
        if (!have_best || compare(val, best.value) > 0) {
            best = {std::move(coarse), val};
            have_best = true;
            tie = false;
        } else if (compare(val, best.value) == 0 && !(coarse == best.filtration)) {
            tie = true;
        }
    }
    if (!have_best)
        throw InternalContradiction("unstable representation admits no destabilizing chain");
    if (tie)
        throw InternalContradiction("two distinct weighted filtrations maximize the Kempf function");
    if (best.value.zero_direction || !(best.value.num > 0))
        throw InternalContradiction("Kempf maximum is not positive for an unstable representation");
    return best;
}

}  // namespace qhn
