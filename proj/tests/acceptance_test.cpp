// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Criterion 8 (CLI golden files) lives in cli_contract_test.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>
#include <random>

#include "qhn/verify.hpp"

using namespace qhn;

namespace {

struct ScanCase {
    std::string name;
    Quiver quiver;
    DimVec dims;
    StabilityWeights weights;
};

Quiver a2() {
    Quiver q;
    q.vertices = {"v1", "v2"};
    q.arrows = {{"a", 0, 1}};
    return q;
}

Quiver kronecker() {
    Quiver q;
    q.vertices = {"v1", "v2"};
    q.arrows = {{"a", 0, 1}, {"b", 0, 1}};
    return q;
}

Quiver a3() {
    Quiver q;
    q.vertices = {"v1", "v2", "v3"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    return q;
}

std::vector<ScanCase> suite() {
    StabilityWeights w2{{1, 0}, {1, 1}};
    StabilityWeights w3{{1, 0, 0}, {1, 1, 1}};
    return {
        {"A2 d=(1,1)", a2(), {1, 1}, w2},
        {"A2 d=(2,1)", a2(), {2, 1}, w2},
        {"A2 d=(2,2)", a2(), {2, 2}, w2},
        {"Kronecker d=(1,1)", kronecker(), {1, 1}, w2},
        {"Kronecker d=(2,2)", kronecker(), {2, 2}, w2},
        {"A3 d=(1,1,1)", a3(), {1, 1, 1}, w3},
    };
}

// Visit every representation point of the scan, independently of the verify
// module's own iteration.
void for_each_representation(const Quiver& q, const DimVec& d, std::uint32_t p,
                             const std::function<void(const Representation&)>& fn) {
    Field f = prime_field(p);
    std::size_t total_entries = 0;
    for (const auto& a : q.arrows)
        total_entries += static_cast<std::size_t>(d[a.tgt] * d[a.src]);
    std::vector<std::uint32_t> digits(total_entries, 0);
    while (true) {
        Representation m;
        m.quiver = q;
        m.field = f;
        m.dims = d;
        std::size_t pos = 0;
        for (const auto& a : q.arrows) {
            Matrix mat(f, static_cast<std::size_t>(d[a.tgt]), static_cast<std::size_t>(d[a.src]));
            for (auto& e : mat.entries) e = digits[pos++];
            m.maps.push_back(std::move(mat));
        }
        fn(m);
        std::size_t i = digits.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++digits[i] < p) {
                done = false;
                break;
            }
            digits[i] = 0;
        }
        if (done) return;
    }
}

void report(int criterion, const std::string& what, bool ok) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what
              << std::endl;
    CHECK_MESSAGE(ok, "criterion ", criterion, " (", what, ")");
}

std::vector<Rational> random_increasing_weights(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long long> num(-12, 12);
    std::uniform_int_distribution<long long> den(1, 4);
    std::vector<Rational> w(n);
    for (auto& x : w) x = Rational(num(rng), den(rng));
    std::sort(w.begin(), w.end());
    for (std::size_t i = 1; i < n; ++i)
        if (w[i] <= w[i - 1]) w[i] = w[i - 1] + Rational(1, den(rng));
    return w;
}

}  // namespace

TEST_CASE("criterion 1: main theorem suite") {
    bool all_ok = true;
    for (const auto& sc : suite()) {
        ScanReport r = exhaustive_scan(sc.quiver, sc.dims, 2, sc.weights);
        bool ok = r.theorem_fail == 0 && r.total == r.semistable + r.unstable;
        if (sc.name == "A2 d=(1,1)")
            ok = ok && r.total == 2 && r.semistable == 1 && r.unstable == 1;
        all_ok = all_ok && ok;
    }
    report(1, "Kempf filtration = HN filtration on every unstable point, 0 failures", all_ok);
}

TEST_CASE("criterion 2: GIT equivalence") {
    long long disagreements = 0;
    for (const auto& sc : suite())
        for_each_representation(sc.quiver, sc.dims, 2, [&](const Representation& m) {
            if (is_semistable(m, sc.weights) != hm_semistable(m, sc.weights)) ++disagreements;
        });
    report(2, "hm_semistable = is_semistable on every scanned point, 0 disagreements",
           disagreements == 0);
}

TEST_CASE("criterion 3: pairing consistency (weight-space form = filtration form)") {
    long long mismatches = 0;
    std::mt19937_64 rng(42);
    for (const auto& sc : suite()) {
        // every chain of every point, with envelope-optimal weights
        std::vector<std::pair<Representation, Filtration>> pool;
        for_each_representation(sc.quiver, sc.dims, 2, [&](const Representation& m) {
            for (const auto& chain : enumerate_chains(m)) {
                WeightVectorData data = vector_of_filtration(m, chain, sc.weights);
                Filtration weighted = coarsen(chain, gamma_opt(data).gamma);
                if (numerical_mu_filtration(m, weighted, sc.weights) !=
                    numerical_mu_weights(m, one_ps_from_filtration(weighted), sc.weights))
                    ++mismatches;
                pool.emplace_back(m, chain);
            }
        });
        // 1000 randomized (chain, weight) pairs per scan
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int trial = 0; trial < 1000; ++trial) {
            auto& [m, chain] = pool[pick(rng)];
            Filtration weighted = chain;
            weighted.weights = random_increasing_weights(rng, chain.chain.size());
            if (numerical_mu_filtration(m, weighted, sc.weights) !=
                numerical_mu_weights(m, one_ps_from_filtration(weighted), sc.weights))
                ++mismatches;
        }
    }
    report(3, "Eq. in weight-space form equals filtration form, 0 mismatches", mismatches == 0);
}

TEST_CASE("criterion 4: envelope optimality") {
    long long violations = 0;
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::size_t> tdist(1, 4);
    std::uniform_int_distribution<long long> bdist(1, 4);
    std::uniform_int_distribution<long long> vnum(-5, 5);
    std::uniform_int_distribution<long long> vden(1, 3);
    std::uniform_int_distribution<long long> gnum(-9, 9);
    std::uniform_int_distribution<long long> gden(1, 4);
    for (int inst = 0; inst < 200; ++inst) {
        std::size_t n = tdist(rng) + 1;
        WeightVectorData data;
        data.block_widths.resize(n);
        data.v.resize(n);
        for (auto& b : data.block_widths) b = bdist(rng);
        Rational acc(0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            data.v[i] = Rational(vnum(rng), vden(rng));
            acc += Rational(data.block_widths[i]) * data.v[i];
        }
        data.v[n - 1] = -acc / data.block_widths[n - 1];
        KempfValue best = mu_v_eval(gamma_opt(data).gamma, data);
        for (int probe = 0; probe < 1000; ++probe) {
            std::vector<Rational> g(n);
            for (auto& x : g) x = Rational(gnum(rng), gden(rng));
            std::sort(g.begin(), g.end());
            if (compare(mu_v_eval(g, data), best) > 0) ++violations;
        }
    }
    // fixed instance from the hull oracle
    WeightVectorData fixed{{1, 1, 1}, {-1, -2, 3}};
    bool fixed_ok =
        gamma_opt(fixed).gamma == std::vector<Rational>{Rational(-3, 2), Rational(-3, 2), 3};
    report(4, "mu_v(Gamma_v) maximal over 200x1000 random cone points, fixed instance exact",
           violations == 0 && fixed_ok);
}

TEST_CASE("criterion 5: HN axioms and enumeration-order invariance") {
    long long violations = 0;
    for (const auto& sc : suite())
        for_each_representation(sc.quiver, sc.dims, 2, [&](const Representation& m) {
            HNResult hn = hn_filtration(m, sc.weights);
            for (std::size_t i = 0; i + 1 < hn.slopes.size(); ++i)
                if (!(hn.slopes[i] > hn.slopes[i + 1])) ++violations;
            Subrep prev = zero_subrep(m);
            for (const auto& step : hn.filtration.chain) {
                if (!is_semistable(layer_representation(m, prev, step), sc.weights)) ++violations;
                prev = step;
            }
            HNResult rev = hn_filtration(m, sc.weights, 1000000, true);
            if (!(rev.filtration.chain == hn.filtration.chain)) ++violations;
        });
    report(5, "slopes strictly decrease, quotients semistable, order-invariant, 0 violations",
           violations == 0);
}

TEST_CASE("criterion 6: weight-transform invariance under (2,-3)") {
    long long violations = 0;
    for (const auto& sc : suite()) {
        StabilityWeights t = transform_weights(sc.weights, 2, -3);
        for_each_representation(sc.quiver, sc.dims, 2, [&](const Representation& m) {
            if (is_semistable(m, sc.weights) != is_semistable(m, t)) ++violations;
            HNResult base = hn_filtration(m, sc.weights);
            HNResult shifted = hn_filtration(m, t);
            if (!(base.filtration.chain == shifted.filtration.chain)) ++violations;
            for (std::size_t i = 0; i < base.slopes.size(); ++i)
                if (shifted.slopes[i] != 2 * base.slopes[i] - 3) ++violations;
        });
    }
    report(6, "verdicts and HN chains invariant, slopes map to 2mu-3, 0 violations",
           violations == 0);
}

TEST_CASE("criterion 7: see-saw inequalities on scans (a)-(b)") {
    long long violations = 0;
    std::vector<ScanCase> ab = {suite()[0], suite()[1]};
    for (const auto& sc : ab)
        for_each_representation(sc.quiver, sc.dims, 2, [&](const Representation& m) {
            Rational mu_m = slope(m.dims, sc.weights);
            for (const auto& s : enumerate_subreps(m)) {
                DimVec d = s.dims();
                if (is_zero(d) || d == m.dims) continue;
                Rational mu_s = slope(d, sc.weights);
                Rational mu_q = slope(dimvec_sub(m.dims, d), sc.weights);
                bool a = mu_s < mu_m, b = mu_s < mu_q, c = mu_m < mu_q;
                if (a != b || b != c) ++violations;
            }
        });
    report(7, "the three strict-inequality equivalences hold for every proper subrep",
           violations == 0);
}
