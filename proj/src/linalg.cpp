#include "qhn/linalg.hpp"

#include <algorithm>
#include <functional>

namespace qhn {

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::zero(Field f, std::size_t r, std::size_t c) { return Matrix(f, r, c); }

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.field != b.field) throw MalformedInput("matmul: mixed fields");
    if (a.cols != b.rows) throw MalformedInput("matmul: shape mismatch");
    Matrix out(a.field, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.at(i, j) = a.field.add(out.at(i, j), a.field.mul(a.at(i, k), b.at(k, j)));
        }
    return out;
}

RrefResult rref(const Matrix& m) {
    const Field& f = m.field;
    Matrix a = m;
    for (auto& e : a.entries) e = f.normalize(e);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t pr = row;
        while (pr < a.rows && a.at(pr, col) == 0) ++pr;
        if (pr == a.rows) continue;
        if (pr != row)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(pr, j), a.at(row, j));
        Rational piv_inv = f.inv(a.at(row, col));
        for (std::size_t j = col; j < a.cols; ++j) a.at(row, j) = f.mul(a.at(row, j), piv_inv);
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rational factor = a.at(i, col);
            for (std::size_t j = col; j < a.cols; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    Matrix out(f, pivots.size(), a.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
    return {out, pivots};
}

Subspace Subspace::zero(Field f, std::size_t n) {
    return Subspace{n, Matrix(f, 0, n), {}};
}

Subspace Subspace::full(Field f, std::size_t n) {
    Subspace s{n, Matrix::identity(f, n), {}};
    s.pivots.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.pivots[i] = i;
    return s;
}

Subspace Subspace::span(const Matrix& rows) {
    auto [basis, pivots] = rref(rows);
    return Subspace{rows.cols, std::move(basis), std::move(pivots)};
}

bool subspace_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.pivots != b.pivots) return a.pivots < b.pivots;
    return a.basis.entries < b.basis.entries;
}

Subspace apply_map(const Matrix& m, const Subspace& u) {
    if (u.ambient_dim != m.cols)
        throw MalformedInput("apply_map: ambient dim " + std::to_string(u.ambient_dim) +
                             " != matrix cols " + std::to_string(m.cols));
    if (u.dim() == 0) return Subspace::zero(m.field, m.rows);
    // image rows = (m * basis^T)^T = basis * m^T
    Matrix image(m.field, u.dim(), m.rows);
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t r = 0; r < m.rows; ++r) {
            Rational acc(0);
            for (std::size_t c = 0; c < m.cols; ++c)
                acc = m.field.add(acc, m.field.mul(m.at(r, c), u.basis.at(i, c)));
            image.at(i, r) = acc;
        }
    return Subspace::span(image);
}

bool subspace_contains(const Subspace& s, const std::vector<Rational>& vec) {
    if (vec.size() != s.ambient_dim) throw MalformedInput("subspace_contains: length mismatch");
    const Field& f = s.basis.field;
    std::vector<Rational> v(vec);
    for (auto& e : v) e = f.normalize(e);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Rational coef = v[s.pivots[i]];
        if (coef == 0) continue;
        for (std::size_t j = 0; j < s.ambient_dim; ++j)
            v[j] = f.sub(v[j], f.mul(coef, s.basis.at(i, j)));
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& e) { return e == 0; });
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw MalformedInput("subspace_leq: ambient dimension mismatch");
    if (a.basis.field != b.basis.field) throw MalformedInput("subspace_leq: mixed fields");
    if (a.dim() > b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        std::vector<Rational> row(a.basis.entries.begin() + i * a.ambient_dim,
                                  a.basis.entries.begin() + (i + 1) * a.ambient_dim);
        if (!subspace_contains(b, row)) return false;
    }
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim) throw MalformedInput("subspace_sum: ambient mismatch");
    Matrix stacked(a.basis.field, a.dim() + b.dim(), a.ambient_dim);
    std::copy(a.basis.entries.begin(), a.basis.entries.end(), stacked.entries.begin());
    std::copy(b.basis.entries.begin(), b.basis.entries.end(),
              stacked.entries.begin() + a.basis.entries.size());
    return Subspace::span(stacked);
}

Int gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t p) {
    if (k > n) return 0;
    // prod_{i=0}^{k-1} (p^{n-i} - 1) / (p^{k-i} - 1)
    Int num = 1, den = 1;
    Int pp(p);
    for (std::size_t i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(pp, static_cast<unsigned>(n - i)) - 1;
        den *= boost::multiprecision::pow(pp, static_cast<unsigned>(k - i)) - 1;
    }
    return num / den;
}

Int count_subspaces(std::size_t n, std::uint32_t p) {
    Int total = 0;
    for (std::size_t k = 0; k <= n; ++k) total += gaussian_binomial(n, k, p);
    return total;
}

namespace {

// Free entry positions of an RREF matrix with the given pivot set: row r may
// be nonzero at columns past pivots[r] that are not pivots themselves.
std::vector<std::pair<std::size_t, std::size_t>> free_positions(
    const std::vector<std::size_t>& pivots, std::size_t n) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
            if (!is_pivot[c]) out.emplace_back(r, c);
    return out;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    if (k > n) return;
    while (true) {
        fn(comb);
        // next combination in lex order
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (comb[i] != i + n - k) {
                ++comb[i];
                for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(std::size_t n, std::uint32_t p, std::uint64_t guard) {
    Field f = prime_field(p);
    Int total = count_subspaces(n, p);
    if (total > guard)
        throw ResourceLimit("subspace enumeration of F_" + std::to_string(p) + "^" +
                            std::to_string(n) + " has " + total.str() +
                            " subspaces, exceeding guard " + std::to_string(guard));
    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(total));
    for (std::size_t k = 0; k <= n; ++k) {
        for_each_combination(n, k, [&](const std::vector<std::size_t>& pivots) {
            auto free = free_positions(pivots, n);
            std::vector<std::uint32_t> digits(free.size(), 0);
            while (true) {
                Matrix basis(f, k, n);
                for (std::size_t r = 0; r < k; ++r) basis.at(r, pivots[r]) = 1;
                for (std::size_t t = 0; t < free.size(); ++t)
                    basis.at(free[t].first, free[t].second) = digits[t];
                out.push_back(Subspace{n, std::move(basis), pivots});
                // increment base-p counter, least significant last
                std::size_t t = free.size();
                while (t > 0) {
                    --t;
                    if (++digits[t] < p) break;
                    digits[t] = 0;
                    if (t == 0) return;
                }
                if (free.empty()) return;
            }
        });
    }
    return out;
}

}  // namespace qhn
