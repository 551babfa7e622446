#include "qhn/format.hpp"

#include <sstream>

namespace qhn {

std::string format_dimvec(const DimVec& d) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ", ";
        os << d[i];
    }
    os << ")";
    return os.str();
}

std::string format_subspace(const Subspace& s) {
    std::ostringstream os;
    os << "dim " << s.dim() << ", basis [";
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < s.ambient_dim; ++j) {
            if (j) os << ", ";
            os << to_string(s.basis.at(i, j));
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string format_subrep(const Quiver& q, const Subrep& s, const std::string& indent) {
    std::ostringstream os;
    for (std::size_t v = 0; v < s.spaces.size(); ++v)
        os << indent << q.vertices[v] << ": " << format_subspace(s.spaces[v]) << "\n";
    return os.str();
}

std::string format_representation(const Representation& m) {
    std::ostringstream os;
    os << "representation over " << m.field.name() << ", d = " << format_dimvec(m.dims) << "\n";
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
        const auto& arrow = m.quiver.arrows[a];
        os << "  " << arrow.id << " (" << m.quiver.vertices[arrow.src] << " -> "
           << m.quiver.vertices[arrow.tgt] << "): [";
        for (std::size_t i = 0; i < m.maps[a].rows; ++i) {
            if (i) os << ", ";
            os << "[";
            for (std::size_t j = 0; j < m.maps[a].cols; ++j) {
                if (j) os << ", ";
                os << to_string(m.maps[a].at(i, j));
            }
            os << "]";
        }
        os << "]\n";
    }
    return os.str();
}

std::string format_hn(const Quiver& q, const HNResult& hn) {
    std::ostringstream os;
    os << "HN filtration: length " << hn.filtration.chain.size() << "\n";
    for (std::size_t i = 0; i < hn.filtration.chain.size(); ++i) {
        os << "step " << (i + 1) << ": dims " << format_dimvec(hn.filtration.chain[i].dims())
           << "\n";
        os << format_subrep(q, hn.filtration.chain[i]);
    }
    os << "quotient dims: ";
    for (std::size_t i = 0; i < hn.quotient_dims.size(); ++i) {
        if (i) os << ", ";
        os << format_dimvec(hn.quotient_dims[i]);
    }
    os << "\nquotient slopes: ";
    for (std::size_t i = 0; i < hn.slopes.size(); ++i) {
        if (i) os << ", ";
        os << to_string(hn.slopes[i]);
    }
    os << "\n";
    return os.str();
}

std::string format_kempf(const Quiver& q, const KempfResult& kempf) {
    std::ostringstream os;
    os << "Kempf filtration: length " << kempf.filtration.chain.size() << "\n";
    for (std::size_t i = 0; i < kempf.filtration.chain.size(); ++i) {
        os << "step " << (i + 1) << ": weight " << to_string(kempf.filtration.weights[i])
           << ", dims " << format_dimvec(kempf.filtration.chain[i].dims()) << "\n";
        os << format_subrep(q, kempf.filtration.chain[i]);
    }
    os << "Kempf value: N = " << to_string(kempf.value.num) << ", D = "
       << to_string(kempf.value.norm_square) << ", value = N/sqrt(D) ~ "
       << decimal_of_ratio_root(kempf.value.num, kempf.value.norm_square, 6) << "\n";
    return os.str();
}

std::string decimal_of_ratio_root(const Rational& num, const Rational& norm_square,
                                  unsigned digits) {
    // |value| = sqrt(num^2 / norm_square), truncated to the given digits
    Int scale = 1;
    for (unsigned i = 0; i < 2 * digits; ++i) scale *= 10;
    Rational sq = num * num / norm_square;
    Int scaled = numerator(sq) * scale / denominator(sq);
    Int root = boost::multiprecision::sqrt(scaled);
    Int unit = 1;
    for (unsigned i = 0; i < digits; ++i) unit *= 10;
    std::ostringstream os;
    if (num < 0) os << '-';
    os << root / unit;
    if (digits > 0) {
        std::string frac = Int(root % unit).str();
        os << '.' << std::string(digits - frac.size(), '0') << frac;
    }
    return os.str();
}

std::string format_header(const Quiver& q, const Field& f, const DimVec& d,
                          const StabilityWeights& w) {
    std::ostringstream os;
    os << "quiver: vertices ";
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        if (v) os << ", ";
        os << q.vertices[v];
    }
    os << "; arrows ";
    if (q.arrows.empty()) os << "none";
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (a) os << ", ";
        os << q.arrows[a].id << ": " << q.vertices[q.arrows[a].src] << " -> "
           << q.vertices[q.arrows[a].tgt];
    }
    os << "\nfield: " << f.name() << "\n";
    os << "d = " << format_dimvec(d) << "\n";
    os << "theta = (";
    for (std::size_t v = 0; v < w.theta.size(); ++v) {
        if (v) os << ", ";
        os << w.theta[v];
    }
    os << ")\nsigma = (";
    for (std::size_t v = 0; v < w.sigma.size(); ++v) {
        if (v) os << ", ";
        os << w.sigma[v];
    }
    os << ")\ncharacter exponents = (";
    auto e = character_exponents(d, w);
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (v) os << ", ";
        os << e[v];
    }
    os << ")\n";
    return os.str();
}

}  // namespace qhn
