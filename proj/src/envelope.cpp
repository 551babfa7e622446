#include "qhn/envelope.hpp"

#include <algorithm>
#include <sstream>

namespace qhn {

std::vector<std::pair<Rational, Rational>> WeightVectorData::points() const {
    std::vector<std::pair<Rational, Rational>> pts;
    Rational b_acc(0), w_acc(0);
    for (std::size_t i = 0; i < size(); ++i) {
        b_acc += block_widths[i];
        w_acc += -Rational(block_widths[i]) * v[i];  // w^i = -b^i v_i
        pts.emplace_back(b_acc, w_acc);
    }
    return pts;
}

Rational WeightVectorData::pairing_with_ones() const {
    Rational acc(0);
    for (std::size_t i = 0; i < size(); ++i) acc += Rational(block_widths[i]) * v[i];
    return acc;
}

WeightVectorData vector_of_filtration(const Representation& m, const Filtration& f,
                                      const StabilityWeights& w) {
    validate_filtration(m, f);
    WeightVectorData data;
    long long theta_m = theta_of(m.dims, w);
    long long sigma_m = sigma_of(m.dims, w);
    for (const auto& d : filtration_quotient_dims(f)) {
        long long b = sigma_of(d, w);
        if (b <= 0) throw MalformedInput("zero quotient in filtration");
        data.block_widths.push_back(b);
        data.v.push_back(Rational(theta_m) - Rational(sigma_m * theta_of(d, w), b));
    }
    if (data.pairing_with_ones() != 0)
        throw InternalContradiction("filtration vector violates sum b^i v_i = 0");
    return data;
}

namespace {

using Point = std::pair<Rational, Rational>;

Rational cross(const Point& a, const Point& b, const Point& c) {
    return (b.first - a.first) * (c.second - a.second) -
           (b.second - a.second) * (c.first - a.first);
}

}  // namespace

EnvelopeResult concave_majorant(const WeightVectorData& data) {
    if (data.size() == 0) throw MalformedInput("empty weight vector");
    if (data.pairing_with_ones() != 0) throw MalformedInput("sum b^i v_i = 0 violated");
    std::vector<Point> pts;
    pts.emplace_back(Rational(0), Rational(0));
    for (auto& p : data.points()) pts.push_back(p);
    // upper hull, left to right; collinear points stay on the hull
    std::vector<Point> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) > 0)
            hull.pop_back();
        hull.push_back(p);
    }
    EnvelopeResult env;
    std::size_t seg = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Rational& x = pts[i].first;
        while (seg + 1 < hull.size() - 1 && hull[seg + 1].first < x) ++seg;
        const Point& l = hull[seg];
        const Point& r = hull[seg + 1];
        env.w_tilde.push_back(l.second +
                              (r.second - l.second) * (x - l.first) / (r.first - l.first));
    }
    Rational prev(0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        env.gamma.push_back(-(env.w_tilde[i] - prev) / data.block_widths[i]);
        prev = env.w_tilde[i];
    }
    for (std::size_t i = 0; i + 1 < env.gamma.size(); ++i)
        if (env.gamma[i] > env.gamma[i + 1])
            throw InternalContradiction("envelope slopes fail to be non-decreasing");
    std::size_t block = 0;
    env.blocks.push_back(0);
    for (std::size_t i = 1; i < env.gamma.size(); ++i) {
        if (env.gamma[i] != env.gamma[i - 1]) ++block;
        env.blocks.push_back(block);
    }
    return env;
}

EnvelopeResult gamma_opt(const WeightVectorData& data) { return concave_majorant(data); }

int compare(const KempfValue& a, const KempfValue& b) {
    auto sign = [](const KempfValue& k) {
        if (k.zero_direction || k.num == 0) return 0;
        return k.num > 0 ? 1 : -1;
    };
    int sa = sign(a), sb = sign(b);
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    Rational lhs = a.num * a.num * b.norm_square;
    Rational rhs = b.num * b.num * a.norm_square;
    if (lhs == rhs) return 0;
    // both positive: larger squared ratio wins; both negative: reversed
    bool lhs_bigger = lhs > rhs;
    if (sa > 0) return lhs_bigger ? 1 : -1;
    return lhs_bigger ? -1 : 1;
}

KempfValue mu_v_eval(const std::vector<Rational>& gamma, const WeightVectorData& data) {
    if (gamma.size() != data.size()) throw MalformedInput("mu_v_eval: length mismatch");
    Rational num(0), norm2(0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        num += Rational(data.block_widths[i]) * gamma[i] * data.v[i];
        norm2 += Rational(data.block_widths[i]) * gamma[i] * gamma[i];
    }
    if (norm2 == 0) return KempfValue::zero();
    return {num, norm2, false};
}

Filtration coarsen(const Filtration& f, const std::vector<Rational>& gamma) {
    if (gamma.size() != f.chain.size()) throw MalformedInput("coarsen: length mismatch");
    for (std::size_t i = 0; i + 1 < gamma.size(); ++i)
        if (gamma[i] > gamma[i + 1]) throw MalformedInput("coarsen: weights must be non-decreasing");
    Filtration out;
    for (std::size_t i = 0; i < f.chain.size(); ++i) {
        if (i + 1 < gamma.size() && gamma[i] == gamma[i + 1]) continue;
        out.chain.push_back(f.chain[i]);
        out.weights.push_back(gamma[i]);
    }
    return out;
}

std::string envelope_csv(const WeightVectorData& data, const EnvelopeResult& env) {
    std::ostringstream os;
    os << "i,b_i,w_i,wtilde_i,Gamma_i\n";
    auto pts = data.points();
    for (std::size_t i = 0; i < data.size(); ++i) {
        os << (i + 1) << "," << to_string(pts[i].first) << "," << to_string(pts[i].second) << ","
           << to_string(env.w_tilde[i]) << "," << to_string(env.gamma[i]) << "\n";
    }
    return os.str();
}

std::string envelope_svg(const WeightVectorData& data, const EnvelopeResult& env, long long unit) {
    auto pts = data.points();
    Rational max_x = pts.back().first;
    Rational min_y(0), max_y(0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        min_y = std::min(min_y, std::min(pts[i].second, env.w_tilde[i]));
        max_y = std::max(max_y, std::max(pts[i].second, env.w_tilde[i]));
    }
    const long long margin = 20;
    auto sx = [&](const Rational& x) { return to_decimal(x * unit + margin, 3); };
    auto sy = [&](const Rational& y) { return to_decimal((max_y - y) * unit + margin, 3); };
    std::ostringstream os;
    Rational width = max_x * unit + 2 * margin;
    Rational height = (max_y - min_y) * unit + 2 * margin;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << to_decimal(width, 0)
       << "\" height=\"" << to_decimal(height, 0) << "\">\n";
    auto polyline = [&](const std::vector<std::pair<Rational, Rational>>& line, int stroke_width) {
        os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke_width
           << "\" points=\"";
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) os << " ";
            os << sx(line[i].first) << "," << sy(line[i].second);
        }
        os << "\"/>\n";
    };
    std::vector<std::pair<Rational, Rational>> graph{{Rational(0), Rational(0)}};
    for (auto& p : pts) graph.push_back(p);
    std::vector<std::pair<Rational, Rational>> envelope{{Rational(0), Rational(0)}};
    for (std::size_t i = 0; i < pts.size(); ++i) envelope.emplace_back(pts[i].first, env.w_tilde[i]);
    polyline(graph, 1);
    polyline(envelope, 3);
    for (auto& p : graph)
        os << "  <circle cx=\"" << sx(p.first) << "\" cy=\"" << sy(p.second)
           << "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace qhn
