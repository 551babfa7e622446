#include "qhn/io.hpp"

#include <nlohmann/json.hpp>

namespace qhn {

using nlohmann::json;

namespace {

Rational parse_scalar(const json& j, const Field& f, const std::string& where) {
    if (j.is_number_integer()) return f.normalize(Rational(j.get<long long>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return f.normalize(Rational(Int(s)));
            return f.normalize(Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1))));
        } catch (const std::exception&) {
            throw MalformedInput("bad scalar '" + s + "' in " + where);
        }
    }
    throw MalformedInput("entry in " + where + " must be an integer or an \"a/b\" string");
}

json scalar_to_json(const Rational& x) {
    if (denominator(x) == 1 && numerator(x) >= std::numeric_limits<long long>::min() &&
        numerator(x) <= std::numeric_limits<long long>::max())
        return static_cast<long long>(numerator(x));
    return to_string(x);
}

const json& require(const json& j, const std::string& key) {
    if (!j.contains(key)) throw MalformedInput("missing key '" + key + "'");
    return j.at(key);
}

}  // namespace

Representation Problem::representation() const {
    if (!has_matrices) throw MalformedInput("problem file has no matrices");
    Representation m;
    m.quiver = quiver;
    m.field = field;
    m.dims = dims;
    m.maps = matrices;
    m.validate();
    return m;
}

Problem parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
    Problem p;

    const json& jq = require(j, "quiver");
    for (const auto& v : require(jq, "vertices")) {
        if (!v.is_string()) throw MalformedInput("vertex ids must be strings");
        p.quiver.vertices.push_back(v.get<std::string>());
    }
    for (const auto& ja : require(jq, "arrows")) {
        Quiver::Arrow a;
        a.id = require(ja, "id").get<std::string>();
        a.src = p.quiver.vertex_index(require(ja, "src").get<std::string>());
        a.tgt = p.quiver.vertex_index(require(ja, "tgt").get<std::string>());
        p.quiver.arrows.push_back(std::move(a));
    }
    p.quiver.validate();

    const json& jf = require(j, "field");
    std::string ftype = require(jf, "type").get<std::string>();
    if (ftype == "rational") {
        p.field = rational_field();
    } else if (ftype == "prime") {
        long long pp = require(jf, "p").get<long long>();
        if (pp < 2 || !is_prime(static_cast<std::uint64_t>(pp)))
            throw MalformedInput("field.p = " + std::to_string(pp) + " is not prime");
        p.field = prime_field(static_cast<std::uint32_t>(pp));
    } else {
        throw MalformedInput("field.type must be \"rational\" or \"prime\"");
    }

    auto per_vertex = [&](const json& obj, const std::string& key) {
        std::vector<long long> out;
        for (const auto& v : p.quiver.vertices) {
            if (!obj.contains(v))
                throw MalformedInput("key '" + key + "' is missing vertex '" + v + "'");
            out.push_back(obj.at(v).get<long long>());
        }
        return out;
    };
    p.dims = per_vertex(require(j, "dims"), "dims");
    for (std::size_t v = 0; v < p.dims.size(); ++v)
        if (p.dims[v] < 0)
            throw MalformedInput("dims." + p.quiver.vertices[v] + " is negative");
    p.weights.theta = per_vertex(require(j, "theta"), "theta");
    p.weights.sigma = per_vertex(require(j, "sigma"), "sigma");
    for (std::size_t v = 0; v < p.weights.sigma.size(); ++v)
        if (p.weights.sigma[v] < 1)
            throw MalformedInput("sigma." + p.quiver.vertices[v] + " must be strictly positive");

    if (j.contains("matrices")) {
        p.has_matrices = true;
        const json& jm = j.at("matrices");
        for (const auto& arrow : p.quiver.arrows) {
            if (!jm.contains(arrow.id))
                throw MalformedInput("matrices is missing arrow '" + arrow.id + "'");
            const json& rows = jm.at(arrow.id);
            std::size_t r = static_cast<std::size_t>(p.dims[arrow.tgt]);
            std::size_t c = static_cast<std::size_t>(p.dims[arrow.src]);
            if (!rows.is_array() || rows.size() != r)
                throw MalformedInput("matrix for arrow '" + arrow.id + "' must have " +
                                     std::to_string(r) + " rows");
            Matrix mat(p.field, r, c);
            for (std::size_t i = 0; i < r; ++i) {
                if (!rows[i].is_array() || rows[i].size() != c)
                    throw MalformedInput("matrix for arrow '" + arrow.id + "' must have " +
                                         std::to_string(c) + " columns");
                for (std::size_t k = 0; k < c; ++k)
                    mat.at(i, k) = parse_scalar(rows[i][k], p.field,
                                                "matrix for arrow '" + arrow.id + "'");
            }
            p.matrices.push_back(std::move(mat));
        }
        p.representation();  // full structural validation
    }
    return p;
}

std::string serialize_problem(const Problem& p) {
    json j;
    j["quiver"]["vertices"] = p.quiver.vertices;
    j["quiver"]["arrows"] = json::array();
    for (const auto& a : p.quiver.arrows)
        j["quiver"]["arrows"].push_back({{"id", a.id},
                                         {"src", p.quiver.vertices[a.src]},
                                         {"tgt", p.quiver.vertices[a.tgt]}});
    if (p.field.is_prime_field())
        j["field"] = {{"type", "prime"}, {"p", p.field.p}};
    else
        j["field"] = {{"type", "rational"}};
    for (std::size_t v = 0; v < p.quiver.vertices.size(); ++v) {
        const auto& name = p.quiver.vertices[v];
        j["dims"][name] = p.dims[v];
        j["theta"][name] = p.weights.theta[v];
        j["sigma"][name] = p.weights.sigma[v];
    }
    if (p.has_matrices) {
        for (std::size_t a = 0; a < p.quiver.arrows.size(); ++a) {
            json rows = json::array();
            const Matrix& m = p.matrices[a];
            for (std::size_t i = 0; i < m.rows; ++i) {
                json row = json::array();
                for (std::size_t k = 0; k < m.cols; ++k) row.push_back(scalar_to_json(m.at(i, k)));
                rows.push_back(std::move(row));
            }
            j["matrices"][p.quiver.arrows[a].id] = std::move(rows);
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace qhn
