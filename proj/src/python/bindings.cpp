#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhn/format.hpp"
#include "qhn/io.hpp"
#include "qhn/verify.hpp"

namespace py = pybind11;
using namespace qhn;

namespace {

Problem problem_from_json(const std::string& text) { return parse_problem(text); }

py::list chain_to_py(const Quiver& q, const Filtration& f) {
    py::list steps;
    for (std::size_t i = 0; i < f.chain.size(); ++i) {
        py::dict step;
        py::dict bases;
        for (std::size_t v = 0; v < f.chain[i].spaces.size(); ++v) {
            const Subspace& s = f.chain[i].spaces[v];
            py::list rows;
            for (std::size_t r = 0; r < s.dim(); ++r) {
                py::list row;
                for (std::size_t c = 0; c < s.ambient_dim; ++c)
                    row.append(to_string(s.basis.at(r, c)));
                rows.append(row);
            }
            bases[py::str(q.vertices[v])] = rows;
        }
        step["dims"] = f.chain[i].dims();
        step["basis"] = bases;
        if (!f.weights.empty()) step["weight"] = to_string(f.weights[i]);
        steps.append(step);
    }
    return steps;
}

}  // namespace

PYBIND11_MODULE(_qhn, m) {
    m.doc() = "Slope stability, Harder-Narasimhan and Kempf filtrations for quiver "
              "representations over exact fields";

    py::register_exception<MalformedInput>(m, "MalformedInputError", PyExc_ValueError);
    py::register_exception<ResourceLimit>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<InternalContradiction>(m, "InternalContradictionError",
                                                  PyExc_RuntimeError);
    py::register_exception<UndefinedSlope>(m, "UndefinedSlopeError", PyExc_ValueError);
    py::register_exception<NotUnstable>(m, "NotUnstableError", PyExc_ValueError);

    m.def("slope", [](const std::string& problem_json) {
        Problem p = problem_from_json(problem_json);
        return to_string(slope(p.dims, p.weights));
    }, "Exact slope Theta(d)/sigma(d) as a fraction string.");

    m.def("is_semistable", [](const std::string& problem_json) {
        Problem p = problem_from_json(problem_json);
        return is_semistable(p.representation(), p.weights);
    });

    m.def("hn_filtration", [](const std::string& problem_json) {
        Problem p = problem_from_json(problem_json);
        HNResult hn = hn_filtration(p.representation(), p.weights);
        py::dict out;
        out["chain"] = chain_to_py(p.quiver, hn.filtration);
        py::list slopes;
        for (const auto& s : hn.slopes) slopes.append(to_string(s));
        out["quotient_slopes"] = slopes;
        out["quotient_dims"] = hn.quotient_dims;
        return out;
    });

    m.def("kempf_filtration", [](const std::string& problem_json) {
        Problem p = problem_from_json(problem_json);
        KempfResult k = kempf_filtration(p.representation(), p.weights);
        py::dict out;
        out["chain"] = chain_to_py(p.quiver, k.filtration);
        out["value_num"] = to_string(k.value.num);
        out["value_norm_square"] = to_string(k.value.norm_square);
        return out;
    });

    m.def("verify_theorem", [](const std::string& problem_json) {
        Problem p = problem_from_json(problem_json);
        TheoremCheck c = verify_theorem(p.representation(), p.weights);
        switch (c.status) {
            case TheoremStatus::Pass: return "pass";
            case TheoremStatus::Fail: return "fail";
            default: return "not-applicable";
        }
    });

    m.def("scan", [](const std::string& problem_json) {
        Problem p = problem_from_json(problem_json);
        if (!p.field.is_prime_field())
            throw MalformedInput("scan requires a prime field");
        ScanReport r = exhaustive_scan(p.quiver, p.dims, p.field.p, p.weights);
        py::dict out;
        out["total"] = r.total;
        out["semistable"] = r.semistable;
        out["unstable"] = r.unstable;
        out["theorem_pass"] = r.theorem_pass;
        out["theorem_fail"] = r.theorem_fail;
        py::dict strata;
        for (const auto& [type, count] : r.strata) strata[py::str(type)] = count;
        out["strata"] = strata;
        return out;
    });

    m.def("envelope_csv", [](const std::string& problem_json) {
        Problem p = problem_from_json(problem_json);
        Representation rep = p.representation();
        HNResult hn = hn_filtration(rep, p.weights);
        WeightVectorData data = vector_of_filtration(rep, hn.filtration, p.weights);
        return envelope_csv(data, gamma_opt(data));
    });
}
