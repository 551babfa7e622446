#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qhn/format.hpp"
#include "qhn/io.hpp"
#include "qhn/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitResource = 2;
constexpr int kExitContradiction = 3;
constexpr int kExitNotApplicable = 4;

struct Options {
    std::string command;
    std::string problem_path;
    std::uint64_t guard_subspaces = 1000000;
    std::uint64_t guard_reps = 100000;
    std::uint64_t seed = 0;
    std::string svg_path;
    std::vector<long long> transform;  // empty or {a, b}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qhn::MalformedInput("cannot open problem file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int dispatch(const Options& opt) {
    using namespace qhn;
    Problem problem = parse_problem(read_file(opt.problem_path));
    StabilityWeights w = problem.weights;
    if (!opt.transform.empty()) w = transform_weights(w, opt.transform[0], opt.transform[1]);

    std::cout << format_header(problem.quiver, problem.field, problem.dims, w);

    if (opt.command == "scan") {
        if (!problem.field.is_prime_field())
            throw MalformedInput("scan requires a prime field");
        ScanGuards guards{opt.guard_subspaces, opt.guard_reps};
        ScanReport report =
            exhaustive_scan(problem.quiver, problem.dims, problem.field.p, w, guards);
        std::cout << scan_report_to_string(report);
        return report.theorem_fail == 0 ? kExitOk : kExitContradiction;
    }

    Representation m = problem.representation();

    if (opt.command == "slope") {
        std::cout << "slope = " << to_string(slope(m.dims, w)) << "\n";
        return kExitOk;
    }
    if (opt.command == "semistable") {
        bool ss = is_semistable(m, w, opt.guard_subspaces);
        std::cout << "semistable = " << (ss ? "true" : "false") << "\n";
        if (!ss) {
            Rational mu = slope(m.dims, w);
            for (const auto& s : enumerate_subreps(m, opt.guard_subspaces)) {
                DimVec d = s.dims();
                if (is_zero(d) || d == m.dims) continue;
                if (slope(d, w) > mu) {
                    std::cout << "witness: subrepresentation with dims " << format_dimvec(d)
                              << ", slope " << to_string(slope(d, w)) << " > " << to_string(mu)
                              << "\n"
                              << format_subrep(m.quiver, s);
                    break;
                }
            }
        }
        return kExitOk;
    }
    if (opt.command == "hn") {
        std::cout << format_hn(m.quiver, hn_filtration(m, w, opt.guard_subspaces));
        return kExitOk;
    }
    if (opt.command == "kempf") {
        KempfResult kempf = kempf_filtration(m, w, opt.guard_subspaces);
        std::cout << format_kempf(m.quiver, kempf);
        return kExitOk;
    }
    if (opt.command == "verify") {
        TheoremCheck check = verify_theorem(m, w, opt.guard_subspaces);
        if (check.status == TheoremStatus::NotApplicable) {
            std::cout << "NOT APPLICABLE: representation is (Θ,σ)-semistable\n";
            return kExitNotApplicable;
        }
        std::cout << format_hn(m.quiver, check.hn)
                  << format_kempf(m.quiver, {check.kempf, check.kempf_value})
                  << "weights match v: " << (check.weights_match_v ? "true" : "false") << "\n";
        if (check.status == TheoremStatus::Pass) {
            std::cout << "PASS: Kempf filtration = HN filtration\n";
            return kExitOk;
        }
        std::cout << "FAIL: Kempf filtration differs from HN filtration\n";
        return kExitContradiction;
    }
    if (opt.command == "envelope") {
        HNResult hn = hn_filtration(m, w, opt.guard_subspaces);
        Filtration f = hn.filtration;
        WeightVectorData data = vector_of_filtration(m, f, w);
        EnvelopeResult env = gamma_opt(data);
        std::cout << envelope_csv(data, env);
        if (!opt.svg_path.empty()) {
            std::ofstream out(opt.svg_path, std::ios::binary);
            if (!out) throw MalformedInput("cannot write SVG to '" + opt.svg_path + "'");
            out << envelope_svg(data, env);
        }
        return kExitOk;
    }
    throw MalformedInput("unknown command '" + opt.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slope stability, Harder-Narasimhan filtrations, and Kempf filtrations "
                 "for finite quiver representations over exact fields"};
    app.require_subcommand(1);

    Options opt;
    for (const char* name : {"slope", "semistable", "hn", "kempf", "verify", "scan", "envelope"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("problem", opt.problem_path, "JSON problem file")->required();
        sub->add_option("--guard-subspaces", opt.guard_subspaces,
                        "ceiling on subspaces enumerated per vertex");
        sub->add_option("--guard-reps", opt.guard_reps,
                        "ceiling on representation points per scan");
        sub->add_option("--seed", opt.seed, "seed for randomized commands");
        sub->add_option("--transform", opt.transform,
                        "apply theta' = a*theta + b*sigma before computing")
            ->expected(2);
        if (std::string(name) == "envelope")
            sub->add_option("--svg", opt.svg_path, "write the envelope figure to this SVG file");
        sub->callback([&opt, name]() { opt.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitMalformed;
    }

    try {
        return dispatch(opt);
    } catch (const qhn::NotUnstable& e) {
        std::cout << e.what() << "\n";
        return kExitNotApplicable;
    } catch (const qhn::ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const qhn::InternalContradiction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContradiction;
    } catch (const qhn::MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const qhn::UndefinedSlope& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
}
