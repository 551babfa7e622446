#include "qhn/verify.hpp"

#include <sstream>

#include "qhn/format.hpp"

namespace qhn {

TheoremCheck verify_theorem(const Representation& m, const StabilityWeights& w,
                            std::uint64_t subspace_guard) {
    TheoremCheck check;
    if (is_semistable(m, w, subspace_guard)) {
        check.status = TheoremStatus::NotApplicable;
        return check;
    }
    check.hn = hn_filtration(m, w, subspace_guard);
    KempfResult kempf = kempf_filtration(m, w, subspace_guard);
    check.kempf = kempf.filtration;
    check.kempf_value = kempf.value;

    bool chains_equal = check.hn.filtration.chain == check.kempf.chain;

    // predicted weights: Gamma_i = Theta(M) - sigma(M) mu(M^i), from the
    // Kempf filtration's own quotient data
    check.weights_match_v = true;
    auto qdims = filtration_quotient_dims(check.kempf);
    for (std::size_t i = 0; i < qdims.size(); ++i) {
        Rational predicted = Rational(theta_of(m.dims, w)) -
                             Rational(sigma_of(m.dims, w)) * slope(qdims[i], w);
        if (check.kempf.weights[i] != predicted) check.weights_match_v = false;
    }
    check.status =
        (chains_equal && check.weights_match_v) ? TheoremStatus::Pass : TheoremStatus::Fail;
    return check;
}

namespace {

// Base-p odometer over all arrow matrix entries.
struct MatrixTupleIterator {
    const Quiver& quiver;
    const DimVec& dims;
    Field field;
    std::vector<std::uint32_t> digits;
    bool exhausted = false;

    MatrixTupleIterator(const Quiver& q, const DimVec& d, std::uint32_t p)
        : quiver(q), dims(d), field(prime_field(p)) {
        std::size_t total_entries = 0;
        for (const auto& a : q.arrows)
            total_entries += static_cast<std::size_t>(d[a.tgt]) * static_cast<std::size_t>(d[a.src]);
        digits.assign(total_entries, 0);
    }

    Representation current() const {
        Representation m;
        m.quiver = quiver;
        m.field = field;
        m.dims = dims;
        std::size_t pos = 0;
        for (const auto& a : quiver.arrows) {
            Matrix mat(field, static_cast<std::size_t>(dims[a.tgt]),
                       static_cast<std::size_t>(dims[a.src]));
            for (auto& e : mat.entries) e = digits[pos++];
            m.maps.push_back(std::move(mat));
        }
        return m;
    }

    void advance() {
        std::size_t i = digits.size();
        while (i > 0) {
            --i;
            if (++digits[i] < field.p) return;
            digits[i] = 0;
        }
        exhausted = true;
    }
};

}  // namespace

ScanReport exhaustive_scan(const Quiver& quiver, const DimVec& d, std::uint32_t p,
                           const StabilityWeights& w, const ScanGuards& guards) {
    quiver.validate();
    w.validate(quiver.vertices.size());
    if (d.size() != quiver.vertices.size())
        throw MalformedInput("scan dimension vector not indexed by the quiver's vertices");
    if (is_zero(d)) throw MalformedInput("scan requires a nonzero dimension vector");

    Int total(1);
    for (const auto& a : quiver.arrows)
        total *= boost::multiprecision::pow(Int(p),
                                            static_cast<unsigned>(d[a.src] * d[a.tgt]));
    if (total > guards.representations)
        throw ResourceLimit("scan over " + total.str() + " representation points exceeds guard " +
                            std::to_string(guards.representations));

    ScanReport report;
    report.quiver = quiver;
    report.dims = d;
    report.p = p;
    report.weights = w;

    for (MatrixTupleIterator it(quiver, d, p); !it.exhausted; it.advance()) {
        Representation m = it.current();
        ++report.total;
        bool ss = is_semistable(m, w, guards.subspaces);
        bool hm = hm_semistable(m, w, guards.subspaces);
        if (ss != hm)
            throw InternalContradiction(
                "slope semistability and Hilbert-Mumford semistability disagree");
        report.strata[hn_type_to_string(hn_type(m, w, guards.subspaces))] += 1;
        if (ss) {
            ++report.semistable;
            continue;
        }
        ++report.unstable;
        TheoremCheck check = verify_theorem(m, w, guards.subspaces);
        if (check.status == TheoremStatus::Pass) {
            ++report.theorem_pass;
        } else {
            ++report.theorem_fail;
            std::ostringstream payload;
            payload << format_representation(m) << format_hn(quiver, check.hn)
                    << format_kempf(quiver, {check.kempf, check.kempf_value});
            report.counterexamples.push_back(payload.str());
        }
    }
    return report;
}

std::string scan_report_to_string(const ScanReport& report) {
    std::ostringstream os;
    os << "scan: total = " << report.total << ", semistable = " << report.semistable
       << ", unstable = " << report.unstable << "\n";
    os << "theorem: pass = " << report.theorem_pass << ", fail = " << report.theorem_fail << "\n";
    os << "strata (representation points per HN type):\n";
    for (const auto& [type, count] : report.strata) os << "  " << type << ": " << count << "\n";
    for (std::size_t i = 0; i < report.counterexamples.size(); ++i)
        os << "counterexample " << (i + 1) << ":\n" << report.counterexamples[i];
    return os.str();
}

}  // namespace qhn
