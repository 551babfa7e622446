#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhn/verify.hpp"

using namespace qhn;

namespace {

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

Representation a2_rep(long long entry) {
    Representation m;
    m.quiver = a2();
    m.field = prime_field(2);
    m.dims = {1, 1};
    Matrix map(m.field, 1, 1);
    map.at(0, 0) = entry;
    m.maps.push_back(map);
    return m;
}

const StabilityWeights kWeights{{1, 0}, {1, 1}};

}  // namespace

TEST_CASE("verify_theorem") {
    SUBCASE("EX1 passes") {
        TheoremCheck check = verify_theorem(a2_rep(0), kWeights);
        CHECK(check.status == TheoremStatus::Pass);
        CHECK(check.hn.filtration.chain == check.kempf.chain);
        CHECK(check.weights_match_v);
        // the Kempf weights are strictly increasing
        for (std::size_t i = 0; i + 1 < check.kempf.weights.size(); ++i)
            CHECK(check.kempf.weights[i] < check.kempf.weights[i + 1]);
    }
    SUBCASE("EX2 is not applicable") {
        TheoremCheck check = verify_theorem(a2_rep(1), kWeights);
        CHECK(check.status == TheoremStatus::NotApplicable);
    }
}

TEST_CASE("exhaustive_scan on A2 d=(1,1)") {
    ScanReport report = exhaustive_scan(a2(), {1, 1}, 2, kWeights);
    CHECK(report.total == 2);
    CHECK(report.semistable == 1);
    CHECK(report.unstable == 1);
    CHECK(report.theorem_pass == 1);
    CHECK(report.theorem_fail == 0);
    REQUIRE(report.strata.size() == 2);
    CHECK(report.strata.at("[(1,0) @ 1, (0,1) @ 0]") == 1);
    CHECK(report.strata.at("[(1,1) @ 1/2]") == 1);
}

TEST_CASE("exhaustive_scan with theta = 0: every point semistable") {
    ScanReport report = exhaustive_scan(a2(), {1, 1}, 2, StabilityWeights{{0, 0}, {1, 1}});
    CHECK(report.total == 2);
    CHECK(report.semistable == 2);
    CHECK(report.unstable == 0);
}

TEST_CASE("exhaustive_scan on the Kronecker quiver d=(1,1)") {
    ScanReport report = exhaustive_scan(kronecker(), {1, 1}, 2, kWeights);
    CHECK(report.total == 4);
    // only the (0,0)-maps point admits the destabilizing (F_2, 0)
    CHECK(report.unstable == 1);
    CHECK(report.semistable == 3);
    CHECK(report.theorem_fail == 0);
}

TEST_CASE("stratum sizes partition the point count") {
    for (const auto& report :
         {exhaustive_scan(a2(), {1, 1}, 2, kWeights),
          exhaustive_scan(kronecker(), {1, 1}, 2, kWeights),
          exhaustive_scan(a2(), {2, 1}, 2, kWeights)}) {
        long long sum = 0;
        for (const auto& [type, count] : report.strata) sum += count;
        CHECK(sum == report.total);
        CHECK(report.semistable + report.unstable == report.total);
    }
}

TEST_CASE("weight-transform stability of the stratification") {
    StabilityWeights transformed = transform_weights(kWeights, 2, -3);
    ScanReport base = exhaustive_scan(a2(), {2, 1}, 2, kWeights);
    ScanReport shifted = exhaustive_scan(a2(), {2, 1}, 2, transformed);
    CHECK(base.total == shifted.total);
    CHECK(base.semistable == shifted.semistable);
    // same partition; slope labels change by mu -> 2 mu - 3, so compare the
    // multiset of stratum sizes
    REQUIRE(base.strata.size() == shifted.strata.size());
    std::vector<long long> base_counts, shifted_counts;
    for (const auto& [t, c] : base.strata) base_counts.push_back(c);
    for (const auto& [t, c] : shifted.strata) shifted_counts.push_back(c);
    std::sort(base_counts.begin(), base_counts.end());
    std::sort(shifted_counts.begin(), shifted_counts.end());
    CHECK(base_counts == shifted_counts);
}

TEST_CASE("scan guard fires") {
    CHECK_THROWS_AS(exhaustive_scan(kronecker(), {2, 2}, 2, kWeights, ScanGuards{1000000, 10}),
                    ResourceLimit);
}

TEST_CASE("scan rejects malformed input") {
    CHECK_THROWS_AS(exhaustive_scan(a2(), {0, 0}, 2, kWeights), MalformedInput);
    CHECK_THROWS_AS(exhaustive_scan(a2(), {1}, 2, kWeights), MalformedInput);
}

TEST_CASE("scan report rendering is deterministic") {
    std::string a = scan_report_to_string(exhaustive_scan(a2(), {1, 1}, 2, kWeights));
    std::string b = scan_report_to_string(exhaustive_scan(a2(), {1, 1}, 2, kWeights));
    CHECK(a == b);
    CHECK(a.find("scan: total = 2, semistable = 1, unstable = 1") != std::string::npos);
    CHECK(a.find("theorem: pass = 1, fail = 0") != std::string::npos);
}
