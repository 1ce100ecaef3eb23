#include <doctest.h>

#include "milnor/criterion.hpp"

using namespace milnor;

TEST_CASE("single-representation verdicts") {
    CriterionReport b2 = evaluate({'B', 2, {1, 0}});
    CHECK(b2.verdict == Verdict::Milnorian);
    CHECK(b2.dim == 5);
    CHECK(b2.zero_weight_dim == 1);
    CHECK(b2.cond_i);
    CHECK(b2.cond_iii);
    CHECK(b2.x0.has_value());

    CriterionReport a1_adj = evaluate({'A', 1, {2}});
    CHECK(a1_adj.verdict == Verdict::NonMilnorianCriterion);
    CHECK_FALSE(a1_adj.cond_i);

    CriterionReport a1_std = evaluate({'A', 1, {1}});
    CHECK(a1_std.verdict == Verdict::MilnorianTrivially);
    CHECK(a1_std.zero_weight_dim == 0);
}

TEST_CASE("verdict invariants hold on a mixed scan") {
    std::vector<RepId> catalog{
        {'B', 1, {2}}, {'B', 2, {1, 0}}, {'B', 3, {1, 0, 0}}, {'A', 1, {1}},
        {'A', 2, {1, 1}}, {'A', 3, {0, 1, 0}}, {'B', 2, {2, 0}},
    };
    auto reports = scan(catalog);
    REQUIRE(reports.size() == catalog.size());
    for (const auto& r : reports) {
        REQUIRE_FALSE(r.error.has_value());
        CHECK((r.verdict == Verdict::MilnorianTrivially) == (r.zero_weight_dim == 0));
        CHECK((r.verdict == Verdict::Milnorian) == (r.zero_weight_dim > 0 && r.cond_i && r.cond_iii));
        CHECK((r.verdict == Verdict::NonMilnorianCriterion) == (r.zero_weight_dim > 0 && !r.cond_i));
    }
}

TEST_CASE("standard series of B_n alternates") {
    // highest weight e1 throughout; for n = 1 that is 2*omega_1 (omega_1
    // alone is the two-dimensional spin module)
    std::vector<RepId> catalog{{'B', 1, {2}}, {'B', 2, {1, 0}}, {'B', 3, {1, 0, 0}}};
    auto reports = scan(catalog);
    CHECK(reports[0].dim == 3);
    CHECK(reports[1].dim == 5);
    CHECK(reports[2].dim == 7);
    CHECK(reports[0].verdict == Verdict::NonMilnorianCriterion);
    CHECK(reports[1].verdict == Verdict::Milnorian);
    CHECK(reports[2].verdict == Verdict::NonMilnorianCriterion);
}

TEST_CASE("adjoint representations fail the fixed-vector condition") {
    std::vector<RepId> catalog{{'A', 1, {2}}, {'A', 2, {1, 1}}, {'B', 2, {0, 2}}};
    auto reports = scan(catalog);
    for (const auto& r : reports) {
        REQUIRE_FALSE(r.error.has_value());
        CHECK(r.verdict == Verdict::NonMilnorianCriterion);
    }
    CHECK(reports[2].dim == 10);
}

TEST_CASE("A3 Lambda^2: no zero weight, but the hyperplane failure is still reported") {
    CriterionReport r = evaluate({'A', 3, {0, 1, 0}});
    CHECK(r.verdict == Verdict::MilnorianTrivially);
    CHECK(r.zero_weight_dim == 0);
    CHECK_FALSE(r.cond_iii);
    CHECK(r.cond_iii_witness.has_value());
}

TEST_CASE("A3 (0,2,0) is undecided: zero weight present but the theorem does not apply") {
    CriterionReport r = evaluate({'A', 3, {0, 2, 0}});
    CHECK(r.dim == 20);
    CHECK(r.zero_weight_dim == 2);
    CHECK(r.cond_i);
    CHECK_FALSE(r.cond_iii);
    CHECK(r.verdict == Verdict::Undecided);
}

TEST_CASE("empty catalog and error recording") {
    CHECK(scan({}).empty());
    auto reports = scan({{'B', 3, {3, 3, 3}}}); // over the module cap
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].error.has_value());
}

TEST_CASE("scan is deterministic and order-preserving, parallel or not") {
    std::vector<RepId> catalog{{'B', 2, {1, 0}}, {'A', 1, {2}}, {'B', 2, {2, 0}}, {'A', 2, {1, 0}}};
    auto a = scan(catalog, 100000, 2000, true);
    auto b = scan(catalog, 100000, 2000, false);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].verdict == b[i].verdict);
        CHECK(a[i].dim == b[i].dim);
        CHECK(a[i].rep_id.to_string() == catalog[i].to_string());
    }
}
