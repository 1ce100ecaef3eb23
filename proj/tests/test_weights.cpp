#include <doctest.h>

#include "milnor/weights.hpp"

#include <algorithm>

using namespace milnor;

namespace {

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

HighestWeight hw_of(const char* name, std::vector<long> coords) {
    return HighestWeight{std::move(coords), build_root_system(name)};
}

} // namespace

TEST_CASE("sl2 strings") {
    WeightSystem ws = weight_system(hw_of("A1", {2})); // adjoint
    CHECK(ws.total_dim == 3);
    CHECK(ws.entries.size() == 3);
    for (const auto& [w, m] : ws.entries) CHECK(m == 1);
    CHECK(has_zero_weight(ws));

    WeightSystem std2 = weight_system(hw_of("A1", {1}));
    CHECK(std2.total_dim == 2);
    CHECK_FALSE(has_zero_weight(std2));
}

TEST_CASE("B2 vector representation: weights from the orbit-count oracle") {
    RootSystem rs = build_root_system('B', 2);
    WeightSystem ws = weight_system(HighestWeight{{1, 0}, rs});
    CHECK(ws.total_dim == 5);
    CHECK(zero_weight_multiplicity(ws) == 1);

    // oracle: the Weyl orbit of omega_1 = e1 under closure by reflections
    std::vector<QVec> orbit{qv({1, 0})};
    for (std::size_t k = 0; k < orbit.size(); ++k)
        for (const auto& a : rs.simple_roots) {
            Rat c = 2 * qdot(orbit[k], a) / qdot(a, a);
            QVec img = qvec_sub(orbit[k], qvec_scale(a, c));
            if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
        }
    CHECK(orbit.size() == 4);
    for (const auto& w : orbit) {
        REQUIRE(ws.entries.count(w) == 1);
        CHECK(ws.entries.at(w) == 1);
    }
    CHECK(ws.total_dim - static_cast<long>(orbit.size()) == zero_weight_multiplicity(ws));
}

TEST_CASE("B2 twice-omega1: Freudenthal vs traceless Sym^2 oracle") {
    RootSystem rs = build_root_system('B', 2);
    WeightSystem v5 = weight_system(HighestWeight{{1, 0}, rs});
    WeightSystem ws = weight_system(HighestWeight{{2, 0}, rs});
    CHECK(ws.total_dim == 14);
    CHECK(zero_weight_multiplicity(ws) == 2);

    // multiset {li + lj : i <= j} minus one copy of zero (the invariant form)
    std::vector<QVec> five;
    for (const auto& [w, m] : v5.entries)
        for (long c = 0; c < m; ++c) five.push_back(w);
    REQUIRE(five.size() == 5);
    WeightMap sym2;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i; j < 5; ++j) sym2[qvec_add(five[i], five[j])] += 1;
    sym2[QVec(2, Rat(0))] -= 1;

    long total = 0;
    for (const auto& [w, m] : sym2) {
        if (m == 0) continue;
        REQUIRE(ws.entries.count(w) == 1);
        CHECK(ws.entries.at(w) == m);
        total += m;
    }
    CHECK(total == ws.total_dim);
}

TEST_CASE("zero-weight predicate on the A2 standard representation") {
    WeightSystem ws = weight_system(hw_of("A2", {1, 0}));
    CHECK(ws.total_dim == 3);
    CHECK_FALSE(has_zero_weight(ws));
}

TEST_CASE("weight multisets are Weyl invariant and sum to zero") {
    for (auto [name, coords] : std::vector<std::pair<const char*, std::vector<long>>>{
             {"B2", {2, 0}}, {"A2", {1, 1}}, {"B3", {1, 0, 0}}, {"G2", {0, 1}}}) {
        WeightSystem ws = weight_system(hw_of(name, coords));
        const RootSystem& rs = ws.rs;
        QVec sum(rs.ambient_dim, Rat(0));
        for (const auto& [w, m] : ws.entries) {
            sum = qvec_add(sum, qvec_scale(w, Rat(m)));
            for (int i = 0; i < rs.rank; ++i) {
                Rat c = rs.pairing(w, i);
                QVec img = qvec_sub(w, qvec_scale(rs.simple_roots[i], c));
                REQUIRE(ws.entries.count(img) == 1);
                CHECK(ws.entries.at(img) == m);
            }
        }
        CHECK(qvec_is_zero(sum));
    }
}

TEST_CASE("dimension cap carries the computed dimension") {
    RootSystem rs = build_root_system('B', 3);
    try {
        weight_system(HighestWeight{{4, 4, 4}, rs}, 1000);
        FAIL("expected a cap error");
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("exceeds the cap") != std::string::npos);
    }
}

TEST_CASE("condition (iii): nonzero weights restricted to the fixed subspace") {
    SUBCASE("B2 vector rep: w0 = -1, F is the whole Cartan") {
        auto r = condition_iii_check(weight_system(hw_of("B2", {1, 0})));
        CHECK(r.ok);
    }
    SUBCASE("A2 adjoint: no root vanishes on the 1-dimensional F") {
        auto r = condition_iii_check(weight_system(hw_of("A2", {1, 1})));
        CHECK(r.ok);
    }
    SUBCASE("A3 second fundamental: detected failure with an explicit witness") {
        WeightSystem ws = weight_system(hw_of("A3", {0, 1, 0}));
        CHECK(ws.total_dim == 6);
        auto r = condition_iii_check(ws);
        REQUIRE_FALSE(r.ok);
        // the witness weight vanishes identically on F
        auto fbasis = minus_w0_fixed_subspace(ws.rs);
        for (const auto& f : fbasis) CHECK(qdot(r.offending_weight, f) == 0);
        // and it is (up to the traceless shift) the {2,3} weight of the spec'd failure
        QVec expected{Rat(-1, 2), Rat(1, 2), Rat(1, 2), Rat(-1, 2)};
        CHECK(r.offending_weight == expected);
    }
}

TEST_CASE("x0 witness properties") {
    SUBCASE("B2 vector rep") {
        WeightSystem ws = weight_system(hw_of("B2", {1, 0}));
        DominantVector x0 = x0_candidate(ws);
        CHECK(x0.strict);
        for (const auto& v : x0.coords) CHECK(v.get_den() == 1);
        for (const auto& [w, m] : ws.entries) {
            if (qvec_is_zero(w)) continue;
            CHECK(qdot(w, x0.coords) != 0);
        }
    }
    SUBCASE("A1 adjoint: the ray is all that matters") {
        WeightSystem ws = weight_system(hw_of("A1", {2}));
        DominantVector x0 = x0_candidate(ws);
        CHECK(x0.coords == QVec{Rat(1), Rat(-1)});
    }
    SUBCASE("A2 adjoint: generator of F") {
        WeightSystem ws = weight_system(hw_of("A2", {1, 1}));
        DominantVector x0 = x0_candidate(ws);
        auto fbasis = minus_w0_fixed_subspace(ws.rs);
        REQUIRE(fbasis.size() == 1);
        CHECK((x0.coords == fbasis[0] || x0.coords == qvec_scale(fbasis[0], Rat(-1))));
    }
    SUBCASE("failure is an error") {
        WeightSystem ws = weight_system(hw_of("A3", {0, 1, 0}));
        CHECK_THROWS_AS(x0_candidate(ws), std::runtime_error);
    }
}
