#include <doctest.h>

#include <cmath>

#include "editdist/distance.hpp"
#include "editdist/tree_mapping.hpp"
#include "test_support.hpp"

using namespace editdist;
using namespace testsupport;

TEST_SUITE_BEGIN("distance");

TEST_CASE("identical trees are at distance zero") {
    Dendrogram t = paper_tree_left();
    auto [d, table] = compute_distance(t, t);
    CHECK(d == doctest::Approx(0));
}

TEST_CASE("a single vertex is at distance tree_norm") {
    Dendrogram t = paper_tree_left();
    Dendrogram point(Space::reals(), "z");
    CHECK(compute_distance(t, point).first == doctest::Approx(t.tree_norm()));
    CHECK(compute_distance(point, t).first == doctest::Approx(t.tree_norm()));
}

TEST_CASE("the worked four-edge pair matches the oracle") {
    Dendrogram t = paper_tree_left();
    Dendrogram u = paper_tree_right();
    double oracle = brute_force_tree_distance(t, u);
    auto [d, table] = compute_distance(t, u);
    CHECK(d == doctest::Approx(oracle).epsilon(1e-12));
    // Cheaper than the identity-style matching: couple b through the ghosted
    // d onto c' and c onto the b'-d' chain, deleting a and a' (1+1+0+0).
    CHECK(d == doctest::Approx(2));

    // worked subtree values appear in the table
    CHECK(table.get("d", "d'") == doctest::Approx(1));
    CHECK(table.get("d", "r'") == doctest::Approx(6));
    CHECK(table.get("a", "a'") == doctest::Approx(0));  // leaf pairs are free
    CHECK(table.get("a", "d'") == doctest::Approx(3));  // degenerate couple
}

TEST_CASE("table entries are subtree distances") {
    Dendrogram t = paper_tree_left();
    Dendrogram u = paper_tree_right();
    auto [d, table] = compute_distance(t, u);
    for (const auto& x : t.vertices()) {
        for (const auto& y : u.vertices()) {
            REQUIRE(table.has(x, y));
            double again = compute_distance(t.subtree(x), u.subtree(y)).first;
            CHECK(table.get(x, y) == doctest::Approx(again).epsilon(1e-12));
        }
    }
    CHECK(table.frontier_left() == t.len());
    CHECK(table.frontier_right() == u.len());
}

TEST_CASE("engine equals the oracle on random pairs") {
    Rng rng(83);
    for (int k = 0; k < 30; ++k) {
        Dendrogram t = random_tree(rng, rand_int(rng, 1, 5));
        Dendrogram u = random_tree(rng, rand_int(rng, 1, 5));
        double oracle = brute_force_tree_distance(t, u);
        double engine = compute_distance(t, u).first;
        CHECK(engine == doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("metric behaviour") {
    Rng rng(89);
    for (int k = 0; k < 6; ++k) {
        Dendrogram a = random_tree(rng, rand_int(rng, 1, 5));
        Dendrogram b = random_tree(rng, rand_int(rng, 1, 5));
        Dendrogram c = random_tree(rng, rand_int(rng, 1, 5));
        double ab = compute_distance(a, b).first;
        double ba = compute_distance(b, a).first;
        double ac = compute_distance(a, c).first;
        double bc = compute_distance(b, c).first;
        CHECK(compute_distance(a, a).first == doctest::Approx(0));
        CHECK(std::abs(ab - ba) <= 1e-9);
        CHECK(ac <= ab + bc + 1e-9);
        // empty-mapping bound
        CHECK(ab <= a.tree_norm() + b.tree_norm() + 1e-9);
    }
}

TEST_CASE("order-2 splits do not move the distance") {
    Rng rng(97);
    for (int k = 0; k < 8; ++k) {
        Dendrogram t = random_tree(rng, rand_int(rng, 1, 5));
        Dendrogram u = random_tree(rng, rand_int(rng, 1, 5));
        double before = compute_distance(t, u).first;
        auto vs = t.non_root_vertices();
        const std::string& v = vs[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(vs.size()) - 1))];
        double w = t.weight(v).as_real();
        Dendrogram split = t.split_edge(v, "mid", Weight::real(w / 3), Weight::real(2 * w / 3));
        CHECK(compute_distance(split, u).first == doctest::Approx(before).epsilon(1e-9));
        CHECK(compute_distance(split, t).first == doctest::Approx(0).epsilon(1e-9));
    }
}

TEST_CASE("values are schedule independent") {
    Rng rng(101);
    Dendrogram t = random_tree(rng, 6);
    Dendrogram u = random_tree(rng, 6);
    ComputeOptions serial;
    serial.threads = 1;
    ComputeOptions wide;
    wide.threads = 4;
    CHECK(compute_distance(t, u, serial).first == compute_distance(t, u, wide).first);
}

TEST_CASE("distance matrix") {
    Dendrogram t = paper_tree_left();
    auto single = distance_matrix({t});
    CHECK(single.size() == 1);
    CHECK(single[0][0] == 0.0);

    auto twin = distance_matrix({t, t});
    CHECK(twin[0][1] == doctest::Approx(0));
    CHECK(twin[1][0] == doctest::Approx(0));

    Rng rng(103);
    std::vector<Dendrogram> trees;
    for (int i = 0; i < 3; ++i) trees.push_back(random_tree(rng, rand_int(rng, 1, 4)));
    auto m = distance_matrix(trees);
    for (std::size_t i = 0; i < trees.size(); ++i) {
        CHECK(m[i][i] == 0.0);
        for (std::size_t j = 0; j < trees.size(); ++j) {
            CHECK(m[i][j] == doctest::Approx(m[j][i]));
            CHECK(m[i][j] ==
                  doctest::Approx(brute_force_tree_distance(trees[i], trees[j])).epsilon(1e-9));
            for (std::size_t k = 0; k < trees.size(); ++k)
                CHECK(m[i][j] <= m[i][k] + m[k][j] + 1e-9);
        }
    }
}

TEST_CASE("mixed weight spaces are rejected") {
    Dendrogram a(Space::reals(), "r");
    a.add_vertex("x", "r", Weight::real(1));
    Dendrogram b(Space::product({Space::reals(), Space::reals()}), "r");
    b.add_vertex("x", "r", Weight::tuple({Weight::real(1), Weight::real(1)}));
    CHECK_THROWS_AS(compute_distance(a, b), SpaceMismatchError);
    CHECK_THROWS_AS(distance_matrix({a, b}), SpaceMismatchError);
}

TEST_CASE("tuple weights run through the whole engine") {
    Space prod = Space::product({Space::reals(), Space::reals()});
    Dendrogram t(prod, "r");
    t.add_vertex("a", "r", Weight::tuple({Weight::real(1), Weight::real(2)}));
    t.add_vertex("b", "r", Weight::tuple({Weight::real(2), Weight::real(1)}));
    Dendrogram u(prod, "r");
    u.add_vertex("a", "r", Weight::tuple({Weight::real(1), Weight::real(2)}));
    CHECK(compute_distance(t, t).first == doctest::Approx(0));
    double d = compute_distance(t, u).first;
    CHECK(d == doctest::Approx(brute_force_tree_distance(t, u)).epsilon(1e-9));
}

TEST_SUITE_END();
