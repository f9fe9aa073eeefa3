#include <doctest.h>

#include <algorithm>

#include "editdist/dendrogram.hpp"
#include "test_support.hpp"

using namespace editdist;
using namespace testsupport;

TEST_SUITE_BEGIN("dendrogram");

TEST_CASE("norms of the worked four-edge trees") {
    Dendrogram t = paper_tree_left();
    CHECK(t.tree_norm() == doctest::Approx(8));  // 1+1+1+5
    Dendrogram u = paper_tree_right();
    CHECK(u.subtree("d'").tree_norm() == doctest::Approx(3));  // 1+2
    CHECK(u.subtree_norm("d'") == doctest::Approx(3));
}

TEST_CASE("subtree") {
    Dendrogram t = paper_tree_left();
    CHECK(t.subtree("r").isomorphic_to(t));
    Dendrogram leaf = t.subtree("a");
    CHECK(leaf.vertex_count() == 1);
    CHECK(leaf.edge_count() == 0);
    Dendrogram sub = t.subtree("d");
    auto edges = sub.non_root_vertices();
    CHECK(edges == std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(t.subtree("nope"), NotInGraphError);
}

TEST_CASE("normalize ghosts order-2 chains") {
    Dendrogram t(Space::reals(), "r");
    t.add_vertex("m", "r", Weight::real(3));
    t.add_vertex("x", "m", Weight::real(1));
    Dendrogram n = t.normalized();
    CHECK(n.vertex_count() == 2);
    CHECK(n.weight("x").as_real() == doctest::Approx(4));  // 1 then 3, combined upward
    CHECK(n.tree_norm() == doctest::Approx(t.tree_norm()));

    Dendrogram already = paper_tree_left();
    CHECK(already.normalized().isomorphic_to(already));
}

TEST_CASE("split then normalize round-trips") {
    Rng rng(11);
    for (int k = 0; k < 30; ++k) {
        Dendrogram t = random_tree(rng, rand_int(rng, 1, 6)).normalized();
        auto vs = t.non_root_vertices();
        const std::string& v = vs[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(vs.size()) - 1))];
        double w = t.weight(v).as_real();
        double cut = rand_real(rng, 0.1, 0.9) * w;
        Dendrogram split = t.split_edge(v, "mid", Weight::real(cut), Weight::real(w - cut));
        CHECK(split.has_order2_vertices());
        CHECK(split.tree_norm() == doctest::Approx(t.tree_norm()));
        CHECK(split.normalized().isomorphic_to(t));
    }
}

TEST_CASE("root paths, lca and levels") {
    Dendrogram t = paper_tree_left();
    CHECK(t.root_path("a") == std::vector<std::string>{"a", "d", "r"});
    CHECK(t.lca({"a", "b"}) == "d");
    CHECK(t.lca({"a"}) == "a");
    CHECK(t.lca({"a", "c"}) == "r");
    CHECK_THROWS_AS(t.lca({}), Error);

    CHECK(t.len("r") == 0);
    CHECK(t.len("a") == 2);
    CHECK(t.len() == 2);
    CHECK(t.lvl("r") == t.len());
    CHECK(t.lvl("a") == 0);
    CHECK(t.lvl("b") == 0);
    CHECK(t.len(t.parent("a")) == t.len("a") - 1);
    // lvl(x) dominates every vertex in sub(x)
    for (const auto& v : t.subtree("d").non_root_vertices()) CHECK(t.lvl("d") > t.lvl(v));

    auto lvl0 = t.level(0);
    CHECK(std::find(lvl0.begin(), lvl0.end(), "a") != lvl0.end());
    // c is a leaf but sits one edge from the root
    CHECK(t.lvl("c") == 1);
}

TEST_CASE("vertex/edge bijection and weight validation") {
    Dendrogram t = paper_tree_left();
    CHECK(t.edge_count() == t.vertex_count() - 1);
    CHECK_THROWS_AS(t.add_vertex("z", "missing", Weight::real(1)), NotATreeError);
    CHECK_THROWS_AS(t.add_vertex("z", "r", Weight::real(0)), Error);
    CHECK_THROWS_AS(t.weight("r"), NotInGraphError);
    CHECK_THROWS_AS(t.parent("r"), NotInGraphError);
}

TEST_CASE("single-vertex dendrogram") {
    Dendrogram t(Space::reals(), "only");
    CHECK(t.vertex_count() == 1);
    CHECK(t.tree_norm() == doctest::Approx(0));
    CHECK(t.len() == 0);
    CHECK(t.leaves() == std::vector<std::string>{"only"});
}

TEST_CASE("JSON round trip") {
    Rng rng(5);
    for (int k = 0; k < 20; ++k) {
        Dendrogram t = random_tree(rng, rand_int(rng, 0, 6));
        Dendrogram back = Dendrogram::from_json(t.to_json());
        CHECK(back.isomorphic_to(t));
    }
}

TEST_CASE("Newick import") {
    Dendrogram t = Dendrogram::from_newick("((a:1,b:1)d:1,c:5)r;");
    CHECK(t.isomorphic_to(paper_tree_left()));
    CHECK_THROWS_AS(Dendrogram::from_newick("((a:1)b:2)r:9;"), ParseError);
    CHECK_THROWS_AS(Dendrogram::from_newick("((a:1,b)d:1,c:5)r;"), ParseError);
}

TEST_SUITE_END();
