#include <doctest.h>

#include <algorithm>

#include "editdist/poset.hpp"
#include "test_support.hpp"

using namespace editdist;
using namespace testsupport;

TEST_SUITE_BEGIN("poset");

TEST_CASE("transitive closure") {
    Digraph g;
    g.add_arc("a", "b");
    g.add_arc("b", "c");
    Digraph c = transitive_closure(g);
    CHECK(c.has_arc("a", "c"));
    CHECK(c.arc_count() == 3);
    CHECK(transitive_closure(c) == c);  // idempotent

    Digraph cyc;
    cyc.add_arc("x", "y");
    cyc.add_arc("y", "x");
    CHECK_THROWS_AS(transitive_closure(cyc), CycleError);
}

TEST_CASE("transitive closure equals the reachability oracle") {
    Rng rng(101);
    for (int k = 0; k < 40; ++k) {
        Digraph g = random_dag(rng, 6);
        CHECK(transitive_closure(g) == reachability_oracle(g));
    }
}

TEST_CASE("transitive reduction drops exactly the implied arcs") {
    Digraph g;
    g.add_arc("a", "b");
    g.add_arc("b", "c");
    g.add_arc("a", "c");
    Digraph r = transitive_reduction(g);
    CHECK(r.arc_count() == 2);
    CHECK_FALSE(r.has_arc("a", "c"));

    Digraph chain;
    chain.add_arc("a", "b");
    chain.add_arc("b", "c");
    chain.add_arc("c", "d");
    CHECK(transitive_reduction(chain) == chain);
}

TEST_CASE("transitive reduction: closure preserved and minimal") {
    Rng rng(103);
    for (int k = 0; k < 30; ++k) {
        Digraph g = random_dag(rng, 7);
        Digraph r = transitive_reduction(g);
        Digraph closure = reachability_oracle(g);
        CHECK(transitive_closure(r) == closure);
        // removing any single arc changes the closure
        for (const auto& [a, b] : r.arcs()) {
            Digraph smaller;
            for (const auto& v : r.vertices()) smaller.add_vertex(v);
            for (const auto& [x, y] : r.arcs())
                if (!(x == a && y == b)) smaller.add_arc(x, y);
            CHECK_FALSE(transitive_closure(smaller) == closure);
        }
    }
}

TEST_CASE("finite poset construction") {
    FinitePoset p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.leq("a", "c"));
    CHECK(p.leq("a", "a"));
    CHECK_FALSE(p.leq("c", "a"));
    CHECK_THROWS_AS(FinitePoset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
}

namespace {

PersistentSet v_shape() {
    // two components at t=0 merging at t=1
    PersistentSet s;
    s.criticals = {0.0, 1.0};
    s.sets = {{"a", "b"}, {"m"}};
    s.maps = {{{"a", "m"}, {"b", "m"}}};
    return s;
}

}  // namespace

TEST_CASE("display poset") {
    PersistentSet chain;
    chain.criticals = {0.0, 2.0};
    chain.sets = {{"c"}, {"c"}};
    chain.maps = {{{"c", "c"}}};
    DisplayPoset d = display_poset(chain);
    CHECK(d.elements().size() == 2);
    CHECK(d.leq({0, "c"}, {1, "c"}));
    CHECK_FALSE(d.leq({1, "c"}, {0, "c"}));

    DisplayPoset v = display_poset(v_shape());
    CHECK(v.elements().size() == 3);
    CHECK(v.leq({0, "a"}, {1, "m"}));
    CHECK(v.leq({0, "b"}, {1, "m"}));
    CHECK_FALSE(v.leq({0, "a"}, {0, "b"}));
    CHECK(v.height({1, "m"}) == doctest::Approx(1.0));
}

TEST_CASE("persistent set minimization drops bijective levels") {
    PersistentSet s;
    s.criticals = {0.0, 0.5, 1.0};
    s.sets = {{"a", "b"}, {"a", "b"}, {"m"}};
    s.maps = {{{"a", "a"}, {"b", "b"}}, {{"a", "m"}, {"b", "m"}}};
    PersistentSet m = s.minimized();
    CHECK(m.criticals == std::vector<double>{0.0, 1.0});
    CHECK(m.sets.size() == 2);
    CHECK(m.maps.size() == 1);
    CHECK(m.maps[0].at("a") == "m");

    PersistentSet back = PersistentSet::from_json(s.to_json());
    CHECK(back.criticals == s.criticals);
    CHECK(back.maps == s.maps);
}

TEST_CASE("weighted graph from a poset") {
    FinitePoset chain({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    std::map<std::string, double> f{{"a", 0.0}, {"b", 1.0}, {"c", 3.0}};
    EditableGraph g =
        weighted_graph_from_poset(chain, [&](const std::string& v) { return f.at(v); });
    CHECK(g.directed());
    CHECK(g.edge_count() == 2);
    CHECK(g.edge_weight("a", "b").as_real() == doctest::Approx(1));
    CHECK(g.edge_weight("b", "c").as_real() == doctest::Approx(2));
    CHECK_FALSE(g.has_edge("a", "c"));  // reduction removed the implied arc

    FinitePoset anti({"x", "y", "z"}, {});
    EditableGraph e = weighted_graph_from_poset(anti, [](const std::string&) { return 1.0; });
    CHECK(e.edge_count() == 0);
    CHECK(e.vertex_count() == 3);

    // non-monotone heights are rejected
    CHECK_THROWS_AS(
        weighted_graph_from_poset(chain, [&](const std::string& v) { return -f.at(v); }), Error);
}

TEST_CASE("vector heights give tuple weights") {
    FinitePoset chain({"a", "b"}, {{"a", "b"}});
    std::map<std::string, std::vector<double>> h{{"a", {0.0, 1.0}}, {"b", {2.0, 1.5}}};
    EditableGraph g =
        weighted_graph_from_poset(chain, [&](const std::string& v) { return h.at(v); });
    Weight w = g.edge_weight("a", "b");
    CHECK(w.parts()[0].as_real() == doctest::Approx(2.0));
    CHECK(w.parts()[1].as_real() == doctest::Approx(0.5));
}

TEST_CASE("merge tree from a display poset") {
    DisplayPoset v = display_poset(v_shape());
    Dendrogram t = merge_tree_from_display(v);
    CHECK(t.vertex_count() == 3);
    CHECK(t.leaves().size() == 2);
    for (const auto& leaf : t.leaves()) CHECK(t.weight(leaf).as_real() == doctest::Approx(1.0));

    PersistentSet chain;
    chain.criticals = {0.0, 1.0, 2.0};
    chain.sets = {{"c"}, {"c"}, {"c"}};
    chain.maps = {{{"c", "c"}}, {{"c", "c"}}};
    Dendrogram single = merge_tree_from_display(display_poset(chain));
    CHECK(single.vertex_count() == 1);

    PersistentSet split;  // two components that never merge
    split.criticals = {0.0, 1.0};
    split.sets = {{"a", "b"}, {"a", "b"}};
    split.maps = {{{"a", "a"}, {"b", "b"}}};
    CHECK_THROWS_AS(merge_tree_from_display(display_poset(split)), NotATreeError);
}

TEST_CASE("height shifts keep the editable graph isomorphic") {
    PersistentSet s = v_shape();
    PersistentSet shifted = s;
    for (auto& t : shifted.criticals) t += 10.0;

    auto graph_of = [](const PersistentSet& ps) {
        DisplayPoset d = display_poset(ps);
        FinitePoset p = d.as_poset();
        return weighted_graph_from_poset(
            p, [&](const std::string& id) { return d.height_by_id(id); });
    };
    EditableGraph a = graph_of(s);
    EditableGraph b = graph_of(shifted);
    CHECK(editable_graphs_isomorphic(a, b));  // the shift is invisible to the weights
}

TEST_CASE("merge tree output is a tree") {
    // random mergers: k components at t0 pairwise merged by t-steps
    Rng rng(107);
    for (int trial = 0; trial < 20; ++trial) {
        int n = rand_int(rng, 1, 5);
        PersistentSet s;
        s.criticals = {0.0};
        std::vector<std::string> comps;
        for (int i = 0; i < n; ++i) comps.push_back("c" + std::to_string(i));
        s.sets.push_back(comps);
        int level = 1;
        while (comps.size() > 1) {
            // merge two random components into the first one
            std::map<std::string, std::string> m;
            int a = rand_int(rng, 0, static_cast<int>(comps.size()) - 1);
            int b = rand_int(rng, 0, static_cast<int>(comps.size()) - 1);
            if (a == b) continue;
            std::string target = comps[static_cast<std::size_t>(std::min(a, b))];
            std::string gone = comps[static_cast<std::size_t>(std::max(a, b))];
            for (const auto& c : comps) m[c] = (c == gone) ? target : c;
            comps.erase(std::remove(comps.begin(), comps.end(), gone), comps.end());
            s.criticals.push_back(level++);
            s.sets.push_back(comps);
            s.maps.push_back(std::move(m));
        }
        Dendrogram t = merge_tree_from_display(display_poset(s));
        CHECK(t.edge_count() == t.vertex_count() - 1);  // connected by construction
    }
}

TEST_SUITE_END();
