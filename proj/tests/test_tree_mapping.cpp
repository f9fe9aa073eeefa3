#include <doctest.h>

#include <algorithm>

#include "editdist/tree_mapping.hpp"
#include "test_support.hpp"

using namespace editdist;
using namespace testsupport;

namespace {

// Random valid mapping: a random order-compatible couple set completed with
// maximal ghostings; returns false if the draw happened to be invalid.
bool random_valid_mapping(Rng& rng, const Dendrogram& t, const Dendrogram& u, TreeMapping& out) {
    std::map<std::string, std::string> couples;
    auto vt = t.non_root_vertices();
    auto vu = u.non_root_vertices();
    if (vt.empty() || vu.empty()) return false;
    std::set<std::string> used;
    int want = rand_int(rng, 0, static_cast<int>(std::min(vt.size(), vu.size())));
    for (int k = 0; k < want; ++k) {
        const std::string& v = vt[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(vt.size()) - 1))];
        const std::string& w = vu[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(vu.size()) - 1))];
        if (couples.count(v) || used.count(w)) continue;
        couples[v] = w;
        used.insert(w);
    }
    out = complete_with_maximal_ghostings(t, u, couples);
    return validate_tree_mapping(t, u, out).ok;
}

}  // namespace

TEST_SUITE_BEGIN("tree_mapping");

TEST_CASE("worked example: couples between the depth-one subtrees") {
    Dendrogram td = paper_tree_left().subtree("d");
    Dendrogram tdp = paper_tree_right().subtree("d'");
    TreeMapping m;
    m.couples = {{"a", "a'"}, {"b", "b'"}};
    CHECK(validate_tree_mapping(td, tdp, m).ok);
    CHECK(tree_mapping_cost(td, tdp, m) == doctest::Approx(1));
}

TEST_CASE("M2 violation: a vertex coupled twice") {
    Dendrogram td = paper_tree_left().subtree("d");
    Dendrogram tdp = paper_tree_right().subtree("d'");
    TreeMapping m;
    m.couples = {{"a", "a'"}, {"b", "a'"}};
    m.deletions_right = {"b'"};
    MappingReport report = validate_tree_mapping(td, tdp, m);
    CHECK_FALSE(report.ok);
    bool m2 = false;
    for (const auto& v : report.violations) m2 |= v.find("M2") != std::string::npos;
    CHECK(m2);
}

TEST_CASE("M3 violation: crossing couples") {
    Dendrogram t = paper_tree_left();
    Dendrogram u = paper_tree_right();
    TreeMapping m;
    m.couples = {{"a", "d'"}, {"d", "a'"}};  // child/father swapped across the trees
    m.deletions_left = {"b", "c"};
    m.deletions_right = {"b'", "c'"};
    MappingReport report = validate_tree_mapping(t, u, m);
    CHECK_FALSE(report.ok);
    bool m3 = false;
    for (const auto& v : report.violations) m3 |= v.find("M3") != std::string::npos;
    CHECK(m3);
}

TEST_CASE("M4: ghosts need exactly one surviving branch") {
    Dendrogram t = paper_tree_left();
    Dendrogram u = paper_tree_right();
    // ghosting d while both its children stay coupled leaves it of order 3
    TreeMapping m;
    m.couples = {{"a", "a'"}, {"b", "b'"}};
    m.ghosts_left = {"d"};
    m.deletions_left = {"c"};
    m.ghosts_right = {"d'"};
    m.deletions_right = {"c'"};
    MappingReport report = validate_tree_mapping(t, u, m);
    CHECK_FALSE(report.ok);
    bool m4 = false;
    for (const auto& v : report.violations) m4 |= v.find("M4") != std::string::npos;
    CHECK(m4);
}

TEST_CASE("worked example: mapping onto the full right tree costs 6") {
    Dendrogram td = paper_tree_left().subtree("d");
    Dendrogram tp = paper_tree_right();
    // a couples through the ghosted d', b onto c', b' is deleted
    TreeMapping m;
    m.couples = {{"a", "a'"}, {"b", "c'"}};
    m.ghosts_right = {"d'"};
    m.deletions_right = {"b'"};
    CHECK(validate_tree_mapping(td, tp, m).ok);
    CHECK(tree_mapping_cost(td, tp, m) == doctest::Approx(6));
}

TEST_CASE("all-deletions mapping costs the sum of norms") {
    Dendrogram t = paper_tree_left();
    Dendrogram u = paper_tree_right();
    TreeMapping m = TreeMapping::all_deletions(t, u);
    CHECK(validate_tree_mapping(t, u, m).ok);
    CHECK(tree_mapping_cost(t, u, m) == doctest::Approx(t.tree_norm() + u.tree_norm()));
}

TEST_CASE("identity mapping on equal trees costs 0") {
    Dendrogram t = paper_tree_left();
    TreeMapping m;
    for (const auto& v : t.non_root_vertices()) m.couples[v] = v;
    CHECK(tree_mapping_cost(t, t, m) == doctest::Approx(0));
}

TEST_CASE("restrict_to_M2 turns order-2 deletions into ghostings") {
    Dendrogram t = paper_tree_left();
    Dendrogram u = paper_tree_right();
    // couple a through d (b deleted): d is left of order 2, so M2 ghosts it
    TreeMapping m;
    m.couples = {{"a", "a'"}};
    m.deletions_left = {"b", "c", "d"};
    m.deletions_right = {"b'", "c'", "d'"};
    CHECK(validate_tree_mapping(t, u, m).ok);
    TreeMapping m2 = restrict_to_M2(t, u, m);
    CHECK(m2.ghosts_left.count("d") == 1);
    CHECK(m2.ghosts_right.count("d'") == 1);
    CHECK(tree_mapping_cost(t, u, m2) <= tree_mapping_cost(t, u, m) + 1e-12);

    TreeMapping again = restrict_to_M2(t, u, m2);
    CHECK(again.couples == m2.couples);
    CHECK(again.ghosts_left == m2.ghosts_left);
    CHECK(again.deletions_left == m2.deletions_left);
    CHECK(again.ghosts_right == m2.ghosts_right);
    CHECK(again.deletions_right == m2.deletions_right);
}

TEST_CASE("restrict_to_M2 never raises the cost on random mappings") {
    Rng rng(41);
    int checked = 0;
    for (int k = 0; k < 80 && checked < 25; ++k) {
        Dendrogram t = random_tree(rng, rand_int(rng, 1, 5));
        Dendrogram u = random_tree(rng, rand_int(rng, 1, 5));
        TreeMapping m;
        if (!random_valid_mapping(rng, t, u, m)) continue;
        // degrade: flip chain-top ghosts back into deletions (the chains
        // shorten but every mapping property still holds)
        TreeMapping degraded = m;
        for (const auto& g : m.ghosts_left)
            if (!m.ghosts_left.count(t.parent(g)) && rand_int(rng, 0, 1)) {
                degraded.ghosts_left.erase(g);
                degraded.deletions_left.insert(g);
            }
        for (const auto& g : m.ghosts_right)
            if (!m.ghosts_right.count(u.parent(g)) && rand_int(rng, 0, 1)) {
                degraded.ghosts_right.erase(g);
                degraded.deletions_right.insert(g);
            }
        REQUIRE(validate_tree_mapping(t, u, degraded).ok);
        TreeMapping m2 = restrict_to_M2(t, u, degraded);
        CHECK(tree_mapping_cost(t, u, m2) <= tree_mapping_cost(t, u, degraded) + 1e-9);
        ++checked;
    }
    CHECK(checked >= 25);
}

TEST_CASE("brute force distance on the worked trees") {
    Dendrogram td = paper_tree_left().subtree("d");
    Dendrogram tdp = paper_tree_right().subtree("d'");
    CHECK(brute_force_tree_distance(td, tdp) == doctest::Approx(1));
    CHECK(brute_force_tree_distance(td, td) == doctest::Approx(0));
    CHECK(brute_force_tree_distance(td, paper_tree_right()) == doctest::Approx(6));

    Dendrogram big(Space::reals(), "r");
    for (int i = 0; i < 7; ++i)
        big.add_vertex("x" + std::to_string(i), "r", Weight::real(1));
    CHECK_THROWS_AS(brute_force_tree_distance(big, td), SizeLimitError);
}

TEST_CASE("valid mapping costs upper-bound the distance") {
    Rng rng(43);
    int checked = 0;
    while (checked < 40) {
        Dendrogram t = random_tree(rng, rand_int(rng, 1, 4));
        Dendrogram u = random_tree(rng, rand_int(rng, 1, 4));
        double d = brute_force_tree_distance(t, u);
        TreeMapping m;
        if (!random_valid_mapping(rng, t, u, m)) continue;
        CHECK(tree_mapping_cost(t, u, m) >= d - 1e-9);
        ++checked;
    }
}

TEST_CASE("brute force distance is a pseudo-metric") {
    Rng rng(47);
    for (int k = 0; k < 8; ++k) {
        Dendrogram a = random_tree(rng, rand_int(rng, 1, 4));
        Dendrogram b = random_tree(rng, rand_int(rng, 1, 4));
        Dendrogram c = random_tree(rng, rand_int(rng, 1, 4));
        double ab = brute_force_tree_distance(a, b);
        CHECK(brute_force_tree_distance(b, a) == doctest::Approx(ab).epsilon(1e-12));
        CHECK(brute_force_tree_distance(a, c) <= ab + brute_force_tree_distance(b, c) + 1e-9);
        CHECK(brute_force_tree_distance(a, a) == doctest::Approx(0));
    }
}

TEST_CASE("order-2 splits do not move the distance") {
    Rng rng(53);
    for (int k = 0; k < 10; ++k) {
        Dendrogram t = random_tree(rng, rand_int(rng, 1, 4));
        Dendrogram u = random_tree(rng, rand_int(rng, 1, 4));
        double before = brute_force_tree_distance(t, u);
        auto vs = t.non_root_vertices();
        const std::string& v = vs[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(vs.size()) - 1))];
        double w = t.weight(v).as_real();
        Dendrogram split = t.split_edge(v, "mid", Weight::real(w * 0.25), Weight::real(w * 0.75));
        CHECK(brute_force_tree_distance(split, u) == doctest::Approx(before).epsilon(1e-9));
        CHECK(brute_force_tree_distance(split, t) == doctest::Approx(0).epsilon(1e-9));
    }
}

TEST_CASE("tree and graph brute force agree on tiny trees") {
    Rng rng(59);
    int done = 0;
    while (done < 6) {
        Dendrogram t = random_tree(rng, rand_int(rng, 1, 3));
        Dendrogram u = random_tree(rng, rand_int(rng, 1, 3));
        double tree_d = brute_force_tree_distance(t, u);
        double graph_d =
            brute_force_graph_distance(dendrogram_as_graph(t), dendrogram_as_graph(u));
        CHECK(tree_d == doctest::Approx(graph_d).epsilon(1e-9));
        ++done;
    }
}

TEST_CASE("ghost chains are ghostable segments after the deletions") {
    // the M4 reading matches the open-star formulation: every ghost chain of a
    // valid mapping is a ghostable segment once deleted edges are gone
    Rng rng(61);
    int checked = 0;
    while (checked < 25) {
        Dendrogram t = random_tree(rng, rand_int(rng, 2, 5));
        Dendrogram u = random_tree(rng, rand_int(rng, 2, 5));
        TreeMapping m;
        if (!random_valid_mapping(rng, t, u, m)) continue;
        if (m.ghosts_left.empty()) continue;
        // build the graph after deletions
        EditableGraph g(t.space(), true);
        g.add_vertex(t.root());
        for (const auto& v : t.non_root_vertices())
            if (!m.deletions_left.count(v)) g.add_edge(v, t.parent(v), t.weight(v));
        for (const auto& [v, w] : m.couples) {
            // climb the ghost chain above the coupled vertex
            std::vector<std::string> path{v};
            std::string cur = v;
            while (!t.is_root(t.parent(cur)) && m.ghosts_left.count(t.parent(cur))) {
                cur = t.parent(cur);
                path.push_back(cur);
            }
            path.push_back(t.parent(cur));
            if (path.size() < 3) continue;
            CHECK(is_ghostable(g, make_segment(g, path)));
        }
        ++checked;
    }
}

TEST_CASE("mapping JSON round trip") {
    Dendrogram td = paper_tree_left().subtree("d");
    Dendrogram tp = paper_tree_right();
    TreeMapping m;
    m.couples = {{"a", "a'"}, {"b", "c'"}};
    m.ghosts_right = {"d'"};
    m.deletions_right = {"b'"};
    TreeMapping back = TreeMapping::from_json(m.to_json());
    CHECK(back.couples == m.couples);
    CHECK(back.ghosts_right == m.ghosts_right);
    CHECK(back.deletions_right == m.deletions_right);
    CHECK(tree_mapping_cost(td, tp, back) == doctest::Approx(6));
    CHECK_THROWS_AS(TreeMapping::from_json("{\"not\":\"an array\"}"), ParseError);
}

TEST_SUITE_END();
