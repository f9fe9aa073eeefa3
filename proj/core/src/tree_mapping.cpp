#include "editdist/tree_mapping.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

namespace editdist {

TreeMapping TreeMapping::all_deletions(const Dendrogram& t, const Dendrogram& u) {
    TreeMapping m;
    for (const auto& v : t.non_root_vertices()) m.deletions_left.insert(v);
    for (const auto& w : u.non_root_vertices()) m.deletions_right.insert(w);
    return m;
}

std::string TreeMapping::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& [v, w] : couples) arr.push_back({"couple", v, w});
    for (const auto& v : deletions_left) arr.push_back({"D", "left", v});
    for (const auto& v : ghosts_left) arr.push_back({"G", "left", v});
    for (const auto& w : deletions_right) arr.push_back({"D", "right", w});
    for (const auto& w : ghosts_right) arr.push_back({"G", "right", w});
    return arr.dump();
}

TreeMapping TreeMapping::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad mapping JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("mapping JSON must be an array of records");
    TreeMapping m;
    for (const auto& rec : j) {
        if (!rec.is_array() || rec.size() != 3) throw ParseError("mapping record must be a triple");
        const std::string tag = rec.at(0).get<std::string>();
        if (tag == "couple") {
            m.couples[rec.at(1).get<std::string>()] = rec.at(2).get<std::string>();
        } else if (tag == "D" || tag == "G") {
            const std::string side = rec.at(1).get<std::string>();
            const std::string v = rec.at(2).get<std::string>();
            if (side == "left") {
                (tag == "D" ? m.deletions_left : m.ghosts_left).insert(v);
            } else if (side == "right") {
                (tag == "D" ? m.deletions_right : m.ghosts_right).insert(v);
            } else {
                throw ParseError("mapping side must be \"left\" or \"right\"");
            }
        } else {
            throw ParseError("unknown mapping record tag: " + tag);
        }
    }
    return m;
}

namespace {

struct SideView {
    const Dendrogram* tree;
    const std::set<std::string>* ghosts;
    const std::set<std::string>* deletions;
    std::set<std::string> coupled;
};

bool strictly_above(const Dendrogram& t, const std::string& a, const std::string& b) {
    return a != b && t.at_or_above(a, b);
}

// M4 on one side: after the deletions each ghost keeps exactly one child
// edge, every other child branch is deleted in full, and a unique maximal
// coupled vertex sits below the survivor.
void check_m4_side(const SideView& side, const char* name, MappingReport& report) {
    const Dendrogram& t = *side.tree;
    for (const auto& g : *side.ghosts) {
        int surviving = 0;
        std::string live_child;
        bool branches_ok = true;
        for (const auto& c : t.children(g)) {
            if (!side.deletions->count(c)) {
                ++surviving;
                live_child = c;
                continue;
            }
            // a deleted branch must be deleted all the way down
            std::function<bool(const std::string&)> all_deleted = [&](const std::string& x) {
                if (!side.deletions->count(x)) return false;
                for (const auto& y : t.children(x))
                    if (!all_deleted(y)) return false;
                return true;
            };
            if (!all_deleted(c)) branches_ok = false;
        }
        if (surviving != 1 || !branches_ok) {
            report.violations.push_back(std::string("M4: ghost ") + g + " of " + name +
                                        " is not of order 2 after the deletions");
            report.ok = false;
            continue;
        }
        // unique maximal coupled vertex at or below the surviving child
        std::vector<std::string> below;
        std::function<void(const std::string&)> collect = [&](const std::string& x) {
            if (side.coupled.count(x)) below.push_back(x);
            for (const auto& y : t.children(x)) collect(y);
        };
        collect(live_child);
        if (below.empty()) {
            report.violations.push_back(std::string("M4: ghost ") + g + " of " + name +
                                        " has no coupled vertex below it");
            report.ok = false;
            continue;
        }
        int maxima = 0;
        for (const auto& x : below) {
            bool dominated = false;
            for (const auto& y : below)
                if (strictly_above(t, y, x)) dominated = true;
            if (!dominated) ++maxima;
        }
        if (maxima != 1) {
            report.violations.push_back(std::string("M4: ghost ") + g + " of " + name +
                                        " has no unique maximal coupled vertex below it");
            report.ok = false;
        }
    }
}

}  // namespace

MappingReport validate_tree_mapping(const Dendrogram& t, const Dendrogram& u,
                                    const TreeMapping& m) {
    MappingReport report;

    auto note = [&](std::string msg) {
        report.violations.push_back(std::move(msg));
        report.ok = false;
    };

    // assignments must mention existing non-root vertices only
    for (const auto& [v, w] : m.couples) {
        if (!t.contains(v) || t.is_root(v)) note("couple uses an invalid vertex of T: " + v);
        if (!u.contains(w) || u.is_root(w)) note("couple uses an invalid vertex of T': " + w);
    }
    for (const auto& v : m.ghosts_left)
        if (!t.contains(v) || t.is_root(v)) note("ghost uses an invalid vertex of T: " + v);
    for (const auto& v : m.deletions_left)
        if (!t.contains(v) || t.is_root(v)) note("deletion uses an invalid vertex of T: " + v);
    for (const auto& w : m.ghosts_right)
        if (!u.contains(w) || u.is_root(w)) note("ghost uses an invalid vertex of T': " + w);
    for (const auto& w : m.deletions_right)
        if (!u.contains(w) || u.is_root(w)) note("deletion uses an invalid vertex of T': " + w);
    if (!report.ok) return report;

    // M1: every non-root vertex gets exactly one assignment
    for (const auto& v : t.non_root_vertices()) {
        int n = (m.couples.count(v) ? 1 : 0) + (m.ghosts_left.count(v) ? 1 : 0) +
                (m.deletions_left.count(v) ? 1 : 0);
        if (n != 1) note("M1: vertex " + v + " of T has " + std::to_string(n) + " assignments");
    }
    std::map<std::string, int> right_count;
    for (const auto& [v, w] : m.couples) right_count[w]++;
    for (const auto& w : u.non_root_vertices()) {
        int n = right_count[w] + (m.ghosts_right.count(w) ? 1 : 0) +
                (m.deletions_right.count(w) ? 1 : 0);
        if (n != 1) note("M1: vertex " + w + " of T' has " + std::to_string(n) + " assignments");
    }

    // M2: injectivity towards T'
    for (const auto& [w, n] : right_count)
        if (n > 1) note("M2: vertex " + w + " of T' coupled " + std::to_string(n) + " times");
    if (!report.ok) return report;

    // M3: couplings preserve the strict tree order in both directions
    std::vector<std::pair<std::string, std::string>> cs(m.couples.begin(), m.couples.end());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (i == j) continue;
            bool left = strictly_above(t, cs[i].first, cs[j].first);
            bool right = strictly_above(u, cs[i].second, cs[j].second);
            if (left != right) {
                note("M3: couples (" + cs[i].first + "," + cs[i].second + ") and (" + cs[j].first +
                     "," + cs[j].second + ") cross");
            }
        }
    }
    if (!report.ok) return report;

    // M4 per side
    SideView left{&t, &m.ghosts_left, &m.deletions_left, {}};
    for (const auto& [v, w] : m.couples) left.coupled.insert(v);
    SideView right{&u, &m.ghosts_right, &m.deletions_right, {}};
    for (const auto& [v, w] : m.couples) right.coupled.insert(w);
    check_m4_side(left, "T", report);
    check_m4_side(right, "T'", report);
    return report;
}

namespace {

// Weight of the reduced edge of a coupled vertex: its own edge combined with
// the ghost chain directly above it.
Weight merged_weight(const Dendrogram& t, const std::set<std::string>& ghosts,
                     const std::string& v) {
    Weight acc = t.weight(v);
    std::string cur = v;
    while (!t.is_root(t.parent(cur))) {
        const std::string& p = t.parent(cur);
        if (!ghosts.count(p)) break;
        acc = t.space().combine(acc, t.weight(p));
        cur = p;
    }
    return acc;
}

}  // namespace

double tree_mapping_cost(const Dendrogram& t, const Dendrogram& u, const TreeMapping& m) {
    MappingReport report = validate_tree_mapping(t, u, m);
    if (!report.ok)
        throw InvalidMappingError("invalid tree mapping: " +
                                  (report.violations.empty() ? "?" : report.violations.front()));
    double cost = 0.0;
    for (const auto& v : m.deletions_left) cost += t.space().norm(t.weight(v));
    for (const auto& w : m.deletions_right) cost += u.space().norm(u.weight(w));
    for (const auto& [v, w] : m.couples) {
        Weight a = merged_weight(t, m.ghosts_left, v);
        Weight b = merged_weight(u, m.ghosts_right, w);
        cost += t.space().distance(a, b);
    }
    return cost;
}

namespace {

void complete_side(const Dendrogram& t, const std::set<std::string>& coupled,
                   std::set<std::string>& ghosts, std::set<std::string>& deletions) {
    // surv(v): the edge of v is kept, i.e. v is coupled or ghosted.
    std::map<std::string, bool> surv;
    std::function<void(const std::string&)> walk = [&](const std::string& v) {
        int live = 0;
        for (const auto& c : t.children(v)) {
            walk(c);
            if (surv[c]) ++live;
        }
        if (t.is_root(v)) return;
        if (coupled.count(v)) {
            surv[v] = true;
        } else if (live == 1) {
            ghosts.insert(v);
            surv[v] = true;
        } else {
            deletions.insert(v);
            surv[v] = false;
        }
    };
    walk(t.root());
}

}  // namespace

TreeMapping complete_with_maximal_ghostings(const Dendrogram& t, const Dendrogram& u,
                                            const std::map<std::string, std::string>& couples) {
    TreeMapping m;
    m.couples = couples;
    std::set<std::string> cl, cr;
    for (const auto& [v, w] : couples) {
        cl.insert(v);
        cr.insert(w);
    }
    complete_side(t, cl, m.ghosts_left, m.deletions_left);
    complete_side(u, cr, m.ghosts_right, m.deletions_right);
    return m;
}

TreeMapping restrict_to_M2(const Dendrogram& t, const Dendrogram& u, const TreeMapping& m) {
    MappingReport report = validate_tree_mapping(t, u, m);
    if (!report.ok)
        throw InvalidMappingError("restrict_to_M2 needs a valid mapping: " +
                                  (report.violations.empty() ? "?" : report.violations.front()));
    return complete_with_maximal_ghostings(t, u, m.couples);
}

double brute_force_tree_distance(const Dendrogram& t, const Dendrogram& u,
                                 std::size_t max_edges) {
    if (!t.space().same_space(u.space()))
        throw SpaceMismatchError("dendrograms from different spaces");
    if (t.edge_count() > max_edges || u.edge_count() > max_edges)
        throw SizeLimitError("brute_force_tree_distance: too many edges");

    const std::vector<std::string> vt = t.non_root_vertices();
    const std::vector<std::string> vu = u.non_root_vertices();

    double best = t.tree_norm() + u.tree_norm();  // empty mapping

    std::map<std::string, std::string> couples;
    std::set<std::string> used;

    auto order_compatible = [&](const std::string& a, const std::string& b) {
        for (const auto& [c, d] : couples) {
            if (strictly_above(t, a, c) != strictly_above(u, b, d)) return false;
            if (strictly_above(t, c, a) != strictly_above(u, d, b)) return false;
        }
        return true;
    };

    auto evaluate = [&]() {
        TreeMapping m = complete_with_maximal_ghostings(t, u, couples);
        if (!validate_tree_mapping(t, u, m).ok) return;
        best = std::min(best, tree_mapping_cost(t, u, m));
    };

    std::function<void(std::size_t)> search = [&](std::size_t i) {
        if (i == vt.size()) {
            evaluate();
            return;
        }
        search(i + 1);  // vt[i] stays uncoupled
        for (const auto& w : vu) {
            if (used.count(w)) continue;
            if (!order_compatible(vt[i], w)) continue;
            couples[vt[i]] = w;
            used.insert(w);
            search(i + 1);
            couples.erase(vt[i]);
            used.erase(w);
        }
    };
    search(0);
    return best;
}

EditableGraph dendrogram_as_graph(const Dendrogram& t) {
    EditableGraph g(t.space(), /*directed=*/true);
    g.add_vertex(t.root());
    for (const auto& v : t.non_root_vertices()) g.add_vertex(v);
    for (const auto& v : t.non_root_vertices()) g.add_edge(v, t.parent(v), t.weight(v));
    return g;
}

}  // namespace editdist
