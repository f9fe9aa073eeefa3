#include "editdist/graph.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

namespace editdist {

EditableGraph::EditableGraph(Space space, bool directed)
    : space_(std::move(space)), directed_(directed) {}

void EditableGraph::add_vertex(const std::string& id) {
    if (id.empty()) throw Error("vertex id must be non-empty");
    vertices_.insert(id);
}

EditableGraph::EdgeKey EditableGraph::edge_key(const std::string& a, const std::string& b) const {
    if (directed_ || a <= b) return {a, b};
    return {b, a};
}

void EditableGraph::add_edge(const std::string& src, const std::string& dst, Weight w) {
    if (src == dst) throw Error("self loops are not supported");
    space_.check(w);
    if (!(space_.norm(w) > 0.0)) throw Error("edge weight must be nonzero");
    add_vertex(src);
    add_vertex(dst);
    EdgeKey key = edge_key(src, dst);
    if (edges_.count(key)) throw Error("duplicate edge: " + src + "-" + dst);
    if (!directed_ && edges_.count({dst, src})) throw Error("duplicate edge: " + src + "-" + dst);
    edges_[key] = std::move(w);
}

bool EditableGraph::has_vertex(const std::string& v) const { return vertices_.count(v) > 0; }

bool EditableGraph::has_edge(const std::string& a, const std::string& b) const {
    return edges_.count(edge_key(a, b)) > 0;
}

const Weight& EditableGraph::edge_weight(const std::string& a, const std::string& b) const {
    auto it = edges_.find(edge_key(a, b));
    if (it == edges_.end()) throw NotInGraphError("no edge " + a + "-" + b);
    return it->second;
}

std::vector<std::string> EditableGraph::vertices() const {
    return {vertices_.begin(), vertices_.end()};
}

std::vector<EditableGraph::EdgeKey> EditableGraph::edges() const {
    std::vector<EdgeKey> out;
    out.reserve(edges_.size());
    for (const auto& [k, w] : edges_) out.push_back(k);
    return out;
}

int EditableGraph::order(const std::string& v) const {
    int n = 0;
    for (const auto& [k, w] : edges_)
        if (k.first == v || k.second == v) ++n;
    return n;
}

std::vector<EditableGraph::EdgeKey> EditableGraph::incident_edges(const std::string& v) const {
    std::vector<EdgeKey> out;
    for (const auto& [k, w] : edges_)
        if (k.first == v || k.second == v) out.push_back(k);
    return out;
}

double EditableGraph::graph_norm() const {
    double total = 0.0;
    for (const auto& [k, w] : edges_) total += space_.norm(w);
    return total;
}

std::string EditableGraph::to_json() const {
    nlohmann::json j;
    j["directed"] = directed_;
    j["vertices"] = std::vector<std::string>(vertices_.begin(), vertices_.end());
    auto arr = nlohmann::json::array();
    for (const auto& [k, w] : edges_) {
        nlohmann::json e;
        e["src"] = k.first;
        e["dst"] = k.second;
        e["w"] = nlohmann::json::parse(weight_to_json(w, space_));
        arr.push_back(std::move(e));
    }
    j["edges"] = std::move(arr);
    return j.dump();
}

EditableGraph EditableGraph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    bool directed = j.at("directed").get<bool>();
    Space space = Space::reals();
    bool inferred = false;
    std::vector<std::tuple<std::string, std::string, Weight>> edges;
    for (const auto& e : j.at("edges")) {
        auto [w, s] = weight_and_space_from_json(e.at("w").dump());
        if (!inferred) {
            space = s;
            inferred = true;
        }
        edges.emplace_back(e.at("src").get<std::string>(), e.at("dst").get<std::string>(),
                           std::move(w));
    }
    EditableGraph g(space, directed);
    if (j.contains("vertices"))
        for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (auto& [src, dst, w] : edges) g.add_edge(src, dst, std::move(w));
    return g;
}

// --- Segments --------------------------------------------------------------

std::vector<std::string> Segment::interior() const {
    if (path.size() <= 2) return {};
    return {path.begin() + 1, path.end() - 1};
}

namespace {

bool path_is_segment(const EditableGraph& g, const std::vector<std::string>& path) {
    if (path.size() < 2) return false;
    std::set<std::string> seen;
    for (const auto& v : path)
        if (!seen.insert(v).second) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        // in a directed graph has_edge(a,b) is direction-exact, so segments
        // automatically follow the arcs
        if (!g.has_edge(path[i], path[i + 1])) return false;
    }
    return true;
}

std::vector<std::string> canonical_path(const EditableGraph& g, std::vector<std::string> path) {
    if (!g.directed() && !path.empty() && path.back() < path.front())
        std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

Segment make_segment(const EditableGraph& g, std::vector<std::string> path) {
    if (g.directed()) {
        bool forward = path_is_segment(g, path);
        if (!forward) throw NotInGraphError("not a directed segment of the graph");
        return Segment{std::move(path)};
    }
    if (!path_is_segment(g, path)) throw NotInGraphError("not a segment of the graph");
    return Segment{canonical_path(g, std::move(path))};
}

bool segment_in_graph(const EditableGraph& g, const Segment& s) {
    return path_is_segment(g, s.path);
}

Segment segment_sum(const EditableGraph& g, const Segment& s, const Segment& t) {
    auto try_join = [&](const std::vector<std::string>& a,
                        const std::vector<std::string>& b) -> std::optional<Segment> {
        if (a.back() != b.front()) return std::nullopt;
        std::set<std::string> sa(a.begin(), a.end());
        for (std::size_t i = 1; i < b.size(); ++i)
            if (sa.count(b[i])) return std::nullopt;  // images may share only the junction
        std::vector<std::string> joined = a;
        joined.insert(joined.end(), b.begin() + 1, b.end());
        return Segment{canonical_path(g, std::move(joined))};
    };

    if (!segment_in_graph(g, s) || !segment_in_graph(g, t))
        throw NotInGraphError("segment_sum: operand not in graph");

    if (g.directed()) {
        if (auto r = try_join(s.path, t.path)) return *r;
        throw CompositionError("segments do not compose");
    }
    std::vector<std::vector<std::string>> as{s.path, {s.path.rbegin(), s.path.rend()}};
    std::vector<std::vector<std::string>> bs{t.path, {t.path.rbegin(), t.path.rend()}};
    for (const auto& a : as)
        for (const auto& b : bs)
            if (auto r = try_join(a, b)) return *r;
    throw CompositionError("segments do not compose");
}

Weight segment_weight(const EditableGraph& g, const Segment& s) {
    if (!segment_in_graph(g, s)) throw NotInGraphError("segment not in graph");
    Weight acc = g.edge_weight(s.path[0], s.path[1]);
    for (std::size_t i = 1; i + 1 < s.path.size(); ++i)
        acc = g.space().combine(acc, g.edge_weight(s.path[i], s.path[i + 1]));
    return acc;
}

OpenStar open_star(const EditableGraph& g, const Segment& s) {
    if (!segment_in_graph(g, s)) throw NotInGraphError("segment not in graph");
    OpenStar star;
    for (const auto& v : s.interior()) {
        star.vertices.insert(v);
        for (const auto& e : g.incident_edges(v)) star.edges.insert(e);
    }
    return star;
}

bool is_ghostable(const EditableGraph& g, const Segment& s) {
    OpenStar star = open_star(g, s);
    std::set<EditableGraph::EdgeKey> own;
    for (std::size_t i = 0; i + 1 < s.path.size(); ++i)
        own.insert(g.edge_key(s.path[i], s.path[i + 1]));
    for (const auto& e : star.edges)
        if (!own.count(e)) return false;
    return true;
}

// --- Edits -------------------------------------------------------------------

namespace {

EditableGraph rebuild_without(const EditableGraph& g,
                              const std::set<EditableGraph::EdgeKey>& removed_edges,
                              const std::set<std::string>& removed_vertices) {
    EditableGraph out(g.space(), g.directed());
    for (const auto& v : g.vertices())
        if (!removed_vertices.count(v)) out.add_vertex(v);
    for (const auto& e : g.edges()) {
        if (removed_edges.count(e)) continue;
        if (removed_vertices.count(e.first) || removed_vertices.count(e.second))
            throw Error("internal: removing a vertex with surviving edges");
        out.add_edge(e.first, e.second, g.edge_weight(e.first, e.second));
    }
    return out;
}

}  // namespace

EditableGraph apply_edit(const EditableGraph& g, const Edit& edit) {
    if (std::holds_alternative<ShrinkEdit>(edit)) {
        const auto& e = std::get<ShrinkEdit>(edit);
        if (!g.has_edge(e.src, e.dst)) throw InvalidEditError("shrink: no such edge");
        g.space().check(e.to);
        if (!(g.space().norm(e.to) > 0.0)) throw InvalidEditError("shrink to zero weight");
        EditableGraph out = rebuild_without(g, {g.edge_key(e.src, e.dst)}, {});
        out.add_edge(e.src, e.dst, e.to);
        return out;
    }
    if (std::holds_alternative<DeleteEdit>(edit)) {
        const auto& e = std::get<DeleteEdit>(edit);
        if (!g.has_edge(e.src, e.dst)) throw InvalidEditError("delete: no such edge");
        auto key = g.edge_key(e.src, e.dst);
        std::set<std::string> dead;
        for (const auto& v : {key.first, key.second}) {
            if (g.order(v) == 1) dead.insert(v);
        }
        // Do not let the graph collapse to nothing: a lone edge leaves one vertex.
        if (dead.size() == 2 && g.vertex_count() == 2) dead.erase(*dead.begin());
        return rebuild_without(g, {key}, dead);
    }
    if (std::holds_alternative<InsertEdit>(edit)) {
        const auto& e = std::get<InsertEdit>(edit);
        if (g.has_edge(e.src, e.dst)) throw InvalidEditError("insert: edge already present");
        EditableGraph out = g;
        out.add_edge(e.src, e.dst, e.w);
        return out;
    }
    if (std::holds_alternative<GhostEdit>(edit)) {
        const auto& e = std::get<GhostEdit>(edit);
        if (!segment_in_graph(g, e.s)) throw InvalidEditError("ghost: segment not in graph");
        if (!is_ghostable(g, e.s)) throw InvalidEditError("ghost: segment not in O(G)");
        if (e.s.edge_count() == 1) return g;  // trivial ghosting
        const std::string& a = e.s.front();
        const std::string& b = e.s.back();
        if (g.has_edge(a, b)) throw InvalidEditError("ghost: merged edge already present");
        Weight w = segment_weight(g, e.s);
        std::set<EditableGraph::EdgeKey> removed;
        for (std::size_t i = 0; i + 1 < e.s.path.size(); ++i)
            removed.insert(g.edge_key(e.s.path[i], e.s.path[i + 1]));
        std::vector<std::string> interior = e.s.interior();
        std::set<std::string> gone(interior.begin(), interior.end());
        EditableGraph out = rebuild_without(g, removed, gone);
        out.add_edge(a, b, w);
        return out;
    }
    const auto& e = std::get<SplitEdit>(edit);
    if (!g.has_edge(e.src, e.dst)) throw InvalidEditError("split: no such edge");
    if (e.ids.empty()) throw InvalidEditError("split: needs at least one new vertex");
    if (e.weights.size() != e.ids.size() + 1)
        throw InvalidEditError("split: needs one weight per chain edge");
    std::set<std::string> fresh;
    for (const auto& id : e.ids) {
        if (g.has_vertex(id)) throw InvalidEditError("split: id already in use: " + id);
        if (!fresh.insert(id).second) throw InvalidEditError("split: duplicate new id");
    }
    Weight acc = e.weights.front();
    for (std::size_t i = 1; i < e.weights.size(); ++i) acc = g.space().combine(acc, e.weights[i]);
    if (!g.space().equals(acc, g.edge_weight(e.src, e.dst)))
        throw InvalidEditError("split: weights must combine to the original weight");
    for (const auto& w : e.weights)
        if (!(g.space().norm(w) > 0.0)) throw InvalidEditError("split: zero part weight");
    EditableGraph out = rebuild_without(g, {g.edge_key(e.src, e.dst)}, {});
    std::vector<std::string> chain{e.src};
    chain.insert(chain.end(), e.ids.begin(), e.ids.end());
    chain.push_back(e.dst);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        out.add_edge(chain[i], chain[i + 1], e.weights[i]);
    return out;
}

double edit_cost(const EditableGraph& g, const Edit& edit) {
    if (std::holds_alternative<ShrinkEdit>(edit)) {
        const auto& e = std::get<ShrinkEdit>(edit);
        return g.space().distance(g.edge_weight(e.src, e.dst), e.to);
    }
    if (std::holds_alternative<DeleteEdit>(edit)) {
        const auto& e = std::get<DeleteEdit>(edit);
        return g.space().norm(g.edge_weight(e.src, e.dst));
    }
    if (std::holds_alternative<InsertEdit>(edit)) {
        return g.space().norm(std::get<InsertEdit>(edit).w);
    }
    return 0.0;  // ghostings and splittings are free
}

// --- Mappings ----------------------------------------------------------------

namespace {

std::set<EditableGraph::EdgeKey> segment_edges(const EditableGraph& g, const Segment& s) {
    std::set<EditableGraph::EdgeKey> out;
    for (std::size_t i = 0; i + 1 < s.path.size(); ++i)
        out.insert(g.edge_key(s.path[i], s.path[i + 1]));
    return out;
}

// Reduced graph after deleting uncoupled edges and ghosting coupled chains:
// one edge per couple, from segment front to segment back.
struct ReducedSide {
    std::vector<std::pair<std::string, std::string>> merged;  // endpoints per couple
};

bool check_side_g1(const EditableGraph& g, const std::vector<Segment>& segs, std::string side,
                   MappingReport& report) {
    std::set<EditableGraph::EdgeKey> used;
    bool ok = true;
    for (const auto& s : segs) {
        for (const auto& e : segment_edges(g, s)) {
            if (!used.insert(e).second) {
                report.violations.push_back("G1: edge " + e.first + "-" + e.second + " of " +
                                            side + " lies in two coupled segments");
                ok = false;
            }
        }
    }
    return ok;
}

bool check_side_g2(const EditableGraph& g, const std::vector<Segment>& segs, std::string side,
                   MappingReport& report) {
    std::set<EditableGraph::EdgeKey> coupled;
    for (const auto& s : segs)
        for (const auto& e : segment_edges(g, s)) coupled.insert(e);
    bool ok = true;
    for (const auto& s : segs) {
        if (s.edge_count() < 2) continue;
        auto own = segment_edges(g, s);
        for (const auto& e : open_star(g, s).edges) {
            if (own.count(e)) continue;
            if (coupled.count(e)) {
                report.violations.push_back("G2: coupled segment of " + side +
                                            " has a coupled edge in its open star (" + e.first +
                                            "-" + e.second + ")");
                ok = false;
            }
        }
    }
    return ok;
}

bool check_g3(const EditableGraph& g, const EditableGraph& h, const GraphMapping& m,
              MappingReport& report) {
    const std::size_t n = m.couples.size();
    // Vertex correspondence generated by matching segment endpoints; for
    // undirected graphs each couple can be oriented two ways.
    std::map<std::string, std::string> fwd, bwd;
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == n) return true;
        const Segment& s = m.couples[i].first;
        const Segment& t = m.couples[i].second;
        std::vector<std::pair<std::string, std::string>> ends{{s.front(), s.back()}};
        std::vector<std::pair<std::string, std::string>> tends{{t.front(), t.back()}};
        if (!g.directed()) {
            ends.push_back({s.back(), s.front()});
        }
        for (const auto& [a, b] : ends) {
            const auto& [c, d] = tends.front();
            auto fa = fwd.find(a);
            auto fb = fwd.find(b);
            auto bc = bwd.find(c);
            auto bd = bwd.find(d);
            bool consistent = (fa == fwd.end() || fa->second == c) &&
                              (fb == fwd.end() || fb->second == d) &&
                              (bc == bwd.end() || bc->second == a) &&
                              (bd == bwd.end() || bd->second == b);
            if (!consistent) continue;
            bool added_a = fa == fwd.end();
            bool added_b = fb == fwd.end();
            if (added_a) {
                fwd[a] = c;
                bwd[c] = a;
            }
            if (added_b) {
                fwd[b] = d;
                bwd[d] = b;
            }
            if (assign(i + 1)) return true;
            if (added_a) {
                fwd.erase(a);
                bwd.erase(c);
            }
            if (added_b) {
                fwd.erase(b);
                bwd.erase(d);
            }
        }
        return false;
    };
    if (!assign(0)) {
        report.violations.push_back(
            "G3: couples do not induce an isomorphism of the reduced graphs");
        return false;
    }
    return true;
}

}  // namespace

MappingReport validate_graph_mapping(const EditableGraph& g, const EditableGraph& h,
                                     const GraphMapping& m) {
    MappingReport report;
    std::vector<Segment> left, right;
    for (const auto& [s, t] : m.couples) {
        if (!segment_in_graph(g, s)) {
            report.violations.push_back("segment not in the first graph");
            report.ok = false;
            return report;
        }
        if (!segment_in_graph(h, t)) {
            report.violations.push_back("segment not in the second graph");
            report.ok = false;
            return report;
        }
        left.push_back(s);
        right.push_back(t);
    }
    bool ok = true;
    ok &= check_side_g1(g, left, "G", report);
    ok &= check_side_g1(h, right, "G'", report);
    if (ok) {
        ok &= check_side_g2(g, left, "G", report);
        ok &= check_side_g2(h, right, "G'", report);
    }
    if (ok) ok &= check_g3(g, h, m, report);
    report.ok = ok;
    return report;
}

double graph_mapping_cost(const EditableGraph& g, const EditableGraph& h, const GraphMapping& m) {
    MappingReport report = validate_graph_mapping(g, h, m);
    if (!report.ok)
        throw InvalidMappingError("invalid graph mapping: " +
                                  (report.violations.empty() ? "?" : report.violations.front()));
    std::set<EditableGraph::EdgeKey> used_g, used_h;
    double shrink = 0.0;
    for (const auto& [s, t] : m.couples) {
        for (const auto& e : segment_edges(g, s)) used_g.insert(e);
        for (const auto& e : segment_edges(h, t)) used_h.insert(e);
        shrink += g.space().distance(segment_weight(g, s), segment_weight(h, t));
    }
    double deletions = 0.0;
    for (const auto& e : g.edges())
        if (!used_g.count(e)) deletions += g.space().norm(g.edge_weight(e.first, e.second));
    double insertions = 0.0;
    for (const auto& e : h.edges())
        if (!used_h.count(e)) insertions += h.space().norm(h.edge_weight(e.first, e.second));
    return deletions + shrink + insertions;
}

std::vector<Segment> all_segments(const EditableGraph& g) {
    std::set<Segment> out;
    std::vector<std::string> path;
    std::set<std::string> on_path;

    std::function<void(const std::string&)> extend = [&](const std::string& v) {
        for (const auto& e : g.incident_edges(v)) {
            std::string next = e.first == v ? e.second : e.first;
            if (g.directed() && e.first != v) continue;  // follow arc direction
            if (on_path.count(next)) continue;
            path.push_back(next);
            on_path.insert(next);
            if (path.size() >= 2) out.insert(Segment{canonical_path(g, path)});
            extend(next);
            on_path.erase(next);
            path.pop_back();
        }
    };

    for (const auto& v : g.vertices()) {
        path = {v};
        on_path = {v};
        extend(v);
    }
    return {out.begin(), out.end()};
}

double brute_force_graph_distance(const EditableGraph& g, const EditableGraph& h,
                                  std::size_t max_edges) {
    if (!g.space().same_space(h.space())) throw SpaceMismatchError("graphs from different spaces");
    if (g.directed() != h.directed()) throw Error("cannot mix directed and undirected graphs");
    if (g.edge_count() > max_edges || h.edge_count() > max_edges)
        throw SizeLimitError("brute_force_graph_distance: too many edges");

    std::vector<Segment> sg = all_segments(g);
    std::vector<Segment> sh = all_segments(h);

    double best = g.graph_norm() + h.graph_norm();  // empty mapping

    std::vector<std::pair<Segment, Segment>> chosen;
    std::set<EditableGraph::EdgeKey> used_g, used_h;

    auto evaluate = [&]() {
        GraphMapping m{chosen};
        MappingReport report = validate_graph_mapping(g, h, m);
        if (!report.ok) return;
        best = std::min(best, graph_mapping_cost(g, h, m));
    };

    std::function<void(std::size_t)> search = [&](std::size_t start) {
        evaluate();
        for (std::size_t i = start; i < sg.size(); ++i) {
            auto eg = segment_edges(g, sg[i]);
            bool clash = false;
            for (const auto& e : eg)
                if (used_g.count(e)) clash = true;
            if (clash) continue;
            for (const auto& e : eg) used_g.insert(e);
            for (std::size_t j = 0; j < sh.size(); ++j) {
                auto eh = segment_edges(h, sh[j]);
                bool clash_h = false;
                for (const auto& e : eh)
                    if (used_h.count(e)) clash_h = true;
                if (clash_h) continue;
                for (const auto& e : eh) used_h.insert(e);
                chosen.emplace_back(sg[i], sh[j]);
                search(i + 1);
                chosen.pop_back();
                for (const auto& e : eh) used_h.erase(e);
            }
            for (const auto& e : eg) used_g.erase(e);
        }
    };
    search(0);
    return best;
}

EditableGraph normalize_order2_graph(const EditableGraph& g) {
    EditableGraph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& v : cur.vertices()) {
            if (cur.order(v) != 2) continue;
            auto inc = cur.incident_edges(v);
            std::string a = inc[0].first == v ? inc[0].second : inc[0].first;
            std::string b = inc[1].first == v ? inc[1].second : inc[1].first;
            if (a == b) continue;
            std::vector<std::string> path{a, v, b};
            if (cur.directed()) {
                // ghostable only along arc direction
                if (cur.has_edge(a, v) && cur.has_edge(v, b)) {
                    // keep a->v->b
                } else if (cur.has_edge(b, v) && cur.has_edge(v, a)) {
                    path = {b, v, a};
                } else {
                    continue;
                }
            }
            if (cur.has_edge(path.front(), path.back())) continue;
            Segment s = make_segment(cur, path);
            if (!is_ghostable(cur, s)) continue;
            cur = apply_edit(cur, GhostEdit{s});
            changed = true;
            break;
        }
    }
    return cur;
}

bool editable_graphs_isomorphic(const EditableGraph& g, const EditableGraph& h) {
    if (!g.space().same_space(h.space())) return false;
    if (g.directed() != h.directed()) return false;
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;

    std::vector<std::string> vg = g.vertices();
    std::vector<std::string> vh = h.vertices();
    std::map<std::string, std::string> img;
    std::set<std::string> used;

    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == vg.size()) {
            for (const auto& e : g.edges()) {
                const std::string& a = img.at(e.first);
                const std::string& b = img.at(e.second);
                // has_edge is direction-exact for directed graphs
                if (!h.has_edge(a, b)) return false;
                if (!g.space().equals(g.edge_weight(e.first, e.second), h.edge_weight(a, b)))
                    return false;
            }
            return true;
        }
        for (const auto& w : vh) {
            if (used.count(w)) continue;
            if (g.order(vg[i]) != h.order(w)) continue;
            img[vg[i]] = w;
            used.insert(w);
            bool consistent = true;
            // prune: edges among already-assigned vertices must match both ways
            for (std::size_t k = 0; k < i && consistent; ++k) {
                const std::string& wk = img[vg[k]];
                for (const auto& [x, y, u, z] :
                     {std::tie(vg[i], vg[k], w, wk), std::tie(vg[k], vg[i], wk, w)}) {
                    bool ge = g.has_edge(x, y);
                    bool he = h.has_edge(u, z);
                    if (ge != he) {
                        consistent = false;
                        break;
                    }
                    if (ge && !g.space().equals(g.edge_weight(x, y), h.edge_weight(u, z))) {
                        consistent = false;
                        break;
                    }
                    if (!g.directed()) break;  // one undirected check suffices
                }
            }
            if (consistent && assign(i + 1)) return true;
            img.erase(vg[i]);
            used.erase(w);
        }
        return false;
    };
    return assign(0);
}

}  // namespace editdist
