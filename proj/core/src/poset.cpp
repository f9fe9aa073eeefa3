#include "editdist/poset.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

namespace editdist {

void Digraph::add_vertex(const std::string& id) {
    if (id.empty()) throw Error("vertex id must be non-empty");
    out_[id];
}

void Digraph::add_arc(const std::string& from, const std::string& to) {
    if (from == to) throw Error("self loops are not supported");
    add_vertex(from);
    add_vertex(to);
    out_[from].insert(to);
}

bool Digraph::has_arc(const std::string& a, const std::string& b) const {
    auto it = out_.find(a);
    return it != out_.end() && it->second.count(b) > 0;
}

std::vector<std::string> Digraph::vertices() const {
    std::vector<std::string> out;
    out.reserve(out_.size());
    for (const auto& [v, succ] : out_) out.push_back(v);
    return out;
}

std::vector<std::pair<std::string, std::string>> Digraph::arcs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [v, succ] : out_)
        for (const auto& w : succ) out.emplace_back(v, w);
    return out;
}

const std::set<std::string>& Digraph::successors(const std::string& v) const {
    auto it = out_.find(v);
    if (it == out_.end()) throw NotInGraphError("unknown vertex: " + v);
    return it->second;
}

std::size_t Digraph::arc_count() const {
    std::size_t n = 0;
    for (const auto& [v, succ] : out_) n += succ.size();
    return n;
}

bool is_acyclic(const Digraph& g) {
    // 0 = new, 1 = on stack, 2 = done
    std::map<std::string, int> state;
    std::function<bool(const std::string&)> dfs = [&](const std::string& v) -> bool {
        state[v] = 1;
        for (const auto& w : g.successors(v)) {
            int s = state.count(w) ? state[w] : 0;
            if (s == 1) return false;
            if (s == 0 && !dfs(w)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (const auto& v : g.vertices()) {
        int s = state.count(v) ? state[v] : 0;
        if (s == 0 && !dfs(v)) return false;
    }
    return true;
}

Digraph transitive_closure(const Digraph& g) {
    if (!is_acyclic(g)) throw CycleError("transitive closure: graph has a cycle");
    Digraph out;
    for (const auto& v : g.vertices()) out.add_vertex(v);
    // reachability by DFS from every vertex; fine for the sizes we handle
    for (const auto& v : g.vertices()) {
        std::set<std::string> seen;
        std::function<void(const std::string&)> dfs = [&](const std::string& x) {
            for (const auto& y : g.successors(x)) {
                if (seen.insert(y).second) dfs(y);
            }
        };
        dfs(v);
        for (const auto& y : seen) out.add_arc(v, y);
    }
    return out;
}

Digraph transitive_reduction(const Digraph& g) {
    Digraph closure = transitive_closure(g);
    Digraph out;
    for (const auto& v : g.vertices()) out.add_vertex(v);
    for (const auto& [a, b] : closure.arcs()) {
        bool redundant = false;
        for (const auto& c : closure.successors(a)) {
            if (c != b && closure.has_arc(c, b)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.add_arc(a, b);
    }
    return out;
}

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         std::vector<std::pair<std::string, std::string>> relations)
    : elements_(std::move(elements)) {
    Digraph gen;
    for (const auto& e : elements_) gen.add_vertex(e);
    for (const auto& [a, b] : relations) {
        if (!gen.has_vertex(a) || !gen.has_vertex(b))
            throw Error("poset relation mentions an unknown element");
        if (a != b) gen.add_arc(a, b);
    }
    if (!is_acyclic(gen)) throw CycleError("poset relations are not antisymmetric");
    strict_ = transitive_closure(gen);
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FinitePoset::leq(const std::string& a, const std::string& b) const {
    if (!strict_.has_vertex(a) || !strict_.has_vertex(b))
        throw NotInGraphError("unknown poset element");
    return a == b || strict_.has_arc(a, b);
}

void PersistentSet::validate() const {
    if (sets.size() != criticals.size())
        throw Error("persistent set: one component set per critical value required");
    if (!criticals.empty() && maps.size() + 1 != criticals.size())
        throw Error("persistent set: one map per consecutive pair required");
    for (std::size_t i = 0; i + 1 < criticals.size(); ++i)
        if (!(criticals[i] < criticals[i + 1]))
            throw Error("persistent set: critical values must be strictly increasing");
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::set<std::string> ids(sets[i].begin(), sets[i].end());
        if (ids.size() != sets[i].size()) throw Error("persistent set: duplicate component id");
        if (i + 1 < sets.size()) {
            std::set<std::string> next(sets[i + 1].begin(), sets[i + 1].end());
            for (const auto& c : sets[i]) {
                auto it = maps[i].find(c);
                if (it == maps[i].end())
                    throw Error("persistent set: map must be total (missing " + c + ")");
                if (!next.count(it->second))
                    throw Error("persistent set: map target not in the next set");
            }
        }
    }
}

PersistentSet PersistentSet::minimized() const {
    validate();
    PersistentSet cur = *this;
    // leading levels with no components carry no information
    while (!cur.sets.empty() && cur.sets.front().empty()) {
        cur.criticals.erase(cur.criticals.begin());
        cur.sets.erase(cur.sets.begin());
        if (!cur.maps.empty()) cur.maps.erase(cur.maps.begin());
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < cur.maps.size(); ++i) {
            const auto& m = cur.maps[i];
            // bijective inbound map means nothing happens at criticals[i+1]
            std::set<std::string> image;
            for (const auto& c : cur.sets[i]) image.insert(m.at(c));
            bool bijective = cur.sets[i].size() == cur.sets[i + 1].size() &&
                             image.size() == cur.sets[i + 1].size();
            if (!bijective) continue;
            PersistentSet next;
            next.criticals = cur.criticals;
            next.sets = cur.sets;
            next.maps = cur.maps;
            next.criticals.erase(next.criticals.begin() + static_cast<long>(i) + 1);
            next.sets.erase(next.sets.begin() + static_cast<long>(i) + 1);
            if (i + 1 < cur.maps.size()) {
                std::map<std::string, std::string> composed;
                for (const auto& [src, mid] : m) composed[src] = cur.maps[i + 1].at(mid);
                next.maps[i] = std::move(composed);
                next.maps.erase(next.maps.begin() + static_cast<long>(i) + 1);
            } else {
                next.maps.erase(next.maps.begin() + static_cast<long>(i));
            }
            cur = std::move(next);
            changed = true;
            break;
        }
    }
    return cur;
}

std::string PersistentSet::to_json() const {
    nlohmann::json j;
    j["criticals"] = criticals;
    j["sets"] = sets;
    auto arr = nlohmann::json::array();
    for (const auto& m : maps) {
        nlohmann::json jm = nlohmann::json::object();
        for (const auto& [src, dst] : m) jm[src] = dst;
        arr.push_back(std::move(jm));
    }
    j["maps"] = std::move(arr);
    return j.dump();
}

PersistentSet PersistentSet::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad persistent set JSON: ") + e.what());
    }
    PersistentSet s;
    for (const auto& t : j.at("criticals")) s.criticals.push_back(t.get<double>());
    for (const auto& level : j.at("sets")) {
        std::vector<std::string> ids;
        for (const auto& c : level) ids.push_back(c.get<std::string>());
        s.sets.push_back(std::move(ids));
    }
    for (const auto& jm : j.at("maps")) {
        std::map<std::string, std::string> m;
        for (auto it = jm.begin(); it != jm.end(); ++it) m[it.key()] = it.value().get<std::string>();
        s.maps.push_back(std::move(m));
    }
    s.validate();
    return s;
}

std::string DisplayPoset::id_of(const Element& e) {
    return "t" + std::to_string(e.time_index) + ":" + e.component;
}

bool DisplayPoset::leq(const Element& a, const Element& b) const {
    if (a.time_index > b.time_index) return false;
    std::string c = a.component;
    for (std::size_t i = a.time_index; i < b.time_index; ++i) c = maps_.at(i).at(c);
    return c == b.component;
}

Digraph DisplayPoset::consecutive_dag() const {
    Digraph g;
    for (const auto& e : elements_) g.add_vertex(id_of(e));
    for (const auto& e : elements_) {
        if (e.time_index + 1 >= criticals_.size()) continue;
        Element next{e.time_index + 1, maps_.at(e.time_index).at(e.component)};
        g.add_arc(id_of(e), id_of(next));
    }
    return g;
}

FinitePoset DisplayPoset::as_poset() const {
    std::vector<std::string> ids;
    for (const auto& e : elements_) ids.push_back(id_of(e));
    std::vector<std::pair<std::string, std::string>> rel;
    for (const auto& [a, b] : consecutive_dag().arcs()) rel.emplace_back(a, b);
    return FinitePoset(std::move(ids), std::move(rel));
}

double DisplayPoset::height_by_id(const std::string& id) const {
    for (const auto& e : elements_)
        if (id_of(e) == id) return height(e);
    throw NotInGraphError("unknown display element: " + id);
}

DisplayPoset display_poset(const PersistentSet& s) {
    s.validate();
    DisplayPoset d;
    d.criticals_ = s.criticals;
    d.maps_ = s.maps;
    for (std::size_t i = 0; i < s.sets.size(); ++i)
        for (const auto& c : s.sets[i]) d.elements_.push_back({i, c});
    std::sort(d.elements_.begin(), d.elements_.end());
    return d;
}

namespace {

EditableGraph poset_graph(const FinitePoset& p, const Space& space,
                          const std::function<Weight(const std::string&, const std::string&)>& w) {
    Digraph covering = p.covering_dag();
    EditableGraph g(space, /*directed=*/true);
    for (const auto& v : covering.vertices()) g.add_vertex(v);
    for (const auto& [a, b] : covering.arcs()) {
        Weight weight = w(a, b);
        if (!(space.norm(weight) > 0.0))
            throw Error("poset metric vanishes on the comparable pair " + a + " < " + b);
        g.add_edge(a, b, weight);
    }
    return g;
}

}  // namespace

EditableGraph weighted_graph_from_poset(const FinitePoset& p,
                                        const std::function<double(const std::string&)>& height) {
    return poset_graph(p, Space::reals(), [&](const std::string& a, const std::string& b) {
        double d = height(b) - height(a);
        if (!(d > 0.0)) throw Error("height function is not strictly monotone on " + a + " < " + b);
        return Weight::real(d);
    });
}

EditableGraph weighted_graph_from_poset(
    const FinitePoset& p, const std::function<std::vector<double>(const std::string&)>& height) {
    // one nonneg-real factor per coordinate
    std::size_t dims = 0;
    for (const auto& e : p.elements()) {
        dims = height(e).size();
        break;
    }
    if (dims == 0) throw Error("vector heights must have at least one coordinate");
    Space space = Space::product(std::vector<Space>(dims, Space::reals()));
    return poset_graph(p, space, [&](const std::string& a, const std::string& b) {
        std::vector<double> ha = height(a);
        std::vector<double> hb = height(b);
        if (ha.size() != dims || hb.size() != dims)
            throw Error("vector heights must have a fixed dimension");
        std::vector<Weight> parts;
        for (std::size_t i = 0; i < dims; ++i) {
            double d = hb[i] - ha[i];
            if (d < 0.0)
                throw Error("vector height is not monotone on " + a + " < " + b);
            parts.push_back(Weight::real(d));
        }
        return Weight::tuple(std::move(parts));
    });
}

EditableGraph weighted_graph_from_poset(
    const FinitePoset& p, const Space& space,
    const std::function<Weight(const std::string&, const std::string&)>& metric) {
    return poset_graph(p, space, metric);
}

Dendrogram merge_tree_from_display(const DisplayPoset& d) {
    if (d.elements().empty()) throw NotATreeError("empty display poset");

    // Forward maps are total, so the maximal elements all sit at the top
    // critical value; a merge tree needs exactly one.
    std::size_t top = 0;
    for (const auto& e : d.elements()) top = std::max(top, e.time_index);
    std::vector<DisplayPoset::Element> maxima;
    for (const auto& e : d.elements())
        if (e.time_index == top) maxima.push_back(e);
    if (maxima.size() != 1)
        throw NotATreeError("display poset has several maximal elements");

    // Parent = image under the consecutive map; this is the reduced DAG.
    std::map<std::string, std::string> parent;
    std::map<std::string, std::vector<std::string>> children;
    for (const auto& [a, b] : d.consecutive_dag().arcs()) {
        parent[a] = b;
        children[b].push_back(a);
    }

    // Truncate the chain above the last merge vertex (the edge to infinity).
    std::string root = DisplayPoset::id_of(maxima.front());
    while (children[root].size() == 1) root = children[root].front();

    Dendrogram out(Space::reals(), root);
    std::function<void(const std::string&)> emit = [&](const std::string& v) {
        for (const auto& c : children[v]) {
            double w = d.height_by_id(v) - d.height_by_id(c);
            out.add_vertex(c, v, Weight::real(w));
            emit(c);
        }
    };
    emit(root);
    return out.normalized();
}

}  // namespace editdist
