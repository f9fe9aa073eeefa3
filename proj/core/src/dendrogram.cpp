#include "editdist/dendrogram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include <json.hpp>

namespace editdist {

Dendrogram::Dendrogram(Space space, std::string root)
    : space_(std::move(space)), root_(std::move(root)) {
    if (root_.empty()) throw Error("dendrogram root id must be non-empty");
    children_[root_] = {};
}

Dendrogram Dendrogram::build(Space space, std::string root, const std::vector<NodeSpec>& nodes) {
    Dendrogram t(std::move(space), std::move(root));
    // Nodes may arrive in any order; insert parents first.
    std::vector<const NodeSpec*> pending;
    for (const auto& n : nodes) pending.push_back(&n);
    while (!pending.empty()) {
        std::vector<const NodeSpec*> next;
        bool progress = false;
        for (const auto* n : pending) {
            if (t.contains(n->parent)) {
                t.add_vertex(n->id, n->parent, n->weight);
                progress = true;
            } else {
                next.push_back(n);
            }
        }
        if (!progress) throw NotATreeError("dendrogram nodes reference a missing parent");
        pending.swap(next);
    }
    return t;
}

void Dendrogram::add_vertex(const std::string& id, const std::string& parent, Weight w) {
    if (id.empty()) throw Error("vertex id must be non-empty");
    if (contains(id)) throw Error("duplicate vertex id: " + id);
    if (!contains(parent)) throw NotATreeError("unknown parent: " + parent);
    space_.check(w);
    if (!(space_.norm(w) > 0.0)) throw Error("edge weight must be nonzero (vertex " + id + ")");
    parent_[id] = parent;
    weight_[id] = std::move(w);
    children_[id] = {};
    auto& sibs = children_[parent];
    sibs.insert(std::upper_bound(sibs.begin(), sibs.end(), id), id);
}

bool Dendrogram::contains(const std::string& v) const { return children_.count(v) > 0; }

bool Dendrogram::is_leaf(const std::string& v) const { return children(v).empty(); }

const std::string& Dendrogram::parent(const std::string& v) const {
    auto it = parent_.find(v);
    if (it == parent_.end())
        throw NotInGraphError(v == root_ ? "the root has no parent" : "unknown vertex: " + v);
    return it->second;
}

const std::vector<std::string>& Dendrogram::children(const std::string& v) const {
    auto it = children_.find(v);
    if (it == children_.end()) throw NotInGraphError("unknown vertex: " + v);
    return it->second;
}

const Weight& Dendrogram::weight(const std::string& v) const {
    auto it = weight_.find(v);
    if (it == weight_.end()) throw NotInGraphError("no edge weight for vertex: " + v);
    return it->second;
}

std::vector<std::string> Dendrogram::vertices() const {
    std::vector<std::string> out;
    out.reserve(children_.size());
    for (const auto& [id, kids] : children_) out.push_back(id);
    return out;
}

std::vector<std::string> Dendrogram::non_root_vertices() const {
    std::vector<std::string> out;
    out.reserve(parent_.size());
    for (const auto& [id, p] : parent_) out.push_back(id);
    return out;
}

std::vector<std::string> Dendrogram::leaves() const {
    std::vector<std::string> out;
    for (const auto& [id, kids] : children_)
        if (kids.empty()) out.push_back(id);
    if (out.empty()) out.push_back(root_);  // single-vertex tree
    return out;
}

bool Dendrogram::at_or_above(const std::string& a, const std::string& b) const {
    if (!contains(a) || !contains(b)) throw NotInGraphError("unknown vertex");
    std::string cur = b;
    while (true) {
        if (cur == a) return true;
        if (cur == root_) return false;
        cur = parent(cur);
    }
}

std::vector<std::string> Dendrogram::root_path(const std::string& v) const {
    if (!contains(v)) throw NotInGraphError("unknown vertex: " + v);
    std::vector<std::string> path{v};
    std::string cur = v;
    while (cur != root_) {
        cur = parent(cur);
        path.push_back(cur);
    }
    return path;
}

std::string Dendrogram::lca(const std::vector<std::string>& vs) const {
    if (vs.empty()) throw Error("lca of an empty vertex set");
    std::vector<std::string> common = root_path(vs.front());
    std::set<std::string> keep(common.begin(), common.end());
    for (std::size_t i = 1; i < vs.size(); ++i) {
        std::vector<std::string> p = root_path(vs[i]);
        std::set<std::string> here(p.begin(), p.end());
        std::set<std::string> both;
        for (const auto& x : keep)
            if (here.count(x)) both.insert(x);
        keep.swap(both);
    }
    // The minimum of the intersection is the deepest common ancestor.
    const std::string* best = nullptr;
    int best_len = -1;
    for (const auto& x : keep) {
        int l = len(x);
        if (l > best_len) {
            best_len = l;
            best = &x;
        }
    }
    if (!best) throw Error("lca: no common ancestor");
    return *best;
}

int Dendrogram::len(const std::string& v) const {
    return static_cast<int>(root_path(v).size()) - 1;
}

int Dendrogram::len() const {
    int best = 0;
    for (const auto& [id, kids] : children_)
        if (kids.empty()) best = std::max(best, len(id));
    return best;
}

int Dendrogram::lvl(const std::string& v) const { return len() - len(v); }

std::vector<std::string> Dendrogram::level(int n) const {
    std::vector<std::string> out;
    for (const auto& [id, kids] : children_)
        if (lvl(id) == n) out.push_back(id);
    return out;
}

Dendrogram Dendrogram::subtree(const std::string& v) const {
    if (!contains(v)) throw NotInGraphError("unknown vertex: " + v);
    Dendrogram out(space_, v);
    std::function<void(const std::string&)> copy_below = [&](const std::string& x) {
        for (const auto& c : children(x)) {
            out.add_vertex(c, x, weight(c));
            copy_below(c);
        }
    };
    copy_below(v);
    return out;
}

double Dendrogram::tree_norm() const {
    double total = 0.0;
    for (const auto& [id, w] : weight_) total += space_.norm(w);
    return total;
}

double Dendrogram::subtree_norm(const std::string& v) const {
    if (!contains(v)) throw NotInGraphError("unknown vertex: " + v);
    double total = 0.0;
    std::function<void(const std::string&)> walk = [&](const std::string& x) {
        for (const auto& c : children(x)) {
            total += space_.norm(weight(c));
            walk(c);
        }
    };
    walk(v);
    return total;
}

bool Dendrogram::has_order2_vertices() const {
    for (const auto& [id, kids] : children_)
        if (id != root_ && kids.size() == 1) return true;
    return false;
}

Dendrogram Dendrogram::normalized() const {
    Dendrogram out(space_, root_);
    // Walk down from the root; fold chains of one-child vertices into the
    // edge of the vertex below them.
    std::function<void(const std::string&, const std::string&)> emit =
        [&](const std::string& v, const std::string& attach) {
            Weight acc = weight(v);
            std::string cur = v;
            while (children(cur).size() == 1) {
                const std::string& child = children(cur).front();
                acc = space_.combine(weight(child), acc);
                cur = child;
            }
            out.add_vertex(cur, attach, acc);
            for (const auto& c : children(cur)) emit(c, cur);
        };
    for (const auto& c : children(root_)) emit(c, root_);
    return out;
}

Dendrogram Dendrogram::split_edge(const std::string& v, const std::string& new_id,
                                  const Weight& lower, const Weight& upper) const {
    if (!contains(v) || v == root_) throw NotInGraphError("split needs a non-root vertex");
    if (contains(new_id)) throw Error("split id already in use: " + new_id);
    if (!(space_.norm(lower) > 0.0) || !(space_.norm(upper) > 0.0))
        throw InvalidEditError("split parts must be nonzero");
    if (!space_.equals(space_.combine(lower, upper), weight(v)))
        throw InvalidEditError("split parts must combine to the original weight");
    Dendrogram out(space_, root_);
    std::function<void(const std::string&, const std::string&)> copy_below =
        [&](const std::string& x, const std::string& attach) {
            for (const auto& c : children(x)) {
                if (c == v) {
                    out.add_vertex(new_id, attach, upper);
                    out.add_vertex(v, new_id, lower);
                    copy_below(v, v);
                } else {
                    out.add_vertex(c, attach, weight(c));
                    copy_below(c, c);
                }
            }
        };
    copy_below(root_, root_);
    return out;
}

namespace {

bool match_subtrees(const Dendrogram& a, const std::string& va, const Dendrogram& b,
                    const std::string& vb) {
    const auto& ca = a.children(va);
    const auto& cb = b.children(vb);
    if (ca.size() != cb.size()) return false;
    // Backtracking bijection between child lists; weights compared with the
    // space tolerance, so children cannot simply be sorted.
    std::vector<bool> used(cb.size(), false);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == ca.size()) return true;
        for (std::size_t j = 0; j < cb.size(); ++j) {
            if (used[j]) continue;
            if (!a.space().equals(a.weight(ca[i]), b.weight(cb[j]))) continue;
            if (!match_subtrees(a, ca[i], b, cb[j])) continue;
            used[j] = true;
            if (assign(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return assign(0);
}

}  // namespace

bool Dendrogram::isomorphic_to(const Dendrogram& other) const {
    if (!space_.same_space(other.space_)) return false;
    if (vertex_count() != other.vertex_count()) return false;
    return match_subtrees(*this, root_, other, other.root_);
}

std::string Dendrogram::to_json() const {
    nlohmann::json j;
    j["root"] = root_;
    auto nodes = nlohmann::json::array();
    for (const auto& [id, p] : parent_) {
        nlohmann::json n;
        n["id"] = id;
        n["parent"] = p;
        n["w"] = nlohmann::json::parse(weight_to_json(weight_.at(id), space_));
        nodes.push_back(std::move(n));
    }
    j["nodes"] = std::move(nodes);
    return j.dump();
}

Dendrogram Dendrogram::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad dendrogram JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("root") || !j.contains("nodes"))
        throw ParseError("dendrogram JSON needs \"root\" and \"nodes\"");
    std::vector<NodeSpec> nodes;
    Space space = Space::reals();
    bool inferred = false;
    for (const auto& n : j.at("nodes")) {
        NodeSpec spec;
        spec.id = n.at("id").get<std::string>();
        spec.parent = n.at("parent").get<std::string>();
        auto [w, s] = weight_and_space_from_json(n.at("w").dump());
        spec.weight = std::move(w);
        if (!inferred) {
            space = std::move(s);
            inferred = true;
        }
        nodes.push_back(std::move(spec));
    }
    return build(std::move(space), j.at("root").get<std::string>(), nodes);
}

namespace {

struct NewickNode {
    std::string name;
    bool has_weight = false;
    double weight = 0.0;
    std::vector<NewickNode> children;
};

struct NewickParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    NewickNode parse_node() {
        skip_ws();
        NewickNode node;
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            while (true) {
                node.children.push_back(parse_node());
                skip_ws();
                if (pos >= text.size()) throw ParseError("newick: unterminated group");
                if (text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (text[pos] == ')') {
                    ++pos;
                    break;
                }
                throw ParseError("newick: expected ',' or ')'");
            }
        }
        skip_ws();
        while (pos < text.size() && text[pos] != ':' && text[pos] != ',' && text[pos] != ')' &&
               text[pos] != ';' && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            node.name.push_back(text[pos]);
            ++pos;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == ':') {
            ++pos;
            skip_ws();
            std::size_t used = 0;
            try {
                node.weight = std::stod(text.substr(pos), &used);
            } catch (const std::exception&) {
                throw ParseError("newick: bad weight");
            }
            node.has_weight = true;
            pos += used;
        }
        return node;
    }
};

}  // namespace

Dendrogram Dendrogram::from_newick(const std::string& text) {
    NewickParser p{text};
    NewickNode top = p.parse_node();
    p.skip_ws();
    if (p.pos < text.size() && text[p.pos] == ';') ++p.pos;
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("newick: trailing characters");
    if (top.has_weight) throw ParseError("newick: the root cannot carry a weight");

    int counter = 0;
    std::function<void(NewickNode&)> name_all = [&](NewickNode& n) {
        if (n.name.empty()) n.name = "_n" + std::to_string(counter++);
        for (auto& c : n.children) name_all(c);
    };
    name_all(top);

    Dendrogram out(Space::reals(), top.name);
    std::function<void(const NewickNode&)> emit = [&](const NewickNode& n) {
        for (const auto& c : n.children) {
            if (!c.has_weight) throw ParseError("newick: non-root vertex without a weight");
            out.add_vertex(c.name, n.name, Weight::real(c.weight));
            emit(c);
        }
    };
    emit(top);
    return out;
}

}  // namespace editdist
