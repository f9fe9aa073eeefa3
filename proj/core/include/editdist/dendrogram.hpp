#pragma once

#include <map>
#include <string>
#include <vector>

#include "editdist/weights.hpp"

namespace editdist {

// Rooted weighted tree. Every non-root vertex is identified with the edge to
// its father and carries that edge's (nonzero) weight.
class Dendrogram {
  public:
    Dendrogram(Space space, std::string root);

    struct NodeSpec {
        std::string id;
        std::string parent;
        Weight weight;
    };
    static Dendrogram build(Space space, std::string root, const std::vector<NodeSpec>& nodes);

    // parent must already be present; the weight must be nonzero.
    void add_vertex(const std::string& id, const std::string& parent, Weight w);

    const Space& space() const { return space_; }
    const std::string& root() const { return root_; }
    std::size_t vertex_count() const { return parent_.size() + 1; }
    std::size_t edge_count() const { return parent_.size(); }
    bool contains(const std::string& v) const;
    bool is_root(const std::string& v) const { return v == root_; }
    bool is_leaf(const std::string& v) const;

    const std::string& parent(const std::string& v) const;
    const std::vector<std::string>& children(const std::string& v) const;
    const Weight& weight(const std::string& v) const;

    std::vector<std::string> vertices() const;           // sorted ids, root included
    std::vector<std::string> non_root_vertices() const;  // sorted; these are E_T
    std::vector<std::string> leaves() const;

    // true iff a is an ancestor of b or a == b
    bool at_or_above(const std::string& a, const std::string& b) const;

    // The path zeta_v = [v, father(v), ..., root].
    std::vector<std::string> root_path(const std::string& v) const;
    std::string lca(const std::vector<std::string>& vs) const;

    // len(v) counts the strict ancestors of v; lvl(v) = len(T) - len(v).
    int len(const std::string& v) const;
    int len() const;
    int lvl(const std::string& v) const;
    std::vector<std::string> level(int n) const;

    Dendrogram subtree(const std::string& v) const;
    double tree_norm() const;
    double subtree_norm(const std::string& v) const;  // ||sub_T(v)||, v's own edge excluded

    // Ghosts order-2 vertices (one child and a father) until none remain,
    // combining child and father edge weights child-then-father.
    Dendrogram normalized() const;
    bool has_order2_vertices() const;

    // Order-2 splitting: inserts new_id between v and its father. lower goes
    // to the edge below new_id, upper above; lower (.) upper must equal the
    // original weight within tolerance.
    Dendrogram split_edge(const std::string& v, const std::string& new_id, const Weight& lower,
                          const Weight& upper) const;

    bool isomorphic_to(const Dendrogram& other) const;

    std::string to_json() const;
    static Dendrogram from_json(const std::string& text);
    // Newick with real edge weights, e.g. "((a:1,b:1)d:1,c:5)r;".
    static Dendrogram from_newick(const std::string& text);

  private:
    Space space_;
    std::string root_;
    std::map<std::string, std::string> parent_;
    std::map<std::string, Weight> weight_;
    std::map<std::string, std::vector<std::string>> children_;
};

}  // namespace editdist
