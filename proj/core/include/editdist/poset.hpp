#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "editdist/dendrogram.hpp"
#include "editdist/graph.hpp"

namespace editdist {

// Unweighted directed graph used for transitive closure/reduction work.
class Digraph {
  public:
    void add_vertex(const std::string& id);
    void add_arc(const std::string& from, const std::string& to);

    bool has_vertex(const std::string& v) const { return out_.count(v) > 0; }
    bool has_arc(const std::string& a, const std::string& b) const;
    std::vector<std::string> vertices() const;
    std::vector<std::pair<std::string, std::string>> arcs() const;
    const std::set<std::string>& successors(const std::string& v) const;

    std::size_t vertex_count() const { return out_.size(); }
    std::size_t arc_count() const;

    bool operator==(const Digraph& other) const { return out_ == other.out_; }

  private:
    std::map<std::string, std::set<std::string>> out_;
};

bool is_acyclic(const Digraph& g);

// Smallest transitive supergraph; throws CycleError on cycles.
Digraph transitive_closure(const Digraph& g);

// Unique minimal DAG with the same closure: an arc (a,b) is dropped iff the
// closure contains a path of length >= 2 from a to b.
Digraph transitive_reduction(const Digraph& g);

// Finite poset given by generating relations; the closure is computed and
// antisymmetry checked on construction.
class FinitePoset {
  public:
    FinitePoset(std::vector<std::string> elements,
                std::vector<std::pair<std::string, std::string>> relations);

    const std::vector<std::string>& elements() const { return elements_; }
    bool leq(const std::string& a, const std::string& b) const;  // a <= b
    bool less(const std::string& a, const std::string& b) const { return a != b && leq(a, b); }

    // DAG of strict relations and its transitive reduction (covering arcs).
    const Digraph& strict_dag() const { return strict_; }
    Digraph covering_dag() const { return transitive_reduction(strict_); }

  private:
    std::vector<std::string> elements_;
    Digraph strict_;
};

// Constructible persistent set restricted to its critical values: component
// id sets per critical value and total forward maps between consecutive ones.
struct PersistentSet {
    std::vector<double> criticals;
    std::vector<std::vector<std::string>> sets;
    std::vector<std::map<std::string, std::string>> maps;  // size = criticals.size()-1

    void validate() const;
    // Drops critical values whose inbound map is a bijection (and leading
    // empty levels), composing the maps.
    PersistentSet minimized() const;

    std::string to_json() const;
    static PersistentSet from_json(const std::string& text);
};

// Display poset of a persistent set: elements (t_i, component), order
// generated by the forward maps, height projection h((t_i, s)) = t_i.
class DisplayPoset {
  public:
    struct Element {
        std::size_t time_index;
        std::string component;

        bool operator<(const Element& o) const {
            return std::tie(time_index, component) < std::tie(o.time_index, o.component);
        }
        bool operator==(const Element& o) const {
            return time_index == o.time_index && component == o.component;
        }
    };

    const std::vector<Element>& elements() const { return elements_; }
    double height(const Element& e) const { return criticals_.at(e.time_index); }
    bool leq(const Element& a, const Element& b) const;

    // String form "t<i>:<component>" used as vertex ids in derived graphs.
    static std::string id_of(const Element& e);

    Digraph consecutive_dag() const;  // arcs (t_i,s) -> (t_{i+1}, map(s))
    FinitePoset as_poset() const;
    double height_by_id(const std::string& id) const;

    friend DisplayPoset display_poset(const PersistentSet& s);

  private:
    std::vector<double> criticals_;
    std::vector<Element> elements_;
    std::vector<std::map<std::string, std::string>> maps_;
};

DisplayPoset display_poset(const PersistentSet& s);

// Editable graphs from posets: transitive reduction with strictly positive
// edge weights d_P(a,b) on the covering arcs.
EditableGraph weighted_graph_from_poset(const FinitePoset& p,
                                        const std::function<double(const std::string&)>& height);
EditableGraph weighted_graph_from_poset(
    const FinitePoset& p, const std::function<std::vector<double>(const std::string&)>& height);
EditableGraph weighted_graph_from_poset(
    const FinitePoset& p, const Space& space,
    const std::function<Weight(const std::string&, const std::string&)>& metric);

// Merge tree of a display poset: unique maximal element required; the chain
// above the last merge vertex is truncated (the edge to infinity) and order-2
// vertices are ghosted. Edge weights are height differences.
Dendrogram merge_tree_from_display(const DisplayPoset& d);

}  // namespace editdist
