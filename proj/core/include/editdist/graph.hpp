#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "editdist/weights.hpp"

namespace editdist {

// A (possibly directed) graph with nonzero editable weights on the edges.
// For undirected graphs an edge key is stored with the lexicographically
// smaller endpoint first.
class EditableGraph {
  public:
    using EdgeKey = std::pair<std::string, std::string>;

    EditableGraph(Space space, bool directed);

    void add_vertex(const std::string& id);
    void add_edge(const std::string& src, const std::string& dst, Weight w);

    bool directed() const { return directed_; }
    const Space& space() const { return space_; }

    bool has_vertex(const std::string& v) const;
    bool has_edge(const std::string& a, const std::string& b) const;
    const Weight& edge_weight(const std::string& a, const std::string& b) const;
    EdgeKey edge_key(const std::string& a, const std::string& b) const;

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::vector<std::string> vertices() const;
    std::vector<EdgeKey> edges() const;  // sorted keys

    // Number of incident edges (any orientation).
    int order(const std::string& v) const;
    std::vector<EdgeKey> incident_edges(const std::string& v) const;

    double graph_norm() const;

    std::string to_json() const;
    static EditableGraph from_json(const std::string& text);

  private:
    Space space_;
    bool directed_;
    std::set<std::string> vertices_;
    std::map<EdgeKey, Weight> edges_;
};

// An injective edge path v0..vn (n >= 1); in directed graphs it follows the
// arc directions. Undirected segments are canonicalized with the smaller
// endpoint first.
struct Segment {
    std::vector<std::string> path;

    std::size_t edge_count() const { return path.empty() ? 0 : path.size() - 1; }
    const std::string& front() const { return path.front(); }
    const std::string& back() const { return path.back(); }
    std::vector<std::string> interior() const;

    bool operator==(const Segment& other) const { return path == other.path; }
    bool operator<(const Segment& other) const { return path < other.path; }
};

Segment make_segment(const EditableGraph& g, std::vector<std::string> path);
bool segment_in_graph(const EditableGraph& g, const Segment& s);

// Partial-semigroup sum: s then t, defined when s ends where t starts and the
// images share only that vertex. Undirected segments are reoriented as needed.
Segment segment_sum(const EditableGraph& g, const Segment& s, const Segment& t);

// Combined weight of the path edges, in path order.
Weight segment_weight(const EditableGraph& g, const Segment& s);

struct OpenStar {
    std::set<std::string> vertices;                    // interior vertices of s
    std::set<EditableGraph::EdgeKey> edges;            // edges incident to them
};

OpenStar open_star(const EditableGraph& g, const Segment& s);

// s is in O(G): every edge incident to an interior vertex lies on s.
bool is_ghostable(const EditableGraph& g, const Segment& s);

// --- Edits ---------------------------------------------------------------

struct ShrinkEdit {
    std::string src, dst;
    Weight to;
};
struct DeleteEdit {
    std::string src, dst;
};
struct InsertEdit {
    std::string src, dst;
    Weight w;
};
struct GhostEdit {
    Segment s;
};
// Replaces edge (src,dst) by the chain src-ids[0]-...-ids.back()-dst; weights
// has one entry per chain edge and must combine to the original weight.
struct SplitEdit {
    std::string src, dst;
    std::vector<std::string> ids;
    std::vector<Weight> weights;
};

using Edit = std::variant<ShrinkEdit, DeleteEdit, InsertEdit, GhostEdit, SplitEdit>;

EditableGraph apply_edit(const EditableGraph& g, const Edit& edit);
double edit_cost(const EditableGraph& g, const Edit& edit);

// --- Mappings (G1-G3) ----------------------------------------------------

struct GraphMapping {
    std::vector<std::pair<Segment, Segment>> couples;
};

struct MappingReport {
    bool ok = true;
    std::vector<std::string> violations;
};

MappingReport validate_graph_mapping(const EditableGraph& g, const EditableGraph& h,
                                     const GraphMapping& m);
double graph_mapping_cost(const EditableGraph& g, const EditableGraph& h, const GraphMapping& m);

// All segments of g (equivalence classes; undirected ones canonicalized).
std::vector<Segment> all_segments(const EditableGraph& g);

// Exact minimum over all valid mappings, empty mapping included. Only for
// tiny graphs; throws SizeLimitError above max_edges.
double brute_force_graph_distance(const EditableGraph& g, const EditableGraph& h,
                                  std::size_t max_edges = 5);

// Ghosts order-2 chains until none applies (the canonical small-graph form
// used to decide d_E == 0).
EditableGraph normalize_order2_graph(const EditableGraph& g);

// Weight-preserving graph isomorphism, backtracking; tiny graphs only.
bool editable_graphs_isomorphic(const EditableGraph& g, const EditableGraph& h);

}  // namespace editdist
