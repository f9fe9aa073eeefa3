#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "editdist/dendrogram.hpp"
#include "editdist/graph.hpp"

namespace editdist {

// Edit assignment over two dendrograms: every non-root vertex is coupled,
// deleted ("D") or ghosted ("G").
struct TreeMapping {
    std::map<std::string, std::string> couples;  // vertex of T -> vertex of T'
    std::set<std::string> ghosts_left, deletions_left;
    std::set<std::string> ghosts_right, deletions_right;

    static TreeMapping all_deletions(const Dendrogram& t, const Dendrogram& u);

    std::string to_json() const;
    static TreeMapping from_json(const std::string& text);
};

// Checks M1 (totality), M2 (injectivity), M3 (couplings preserve the tree
// order both ways) and M4 (each ghost has exactly one child branch surviving
// the deletions and a unique maximal coupled vertex below it).
MappingReport validate_tree_mapping(const Dendrogram& t, const Dendrogram& u,
                                    const TreeMapping& m);

// Deletions plus shrink costs; ghost chains combine into the edge of the
// coupled vertex below them (child-then-father order). Throws
// InvalidMappingError when the mapping does not validate.
double tree_mapping_cost(const Dendrogram& t, const Dendrogram& u, const TreeMapping& m);

// Canonical completion of a couple set: ghosts exactly the vertices left with
// one surviving child branch, deletes the rest.
TreeMapping complete_with_maximal_ghostings(const Dendrogram& t, const Dendrogram& u,
                                            const std::map<std::string, std::string>& couples);

// Converts deletions that leave order-2 survivors into ghostings; the result
// never costs more than the input mapping.
TreeMapping restrict_to_M2(const Dendrogram& t, const Dendrogram& u, const TreeMapping& m);

// Exact d_E oracle: minimum cost over all valid mappings, enumerated through
// order-preserving partial injections completed with maximal ghostings.
double brute_force_tree_distance(const Dendrogram& t, const Dendrogram& u,
                                 std::size_t max_edges = 6);

// Dendrogram as the equivalent directed editable graph (arcs child -> father).
EditableGraph dendrogram_as_graph(const Dendrogram& t);

}  // namespace editdist
