#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "editdist/dendrogram.hpp"

namespace editdist {

// Memoized matrix of subtree distances d_E(sub_T(v), sub_T'(w)), keyed by
// vertex ids of the two (normalized) trees.
class DistanceTable {
  public:
    void set(const std::string& v, const std::string& w, double d);
    bool has(const std::string& v, const std::string& w) const;
    double get(const std::string& v, const std::string& w) const;
    std::size_t size() const { return table_.size(); }

    // Completeness frontier: the highest (lvl(x), lvl(y)) wave fully solved.
    int frontier_left() const { return frontier_left_; }
    int frontier_right() const { return frontier_right_; }
    void advance_frontier(int left, int right);

  private:
    std::map<std::pair<std::string, std::string>, double> table_;
    int frontier_left_ = -1;
    int frontier_right_ = -1;
};

// One binary variable delta^{v,w}_{i,j}: couple v with w and shrink the
// segment from v through v_i (top v_{i+1}) onto the one from w through w_j.
struct BlpVariable {
    std::string v, w;
    int i = 0, j = 0;
    double delta = 0.0;  // shrink cost of the paired segments
    double coeff = 0.0;  // objective coefficient (offset + sum coeff = cost)
};

struct BlpConstraint {
    std::string leaf;
    bool left = true;        // which tree the leaf belongs to
    std::vector<int> vars;   // variable indices, each counted once
};

struct BlpProblem {
    double offset = 0.0;  // all-deleted cost ||T_x|| + ||T_y||
    std::vector<BlpVariable> vars;
    std::vector<BlpConstraint> constraints;
};

struct BlpSolution {
    std::vector<int> chosen;
    double value = 0.0;
    bool optimal = false;
};

// Shrink cost Delta^{v,w}_{i,j} between the combined edge weights of
// v_0..v_i and w_0..w_j. Throws on out-of-range indices.
double delta_cost(const Dendrogram& tx, const Dendrogram& ty, const std::string& v,
                  const std::string& w, int i, int j);

// Assembles the problem for the couple (root of tx, root of ty). The table
// must hold d_E for every proper subtree pair.
BlpProblem build_problem(const Dendrogram& tx, const Dendrogram& ty, const DistanceTable& wtab);

// Exact branch-and-bound over the packing constraints; the all-zero vector is
// always feasible, so an empty problem returns the offset.
BlpSolution solve(const BlpProblem& p);

// 0-1 LP text dump for cross-checking with external solvers. The constant
// offset is emitted as a comment line.
void write_lp(const BlpProblem& p, std::ostream& os);

}  // namespace editdist
