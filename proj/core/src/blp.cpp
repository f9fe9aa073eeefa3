#include "editdist/blp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <ostream>
#include <set>

namespace editdist {

void DistanceTable::set(const std::string& v, const std::string& w, double d) {
    table_[{v, w}] = d;
}

bool DistanceTable::has(const std::string& v, const std::string& w) const {
    return table_.count({v, w}) > 0;
}

double DistanceTable::get(const std::string& v, const std::string& w) const {
    auto it = table_.find({v, w});
    if (it == table_.end()) throw Error("missing W entry for (" + v + "," + w + ")");
    return it->second;
}

void DistanceTable::advance_frontier(int left, int right) {
    frontier_left_ = std::max(frontier_left_, left);
    frontier_right_ = std::max(frontier_right_, right);
}

double delta_cost(const Dendrogram& tx, const Dendrogram& ty, const std::string& v,
                  const std::string& w, int i, int j) {
    std::vector<std::string> pv = tx.root_path(v);
    std::vector<std::string> pw = ty.root_path(w);
    // valid extents keep v_i and w_j strictly below the roots
    if (i < 0 || i + 1 >= static_cast<int>(pv.size()))
        throw Error("delta_cost: index i out of range");
    if (j < 0 || j + 1 >= static_cast<int>(pw.size()))
        throw Error("delta_cost: index j out of range");
    Weight a = tx.weight(pv[0]);
    for (int k = 1; k <= i; ++k) a = tx.space().combine(a, tx.weight(pv[k]));
    Weight b = ty.weight(pw[0]);
    for (int k = 1; k <= j; ++k) b = ty.space().combine(b, ty.weight(pw[k]));
    return tx.space().distance(a, b);
}

BlpProblem build_problem(const Dendrogram& tx, const Dendrogram& ty, const DistanceTable& wtab) {
    BlpProblem p;
    p.offset = tx.tree_norm() + ty.tree_norm();
    if (tx.edge_count() == 0 || ty.edge_count() == 0) return p;  // nothing to couple

    struct SideEntry {
        std::string v;
        int i;
        std::string top_used;   // v_i, the last vertex the segment occupies
        double savings;         // combined norm of the segment edges v_0..v_i
        double sub_norm;        // ||sub(v)||
    };

    auto side_entries = [](const Dendrogram& t) {
        std::vector<SideEntry> out;
        for (const auto& v : t.non_root_vertices()) {
            std::vector<std::string> path = t.root_path(v);
            double savings = 0.0;
            double sub = t.subtree_norm(v);
            for (int i = 0; i + 1 < static_cast<int>(path.size()); ++i) {
                savings += t.space().norm(t.weight(path[i]));
                out.push_back({v, i, path[i], savings, sub});
            }
        }
        return out;
    };

    std::vector<SideEntry> left = side_entries(tx);
    std::vector<SideEntry> right = side_entries(ty);

    p.vars.reserve(left.size() * right.size());
    for (const auto& l : left) {
        for (const auto& r : right) {
            BlpVariable var;
            var.v = l.v;
            var.w = r.v;
            var.i = l.i;
            var.j = r.i;
            var.delta = delta_cost(tx, ty, var.v, var.w, var.i, var.j);
            var.coeff = var.delta - l.savings - r.savings - l.sub_norm - r.sub_norm +
                        wtab.get(var.v, var.w);
            p.vars.push_back(std::move(var));
        }
    }

    // One packing constraint per leaf: a variable belongs to it when the
    // occupied top vertex v_i sits on the leaf's root path.
    auto add_constraints = [&p](const Dendrogram& t, bool is_left,
                                const std::vector<SideEntry>& entries,
                                const std::vector<SideEntry>& other) {
        (void)other;
        for (const auto& leaf : t.leaves()) {
            if (t.is_root(leaf)) continue;
            std::vector<std::string> path = t.root_path(leaf);
            std::set<std::string> onpath(path.begin(), path.end());
            BlpConstraint c;
            c.leaf = leaf;
            c.left = is_left;
            for (int idx = 0; idx < static_cast<int>(p.vars.size()); ++idx) {
                const BlpVariable& var = p.vars[idx];
                const std::string top =
                    is_left ? t.root_path(var.v)[static_cast<std::size_t>(var.i)]
                            : t.root_path(var.w)[static_cast<std::size_t>(var.j)];
                if (onpath.count(top)) c.vars.push_back(idx);
            }
            if (!c.vars.empty()) p.constraints.push_back(std::move(c));
        }
    };
    add_constraints(tx, true, left, right);
    add_constraints(ty, false, right, left);
    return p;
}

namespace {

// dynamic bitset helpers for the constraint masks
using Mask = std::vector<std::uint64_t>;

bool intersects(const Mask& a, const Mask& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] & b[k]) return true;
    return false;
}

void merge_into(Mask& a, const Mask& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] |= b[k];
}

}  // namespace

BlpSolution solve(const BlpProblem& p) {
    BlpSolution sol;
    sol.value = p.offset;
    sol.optimal = true;
    if (p.vars.empty()) return sol;

    // Only strictly improving variables matter for the optimum.
    std::vector<int> cand;
    for (int i = 0; i < static_cast<int>(p.vars.size()); ++i)
        if (p.vars[i].coeff < 0.0) cand.push_back(i);
    if (cand.empty()) return sol;
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
        if (p.vars[a].coeff != p.vars[b].coeff) return p.vars[a].coeff < p.vars[b].coeff;
        return a < b;
    });

    const std::size_t n_cons = p.constraints.size();
    const std::size_t words = (n_cons + 63) / 64;
    std::map<int, Mask> mask_of;
    for (std::size_t c = 0; c < n_cons; ++c)
        for (int idx : p.constraints[c].vars) {
            auto [it, inserted] = mask_of.try_emplace(idx, Mask(words, 0));
            it->second[c / 64] |= (std::uint64_t{1} << (c % 64));
        }
    Mask empty_mask(words, 0);
    auto mask_for = [&](int idx) -> const Mask& {
        auto it = mask_of.find(idx);
        return it == mask_of.end() ? empty_mask : it->second;
    };

    // Per-constraint optimistic share: any feasible completion is bounded
    // below by the sum over free constraints of the best share touching them.
    std::vector<double> share(n_cons, 0.0);
    std::vector<int> touches(cand.size(), 0);
    std::vector<std::size_t> cons_count(p.vars.size(), 0);
    for (std::size_t c = 0; c < n_cons; ++c)
        for (int idx : p.constraints[c].vars) cons_count[idx]++;
    for (std::size_t c = 0; c < n_cons; ++c) {
        double best = 0.0;
        for (int idx : p.constraints[c].vars) {
            if (p.vars[idx].coeff >= 0.0) continue;
            double s = p.vars[idx].coeff / static_cast<double>(std::max<std::size_t>(
                                               1, cons_count[idx]));
            best = std::min(best, s);
        }
        share[c] = best;
    }

    // Greedy incumbent.
    double best_sum = 0.0;
    std::vector<int> best_set;
    {
        Mask used(words, 0);
        double cur = 0.0;
        std::vector<int> set;
        for (int idx : cand) {
            const Mask& m = mask_for(idx);
            if (intersects(used, m)) continue;
            merge_into(used, m);
            cur += p.vars[idx].coeff;
            set.push_back(idx);
        }
        best_sum = cur;
        best_set = std::move(set);
    }

    // Suffix sums of candidate coefficients (a cheap second bound).
    std::vector<double> suffix(cand.size() + 1, 0.0);
    for (std::size_t i = cand.size(); i-- > 0;)
        suffix[i] = suffix[i + 1] + p.vars[cand[i]].coeff;

    std::vector<int> current;
    Mask used(words, 0);

    std::function<void(std::size_t, double)> dfs = [&](std::size_t pos, double sum) {
        if (sum < best_sum) {
            best_sum = sum;
            best_set = current;
        }
        if (pos == cand.size()) return;
        // optimistic completion: free-constraint shares
        double shares = 0.0;
        for (std::size_t c = 0; c < n_cons; ++c)
            if (!(used[c / 64] >> (c % 64) & 1)) shares += share[c];
        double bound = std::max(shares, suffix[pos]);
        if (sum + bound >= best_sum) return;
        for (std::size_t k = pos; k < cand.size(); ++k) {
            if (sum + suffix[k] >= best_sum) break;
            int idx = cand[k];
            const Mask& m = mask_for(idx);
            if (intersects(used, m)) continue;
            merge_into(used, m);
            current.push_back(idx);
            dfs(k + 1, sum + p.vars[idx].coeff);
            current.pop_back();
            for (std::size_t wd = 0; wd < words; ++wd) used[wd] &= ~m[wd];
        }
    };
    dfs(0, 0.0);

    std::sort(best_set.begin(), best_set.end());
    sol.chosen = std::move(best_set);
    sol.value = p.offset + best_sum;
    return sol;
}

namespace {

std::string lp_name(const BlpVariable& v) {
    std::string name = "d_" + v.v + "_" + v.w + "_" + std::to_string(v.i) + "_" +
                       std::to_string(v.j);
    for (auto& ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') ch = '_';
    return name;
}

}  // namespace

void write_lp(const BlpProblem& p, std::ostream& os) {
    os << "\\ constant offset (add to the objective value): " << p.offset << "\n";
    os << "Minimize\n obj:";
    if (p.vars.empty()) os << " 0 x_dummy";
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
        double c = p.vars[i].coeff;
        os << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c) << " " << lp_name(p.vars[i]);
    }
    os << "\nSubject To\n";
    for (std::size_t c = 0; c < p.constraints.size(); ++c) {
        os << " c" << c + 1 << ":";
        for (std::size_t k = 0; k < p.constraints[c].vars.size(); ++k) {
            if (k) os << " +";
            os << " " << lp_name(p.vars[p.constraints[c].vars[k]]);
        }
        os << " <= 1\n";
    }
    os << "Binary\n";
    if (p.vars.empty()) os << " x_dummy";
    for (const auto& v : p.vars) os << " " << lp_name(v);
    os << "\nEnd\n";
}

}  // namespace editdist
