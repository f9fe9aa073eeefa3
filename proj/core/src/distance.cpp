#include "editdist/distance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <thread>

namespace editdist {

int effective_threads(const ComputeOptions& options) {
    int n = options.threads;
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* cap = std::getenv("EDITDIST_THREADS")) {
        int limit = std::atoi(cap);
        if (limit > 0) n = std::min(n, limit);
    }
    return n;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Task {
    std::string x, y;
};

struct TaskResult {
    double value = 0.0;
    double build_seconds = 0.0;
    double solve_seconds = 0.0;
    std::size_t variables = 0;
    bool solved = false;
};

}  // namespace

std::pair<double, DistanceTable> compute_distance(const Dendrogram& t_in, const Dendrogram& u_in,
                                                  const ComputeOptions& options,
                                                  ComputeStats* stats) {
    if (!t_in.space().same_space(u_in.space()))
        throw SpaceMismatchError("dendrograms from different spaces");

    auto wall_start = Clock::now();
    Dendrogram t = t_in.normalized();
    Dendrogram u = u_in.normalized();

    // Subtrees are reused across every problem that mentions them.
    std::map<std::string, Dendrogram> sub_t, sub_u;
    for (const auto& x : t.vertices()) sub_t.emplace(x, t.subtree(x));
    for (const auto& y : u.vertices()) sub_u.emplace(y, u.subtree(y));

    // Level waves: couples grouped by (lvl(x), lvl(y)); every proper subtree
    // pair of a couple sits in a lexicographically earlier group. The table
    // is extended only between waves, so a wave reads it without locks.
    std::map<std::pair<int, int>, std::vector<Task>> waves;
    for (const auto& x : t.vertices())
        for (const auto& y : u.vertices())
            waves[{t.lvl(x), u.lvl(y)}].push_back({x, y});

    DistanceTable table;
    const int workers = effective_threads(options);
    ComputeStats acc;

    auto run_task = [&](const Task& task) -> TaskResult {
        TaskResult r;
        const Dendrogram& tx = sub_t.at(task.x);
        const Dendrogram& ty = sub_u.at(task.y);
        if (tx.edge_count() == 0 || ty.edge_count() == 0) {
            // degenerate couple: everything on the non-trivial side is deleted
            r.value = tx.tree_norm() + ty.tree_norm();
            return r;
        }
        auto b0 = Clock::now();
        BlpProblem problem = build_problem(tx, ty, table);
        r.build_seconds = seconds_since(b0);
        auto s0 = Clock::now();
        BlpSolution sol = solve(problem);
        r.solve_seconds = seconds_since(s0);
        r.value = sol.value;
        r.variables = problem.vars.size();
        r.solved = true;
        return r;
    };

    for (const auto& [key, tasks] : waves) {
        std::vector<TaskResult> results(tasks.size());
        if (workers <= 1 || tasks.size() <= 1) {
            for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = run_task(tasks[i]);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            int n = std::min<int>(workers, static_cast<int>(tasks.size()));
            for (int k = 0; k < n; ++k) {
                pool.emplace_back([&]() {
                    while (true) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= tasks.size()) break;
                        results[i] = run_task(tasks[i]);
                    }
                });
            }
            for (auto& th : pool) th.join();
        }
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            table.set(tasks[i].x, tasks[i].y, results[i].value);
            acc.build_seconds += results[i].build_seconds;
            acc.solve_seconds += results[i].solve_seconds;
            acc.variables += results[i].variables;
            if (results[i].solved) acc.problems += 1;
        }
        table.advance_frontier(key.first, key.second);
    }

    double result = table.get(t.root(), u.root());
    if (stats) {
        *stats = acc;
        stats->wall_seconds = seconds_since(wall_start);
    }
    return {result, std::move(table)};
}

std::vector<std::vector<double>> distance_matrix(const std::vector<Dendrogram>& trees,
                                                 const ComputeOptions& options) {
    for (std::size_t i = 1; i < trees.size(); ++i)
        if (!trees[i].space().same_space(trees[0].space()))
            throw SpaceMismatchError("distance_matrix: mixed weight spaces");
    std::vector<std::vector<double>> m(trees.size(), std::vector<double>(trees.size(), 0.0));
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = i + 1; j < trees.size(); ++j) {
            double d = compute_distance(trees[i], trees[j], options).first;
            m[i][j] = d;
            m[j][i] = d;
        }
    }
    return m;
}

}  // namespace editdist
