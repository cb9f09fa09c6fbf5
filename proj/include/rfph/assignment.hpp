#pragma once

#include <vector>

namespace rfph {

// Exact minimum-cost perfect assignment on a square cost matrix (Jonker-
// Volgenant style shortest augmenting paths with potentials). Returns the
// column assigned to each row. cost[i][j] must be finite and non-negative.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

// Dinic maximum flow on a small directed graph with integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int n);
    void add_edge(int from, int to, long long cap);
    long long run(int s, int t);

private:
    struct Edge {
        int to;
        long long cap;
        size_t rev;
    };
    bool bfs(int s, int t);
    long long dfs(int v, int t, long long pushed);

    std::vector<std::vector<Edge>> adj_;
    std::vector<int> level_;
    std::vector<size_t> iter_;
};

} // namespace rfph
