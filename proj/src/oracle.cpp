// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ncsp/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ncsp::oracle {

namespace {

std::pair<Vertex, Vertex> unordered_key(Vertex a, Vertex b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

void guard(Vertex n, Vertex limit, const char* what) {
    if (n > limit) {
        throw LimitExceeded(std::string(what) + " oracle is limited to " + std::to_string(limit) + " vertices");
    }
}

// Adjacency over input arcs, dropping loose ones.
std::vector<std::vector<Arc>> input_adjacency(const WeightedDigraph& g) {
    std::vector<std::vector<Arc>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (const Arc& a : g.arcs()) {
        if (a.kind != ArcKind::loose) {
            adj[a.tail].push_back(a);
        }
    }
    return adj;
}

struct CycleSearch {
    const std::vector<std::vector<Arc>>& adj;
    Vertex start = 0;
    std::vector<char> on_path;
    std::vector<Hop> current;
    Weight weight = 0;
    OracleVerdict verdict;

    void run(Vertex v) {
        for (const Arc& a : adj[v]) {
            if (a.head < start) {
                continue;
            }
            if (a.head == start) {
                const Weight total = weight + a.weight;
                if (current.size() + 1 >= 3 && total < 0) {
                    verdict.nearly_conservative = false;
                    if (!verdict.worst_cycle || total < verdict.worst_cycle->length()) {
                        Route cycle(start);
                        for (const Hop& hop : current) {
                            cycle.push(hop);
                        }
                        cycle.push({a.head, a.weight, a.kind});
                        verdict.worst_cycle = std::move(cycle);
                    }
                }
                continue;
            }
            if (on_path[a.head]) {
                continue;
            }
            on_path[a.head] = 1;
            current.push_back({a.head, a.weight, a.kind});
            weight += a.weight;
            run(a.head);
            weight -= a.weight;
            current.pop_back();
            on_path[a.head] = 0;
        }
    }
};

struct PathSearch {
    const std::vector<std::vector<std::pair<Vertex, Weight>>>& adj;
    Vertex source = 0;
    std::vector<char> on_path;
    DistanceMatrix& dist;

    void run(Vertex v, Weight weight) {
        if (weight < dist(source, v)) {
            dist(source, v) = weight;
        }
        for (const auto& [head, w] : adj[v]) {
            if (on_path[head]) {
                continue;
            }
            on_path[head] = 1;
            run(head, weight + w);
            on_path[head] = 0;
        }
    }
};

DistanceMatrix all_simple_paths(const std::vector<std::vector<std::pair<Vertex, Weight>>>& adj) {
    const auto n = static_cast<Vertex>(adj.size());
    DistanceMatrix dist(n);
    for (Vertex s = 0; s < n; ++s) {
        PathSearch search{adj, s, std::vector<char>(static_cast<std::size_t>(n), 0), dist};
        search.on_path[s] = 1;
        search.run(s, 0);
    }
    return dist;
}

} // namespace

OracleVerdict enumerate_cycles_verdict(const WeightedDigraph& g) {
    guard(g.vertex_count(), kMaxCycleVertices, "cycle");
    const auto adj = input_adjacency(g);
    CycleSearch search{adj, 0, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0), {}, 0, {}};
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        search.start = s;
        search.weight = 0;
        search.on_path[s] = 1;
        search.run(s);
        search.on_path[s] = 0;
    }
    return std::move(search.verdict);
}

DistanceMatrix enumerate_paths_distances(const WeightedDigraph& g) {
    guard(g.vertex_count(), kMaxPathVertices, "path");
    std::vector<std::vector<std::pair<Vertex, Weight>>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (const Arc& a : g.arcs()) {
        if (a.kind != ArcKind::loose) {
            adj[a.tail].emplace_back(a.head, a.weight);
        }
    }
    return all_simple_paths(adj);
}

OracleVerdict solve(const WeightedDigraph& g) {
    OracleVerdict verdict = enumerate_cycles_verdict(g);
    if (verdict.nearly_conservative) {
        verdict.distances = enumerate_paths_distances(g);
    }
    return verdict;
}

DistanceMatrix enumerate_mixed_paths_distances(const MixedGraph& mixed) {
    guard(mixed.n, kMaxPathVertices, "path");
    // On a simple path every element is used at most once, so the lightest
    // option per ordered pair decides.
    std::map<std::pair<Vertex, Vertex>, Weight> best;
    auto offer = [&](Vertex u, Vertex v, Weight w) {
        if (u == v) {
            return;
        }
        auto [it, inserted] = best.emplace(std::pair{u, v}, w);
        if (!inserted) {
            it->second = std::min(it->second, w);
        }
    };
    for (const RawArc& a : mixed.arcs) {
        offer(a.tail, a.head, a.weight);
    }
    for (const RawEdge& e : mixed.edges) {
        offer(e.u, e.v, e.weight);
        offer(e.v, e.u, e.weight);
    }
    std::vector<std::vector<std::pair<Vertex, Weight>>> adj(static_cast<std::size_t>(mixed.n));
    for (const auto& [pair, w] : best) {
        adj[pair.first].emplace_back(pair.second, w);
    }
    return all_simple_paths(adj);
}

bool validate_special_simple(const Route& walk, const WeightedDigraph& g) {
    std::vector<std::pair<Vertex, Vertex>> used; // unordered special pairs
    Vertex tail = walk.start();
    for (const Hop& hop : walk.hops()) {
        const Vertex head = hop.head;
        if (hop.kind != ArcKind::loose) {
            const Arc* arc = g.original_arc(tail, head);
            if (arc != nullptr && arc->kind == ArcKind::special) {
                const auto key = unordered_key(tail, head);
                if (std::find(used.begin(), used.end(), key) != used.end()) {
                    return false;
                }
                used.emplace_back(key);
            }
        }
        tail = head;
    }
    return true;
}

bool has_negative_special_simple_closed_walk(const WeightedDigraph& g) {
    const Vertex n = g.vertex_count();
    guard(n, kMaxWalkVertices, "walk");
    // Special pair index per special arc; state digit 0 = unused, 1 = used.
    std::map<std::pair<Vertex, Vertex>, int> pair_index;
    for (const Arc& a : g.arcs()) {
        if (a.kind == ArcKind::special) {
            const auto key = unordered_key(a.tail, a.head);
            pair_index.emplace(key, static_cast<int>(pair_index.size()));
        }
    }
    const int pairs = static_cast<int>(pair_index.size());
    if (pairs > kMaxWalkSpecialPairs) {
        throw LimitExceeded("walk oracle is limited to " + std::to_string(kMaxWalkSpecialPairs) + " special pairs");
    }
    // Using either direction of a pair consumes it, so one bit per pair suffices.
    const std::size_t states = std::size_t{1} << pairs;
    struct Step {
        Vertex head;
        Weight weight;
        int pair;
    };
    std::vector<std::vector<Step>> adj(static_cast<std::size_t>(n));
    for (const Arc& a : g.arcs()) {
        const int p = a.kind == ArcKind::special ? pair_index.at(unordered_key(a.tail, a.head)) : -1;
        adj[a.tail].push_back({a.head, a.weight, p});
    }
    const int max_len = 2 * n;
    std::vector<Weight> cur(static_cast<std::size_t>(n) * states);
    std::vector<Weight> next(cur.size());
    for (Vertex s = 0; s < n; ++s) {
        std::fill(cur.begin(), cur.end(), kInfinity);
        cur[static_cast<std::size_t>(s) * states] = 0;
        for (int len = 1; len <= max_len; ++len) {
            std::fill(next.begin(), next.end(), kInfinity);
            for (Vertex v = 0; v < n; ++v) {
                for (std::size_t st = 0; st < states; ++st) {
                    const Weight w = cur[static_cast<std::size_t>(v) * states + st];
                    if (is_infinite(w)) {
                        continue;
                    }
                    for (const Step& step : adj[v]) {
                        std::size_t nst = st;
                        if (step.pair >= 0) {
                            const std::size_t bit = std::size_t{1} << step.pair;
                            if (st & bit) {
                                continue;
                            }
                            nst |= bit;
                        }
                        Weight& slot = next[static_cast<std::size_t>(step.head) * states + nst];
                        slot = std::min(slot, w + step.weight);
                    }
                }
            }
            for (std::size_t st = 0; st < states; ++st) {
                if (next[static_cast<std::size_t>(s) * states + st] < 0) {
                    return true;
                }
            }
            cur.swap(next);
        }
    }
    return false;
}

} // namespace ncsp::oracle
