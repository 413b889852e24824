// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ncsp/graph.hpp"

#include <algorithm>
#include <string>

namespace ncsp {

namespace {

int kind_rank(ArcKind kind) { return kind == ArcKind::loose ? 1 : 0; }

bool arc_order(const Arc& a, const Arc& b) {
    if (a.tail != b.tail) {
        return a.tail < b.tail;
    }
    if (a.head != b.head) {
        return a.head < b.head;
    }
    return kind_rank(a.kind) < kind_rank(b.kind);
}

void check_vertex_count(Vertex n) {
    if (n < 0 || n > kMaxVertices) {
        throw MalformedInput("vertex count " + std::to_string(n) + " outside [0, " + std::to_string(kMaxVertices) +
                             "]");
    }
}

} // namespace

const char* to_string(ArcKind kind) {
    switch (kind) {
    case ArcKind::ordinary: return "ordinary";
    case ArcKind::special: return "special";
    case ArcKind::loose: return "loose";
    }
    return "?";
}

WeightedDigraph::WeightedDigraph(Vertex n, std::vector<Arc> arcs, InputOrigin origin, bool classified)
    : n_{n}, arcs_{std::move(arcs)}, origin_{origin}, classified_{classified} {
    std::sort(arcs_.begin(), arcs_.end(), arc_order);
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_) {
            throw InternalError("arc endpoint out of range");
        }
        if (a.tail == a.head) {
            throw InternalError("self-loop in normalized digraph");
        }
        if (i > 0 && !arc_order(arcs_[i - 1], a)) {
            throw InternalError("duplicate arc of the same class");
        }
        if (!classified_ && a.kind != ArcKind::ordinary) {
            throw InternalError("unclassified digraph with tagged arcs");
        }
        ++offsets_[static_cast<std::size_t>(a.tail) + 1];
    }
    for (std::size_t v = 0; v < static_cast<std::size_t>(n_); ++v) {
        offsets_[v + 1] += offsets_[v];
    }
}

std::span<const Arc> WeightedDigraph::out_arcs(Vertex v) const {
    return std::span<const Arc>(arcs_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

const Arc* WeightedDigraph::original_arc(Vertex tail, Vertex head) const {
    for (const Arc& a : out_arcs(tail)) {
        if (a.head == head && a.kind != ArcKind::loose) {
            return &a;
        }
        if (a.head > head) {
            break;
        }
    }
    return nullptr;
}

const Arc* WeightedDigraph::loose_arc(Vertex tail, Vertex head) const {
    for (const Arc& a : out_arcs(tail)) {
        if (a.head == head && a.kind == ArcKind::loose) {
            return &a;
        }
        if (a.head > head) {
            break;
        }
    }
    return nullptr;
}

const Arc* WeightedDigraph::ordinary_arc(Vertex tail, Vertex head) const {
    for (const Arc& a : out_arcs(tail)) {
        if (a.head == head && a.kind != ArcKind::special) {
            return &a;
        }
        if (a.head > head) {
            break;
        }
    }
    return nullptr;
}

std::size_t WeightedDigraph::special_arc_count() const {
    return static_cast<std::size_t>(
        std::count_if(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.kind == ArcKind::special; }));
}

WeightedDigraph normalize(std::span<const RawArc> raw, Vertex n, InputOrigin origin) {
    check_vertex_count(n);
    std::vector<Arc> arcs;
    arcs.reserve(raw.size());
    for (const RawArc& r : raw) {
        if (r.tail < 0 || r.tail >= n || r.head < 0 || r.head >= n) {
            throw MalformedInput("arc (" + std::to_string(r.tail + 1) + "," + std::to_string(r.head + 1) +
                                 ") references a vertex outside 1.." + std::to_string(n));
        }
        if (r.weight > kMaxAbsWeight || r.weight < -kMaxAbsWeight) {
            throw MalformedInput("arc weight " + std::to_string(r.weight) + " exceeds the 2^40 bound");
        }
        if (r.tail != r.head) {
            arcs.push_back({r.tail, r.head, r.weight, ArcKind::ordinary});
        }
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
        if (a.tail != b.tail) {
            return a.tail < b.tail;
        }
        if (a.head != b.head) {
            return a.head < b.head;
        }
        return a.weight < b.weight;
    });
    auto last = std::unique(arcs.begin(), arcs.end(),
                            [](const Arc& a, const Arc& b) { return a.tail == b.tail && a.head == b.head; });
    arcs.erase(last, arcs.end());
    return WeightedDigraph(n, std::move(arcs), origin, false);
}

WeightedDigraph classify_and_augment(const WeightedDigraph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(g.arcs().size() * 2);
    for (const Arc& a : g.arcs()) {
        if (a.kind == ArcKind::loose) {
            continue;
        }
        Arc tagged = a;
        tagged.kind = ArcKind::ordinary;
        if (const Arc* opposite = g.original_arc(a.head, a.tail); opposite && a.weight + opposite->weight < 0) {
            tagged.kind = ArcKind::special;
            arcs.push_back({a.head, a.tail, -a.weight, ArcKind::loose});
        }
        arcs.push_back(tagged);
    }
    return WeightedDigraph(g.vertex_count(), std::move(arcs), g.origin(), true);
}

WeightedDigraph induced_subgraph(const WeightedDigraph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), kNoVertex);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        local[vertices[i]] = static_cast<Vertex>(i);
    }
    std::vector<Arc> arcs;
    for (Vertex v : vertices) {
        for (const Arc& a : g.out_arcs(v)) {
            if (local[a.head] != kNoVertex) {
                arcs.push_back({local[a.tail], local[a.head], a.weight, a.kind});
            }
        }
    }
    return WeightedDigraph(static_cast<Vertex>(vertices.size()), std::move(arcs), g.origin(), g.classified());
}

WeightedDigraph mixed_to_digraph(const MixedGraph& mixed) {
    std::vector<RawArc> arcs = mixed.arcs;
    arcs.reserve(mixed.arcs.size() + 2 * mixed.edges.size());
    for (const RawEdge& e : mixed.edges) {
        arcs.push_back({e.u, e.v, e.weight});
        arcs.push_back({e.v, e.u, e.weight});
    }
    return normalize(arcs, mixed.n, InputOrigin::mixed);
}

} // namespace ncsp
