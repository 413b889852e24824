// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ncsp/types.hpp"

namespace ncsp {

// special: uv whose opposite vu exists with c(uv) + c(vu) < 0.
// loose:   added arc vu of weight -c(uv) mirroring special uv.
// ordinary: everything else taken from the input.
enum class ArcKind : std::uint8_t { ordinary, special, loose };

enum class InputOrigin : std::uint8_t { directed, mixed };

struct RawArc {
    Vertex tail;
    Vertex head;
    Weight weight;
    bool operator==(const RawArc&) const = default;
};

struct RawEdge {
    Vertex u;
    Vertex v;
    Weight weight;
    bool operator==(const RawEdge&) const = default;
};

// Mixed graph: arcs plus undirected edges.
struct MixedGraph {
    Vertex n = 0;
    std::vector<RawArc> arcs;
    std::vector<RawEdge> edges;
};

struct Arc {
    Vertex tail;
    Vertex head;
    Weight weight;
    ArcKind kind = ArcKind::ordinary;
    bool operator==(const Arc&) const = default;
};

const char* to_string(ArcKind kind);

// Simple arc-weighted digraph. Per ordered pair there is at most one original
// (ordinary or special) arc and at most one loose arc. Arcs are kept sorted by
// (tail, head) with the original arc ahead of the loose one.
class WeightedDigraph {
  public:
    WeightedDigraph() = default;

    // Validates the representation invariants; throws InternalError.
    WeightedDigraph(Vertex n, std::vector<Arc> arcs, InputOrigin origin, bool classified);

    Vertex vertex_count() const { return n_; }
    std::span<const Arc> arcs() const { return arcs_; }
    std::span<const Arc> out_arcs(Vertex v) const;
    InputOrigin origin() const { return origin_; }
    bool classified() const { return classified_; }

    // Arc lookups return nullptr when absent.
    const Arc* original_arc(Vertex tail, Vertex head) const;
    const Arc* loose_arc(Vertex tail, Vertex head) const;
    // The unique arc tail->head of D_o (ordinary or loose), if any.
    const Arc* ordinary_arc(Vertex tail, Vertex head) const;

    std::size_t special_arc_count() const;

  private:
    Vertex n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> offsets_;
    InputOrigin origin_ = InputOrigin::directed;
    bool classified_ = false;
};

// Drops self-loops, keeps the minimum weight among parallel arcs and sorts.
// Throws MalformedInput on out-of-range ids or weights beyond +-2^40.
WeightedDigraph normalize(std::span<const RawArc> arcs, Vertex n, InputOrigin origin = InputOrigin::directed);

// Tags special/ordinary arcs and adds a loose arc vu of weight -c(uv) for
// every special arc uv. Existing loose arcs are discarded first.
WeightedDigraph classify_and_augment(const WeightedDigraph& g);

// Subgraph induced by `vertices` (strictly increasing), relabelled so that
// vertices[i] becomes i. Arc kinds are carried over unchanged.
WeightedDigraph induced_subgraph(const WeightedDigraph& g, std::span<const Vertex> vertices);

// Every undirected edge becomes two opposite arcs of equal weight.
WeightedDigraph mixed_to_digraph(const MixedGraph& mixed);

} // namespace ncsp
