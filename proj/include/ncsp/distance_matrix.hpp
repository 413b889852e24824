// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ncsp/types.hpp"

namespace ncsp {

// Square table of extended integers, row-major, indexed by ordered pairs.
// Freshly constructed matrices have a zero diagonal and +inf elsewhere.
class DistanceMatrix {
  public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(Vertex n) : n_{n}, entries_(static_cast<std::size_t>(n) * n, kInfinity) {
        for (Vertex v = 0; v < n; ++v) {
            (*this)(v, v) = 0;
        }
    }

    Vertex size() const { return n_; }

    Weight& operator()(Vertex s, Vertex t) { return entries_[index(s, t)]; }
    Weight operator()(Vertex s, Vertex t) const { return entries_[index(s, t)]; }

    std::span<Weight> row(Vertex s) { return {entries_.data() + index(s, 0), static_cast<std::size_t>(n_)}; }
    std::span<const Weight> row(Vertex s) const {
        return {entries_.data() + index(s, 0), static_cast<std::size_t>(n_)};
    }

    bool operator==(const DistanceMatrix&) const = default;

  private:
    std::size_t index(Vertex s, Vertex t) const { return static_cast<std::size_t>(s) * n_ + t; }

    Vertex n_ = 0;
    std::vector<Weight> entries_;
};

// pi(s,t) is the last-but-one vertex of the reported shortest s-t path, or
// kNoVertex when s == t or t is unreachable from s.
class PredecessorMatrix {
  public:
    PredecessorMatrix() = default;
    explicit PredecessorMatrix(Vertex n) : n_{n}, entries_(static_cast<std::size_t>(n) * n, kNoVertex) {}

    Vertex size() const { return n_; }

    Vertex& operator()(Vertex s, Vertex t) { return entries_[static_cast<std::size_t>(s) * n_ + t]; }
    Vertex operator()(Vertex s, Vertex t) const { return entries_[static_cast<std::size_t>(s) * n_ + t]; }

    bool operator==(const PredecessorMatrix&) const = default;

  private:
    Vertex n_ = 0;
    std::vector<Vertex> entries_;
};

} // namespace ncsp
