// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncsp {

// Vertices are 0-based inside the library; the text format is 1-based.
using Vertex = std::int32_t;
using Weight = std::int64_t;

inline constexpr Vertex kNoVertex = -1;

// Hard input bounds. With |w| <= 2^40 and n <= 20000 every simple path sum
// stays below 2^55, far from the infinity sentinel.
inline constexpr Weight kMaxAbsWeight = Weight{1} << 40;
inline constexpr Vertex kMaxVertices = 20000;

// +inf for unreachable pairs. Never produced by adding finite weights.
inline constexpr Weight kInfinity = Weight{1} << 62;

constexpr bool is_infinite(Weight d) { return d >= kInfinity; }
constexpr bool is_finite(Weight d) { return d < kInfinity; }

// inf + x = inf
constexpr Weight ext_add(Weight a, Weight b) {
    return (is_infinite(a) || is_infinite(b)) ? kInfinity : a + b;
}

class MalformedInput : public std::runtime_error {
  public:
    explicit MalformedInput(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// The per-block subset DP or an oracle size guard was exceeded.
class LimitExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class NoPath : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace ncsp
