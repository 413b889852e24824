// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ncsp/graph.hpp"

namespace ncsp {

// Line format, 1-based ids:
//   c <comment>
//   p ncd <n> <m>     directed, or  p ncm <n> <m>  mixed
//   a <u> <v> <w>     arc
//   e <u> <v> <w>     undirected edge (mixed only)
struct InstanceFile {
    InputOrigin kind = InputOrigin::directed;
    Vertex n = 0;
    std::vector<std::string> comments;
    std::vector<RawArc> arcs;   // 0-based
    std::vector<RawEdge> edges; // 0-based

    std::size_t element_count() const { return arcs.size() + edges.size(); }
};

// Throws MalformedInput carrying the 1-based line number.
InstanceFile parse_instance(std::istream& in);
InstanceFile parse_instance(std::string_view text);
InstanceFile read_instance_file(const std::string& path);

// Comments first, then the header, arcs and edges.
void emit_instance(std::ostream& out, const InstanceFile& instance);
std::string emit_instance(const InstanceFile& instance);

MixedGraph to_mixed(const InstanceFile& instance);
// Normalized, classified and augmented.
WeightedDigraph to_digraph(const InstanceFile& instance);

} // namespace ncsp
