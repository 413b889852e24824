// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ncsp/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ncsp {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        const std::size_t begin = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (i > begin) {
            tokens.push_back(line.substr(begin, i - begin));
        }
    }
    return tokens;
}

template <typename T>
T number(std::string_view token, int line, const char* what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw MalformedInput(std::string("invalid ") + what + " '" + std::string(token) + "'", line);
    }
    return value;
}

Vertex vertex_id(std::string_view token, Vertex n, int line) {
    const auto id = number<long long>(token, line, "vertex id");
    if (id < 1 || id > n) {
        throw MalformedInput("vertex id " + std::string(token) + " outside 1.." + std::to_string(n), line);
    }
    return static_cast<Vertex>(id - 1);
}

Weight weight_value(std::string_view token, int line) {
    const auto w = number<Weight>(token, line, "weight");
    if (w > kMaxAbsWeight || w < -kMaxAbsWeight) {
        throw MalformedInput("weight " + std::string(token) + " exceeds 2^40 in magnitude", line);
    }
    return w;
}

} // namespace

InstanceFile parse_instance(std::istream& in) {
    InstanceFile instance;
    bool have_header = false;
    std::size_t declared = 0;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        const std::string_view line(raw);
        const auto tokens = split(line);
        if (tokens.empty()) {
            continue;
        }
        const std::string_view tag = tokens.front();
        if (tag == "c") {
            const std::size_t at = line.find('c');
            std::string_view text = line.substr(at + 1);
            if (!text.empty() && text.front() == ' ') {
                text.remove_prefix(1);
            }
            instance.comments.emplace_back(text);
            continue;
        }
        if (tag == "p") {
            if (have_header) {
                throw MalformedInput("duplicate problem line", line_no);
            }
            if (tokens.size() != 4) {
                throw MalformedInput("problem line needs 'p ncd|ncm <n> <m>'", line_no);
            }
            if (tokens[1] == "ncd") {
                instance.kind = InputOrigin::directed;
            } else if (tokens[1] == "ncm") {
                instance.kind = InputOrigin::mixed;
            } else {
                throw MalformedInput("unknown problem kind '" + std::string(tokens[1]) + "'", line_no);
            }
            const auto n = number<long long>(tokens[2], line_no, "vertex count");
            const auto m = number<long long>(tokens[3], line_no, "element count");
            if (n < 0 || m < 0) {
                throw MalformedInput("negative count", line_no);
            }
            if (n > kMaxVertices) {
                throw LimitExceeded("instance has " + std::to_string(n) + " vertices, limit is " +
                                    std::to_string(kMaxVertices));
            }
            instance.n = static_cast<Vertex>(n);
            declared = static_cast<std::size_t>(m);
            have_header = true;
            continue;
        }
        if (tag == "a" || tag == "e") {
            if (!have_header) {
                throw MalformedInput("element before problem line", line_no);
            }
            if (tokens.size() != 4) {
                throw MalformedInput("expected '" + std::string(tag) + " <u> <v> <w>'", line_no);
            }
            const Vertex u = vertex_id(tokens[1], instance.n, line_no);
            const Vertex v = vertex_id(tokens[2], instance.n, line_no);
            const Weight w = weight_value(tokens[3], line_no);
            if (tag == "a") {
                instance.arcs.push_back({u, v, w});
            } else {
                if (instance.kind != InputOrigin::mixed) {
                    throw MalformedInput("undirected edge in a directed instance", line_no);
                }
                instance.edges.push_back({u, v, w});
            }
            if (instance.element_count() > declared) {
                throw MalformedInput("more elements than the declared " + std::to_string(declared), line_no);
            }
            continue;
        }
        throw MalformedInput("unknown line type '" + std::string(tag) + "'", line_no);
    }
    if (!have_header) {
        throw MalformedInput("missing problem line");
    }
    if (instance.element_count() != declared) {
        throw MalformedInput("expected " + std::to_string(declared) + " elements, found " +
                             std::to_string(instance.element_count()));
    }
    return instance;
}

InstanceFile parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_instance(in);
}

InstanceFile read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw MalformedInput("cannot open " + path);
    }
    return parse_instance(in);
}

void emit_instance(std::ostream& out, const InstanceFile& instance) {
    for (const std::string& comment : instance.comments) {
        out << (comment.empty() ? "c" : "c " + comment) << '\n';
    }
    out << "p " << (instance.kind == InputOrigin::mixed ? "ncm" : "ncd") << ' ' << instance.n << ' '
        << instance.element_count() << '\n';
    for (const RawArc& a : instance.arcs) {
        out << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << a.weight << '\n';
    }
    for (const RawEdge& e : instance.edges) {
        out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.weight << '\n';
    }
}

std::string emit_instance(const InstanceFile& instance) {
    std::ostringstream out;
    emit_instance(out, instance);
    return out.str();
}

MixedGraph to_mixed(const InstanceFile& instance) {
    return MixedGraph{instance.n, instance.arcs, instance.edges};
}

WeightedDigraph to_digraph(const InstanceFile& instance) {
    if (instance.kind == InputOrigin::mixed) {
        return classify_and_augment(mixed_to_digraph(to_mixed(instance)));
    }
    return classify_and_augment(normalize(instance.arcs, instance.n, InputOrigin::directed));
}

} // namespace ncsp
