// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ncsp/generator.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "ncsp/decomposition.hpp"

namespace ncsp {

namespace {

using Rng = std::mt19937_64;

Weight uniform_weight(Rng& rng, Weight lo, Weight hi) {
    return std::uniform_int_distribution<Weight>(lo, hi)(rng);
}

std::size_t uniform_index(Rng& rng, std::size_t size) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

bool coin(Rng& rng, double p) {
    return std::bernoulli_distribution(p)(rng);
}

void check(bool ok, const std::string& message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

InstanceFile random_instance(const GeneratorConfig& config, Rng& rng) {
    InstanceFile out;
    out.n = config.n;
    out.kind = config.edge_density > 0 ? InputOrigin::mixed : InputOrigin::directed;
    const bool potential = config.model == WeightModel::potential;
    const Weight scale = std::max<Weight>({1, std::abs(config.min_weight), std::abs(config.max_weight)});
    std::vector<Weight> p(static_cast<std::size_t>(config.n), 0);
    if (potential) {
        for (Weight& x : p) {
            x = uniform_weight(rng, -scale, scale);
        }
    }
    for (Vertex u = 0; u < config.n; ++u) {
        for (Vertex v = 0; v < config.n; ++v) {
            if (u != v && coin(rng, config.density)) {
                const Weight w = potential ? p[v] - p[u] + uniform_weight(rng, 0, scale)
                                           : uniform_weight(rng, config.min_weight, config.max_weight);
                out.arcs.push_back({u, v, w});
            }
        }
    }
    if (config.edge_density > 0) {
        for (Vertex u = 0; u < config.n; ++u) {
            for (Vertex v = u + 1; v < config.n; ++v) {
                if (coin(rng, config.edge_density)) {
                    const Weight w = potential ? std::abs(p[v] - p[u]) + uniform_weight(rng, 0, scale)
                                               : uniform_weight(rng, config.min_weight, config.max_weight);
                    out.edges.push_back({u, v, w});
                }
            }
        }
    }
    return out;
}

struct Layout {
    std::vector<std::pair<Vertex, Vertex>> components; // [first, last]
    std::vector<std::vector<Vertex>> blocks;
    std::vector<int> block_component;
};

Layout layout(const GeneratorConfig& config, Rng& rng) {
    const int c = config.scc_count;
    const int b = config.blocks_per_component;
    // A component with b blocks of at least two vertices each needs b + 1 vertices.
    const Vertex minimum = b + 1;
    check(static_cast<long long>(c) * minimum <= config.n,
          "n too small for " + std::to_string(c) + " components of " + std::to_string(b) + " blocks");
    std::vector<Vertex> sizes(static_cast<std::size_t>(c), minimum);
    for (Vertex extra = config.n - c * minimum; extra > 0; --extra) {
        ++sizes[uniform_index(rng, sizes.size())];
    }
    Layout out;
    Vertex first = 0;
    for (int ci = 0; ci < c; ++ci) {
        const Vertex size = sizes[ci];
        out.components.emplace_back(first, first + size - 1);
        // Split size - 1 "gaps" into b chained blocks of at least one gap each.
        std::vector<Vertex> gaps(static_cast<std::size_t>(b), 1);
        for (Vertex extra = size - 1 - b; extra > 0; --extra) {
            ++gaps[uniform_index(rng, gaps.size())];
        }
        Vertex start = first;
        for (int bi = 0; bi < b; ++bi) {
            std::vector<Vertex> block(static_cast<std::size_t>(gaps[bi]) + 1);
            std::iota(block.begin(), block.end(), start);
            out.blocks.push_back(std::move(block));
            out.block_component.push_back(ci);
            start += gaps[bi];
        }
        first += size;
    }
    return out;
}

class StructuredBuilder {
  public:
    StructuredBuilder(const GeneratorConfig& config, Rng& rng) : config_{config}, rng_{rng} {}

    InstanceFile build() {
        check(config_.tree_size >= 2 || config_.tree_count == 0, "tree size must be at least 2");
        check(config_.tree_count >= 0 && config_.scc_count >= 1 && config_.blocks_per_component >= 1,
              "counts must be positive");
        check(config_.min_weight <= config_.max_weight, "empty weight range");
        const Layout lay = layout(config_, rng_);
        scale_ = std::max<Weight>({1, std::abs(config_.min_weight), std::abs(config_.max_weight)});
        potential_.resize(static_cast<std::size_t>(config_.n));
        for (Weight& p : potential_) {
            p = uniform_weight(rng_, -scale_, scale_);
        }
        // Reduced ordinary weights must cover the most negative tree path.
        floor_ = static_cast<Weight>(config_.tree_size - 1) * 2 * scale_;

        place_trees(lay);
        for (const auto& block : lay.blocks) {
            for (std::size_t i = 0; i < block.size(); ++i) {
                add_ordinary(block[i], block[(i + 1) % block.size()]);
            }
        }
        add_filler(lay);

        InstanceFile out;
        out.kind = InputOrigin::directed;
        out.n = config_.n;
        for (const auto& [key, w] : arcs_) {
            out.arcs.push_back({key.first, key.second, w});
        }
        return out;
    }

  private:
    void place_trees(const Layout& lay) {
        // Neighbouring blocks share a cut vertex, so availability is global.
        std::vector<char> used(static_cast<std::size_t>(config_.n), 0);
        std::vector<std::vector<Vertex>> order = lay.blocks;
        for (auto& list : order) {
            std::shuffle(list.begin(), list.end(), rng_);
        }
        auto free_in = [&](std::size_t b) {
            std::vector<Vertex> out;
            for (Vertex v : order[b]) {
                if (!used[v]) {
                    out.push_back(v);
                }
            }
            return out;
        };
        std::size_t next_block = uniform_index(rng_, lay.blocks.size());
        for (int t = 0; t < config_.tree_count; ++t) {
            std::vector<Vertex> pool = free_in(next_block);
            std::size_t tried = 0;
            while (static_cast<int>(pool.size()) < config_.tree_size) {
                next_block = (next_block + 1) % lay.blocks.size();
                check(++tried <= lay.blocks.size(), "not enough room for " + std::to_string(config_.tree_count) +
                                                        " trees of size " + std::to_string(config_.tree_size));
                pool = free_in(next_block);
            }
            pool.resize(static_cast<std::size_t>(config_.tree_size));
            for (Vertex v : pool) {
                used[v] = 1;
            }
            for (std::size_t i = 1; i < pool.size(); ++i) {
                add_special_pair(pool[uniform_index(rng_, i)], pool[i]);
            }
            next_block = (next_block + 1) % lay.blocks.size();
        }
    }

    void add_special_pair(Vertex u, Vertex v) {
        Weight forward = 0;
        Weight backward = 0;
        if (config_.model == WeightModel::potential) {
            const Weight r = uniform_weight(rng_, 0, scale_);
            const Weight delta = uniform_weight(rng_, 1, scale_);
            forward = potential_[v] - potential_[u] + r;
            backward = potential_[u] - potential_[v] - r - delta;
        } else {
            const Weight lo = std::min<Weight>(config_.min_weight, -1);
            forward = uniform_weight(rng_, lo, config_.max_weight);
            const Weight hi = std::min(config_.max_weight, -forward - 1);
            backward = uniform_weight(rng_, std::min(lo, hi), hi);
        }
        arcs_[{u, v}] = forward;
        arcs_[{v, u}] = backward;
    }

    bool add_ordinary(Vertex u, Vertex v) {
        if (u == v || arcs_.count({u, v}) > 0) {
            return false;
        }
        Weight w = 0;
        if (config_.model == WeightModel::potential) {
            w = potential_[v] - potential_[u] + floor_ + uniform_weight(rng_, 0, scale_);
        } else {
            w = uniform_weight(rng_, config_.min_weight, config_.max_weight);
        }
        arcs_[{u, v}] = w;
        return true;
    }

    void add_filler(const Layout& lay) {
        std::size_t capacity = 0;
        for (const auto& block : lay.blocks) {
            capacity += block.size() * (block.size() - 1);
        }
        const std::size_t components = lay.components.size();
        for (std::size_t a = 0; a < components; ++a) {
            for (std::size_t b = a + 1; b < components; ++b) {
                const auto sa = lay.components[a].second - lay.components[a].first + 1;
                const auto sb = lay.components[b].second - lay.components[b].first + 1;
                capacity += static_cast<std::size_t>(sa) * sb;
            }
        }
        const std::size_t target = std::min(capacity, arcs_.size() + config_.arc_count);
        std::size_t misses = 0;
        while (arcs_.size() < target && misses < 64 * (target + 16)) {
            Vertex u = 0;
            Vertex v = 0;
            if (components > 1 && coin(rng_, 0.25)) {
                std::size_t a = uniform_index(rng_, components);
                std::size_t b = uniform_index(rng_, components);
                if (a == b) {
                    ++misses;
                    continue;
                }
                if (a > b) {
                    std::swap(a, b);
                }
                u = lay.components[a].first +
                    static_cast<Vertex>(uniform_index(rng_, lay.components[a].second - lay.components[a].first + 1));
                v = lay.components[b].first +
                    static_cast<Vertex>(uniform_index(rng_, lay.components[b].second - lay.components[b].first + 1));
            } else {
                const auto& block = lay.blocks[uniform_index(rng_, lay.blocks.size())];
                if (block.size() < 2) {
                    ++misses;
                    continue;
                }
                u = block[uniform_index(rng_, block.size())];
                v = block[uniform_index(rng_, block.size())];
            }
            if (!add_ordinary(u, v)) {
                ++misses;
            }
        }
    }

    const GeneratorConfig& config_;
    Rng& rng_;
    Weight scale_ = 1;
    Weight floor_ = 0;
    std::vector<Weight> potential_;
    std::map<std::pair<Vertex, Vertex>, Weight> arcs_;
};

InstanceFile draw(const GeneratorConfig& config, Rng& rng) {
    if (config.shape == Shape::random) {
        check(config.density >= 0 && config.density <= 1 && config.edge_density >= 0 && config.edge_density <= 1,
              "densities must lie in [0, 1]");
        check(config.min_weight <= config.max_weight, "empty weight range");
        return random_instance(config, rng);
    }
    return StructuredBuilder(config, rng).build();
}

std::string describe(const GeneratorConfig& config) {
    std::string text = "generated seed=" + std::to_string(config.seed) + " n=" + std::to_string(config.n);
    if (config.shape == Shape::random) {
        text += " shape=random density=" + std::to_string(config.density);
        if (config.edge_density > 0) {
            text += " edge-density=" + std::to_string(config.edge_density);
        }
    } else {
        text += " shape=structured trees=" + std::to_string(config.tree_count) + "x" +
                std::to_string(config.tree_size) + " sccs=" + std::to_string(config.scc_count) +
                " blocks=" + std::to_string(config.blocks_per_component) +
                " filler=" + std::to_string(config.arc_count);
    }
    text += config.model == WeightModel::potential ? " weights=potential" : " weights=uniform";
    return text;
}

} // namespace

InstanceFile generate(const GeneratorConfig& config) {
    check(config.n >= 1 && config.n <= kMaxVertices, "n out of range");
    Rng rng(config.seed);
    for (int attempt = 0; attempt < std::max(1, config.max_attempts); ++attempt) {
        InstanceFile instance = draw(config, rng);
        if (config.nearly_conservative_only && !solve(to_digraph(instance)).solved()) {
            continue;
        }
        instance.comments.push_back(describe(config));
        return instance;
    }
    throw LimitExceeded("no nearly conservative instance within " + std::to_string(config.max_attempts) +
                        " attempts");
}

} // namespace ncsp
