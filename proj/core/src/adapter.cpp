#include "rainbow/adapter.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

std::string edge_str(Vertex a, Vertex b) { return std::to_string(a) + "-" + std::to_string(b); }

Edge require_edge(const EdgeColouredGraph& g, Vertex a, Vertex b) {
    auto c = g.colour(a, b);
    if (!c) throw PreconditionError("missing edge " + edge_str(a, b));
    return Edge(a, b, *c);
}

}  // namespace

bool Adapter::contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

int Adapter::witness_avoiding(Vertex v) const {
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        const auto& m = witnesses[i];
        if (std::none_of(m.begin(), m.end(), [v](const Edge& e) { return e.touches(v); })) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

bool verify_adapter(const EdgeColouredGraph& g, std::span<const Vertex> vertices, const ColourSet& colours,
                    int level, std::span<const Matching> witnesses) {
    if (level < 1 || static_cast<int>(witnesses.size()) != level) return false;
    std::unordered_set<Vertex> in_w(vertices.begin(), vertices.end());
    if (in_w.size() != vertices.size()) return false;
    for (const Matching& m : witnesses) {
        for (const Edge& e : m) {
            if (!g.has_edge(e)) return false;
            if (!in_w.contains(e.u) || !in_w.contains(e.v)) return false;
        }
        if (!is_rainbow_matching(g, m)) return false;
        if (colours_of(m) != colours || m.size() != colours.size()) return false;
    }
    for (Vertex v : vertices) {
        bool missed = std::any_of(witnesses.begin(), witnesses.end(), [v](const Matching& m) {
            return std::none_of(m.begin(), m.end(), [v](const Edge& e) { return e.touches(v); });
        });
        if (!missed) return false;
    }
    return true;
}

bool verify_adapter(const EdgeColouredGraph& g, const Adapter& a) {
    return verify_adapter(g, a.vertices, a.colours, a.level(), a.witnesses);
}

Adapter adapter_from_parallel_pairs(const EdgeColouredGraph& g, std::span<const std::pair<Vertex, Vertex>> pairs,
                                    std::span<const Vertex> zs, Vertex w) {
    const std::size_t l = pairs.size();
    if (zs.size() != l) throw PreconditionError("need exactly one z vertex per pair");

    Adapter out;
    out.vertices.push_back(w);
    for (std::size_t i = 0; i < l; ++i) {
        out.vertices.push_back(pairs[i].first);
        out.vertices.push_back(pairs[i].second);
        out.vertices.push_back(zs[i]);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    if (std::adjacent_find(out.vertices.begin(), out.vertices.end()) != out.vertices.end()) {
        throw PreconditionError("adapter vertices are not distinct");
    }

    std::vector<Edge> xy, zw;
    for (std::size_t i = 0; i < l; ++i) {
        xy.push_back(require_edge(g, pairs[i].first, pairs[i].second));
        zw.push_back(require_edge(g, zs[i], w));
        if (xy[i].colour != zw[i].colour) {
            throw PreconditionError("colour mismatch between " + edge_str(pairs[i].first, pairs[i].second) +
                                    " and " + edge_str(zs[i], w));
        }
        if (!out.colours.insert(xy[i].colour).second) {
            throw PreconditionError("pair colours are not distinct");
        }
    }

    for (std::size_t i = 0; i < l; ++i) {
        Matching m;
        for (std::size_t j = 0; j < l; ++j) {
            if (j != i) m.push_back(xy[j]);
        }
        m.push_back(zw[i]);
        out.witnesses.push_back(std::move(m));
    }
    out.witnesses.push_back(xy);
    return out;
}

Adapter adapter_union(std::span<const Adapter> adapters) {
    Adapter out;
    std::size_t level = 0;
    for (const Adapter& a : adapters) {
        for (Vertex v : a.vertices) out.vertices.push_back(v);
        for (Colour c : a.colours) {
            if (!out.colours.insert(c).second) throw PreconditionError("adapter colour sets overlap");
        }
        level = std::max(level, a.witnesses.size());
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    if (std::adjacent_find(out.vertices.begin(), out.vertices.end()) != out.vertices.end()) {
        throw PreconditionError("adapter vertex sets overlap");
    }
    out.witnesses.resize(level);
    for (std::size_t i = 0; i < level; ++i) {
        for (const Adapter& a : adapters) {
            if (a.witnesses.empty()) continue;
            const Matching& m = a.witnesses[std::min(i, a.witnesses.size() - 1)];
            out.witnesses[i].insert(out.witnesses[i].end(), m.begin(), m.end());
        }
    }
    return out;
}

Adapter adapter_absorb(const EdgeColouredGraph& g, const Adapter& a, Vertex x, Vertex y, Vertex z, Vertex w) {
    for (Vertex v : {x, y, z}) {
        if (a.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " already in the adapter");
    }
    if (x == y || y == z || x == z) throw PreconditionError("x, y, z must be distinct");
    if (!a.contains(w)) throw PreconditionError("vertex " + std::to_string(w) + " is not in the adapter");
    Edge xy = require_edge(g, x, y);
    Edge zw = require_edge(g, z, w);
    if (xy.colour != zw.colour) {
        throw PreconditionError("colour mismatch between " + edge_str(x, y) + " and " + edge_str(z, w));
    }
    if (a.colours.contains(xy.colour)) throw PreconditionError("colour already used by the adapter");
    int i0 = a.witness_avoiding(w);
    if (i0 < 0) throw PreconditionError("no witness avoids vertex " + std::to_string(w));

    Adapter out;
    out.vertices = a.vertices;
    out.vertices.insert(out.vertices.end(), {x, y, z});
    std::sort(out.vertices.begin(), out.vertices.end());
    out.colours = a.colours;
    out.colours.insert(xy.colour);
    for (const Matching& m : a.witnesses) {
        Matching grown = m;
        grown.push_back(xy);
        out.witnesses.push_back(std::move(grown));
    }
    Matching extra = a.witnesses[static_cast<std::size_t>(i0)];
    extra.push_back(zw);
    out.witnesses.push_back(std::move(extra));
    return out;
}

}  // namespace rainbow
