#include "rainbow/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

// Include-first DFS over edges sorted by descending endpoint degree sum.
// A node is pruned when even the remaining compatible edges cannot beat the
// incumbent: bound = min(#edges, #colours, #endpoints / 2) over them.
class RainbowSearch {
public:
    explicit RainbowSearch(const EdgeColouredGraph& g) : g_(g) {
        order_.resize(g.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            const Edge& ea = g.edge(a);
            const Edge& eb = g.edge(b);
            return g.degree(ea.u) + g.degree(ea.v) > g.degree(eb.u) + g.degree(eb.v);
        });
        std::map<Colour, int> dense;
        for (const Edge& e : g.edges()) dense.emplace(e.colour, 0);
        int next = 0;
        for (auto& [c, id] : dense) id = next++;
        for (int idx : order_) {
            const Edge& e = g.edge(idx);
            u_.push_back(e.u);
            v_.push_back(e.v);
            c_.push_back(dense.at(e.colour));
        }
        used_vertex_.assign(static_cast<std::size_t>(g.order()), 0);
        used_colour_.assign(static_cast<std::size_t>(next), 0);
        vertex_stamp_.assign(static_cast<std::size_t>(g.order()), 0);
        colour_stamp_.assign(static_cast<std::size_t>(next), 0);

        int touched = 0;
        for (Vertex x = 0; x < g.order(); ++x) touched += g.degree(x) > 0;
        cap_ = std::min(touched / 2, next);
    }

    RainbowMatchingResult run() {
        dfs(0, 0);
        RainbowMatchingResult r;
        r.size = best_size_;
        for (int pos : best_) r.matching.push_back(g_.edge(order_[static_cast<std::size_t>(pos)]));
        std::sort(r.matching.begin(), r.matching.end());
        return r;
    }

private:
    bool compatible(std::size_t i) const {
        return !used_vertex_[static_cast<std::size_t>(u_[i])] && !used_vertex_[static_cast<std::size_t>(v_[i])] &&
               !used_colour_[static_cast<std::size_t>(c_[i])];
    }

    int bound(std::size_t from) {
        ++stamp_;
        int edges = 0, colours = 0, vertices = 0;
        for (std::size_t i = from; i < u_.size(); ++i) {
            if (!compatible(i)) continue;
            ++edges;
            auto& cs = colour_stamp_[static_cast<std::size_t>(c_[i])];
            if (cs != stamp_) cs = stamp_, ++colours;
            for (Vertex x : {u_[i], v_[i]}) {
                auto& vs = vertex_stamp_[static_cast<std::size_t>(x)];
                if (vs != stamp_) vs = stamp_, ++vertices;
            }
        }
        return std::min({edges, colours, vertices / 2});
    }

    void dfs(std::size_t from, int size) {
        if (size > best_size_) {
            best_size_ = size;
            best_ = current_;
        }
        if (best_size_ >= cap_) return;
        if (size + bound(from) <= best_size_) return;
        for (std::size_t i = from; i < u_.size(); ++i) {
            if (!compatible(i)) continue;
            set(i, 1);
            current_.push_back(static_cast<int>(i));
            dfs(i + 1, size + 1);
            current_.pop_back();
            set(i, 0);
            if (best_size_ >= cap_) return;
        }
    }

    void set(std::size_t i, char value) {
        used_vertex_[static_cast<std::size_t>(u_[i])] = value;
        used_vertex_[static_cast<std::size_t>(v_[i])] = value;
        used_colour_[static_cast<std::size_t>(c_[i])] = value;
    }

    const EdgeColouredGraph& g_;
    std::vector<int> order_;
    std::vector<Vertex> u_, v_;
    std::vector<int> c_;
    std::vector<char> used_vertex_, used_colour_;
    std::vector<unsigned> vertex_stamp_, colour_stamp_;
    unsigned stamp_ = 0;
    int cap_ = 0;
    int best_size_ = 0;
    std::vector<int> current_, best_;
};

constexpr int kUnmatched = -1;
constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
public:
    explicit HopcroftKarp(BipartiteAssignment& b)
        : b_(b), slot_owner_(static_cast<std::size_t>(b.right), kUnmatched), level_(b.adjacency.size()),
          next_(b.adjacency.size()) {
        b_.assigned.assign(b.adjacency.size(), kUnmatched);
    }

    void run() {
        while (layer()) {
            std::fill(next_.begin(), next_.end(), 0);
            for (std::size_t item = 0; item < b_.adjacency.size(); ++item) {
                if (b_.assigned[item] == kUnmatched) augment(static_cast<int>(item));
            }
        }
    }

private:
    // BFS from every free item; true if some free slot is reachable.
    bool layer() {
        std::queue<int> q;
        for (std::size_t item = 0; item < b_.adjacency.size(); ++item) {
            if (b_.assigned[item] == kUnmatched) {
                level_[item] = 0;
                q.push(static_cast<int>(item));
            } else {
                level_[item] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int item = q.front();
            q.pop();
            for (int slot : b_.adjacency[static_cast<std::size_t>(item)]) {
                int owner = slot_owner_[static_cast<std::size_t>(slot)];
                if (owner == kUnmatched) {
                    found = true;
                } else if (level_[static_cast<std::size_t>(owner)] == kInf) {
                    level_[static_cast<std::size_t>(owner)] = level_[static_cast<std::size_t>(item)] + 1;
                    q.push(owner);
                }
            }
        }
        return found;
    }

    bool augment(int item) {
        const auto& adj = b_.adjacency[static_cast<std::size_t>(item)];
        for (int& i = next_[static_cast<std::size_t>(item)]; i < static_cast<int>(adj.size()); ++i) {
            int slot = adj[static_cast<std::size_t>(i)];
            int owner = slot_owner_[static_cast<std::size_t>(slot)];
            if (owner == kUnmatched ||
                (level_[static_cast<std::size_t>(owner)] == level_[static_cast<std::size_t>(item)] + 1 &&
                 augment(owner))) {
                slot_owner_[static_cast<std::size_t>(slot)] = item;
                b_.assigned[static_cast<std::size_t>(item)] = slot;
                return true;
            }
        }
        level_[static_cast<std::size_t>(item)] = kInf;
        return false;
    }

    BipartiteAssignment& b_;
    std::vector<int> slot_owner_;
    std::vector<int> level_;
    std::vector<int> next_;
};

}  // namespace

RainbowMatchingResult max_rainbow_matching_exact(const EdgeColouredGraph& g) { return RainbowSearch(g).run(); }

int BipartiteAssignment::matched() const {
    return static_cast<int>(std::count_if(assigned.begin(), assigned.end(), [](int s) { return s != kUnmatched; }));
}

void max_bipartite_matching(BipartiteAssignment& b) {
    for (const auto& adj : b.adjacency) {
        for (int slot : adj) {
            if (slot < 0 || slot >= b.right) throw PreconditionError("slot index out of range");
        }
    }
    HopcroftKarp(b).run();
}

std::vector<int> hall_violator(const BipartiteAssignment& b) {
    if (static_cast<int>(b.assigned.size()) != b.left()) {
        throw PreconditionError("hall_violator needs a completed assignment");
    }
    auto root = std::find(b.assigned.begin(), b.assigned.end(), kUnmatched);
    if (root == b.assigned.end()) throw PreconditionError("assignment saturates every item");

    std::vector<int> owner(static_cast<std::size_t>(b.right), kUnmatched);
    for (std::size_t i = 0; i < b.assigned.size(); ++i) {
        if (b.assigned[i] != kUnmatched) owner[static_cast<std::size_t>(b.assigned[i])] = static_cast<int>(i);
    }
    std::vector<char> seen_item(b.assigned.size(), 0), seen_slot(static_cast<std::size_t>(b.right), 0);
    std::queue<int> q;
    const int start = static_cast<int>(root - b.assigned.begin());
    q.push(start);
    seen_item[static_cast<std::size_t>(start)] = 1;
    while (!q.empty()) {
        int item = q.front();
        q.pop();
        for (int slot : b.adjacency[static_cast<std::size_t>(item)]) {
            if (seen_slot[static_cast<std::size_t>(slot)]) continue;
            seen_slot[static_cast<std::size_t>(slot)] = 1;
            int next = owner[static_cast<std::size_t>(slot)];
            if (next == kUnmatched) throw InternalError("assignment is not maximum: augmenting path exists");
            if (!seen_item[static_cast<std::size_t>(next)]) {
                seen_item[static_cast<std::size_t>(next)] = 1;
                q.push(next);
            }
        }
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < seen_item.size(); ++i) {
        if (seen_item[i]) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<int> neighbourhood(const BipartiteAssignment& b, const std::vector<int>& items) {
    std::vector<int> out;
    for (int item : items) {
        const auto& adj = b.adjacency[static_cast<std::size_t>(item)];
        out.insert(out.end(), adj.begin(), adj.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace rainbow
