#include "quivarity/symm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quivarity {

namespace {

void require_preconditions(const QuiverSetting& s, const char* op) {
    if (!s.genuine()) throw std::invalid_argument(std::string(op) + ": setting must be genuine");
    if (s.quiver.has_loops()) throw std::invalid_argument(std::string(op) + ": quiver must be loopless");
    if (!is_symmetric(s.quiver)) throw std::invalid_argument(std::string(op) + ": quiver must be symmetric");
    if (!is_strongly_connected(s.quiver))
        throw std::invalid_argument(std::string(op) + ": quiver must be strongly connected");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Biconnected components of the underlying undirected multigraph (every
// arrow is one edge; the quiver is loopless here). Returns a block index
// per arrow. Hopcroft-Tarjan with an edge stack; parallel edges count as
// distinct, so an opposite pair already forms a cycle.
std::vector<int> biconnected_blocks(const Quiver& q, int& block_count) {
    const int n = q.vertex_count();
    const int m = q.arrow_count();
    std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(n));
    for (int e = 0; e < m; ++e) {
        const Arrow& a = q.arrows()[static_cast<std::size_t>(e)];
        incident[static_cast<std::size_t>(a.src)].push_back({e, a.dst});
        incident[static_cast<std::size_t>(a.dst)].push_back({e, a.src});
    }
    std::vector<int> disc(static_cast<std::size_t>(n), 0), low(static_cast<std::size_t>(n), 0);
    std::vector<int> block_of(static_cast<std::size_t>(m), -1);
    std::vector<int> edge_stack;
    int timer = 0;
    block_count = 0;

    struct Frame {
        int vertex;
        int via_edge;
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)]) continue;
        std::vector<Frame> frames{{root, -1, 0}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = ++timer;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& edges = incident[static_cast<std::size_t>(f.vertex)];
            if (f.next < edges.size()) {
                auto [e, w] = edges[f.next++];
                if (e == f.via_edge) continue;
                if (!disc[static_cast<std::size_t>(w)]) {
                    edge_stack.push_back(e);
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = ++timer;
                    frames.push_back({w, e, 0});
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.vertex)]) {
                    edge_stack.push_back(e);
                    low[static_cast<std::size_t>(f.vertex)] =
                        std::min(low[static_cast<std::size_t>(f.vertex)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                int child = f.vertex;
                int entry_edge = f.via_edge;
                frames.pop_back();
                if (frames.empty()) break;
                Frame& parent = frames.back();
                low[static_cast<std::size_t>(parent.vertex)] =
                    std::min(low[static_cast<std::size_t>(parent.vertex)], low[static_cast<std::size_t>(child)]);
                if (low[static_cast<std::size_t>(child)] >= disc[static_cast<std::size_t>(parent.vertex)]) {
                    // parent closes a block; pop up to the tree edge
                    while (true) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        block_of[static_cast<std::size_t>(e)] = block_count;
                        if (e == entry_edge) break;
                    }
                    ++block_count;
                }
            }
        }
    }
    return block_of;
}

}  // namespace

ConnectedSumDecomposition connected_sum_decompose(const QuiverSetting& s) {
    require_preconditions(s, "connected_sum_decompose");
    ConnectedSumDecomposition result;
    const int n = s.quiver.vertex_count();
    const int m = s.quiver.arrow_count();
    if (m == 0) {
        // strongly connected and arrowless: a lone vertex
        result.components.push_back(s);
        return result;
    }

    int block_count = 0;
    std::vector<int> raw_block = biconnected_blocks(s.quiver, block_count);

    // blocks only touch in articulation vertices; gluing is undone only at
    // dimension-1 vertices, so blocks sharing a higher-dimensional vertex
    // stay one component
    UnionFind merged(static_cast<std::size_t>(block_count));
    for (int v = 0; v < n; ++v) {
        if (s.alpha[v] == 1) continue;
        int first = -1;
        for (int e = 0; e < m; ++e) {
            const Arrow& a = s.quiver.arrows()[static_cast<std::size_t>(e)];
            if (a.src != v && a.dst != v) continue;
            if (first < 0)
                first = raw_block[static_cast<std::size_t>(e)];
            else
                merged.unite(first, raw_block[static_cast<std::size_t>(e)]);
        }
    }

    std::vector<int> block_of(static_cast<std::size_t>(m));
    std::vector<int> order;  // component roots in first-arrow order
    for (int i = 0; i < m; ++i) {
        block_of[static_cast<std::size_t>(i)] = merged.find(raw_block[static_cast<std::size_t>(i)]);
        if (std::find(order.begin(), order.end(), block_of[static_cast<std::size_t>(i)]) == order.end())
            order.push_back(block_of[static_cast<std::size_t>(i)]);
    }

    for (int root : order) {
        std::vector<bool> in_component(static_cast<std::size_t>(n), false);
        std::vector<std::pair<std::string, std::string>> arrows;
        for (int i = 0; i < m; ++i) {
            if (block_of[static_cast<std::size_t>(i)] != root) continue;
            const Arrow& a = s.quiver.arrows()[static_cast<std::size_t>(i)];
            in_component[static_cast<std::size_t>(a.src)] = true;
            in_component[static_cast<std::size_t>(a.dst)] = true;
            arrows.emplace_back(s.quiver.vertex_id(a.src), s.quiver.vertex_id(a.dst));
        }
        std::vector<std::string> ids;
        std::vector<Int> dims;
        for (int v = 0; v < n; ++v) {
            if (!in_component[static_cast<std::size_t>(v)]) continue;
            ids.push_back(s.quiver.vertex_id(v));
            dims.push_back(s.alpha[v]);
        }
        result.components.push_back(
            QuiverSetting(Quiver(std::move(ids), arrows), DimensionVector(std::move(dims))));
    }

    // junctions: dimension-1 vertices shared by two or more components
    for (int v = 0; v < n; ++v) {
        if (s.alpha[v] != 1) continue;
        std::vector<int> touching;
        for (int e = 0; e < m; ++e) {
            const Arrow& a = s.quiver.arrows()[static_cast<std::size_t>(e)];
            if (a.src != v && a.dst != v) continue;
            if (std::find(touching.begin(), touching.end(), block_of[static_cast<std::size_t>(e)]) ==
                touching.end())
                touching.push_back(block_of[static_cast<std::size_t>(e)]);
        }
        if (touching.size() >= 2) result.junction_vertices.push_back(s.quiver.vertex_id(v));
    }
    return result;
}

namespace {

// I:  n <-> m single arrows            (2 vertices)
// II: 1 <-> n, k arrows each way, k<=n (2 vertices)
// III: 1 <-> n <-> m path, single      (3 vertices)
// IV: n <-> 2 <-> m path, single       (3 vertices)
bool matches_prime_type(const QuiverSetting& c) {
    const int n = c.quiver.vertex_count();
    if (n == 1) return c.quiver.arrow_count() == 0;
    if (n == 2) {
        int k = c.quiver.arrow_count_between(0, 1);
        if (k == 0 || c.quiver.arrow_count_between(1, 0) != k) return false;
        if (c.quiver.arrow_count() != 2 * k) return false;
        if (k == 1) return true;  // type I
        return (c.alpha[0] == 1 && k <= c.alpha[1]) || (c.alpha[1] == 1 && k <= c.alpha[0]);
    }
    if (n == 3) {
        // find a path center: connected to both others, ends not adjacent
        for (int center = 0; center < 3; ++center) {
            int e1 = (center + 1) % 3, e2 = (center + 2) % 3;
            bool path = c.quiver.arrow_count_between(center, e1) == 1 &&
                        c.quiver.arrow_count_between(e1, center) == 1 &&
                        c.quiver.arrow_count_between(center, e2) == 1 &&
                        c.quiver.arrow_count_between(e2, center) == 1 &&
                        c.quiver.arrow_count_between(e1, e2) == 0 &&
                        c.quiver.arrow_count_between(e2, e1) == 0;
            if (!path) continue;
            if (c.alpha[e1] == 1 || c.alpha[e2] == 1) return true;  // type III
            if (c.alpha[center] == 2) return true;                  // type IV
            return false;
        }
        return false;
    }
    return false;
}

}  // namespace

bool classify_symmetric(const QuiverSetting& s) {
    ConnectedSumDecomposition decomposition = connected_sum_decompose(s);
    for (const QuiverSetting& component : decomposition.components)
        if (!matches_prime_type(component)) return false;
    return true;
}

}  // namespace quivarity
