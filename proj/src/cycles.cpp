#include "quivarity/cycles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quivarity {

Cycle make_cycle(std::vector<int> arrows) {
    if (arrows.empty()) throw std::invalid_argument("cycle: empty arrow sequence");
    const std::size_t n = arrows.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            int a = arrows[(r + i) % n];
            int b = arrows[(best + i) % n];
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    }
    std::rotate(arrows.begin(), arrows.begin() + static_cast<std::ptrdiff_t>(best), arrows.end());
    return Cycle{std::move(arrows)};
}

namespace {

std::vector<std::vector<int>> outgoing_arrows(const Quiver& q) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(q.vertex_count()));
    for (int i = 0; i < q.arrow_count(); ++i)
        out[static_cast<std::size_t>(q.arrows()[static_cast<std::size_t>(i)].src)].push_back(i);
    return out;
}

void sort_cycles(std::vector<Cycle>& cycles) {
    std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.arrows < b.arrows;
    });
}

struct PrimitiveSearch {
    const Quiver& q;
    const std::vector<std::vector<int>>& out;
    std::vector<bool> visited;
    std::vector<int> walk;  // traversal order
    std::vector<Cycle>& result;
    int start = 0;

    void dfs(int at) {
        for (int idx : out[static_cast<std::size_t>(at)]) {
            int next = q.arrows()[static_cast<std::size_t>(idx)].dst;
            if (next == start) {
                walk.push_back(idx);
                std::vector<int> composition(walk.rbegin(), walk.rend());
                result.push_back(make_cycle(std::move(composition)));
                walk.pop_back();
                continue;
            }
            // keep `start` the smallest vertex so each class appears once
            if (next < start || visited[static_cast<std::size_t>(next)]) continue;
            visited[static_cast<std::size_t>(next)] = true;
            walk.push_back(idx);
            dfs(next);
            walk.pop_back();
            visited[static_cast<std::size_t>(next)] = false;
        }
    }
};

}  // namespace

std::vector<Cycle> primitive_cycles(const Quiver& q) {
    std::vector<Cycle> result;
    const auto out = outgoing_arrows(q);
    for (int start = 0; start < q.vertex_count(); ++start) {
        PrimitiveSearch search{q, out, std::vector<bool>(static_cast<std::size_t>(q.vertex_count()), false),
                               {}, result, start};
        search.visited[static_cast<std::size_t>(start)] = true;
        search.dfs(start);
    }
    sort_cycles(result);
    return result;
}

namespace {

struct QuasiPrimitiveSearch {
    const QuiverSetting& s;
    const std::vector<std::vector<int>>& out;
    Int max_len;
    std::vector<int> visits;
    std::vector<int> walk;
    std::set<std::vector<int>> seen;
    int start = 0;

    void dfs(int at) {
        if (static_cast<Int>(walk.size()) >= max_len) return;
        for (int idx : out[static_cast<std::size_t>(at)]) {
            int next = s.quiver.arrows()[static_cast<std::size_t>(idx)].dst;
            if (next == start) {
                walk.push_back(idx);
                std::vector<int> composition(walk.rbegin(), walk.rend());
                seen.insert(make_cycle(std::move(composition)).arrows);
                // the walk may also pass through `start` and close later,
                // provided `start` can absorb a second visit
                if (s.alpha[next] >= 2) step(idx, next);
                walk.pop_back();
                continue;
            }
            if (next < start) continue;
            if (visits[static_cast<std::size_t>(next)] >= 1 && s.alpha[next] < 2) continue;
            walk.push_back(idx);
            step(idx, next);
            walk.pop_back();
        }
    }

    void step(int, int next) {
        ++visits[static_cast<std::size_t>(next)];
        dfs(next);
        --visits[static_cast<std::size_t>(next)];
    }
};

}  // namespace

std::vector<Cycle> quasi_primitive_cycles(const QuiverSetting& s, Int max_len) {
    if (max_len < 1) throw std::invalid_argument("quasi_primitive_cycles: max_len must be >= 1");
    std::vector<Cycle> result;
    const auto out = outgoing_arrows(s.quiver);
    for (int start = 0; start < s.quiver.vertex_count(); ++start) {
        QuasiPrimitiveSearch search{s, out, max_len,
                                    std::vector<int>(static_cast<std::size_t>(s.quiver.vertex_count()), 0),
                                    {}, {}, start};
        search.visits[static_cast<std::size_t>(start)] = 1;
        search.dfs(start);
        // every cycle is enumerated from its smallest vertex only, so the
        // per-start sets are disjoint
        for (const auto& arrows : search.seen) result.push_back(Cycle{arrows});
    }
    sort_cycles(result);
    return result;
}

Int default_cycle_length_bound(const DimensionVector& alpha) {
    return alpha.total() * alpha.total();
}

bool coregular_alpha_one(const QuiverSetting& s) {
    if (!s.genuine()) throw std::invalid_argument("coregular_alpha_one: setting must be genuine");
    if (s.alpha != DimensionVector::ones(s.quiver))
        throw std::invalid_argument("coregular_alpha_one: alpha must be all ones");
    if (!is_strongly_connected(s.quiver))
        throw std::invalid_argument("coregular_alpha_one: quiver must be strongly connected");
    const Int cycles = static_cast<Int>(primitive_cycles(s.quiver).size());
    return cycles == s.quiver.arrow_count() - s.quiver.vertex_count() + 1;
}

}  // namespace quivarity
