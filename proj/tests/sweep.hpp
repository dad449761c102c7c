#pragma once

// Exhaustive small-instance corpus generation, shared by the unit and
// acceptance suites. Instances are enumerated up to graph isomorphism
// (canonical representatives under vertex permutation); the classifiers
// under test are label-invariant, so each isomorphism class is checked
// once.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "quivarity/quiver.hpp"

namespace sweep {

using quivarity::DimensionVector;
using quivarity::Int;
using quivarity::Quiver;
using quivarity::QuiverSetting;

constexpr int kMaxVertices = 4;

struct Instance {
    int n = 0;
    std::array<std::int8_t, kMaxVertices> dims{};
    std::array<std::int8_t, kMaxVertices * kMaxVertices> counts{};  // counts[i*n+j] = #arrows i->j

    int count(int i, int j) const { return counts[static_cast<std::size_t>(i * n + j)]; }
};

struct Options {
    int min_vertices = 1;
    int max_vertices = 3;
    int max_dim = 3;      // dims range over 1..max_dim
    int max_count = 2;    // per ordered pair (per unordered pair when symmetric)
    bool symmetric = false;
    bool loopless = false;
    bool dims_all_one = false;
    bool require_strongly_connected = true;
};

inline QuiverSetting to_setting(const Instance& inst) {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> arrows;
    for (int v = 0; v < inst.n; ++v) ids.push_back("v" + std::to_string(v));
    for (int i = 0; i < inst.n; ++i)
        for (int j = 0; j < inst.n; ++j)
            for (int c = 0; c < inst.count(i, j); ++c) arrows.emplace_back(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
    Quiver q(ids, arrows);
    std::vector<Int> dims;
    for (int v = 0; v < inst.n; ++v) dims.push_back(inst.dims[static_cast<std::size_t>(v)]);
    return QuiverSetting(std::move(q), DimensionVector(std::move(dims)));
}

inline bool strongly_connected(const Instance& inst) {
    const int n = inst.n;
    if (n <= 1) return true;
    std::array<std::array<bool, kMaxVertices>, kMaxVertices> reach{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i == j || inst.count(i, j) > 0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return false;
    return true;
}

// True when no vertex permutation yields a lexicographically smaller
// (dims, counts) pair.
inline bool is_canonical(const Instance& inst) {
    const int n = inst.n;
    std::array<int, kMaxVertices> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    while (std::next_permutation(perm.begin(), perm.begin() + n)) {
        int cmp = 0;  // -1: permuted smaller, 1: permuted larger
        for (int i = 0; i < n && cmp == 0; ++i) {
            int a = inst.dims[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            int b = inst.dims[static_cast<std::size_t>(i)];
            cmp = (a < b) ? -1 : (a > b ? 1 : 0);
        }
        for (int i = 0; i < n && cmp == 0; ++i)
            for (int j = 0; j < n && cmp == 0; ++j) {
                int a = inst.count(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
                int b = inst.count(i, j);
                cmp = (a < b) ? -1 : (a > b ? 1 : 0);
            }
        if (cmp < 0) return false;
    }
    return true;
}

template <typename Visit>
inline void for_each_instance(const Options& opt, Visit&& visit) {
    for (int n = opt.min_vertices; n <= opt.max_vertices; ++n) {
        // ordered pair slots: loops (unless loopless), then cross pairs;
        // symmetric mode enumerates the upper triangle and mirrors
        std::vector<std::pair<int, int>> slots;
        if (!opt.loopless)
            for (int v = 0; v < n; ++v) slots.emplace_back(v, v);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (opt.symmetric && i > j) continue;
                slots.emplace_back(i, j);
            }

        Instance inst;
        inst.n = n;
        for (int v = 0; v < n; ++v) inst.dims[static_cast<std::size_t>(v)] = 1;

        std::vector<int> arrow_choice(slots.size(), 0);
        while (true) {
            inst.counts.fill(0);
            for (std::size_t k = 0; k < slots.size(); ++k) {
                auto [i, j] = slots[k];
                inst.counts[static_cast<std::size_t>(i * n + j)] = static_cast<std::int8_t>(arrow_choice[k]);
                if (opt.symmetric && i != j)
                    inst.counts[static_cast<std::size_t>(j * n + i)] = static_cast<std::int8_t>(arrow_choice[k]);
            }
            if (!opt.require_strongly_connected || strongly_connected(inst)) {
                // dims odometer over 1..max_dim (or all ones)
                for (int v = 0; v < n; ++v) inst.dims[static_cast<std::size_t>(v)] = 1;
                while (true) {
                    if (is_canonical(inst)) visit(inst);
                    if (opt.dims_all_one) break;
                    int v = n - 1;
                    while (v >= 0 && inst.dims[static_cast<std::size_t>(v)] == opt.max_dim) {
                        inst.dims[static_cast<std::size_t>(v)] = 1;
                        --v;
                    }
                    if (v < 0) break;
                    ++inst.dims[static_cast<std::size_t>(v)];
                }
            }
            std::size_t k = 0;
            while (k < slots.size() && arrow_choice[k] == opt.max_count) arrow_choice[k++] = 0;
            if (k == slots.size()) break;
            ++arrow_choice[k];
        }
    }
}

inline std::vector<Instance> enumerate_instances(const Options& opt) {
    std::vector<Instance> out;
    for_each_instance(opt, [&](const Instance& inst) { out.push_back(inst); });
    return out;
}

}  // namespace sweep
