#include "quivarity/simples.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace quivarity {

namespace {

// Lone vertex, lone vertex with one loop, or a single directed cycle
// through >= 2 vertices: the forms whose only simple dimension vector is
// all ones.
bool is_special_form(const Quiver& q) {
    const int n = q.vertex_count();
    if (n == 0) return false;
    if (n == 1) return q.arrow_count() <= 1;
    if (q.arrow_count() != n) return false;
    std::vector<int> indeg(static_cast<std::size_t>(n), 0), outdeg(static_cast<std::size_t>(n), 0);
    for (const Arrow& a : q.arrows()) {
        if (a.src == a.dst) return false;
        ++outdeg[static_cast<std::size_t>(a.src)];
        ++indeg[static_cast<std::size_t>(a.dst)];
    }
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] != 1 || outdeg[static_cast<std::size_t>(v)] != 1)
            return false;
    // in/out degree one everywhere gives a disjoint union of cycles; a
    // single cycle iff strongly connected
    return is_strongly_connected(q);
}

}  // namespace

SimpleClassInfo has_simple(const QuiverSetting& s) {
    QuiverSetting g = strip_zero_vertices(s);
    SimpleClassInfo info;
    if (g.quiver.vertex_count() == 0) return info;

    const bool special = is_special_form(g.quiver);
    const bool all_ones = g.alpha == DimensionVector::ones(g.quiver);
    bool exists = false;
    if (special) {
        exists = all_ones;
    } else {
        if (is_strongly_connected(g.quiver)) {
            exists = true;
            for (int v = 0; v < g.quiver.vertex_count() && exists; ++v)
                if (chi_alpha_eps(g, v) > 0 || chi_eps_alpha(g, v) > 0) exists = false;
        }
    }
    if (!exists) return info;

    info.exists = true;
    EulerForm e = euler_matrix(g.quiver);
    info.iss_dimension = 1 - chi(e, g.alpha, g.alpha);
    info.class_count =
        (*info.iss_dimension == 0) ? ClassCount::One : ClassCount::Infinite;
    return info;
}

std::vector<DimensionVector> enumerate_simple_dimvectors(const Quiver& q, Int cap) {
    if (cap < 1) throw std::invalid_argument("enumerate_simple_dimvectors: cap must be >= 1");
    const int n = q.vertex_count();
    std::vector<DimensionVector> out;
    std::vector<Int> dims(static_cast<std::size_t>(n), 0);
    // odometer over {0..cap}^n in ascending lexicographic order
    while (true) {
        int i = n - 1;
        while (i >= 0 && dims[static_cast<std::size_t>(i)] == cap) {
            dims[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++dims[static_cast<std::size_t>(i)];
        DimensionVector alpha(dims);
        if (has_simple(QuiverSetting(q, alpha)).exists) out.push_back(std::move(alpha));
    }
    return out;
}

bool is_valid_decomposition(const QuiverSetting& s, const Decomposition& d) {
    const int n = s.quiver.vertex_count();
    std::vector<Int> sum(static_cast<std::size_t>(n), 0);
    std::map<std::vector<Int>, int> unique_class_factors;
    for (const DecompositionFactor& f : d.factors) {
        if (f.multiplicity < 1 || f.beta.count() != n) return false;
        SimpleClassInfo info = has_simple(QuiverSetting(s.quiver, f.beta));
        if (!info.exists) return false;
        if (info.class_count == ClassCount::One &&
            ++unique_class_factors[f.beta.values()] > 1)
            return false;
        for (int v = 0; v < n; ++v) sum[static_cast<std::size_t>(v)] += f.multiplicity * f.beta[v];
    }
    return DimensionVector(sum) == s.alpha;
}

namespace {

struct DecompositionSearch {
    const QuiverSetting& s;
    std::size_t limit;
    std::vector<DimensionVector> candidates;  // descending lexicographic
    std::vector<bool> unique_class;           // per candidate
    std::vector<DecompositionFactor> current;
    DecompositionList out;

    DecompositionSearch(const QuiverSetting& setting, std::size_t lim) : s(setting), limit(lim) {
        const int n = s.quiver.vertex_count();
        std::vector<Int> beta(static_cast<std::size_t>(n), 0);
        gather(beta, 0);
        std::sort(candidates.begin(), candidates.end(),
                  [](const DimensionVector& a, const DimensionVector& b) {
                      return a.values() > b.values();
                  });
        unique_class.reserve(candidates.size());
        for (const DimensionVector& c : candidates) {
            SimpleClassInfo info = has_simple(QuiverSetting(s.quiver, c));
            unique_class.push_back(info.class_count == ClassCount::One);
        }
    }

    // all nonzero beta <= alpha componentwise with simples
    void gather(std::vector<Int>& beta, int v) {
        if (v == s.quiver.vertex_count()) {
            DimensionVector b(beta);
            if (b.total() > 0 && has_simple(QuiverSetting(s.quiver, b)).exists)
                candidates.push_back(std::move(b));
            return;
        }
        for (Int d = 0; d <= s.alpha[v]; ++d) {
            beta[static_cast<std::size_t>(v)] = d;
            gather(beta, v + 1);
        }
        beta[static_cast<std::size_t>(v)] = 0;
    }

    // searches for limit + 1 results so the truncation flag is exact
    bool full() const { return out.items.size() > limit; }

    void emit() {
        if (!full()) out.items.push_back(Decomposition{current});
    }

    static Int max_multiple(const DimensionVector& beta, const std::vector<Int>& remaining) {
        Int m = -1;
        for (int v = 0; v < beta.count(); ++v) {
            if (beta[v] == 0) continue;
            Int q = remaining[static_cast<std::size_t>(v)] / beta[v];
            m = (m < 0) ? q : std::min(m, q);
        }
        return m < 0 ? 0 : m;
    }

    void search(std::size_t idx, std::vector<Int>& remaining, Int remaining_total) {
        if (full()) return;
        if (remaining_total == 0) {
            emit();
            return;
        }
        if (idx == candidates.size()) return;
        use(idx, remaining, remaining_total, std::numeric_limits<Int>::max());
        search(idx + 1, remaining, remaining_total);
    }

    // Adds factors (beta_idx, a) with non-increasing multiplicities; a beta
    // with a unique simple class gets at most one factor.
    void use(std::size_t idx, std::vector<Int>& remaining, Int remaining_total, Int part_cap) {
        if (full()) return;
        const DimensionVector& beta = candidates[idx];
        const Int beta_total = beta.total();
        Int top = std::min(part_cap, max_multiple(beta, remaining));
        for (Int a = top; a >= 1; --a) {
            current.push_back({beta, a});
            for (int v = 0; v < beta.count(); ++v)
                remaining[static_cast<std::size_t>(v)] -= a * beta[v];
            search(idx + 1, remaining, remaining_total - a * beta_total);
            if (!unique_class[idx])
                use(idx, remaining, remaining_total - a * beta_total, a);
            for (int v = 0; v < beta.count(); ++v)
                remaining[static_cast<std::size_t>(v)] += a * beta[v];
            current.pop_back();
        }
    }
};

}  // namespace

DecompositionList enumerate_decompositions(const QuiverSetting& s, std::size_t limit) {
    if (!s.genuine())
        throw std::invalid_argument("enumerate_decompositions: setting must be genuine");
    DecompositionSearch search(s, limit);
    std::vector<Int> remaining = s.alpha.values();
    search.search(0, remaining, s.alpha.total());
    if (search.out.items.size() > limit) {
        search.out.items.pop_back();
        search.out.truncated = true;
    }
    return std::move(search.out);
}

}  // namespace quivarity
