#include "quivarity/quiver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace quivarity {

namespace {

void sort_arrows(std::vector<Arrow>& arrows) {
    std::sort(arrows.begin(), arrows.end());
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertex_ids,
               const std::vector<std::pair<std::string, std::string>>& arrows) {
    std::sort(vertex_ids.begin(), vertex_ids.end());
    if (std::adjacent_find(vertex_ids.begin(), vertex_ids.end()) != vertex_ids.end())
        throw std::invalid_argument("quiver: duplicate vertex id");
    ids_ = std::move(vertex_ids);
    arrows_.reserve(arrows.size());
    for (const auto& [from, to] : arrows) {
        int s = vertex_index(from);
        int t = vertex_index(to);
        if (s < 0 || t < 0)
            throw std::invalid_argument("quiver: arrow endpoint '" + (s < 0 ? from : to) +
                                        "' is not a declared vertex");
        arrows_.push_back({s, t});
    }
    sort_arrows(arrows_);
}

Quiver Quiver::from_indexed(std::vector<std::string> sorted_ids, std::vector<Arrow> arrows) {
    Quiver q;
    q.ids_ = std::move(sorted_ids);
    for (const Arrow& a : arrows) {
        if (a.src < 0 || a.src >= q.vertex_count() || a.dst < 0 || a.dst >= q.vertex_count())
            throw std::invalid_argument("quiver: arrow index out of range");
    }
    q.arrows_ = std::move(arrows);
    sort_arrows(q.arrows_);
    return q;
}

int Quiver::vertex_index(std::string_view id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return static_cast<int>(it - ids_.begin());
}

int Quiver::loop_count(int v) const {
    int n = 0;
    for (const Arrow& a : arrows_)
        if (a.src == v && a.dst == v) ++n;
    return n;
}

int Quiver::arrow_count_between(int src, int dst) const {
    int n = 0;
    for (const Arrow& a : arrows_)
        if (a.src == src && a.dst == dst) ++n;
    return n;
}

bool Quiver::has_loops() const {
    for (const Arrow& a : arrows_)
        if (a.src == a.dst) return true;
    return false;
}

DimensionVector::DimensionVector(std::vector<Int> dims) : dims_(std::move(dims)) {
    for (Int d : dims_)
        if (d < 0) throw std::invalid_argument("dimension vector: negative entry");
}

DimensionVector DimensionVector::ones(const Quiver& q) {
    return DimensionVector(std::vector<Int>(static_cast<std::size_t>(q.vertex_count()), 1));
}

DimensionVector DimensionVector::indicator(const Quiver& q, int v) {
    std::vector<Int> d(static_cast<std::size_t>(q.vertex_count()), 0);
    d.at(static_cast<std::size_t>(v)) = 1;
    return DimensionVector(std::move(d));
}

Int DimensionVector::total() const {
    Int t = 0;
    for (Int d : dims_) t += d;
    return t;
}

QuiverSetting::QuiverSetting(Quiver q, DimensionVector a)
    : quiver(std::move(q)), alpha(std::move(a)) {
    if (alpha.count() != quiver.vertex_count())
        throw std::invalid_argument("quiver setting: dimension vector size mismatch");
}

bool QuiverSetting::genuine() const {
    for (int v = 0; v < quiver.vertex_count(); ++v)
        if (alpha[v] == 0) return false;
    return true;
}

EulerForm::EulerForm(std::vector<std::string> vertex_ids, std::vector<Int> row_major)
    : ids_(std::move(vertex_ids)), m_(std::move(row_major)) {
    if (m_.size() != ids_.size() * ids_.size())
        throw std::invalid_argument("euler form: matrix size mismatch");
}

EulerForm euler_matrix(const Quiver& q) {
    const std::size_t n = static_cast<std::size_t>(q.vertex_count());
    std::vector<Int> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    // entry (i, j) counts arrows j -> i negatively
    for (const Arrow& a : q.arrows())
        m[static_cast<std::size_t>(a.dst) * n + static_cast<std::size_t>(a.src)] -= 1;
    return EulerForm(q.vertex_ids(), std::move(m));
}

Quiver quiver_from_euler(const EulerForm& e) {
    const int n = e.size();
    std::vector<Arrow> arrows;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Int delta = (i == j) ? 1 : 0;
            Int count = delta - e.entry(i, j);
            if (count < 0)
                throw std::invalid_argument("euler form: not a quiver matrix");
            for (Int k = 0; k < count; ++k) arrows.push_back({j, i});
        }
    }
    return Quiver::from_indexed(e.vertex_ids(), std::move(arrows));
}

Int chi(const EulerForm& e, const DimensionVector& a, const DimensionVector& b) {
    const int n = e.size();
    if (a.count() != n || b.count() != n)
        throw std::invalid_argument("chi: index-set mismatch");
    __int128 acc = 0;
    for (int i = 0; i < n; ++i) {
        __int128 row = 0;
        for (int j = 0; j < n; ++j)
            row += static_cast<__int128>(e.entry(i, j)) * b[j];
        acc += static_cast<__int128>(a[i]) * row;
    }
    if (acc > std::numeric_limits<Int>::max() || acc < std::numeric_limits<Int>::min())
        throw std::overflow_error("chi: value out of 64-bit range");
    return static_cast<Int>(acc);
}

Int chi_alpha_eps(const QuiverSetting& s, int v) {
    Int out = 0;
    for (const Arrow& a : s.quiver.arrows())
        if (a.src == v) out += s.alpha[a.dst];
    return s.alpha[v] - out;
}

Int chi_eps_alpha(const QuiverSetting& s, int v) {
    Int in = 0;
    for (const Arrow& a : s.quiver.arrows())
        if (a.dst == v) in += s.alpha[a.src];
    return s.alpha[v] - in;
}

namespace {

// Iterative Tarjan; returns component index per vertex.
struct TarjanState {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> index, low, comp;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int next_index = 0;
    int comp_count = 0;

    explicit TarjanState(const std::vector<std::vector<int>>& adjacency)
        : adj(adjacency),
          index(adjacency.size(), -1),
          low(adjacency.size(), 0),
          comp(adjacency.size(), -1),
          on_stack(adjacency.size(), false) {}

    void run(int root) {
        struct Frame {
            int v;
            std::size_t next_child;
        };
        std::vector<Frame> frames;
        frames.push_back({root, 0});
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& children = adj[static_cast<std::size_t>(f.v)];
            if (f.next_child < children.size()) {
                int w = children[f.next_child++];
                if (index[static_cast<std::size_t>(w)] == -1) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] =
                        next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], index[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().v;
                    low[static_cast<std::size_t>(parent)] =
                        std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
                }
                if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = false;
                        comp[static_cast<std::size_t>(w)] = comp_count;
                        if (w == v) break;
                    }
                    ++comp_count;
                }
            }
        }
    }
};

}  // namespace

std::vector<QuiverSetting> scc_decompose(const QuiverSetting& s) {
    const int n = s.quiver.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Arrow& a : s.quiver.arrows())
        adj[static_cast<std::size_t>(a.src)].push_back(a.dst);

    TarjanState tarjan(adj);
    for (int v = 0; v < n; ++v)
        if (tarjan.index[static_cast<std::size_t>(v)] == -1) tarjan.run(v);

    std::vector<std::vector<int>> members(static_cast<std::size_t>(tarjan.comp_count));
    for (int v = 0; v < n; ++v)
        members[static_cast<std::size_t>(tarjan.comp[static_cast<std::size_t>(v)])].push_back(v);
    // canonical order: by smallest vertex index (ids are sorted, so this is
    // the smallest id as well)
    std::sort(members.begin(), members.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });

    std::vector<QuiverSetting> result;
    result.reserve(members.size());
    for (const auto& vs : members) result.push_back(induced_subsetting(s, vs));
    return result;
}

bool is_strongly_connected(const Quiver& q) {
    if (q.vertex_count() <= 1) return true;
    QuiverSetting s(q, DimensionVector::ones(q));
    return scc_decompose(s).size() == 1;
}

QuiverSetting induced_subsetting(const QuiverSetting& s, const std::vector<int>& vertices) {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> remap(static_cast<std::size_t>(s.quiver.vertex_count()), -1);
    std::vector<std::string> ids;
    std::vector<Int> dims;
    ids.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        remap[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
        ids.push_back(s.quiver.vertex_id(sorted[i]));
        dims.push_back(s.alpha[sorted[i]]);
    }
    std::vector<Arrow> arrows;
    for (const Arrow& a : s.quiver.arrows()) {
        int ns = remap[static_cast<std::size_t>(a.src)];
        int nt = remap[static_cast<std::size_t>(a.dst)];
        if (ns >= 0 && nt >= 0) arrows.push_back({ns, nt});
    }
    return QuiverSetting(Quiver::from_indexed(std::move(ids), std::move(arrows)),
                         DimensionVector(std::move(dims)));
}

QuiverSetting strip_zero_vertices(const QuiverSetting& s) {
    std::vector<int> keep;
    for (int v = 0; v < s.quiver.vertex_count(); ++v)
        if (s.alpha[v] > 0) keep.push_back(v);
    if (static_cast<int>(keep.size()) == s.quiver.vertex_count()) return s;
    return induced_subsetting(s, keep);
}

bool is_subquiver(const Quiver& small, const Quiver& big) {
    for (const std::string& id : small.vertex_ids())
        if (big.vertex_index(id) < 0) return false;
    // multiset inclusion of arrows, matched through vertex ids
    for (int i = 0; i < small.vertex_count(); ++i) {
        for (int j = 0; j < small.vertex_count(); ++j) {
            int c = small.arrow_count_between(i, j);
            if (c == 0) continue;
            int bi = big.vertex_index(small.vertex_id(i));
            int bj = big.vertex_index(small.vertex_id(j));
            if (big.arrow_count_between(bi, bj) < c) return false;
        }
    }
    return true;
}

bool is_symmetric(const Quiver& q) {
    for (int i = 0; i < q.vertex_count(); ++i)
        for (int j = i + 1; j < q.vertex_count(); ++j)
            if (q.arrow_count_between(i, j) != q.arrow_count_between(j, i)) return false;
    return true;
}

}  // namespace quivarity
