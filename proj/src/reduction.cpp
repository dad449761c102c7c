#include "quivarity/reduction.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace quivarity {

namespace {

void require_vertex(const QuiverSetting& s, int v) {
    if (v < 0 || v >= s.quiver.vertex_count())
        throw std::invalid_argument("reduction: unknown vertex");
}

bool has_incident_arrow(const QuiverSetting& s, int v) {
    for (const Arrow& a : s.quiver.arrows())
        if (a.src == v || a.dst == v) return true;
    return false;
}

QuiverSetting remove_vertex(const QuiverSetting& s, int v, std::vector<Arrow> extra_arrows) {
    const int n = s.quiver.vertex_count();
    std::vector<std::string> ids;
    std::vector<Int> dims;
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        remap[static_cast<std::size_t>(w)] = static_cast<int>(ids.size());
        ids.push_back(s.quiver.vertex_id(w));
        dims.push_back(s.alpha[w]);
    }
    std::vector<Arrow> arrows;
    for (const Arrow& a : s.quiver.arrows()) {
        if (a.src == v || a.dst == v) continue;
        arrows.push_back({remap[static_cast<std::size_t>(a.src)], remap[static_cast<std::size_t>(a.dst)]});
    }
    for (const Arrow& a : extra_arrows)
        arrows.push_back({remap[static_cast<std::size_t>(a.src)], remap[static_cast<std::size_t>(a.dst)]});
    return QuiverSetting(Quiver::from_indexed(std::move(ids), std::move(arrows)),
                         DimensionVector(std::move(dims)));
}

}  // namespace

const char* terminal_name(TerminalKind t) {
    switch (t) {
        case TerminalKind::LoneVertex: return "T1";
        case TerminalKind::OneLoop: return "T2";
        case TerminalKind::TwoLoopsDimTwo: return "T3";
    }
    return "?";
}

Int terminal_dimension(TerminalKind t, Int vertex_dim) {
    switch (t) {
        case TerminalKind::LoneVertex: return 0;
        case TerminalKind::OneLoop: return vertex_dim;
        case TerminalKind::TwoLoopsDimTwo: return 5;
    }
    return 0;
}

bool applicable_RI(const QuiverSetting& s, int v) {
    require_vertex(s, v);
    if (s.quiver.loop_count(v) > 0) return false;
    // Deleting an isolated vertex would erase a lone-vertex terminal, so RI
    // is restricted to vertices that actually have arrows to compose.
    if (!has_incident_arrow(s, v)) return false;
    return chi_alpha_eps(s, v) >= 0 || chi_eps_alpha(s, v) >= 0;
}

QuiverSetting apply_RI(const QuiverSetting& s, int v,
                       std::vector<std::pair<std::string, std::string>>* created) {
    if (!applicable_RI(s, v)) throw std::invalid_argument("RI: not applicable");
    std::vector<int> in_sources, out_targets;
    for (const Arrow& a : s.quiver.arrows()) {
        if (a.dst == v) in_sources.push_back(a.src);
        if (a.src == v) out_targets.push_back(a.dst);
    }
    std::vector<Arrow> composites;
    composites.reserve(in_sources.size() * out_targets.size());
    for (int i : in_sources)
        for (int u : out_targets) composites.push_back({i, u});
    if (created) {
        created->clear();
        for (const Arrow& a : composites)
            created->emplace_back(s.quiver.vertex_id(a.src), s.quiver.vertex_id(a.dst));
    }
    return remove_vertex(s, v, std::move(composites));
}

bool applicable_RII(const QuiverSetting& s, int v) {
    require_vertex(s, v);
    return s.alpha[v] == 1 && s.quiver.loop_count(v) >= 1;
}

QuiverSetting apply_RII(const QuiverSetting& s, int v, Int* k_out) {
    if (!applicable_RII(s, v)) throw std::invalid_argument("RII: not applicable");
    std::vector<Arrow> arrows;
    Int removed = 0;
    for (const Arrow& a : s.quiver.arrows()) {
        if (a.src == v && a.dst == v) {
            ++removed;
            continue;
        }
        arrows.push_back(a);
    }
    if (k_out) *k_out = removed;
    return QuiverSetting(Quiver::from_indexed(s.quiver.vertex_ids(), std::move(arrows)), s.alpha);
}

bool applicable_RIII_side(const QuiverSetting& s, int v, LoopSide side) {
    require_vertex(s, v);
    if (s.alpha[v] < 2 || s.quiver.loop_count(v) != 1) return false;
    // With exactly one loop, chi(eps_v, alpha) == -1 means the non-loop
    // incoming arrows carry total source dimension 1, i.e. there is exactly
    // one and it comes from a dimension-1 vertex (mirrored for outgoing).
    return side == LoopSide::Incoming ? chi_eps_alpha(s, v) == -1 : chi_alpha_eps(s, v) == -1;
}

bool applicable_RIII(const QuiverSetting& s, int v) {
    return applicable_RIII_side(s, v, LoopSide::Incoming) ||
           applicable_RIII_side(s, v, LoopSide::Outgoing);
}

QuiverSetting apply_RIII_side(const QuiverSetting& s, int v, LoopSide side, Int* k_out) {
    if (!applicable_RIII_side(s, v, side))
        throw std::invalid_argument("RIII: not applicable");
    const Int k = s.alpha[v];
    int pivot = -1;  // index of the unique non-loop arrow on the dim-1 side
    int loop = -1;
    const auto& arrows = s.quiver.arrows();
    for (int i = 0; i < static_cast<int>(arrows.size()); ++i) {
        const Arrow& a = arrows[static_cast<std::size_t>(i)];
        if (a.src == v && a.dst == v) {
            loop = i;
            continue;
        }
        bool matches = side == LoopSide::Incoming ? (a.dst == v && s.alpha[a.src] == 1)
                                                  : (a.src == v && s.alpha[a.dst] == 1);
        if (matches) pivot = i;
    }
    if (pivot < 0 || loop < 0) throw std::invalid_argument("RIII: not applicable");
    std::vector<Arrow> out;
    out.reserve(arrows.size() - 2 + static_cast<std::size_t>(k));
    for (int i = 0; i < static_cast<int>(arrows.size()); ++i) {
        if (i == loop || i == pivot) continue;
        out.push_back(arrows[static_cast<std::size_t>(i)]);
    }
    for (Int j = 0; j < k; ++j) out.push_back(arrows[static_cast<std::size_t>(pivot)]);
    if (k_out) *k_out = k;
    return QuiverSetting(Quiver::from_indexed(s.quiver.vertex_ids(), std::move(out)), s.alpha);
}

QuiverSetting apply_RIII(const QuiverSetting& s, int v, Int* k_out) {
    if (applicable_RIII_side(s, v, LoopSide::Incoming))
        return apply_RIII_side(s, v, LoopSide::Incoming, k_out);
    return apply_RIII_side(s, v, LoopSide::Outgoing, k_out);
}

namespace {

struct Move {
    StepKind kind;
    int vertex;
    LoopSide side;
};

std::vector<Move> applicable_moves(const QuiverSetting& s) {
    std::vector<Move> moves;
    const int n = s.quiver.vertex_count();
    for (int v = 0; v < n; ++v)
        if (applicable_RI(s, v)) moves.push_back({StepKind::RI, v, LoopSide::Incoming});
    for (int v = 0; v < n; ++v)
        if (applicable_RII(s, v)) moves.push_back({StepKind::RII, v, LoopSide::Incoming});
    for (int v = 0; v < n; ++v) {
        if (applicable_RIII_side(s, v, LoopSide::Incoming))
            moves.push_back({StepKind::RIII, v, LoopSide::Incoming});
        if (applicable_RIII_side(s, v, LoopSide::Outgoing))
            moves.push_back({StepKind::RIII, v, LoopSide::Outgoing});
    }
    return moves;
}

// First applicable step in canonical order: RI, then RII, then RIII, each
// scanning vertices in canonical order (RIII prefers the incoming side).
std::optional<Move> first_move(const QuiverSetting& s) {
    const int n = s.quiver.vertex_count();
    for (int v = 0; v < n; ++v)
        if (applicable_RI(s, v)) return Move{StepKind::RI, v, LoopSide::Incoming};
    for (int v = 0; v < n; ++v)
        if (applicable_RII(s, v)) return Move{StepKind::RII, v, LoopSide::Incoming};
    for (int v = 0; v < n; ++v) {
        if (applicable_RIII_side(s, v, LoopSide::Incoming))
            return Move{StepKind::RIII, v, LoopSide::Incoming};
        if (applicable_RIII_side(s, v, LoopSide::Outgoing))
            return Move{StepKind::RIII, v, LoopSide::Outgoing};
    }
    return std::nullopt;
}

ReductionStep apply_move(QuiverSetting& s, const Move& m, Int& polynomial_part) {
    ReductionStep step;
    step.kind = m.kind;
    step.vertex = s.quiver.vertex_id(m.vertex);
    switch (m.kind) {
        case StepKind::RI:
            s = apply_RI(s, m.vertex, &step.created_arrows);
            break;
        case StepKind::RII: {
            s = apply_RII(s, m.vertex, &step.k);
            polynomial_part += step.k;
            break;
        }
        case StepKind::RIII: {
            step.side = m.side;
            s = apply_RIII_side(s, m.vertex, m.side, &step.k);
            polynomial_part += step.k;
            break;
        }
    }
    return step;
}

}  // namespace

ReductionTrace reduce(const QuiverSetting& s, const ReduceOptions& options) {
    if (!s.genuine())
        throw std::invalid_argument("reduce: setting must be genuine (strip zero vertices first)");
    ReductionTrace trace;
    trace.final = s;
    if (options.strategy == ReduceOptions::Strategy::Canonical) {
        while (auto move = first_move(trace.final))
            trace.steps.push_back(apply_move(trace.final, *move, trace.polynomial_part));
        return trace;
    }
    std::mt19937_64 rng(options.seed);
    while (true) {
        std::vector<Move> moves = applicable_moves(trace.final);
        if (moves.empty()) break;
        std::size_t pick = static_cast<std::size_t>(rng() % moves.size());
        trace.steps.push_back(apply_move(trace.final, moves[pick], trace.polynomial_part));
    }
    return trace;
}

QuiverSetting replay(const QuiverSetting& s, const std::vector<ReductionStep>& steps) {
    QuiverSetting cur = s;
    for (const ReductionStep& step : steps) {
        int v = cur.quiver.vertex_index(step.vertex);
        if (v < 0) throw std::invalid_argument("replay: unknown vertex '" + step.vertex + "'");
        switch (step.kind) {
            case StepKind::RI: cur = apply_RI(cur, v); break;
            case StepKind::RII: cur = apply_RII(cur, v); break;
            case StepKind::RIII: cur = apply_RIII_side(cur, v, step.side); break;
        }
    }
    return cur;
}

std::optional<TerminalKind> is_terminal(const QuiverSetting& s) {
    if (s.quiver.vertex_count() != 1 || s.alpha[0] < 1) return std::nullopt;
    const int loops = s.quiver.arrow_count();  // single vertex: all arrows are loops
    if (loops == 0) return TerminalKind::LoneVertex;
    if (loops == 1) return TerminalKind::OneLoop;
    if (loops == 2 && s.alpha[0] == 2) return TerminalKind::TwoLoopsDimTwo;
    return std::nullopt;
}

Int Verdict::polynomial_part() const {
    Int total = 0;
    for (const ComponentResult& c : components) total += c.trace.polynomial_part;
    return total;
}

std::optional<Int> Verdict::total_dimension() const {
    if (!coregular) return std::nullopt;
    Int total = 0;
    for (const ComponentResult& c : components) {
        total += c.trace.polynomial_part;
        if (c.terminal) total += terminal_dimension(*c.terminal, c.trace.final.alpha[0]);
    }
    return total;
}

Verdict classify(const QuiverSetting& s, const ReduceOptions& options) {
    Verdict verdict;
    verdict.coregular = true;
    QuiverSetting genuine = strip_zero_vertices(s);
    for (QuiverSetting& component : scc_decompose(genuine)) {
        ComponentResult result;
        result.trace = reduce(component, options);
        result.terminal = is_terminal(result.trace.final);
        result.component = std::move(component);
        if (!result.terminal) verdict.coregular = false;
        verdict.components.push_back(std::move(result));
    }
    return verdict;
}

}  // namespace quivarity
