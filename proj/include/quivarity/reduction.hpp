#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivarity/quiver.hpp"

namespace quivarity {

/// The three rewriting steps of the reduction calculus:
///  RI   deletes a loopless vertex v with chi(alpha, eps_v) >= 0 or
///       chi(eps_v, alpha) >= 0, composing every incoming arrow with every
///       outgoing arrow;
///  RII  removes the k loops on a vertex of dimension 1, splitting off k
///       polynomial variables;
///  RIII removes the single loop on a vertex of dimension k >= 2 whose sole
///       non-loop arrow on one side connects to a dimension-1 vertex, and
///       multiplies that arrow k-fold, splitting off k variables.
enum class StepKind { RI, RII, RIII };

/// Which side of an RIII vertex carries the dimension-1 neighbor.
enum class LoopSide { Incoming, Outgoing };

struct ReductionStep {
    StepKind kind = StepKind::RI;
    std::string vertex;
    /// RI: the composite arrows created, as (from, to) id pairs.
    std::vector<std::pair<std::string, std::string>> created_arrows;
    /// RII: number of loops removed; RIII: dimension of the looped vertex.
    Int k = 0;
    /// RIII only.
    LoopSide side = LoopSide::Incoming;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    /// Total number of free polynomial variables split off (k per RII and
    /// per RIII application).
    Int polynomial_part = 0;
    QuiverSetting final;
};

/// The three reduced settings with a smooth quotient: a lone vertex, a lone
/// vertex with one loop, and a dimension-2 vertex with two loops.
enum class TerminalKind { LoneVertex, OneLoop, TwoLoopsDimTwo };

const char* terminal_name(TerminalKind t);  // "T1" / "T2" / "T3"

/// Number of free variables contributed by a terminal setting itself:
/// T1 -> 0, T2 -> vertex dimension, T3 -> 5.
Int terminal_dimension(TerminalKind t, Int vertex_dim);

bool applicable_RI(const QuiverSetting& s, int v);
bool applicable_RII(const QuiverSetting& s, int v);
bool applicable_RIII(const QuiverSetting& s, int v);
bool applicable_RIII_side(const QuiverSetting& s, int v, LoopSide side);

/// Applies RI at v. Optionally reports the composite arrows created.
/// Throws std::invalid_argument when not applicable.
QuiverSetting apply_RI(const QuiverSetting& s, int v,
                       std::vector<std::pair<std::string, std::string>>* created = nullptr);

/// Applies RII at v; reports the number of removed loops through *k_out.
QuiverSetting apply_RII(const QuiverSetting& s, int v, Int* k_out = nullptr);

/// Applies RIII at v. When both orientations are valid the incoming one is
/// preferred; use the _side variant to force an orientation.
QuiverSetting apply_RIII(const QuiverSetting& s, int v, Int* k_out = nullptr);
QuiverSetting apply_RIII_side(const QuiverSetting& s, int v, LoopSide side, Int* k_out = nullptr);

struct ReduceOptions {
    enum class Strategy { Canonical, Randomized };
    Strategy strategy = Strategy::Canonical;
    std::uint64_t seed = 0;

    static ReduceOptions canonical() { return {}; }
    static ReduceOptions randomized(std::uint64_t seed) {
        return {Strategy::Randomized, seed};
    }
};

/// Applies reduction steps until none is applicable. The canonical strategy
/// scans RI, then RII, then RIII over vertices in canonical order each
/// pass; the randomized strategy picks uniformly among all applicable
/// steps. Requires a genuine setting.
ReductionTrace reduce(const QuiverSetting& s, const ReduceOptions& options = {});

/// Re-applies a recorded list of steps; used to validate traces.
QuiverSetting replay(const QuiverSetting& s, const std::vector<ReductionStep>& steps);

/// Matches the three terminal settings exactly.
std::optional<TerminalKind> is_terminal(const QuiverSetting& s);

struct ComponentResult {
    QuiverSetting component;
    ReductionTrace trace;
    std::optional<TerminalKind> terminal;
};

struct Verdict {
    bool coregular = false;
    std::vector<ComponentResult> components;

    Int polynomial_part() const;
    /// polynomial_part plus terminal contributions; only defined when the
    /// setting is coregular.
    std::optional<Int> total_dimension() const;
};

/// Strips zero-dimension vertices, reduces every strongly connected
/// component, and reports coregularity: the quotient space is smooth iff
/// every component reduces to a terminal setting. The empty setting is
/// coregular.
Verdict classify(const QuiverSetting& s, const ReduceOptions& options = {});

}  // namespace quivarity
