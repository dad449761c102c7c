#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quivarity/quiver.hpp"
#include "quivarity/simples.hpp"

namespace quivarity {

/// The quiver setting describing the quotient space around a semisimple
/// point with the given decomposition: one vertex per factor with dimension
/// equal to the multiplicity, and delta_ij - chi(beta_i, beta_j) arrows
/// from factor j to factor i (chi taken in the original quiver).
struct LocalQuiverSetting {
    QuiverSetting setting;
    Decomposition provenance;
};

/// Builds the local quiver setting of a decomposition. Factor vertices are
/// named s1, s2, ... in factor order (zero-padded when ten or more).
/// Throws std::invalid_argument when the decomposition is invalid or a
/// computed arrow count is negative.
LocalQuiverSetting local_quiver(const QuiverSetting& s, const Decomposition& d);

struct LocalWitness {
    Decomposition decomposition;
    QuiverSetting local;
    /// A minimized non-coregular subquiver setting of `local`.
    QuiverSetting minimal;
};

struct LocalConsistencyReport {
    bool setting_coregular = false;
    std::size_t decompositions_checked = 0;
    bool truncated = false;
    /// Coregular settings must have only coregular local quivers; anything
    /// listed here is a bug witness.
    std::vector<LocalWitness> bug_witnesses;
    /// For non-coregular settings: a non-coregular local quiver found among
    /// the enumerated decompositions, minimized. Absence within the limit
    /// is inconclusive.
    std::optional<LocalWitness> counterexample;
};

/// Classifies every local quiver of up to `limit` decompositions and
/// cross-checks the verdict of the setting itself. Requires a genuine
/// setting.
LocalConsistencyReport local_consistency_check(const QuiverSetting& s, std::size_t limit);

/// Greedily removes arrows, then arrowless vertices, while the setting
/// stays non-coregular. Used to shrink witnesses.
QuiverSetting minimize_non_coregular(const QuiverSetting& s);

}  // namespace quivarity
