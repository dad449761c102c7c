#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quivarity/quiver.hpp"

namespace quivarity {

enum class ClassCount { Zero, One, Infinite };

struct SimpleClassInfo {
    bool exists = false;
    ClassCount class_count = ClassCount::Zero;
    /// 1 - chi(alpha, alpha); only set when simples exist.
    std::optional<Int> iss_dimension;
};

/// Decides whether simple representations of the given dimension vector
/// exist. Zero-dimension vertices are stripped first. Existence holds iff
/// the stripped quiver is a lone vertex, a lone vertex with one loop, or an
/// oriented cycle on >= 2 vertices with alpha all ones, or it is none of
/// those, strongly connected, and chi(alpha, eps_v) <= 0 and
/// chi(eps_v, alpha) <= 0 for every vertex. There is a unique simple class
/// exactly for the lone loopless vertex; otherwise the classes form a
/// positive-dimensional family.
SimpleClassInfo has_simple(const QuiverSetting& s);

/// All dimension vectors with entries in [1, cap] on some nonempty support
/// (zero outside it) whose support-restricted setting admits simples.
/// Output in ascending lexicographic order over the canonical vertex order.
/// Requires cap >= 1.
std::vector<DimensionVector> enumerate_simple_dimvectors(const Quiver& q, Int cap);

/// One summand type of a semisimple dimension-vector decomposition: the
/// dimension vector of a simple factor and its multiplicity.
struct DecompositionFactor {
    DimensionVector beta;
    Int multiplicity = 1;

    friend bool operator==(const DecompositionFactor&, const DecompositionFactor&) = default;
};

/// A multiset of factors with sum(multiplicity * beta) = alpha. Factors
/// with equal beta stand for distinct simple classes, so a beta with a
/// unique simple class may appear in at most one factor.
struct Decomposition {
    std::vector<DecompositionFactor> factors;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct DecompositionList {
    std::vector<Decomposition> items;
    bool truncated = false;
};

/// Enumerates decompositions of alpha into simple dimension vectors, in a
/// deterministic order with the trivial decomposition 1*alpha first when
/// alpha itself is simple. Stops after `limit` results and sets the
/// truncation flag. Requires a genuine setting.
DecompositionList enumerate_decompositions(const QuiverSetting& s, std::size_t limit = 10000);

/// Validates the Decomposition invariants against a setting.
bool is_valid_decomposition(const QuiverSetting& s, const Decomposition& d);

}  // namespace quivarity
