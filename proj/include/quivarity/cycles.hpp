#pragma once

#include <vector>

#include "quivarity/quiver.hpp"

namespace quivarity {

/// A directed cycle, stored as arrow indices in composition order:
/// s(arrows[i]) = t(arrows[i+1]) cyclically, so the trace generator of the
/// cycle is Tr(W[arrows[0]] * W[arrows[1]] * ...). The sequence is kept in
/// its lexicographically least rotation, so cyclically equivalent cycles
/// compare equal.
struct Cycle {
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Canonicalizes an arrow sequence (in composition order) to its least
/// rotation.
Cycle make_cycle(std::vector<int> arrows_composition_order);

/// All cycles that visit each vertex at most once, up to cyclic
/// equivalence. Loops count as length-1 cycles; parallel arrows give
/// distinct cycles. Sorted by (length, arrows).
std::vector<Cycle> primitive_cycles(const Quiver& q);

/// All cycles of length <= max_len, up to cyclic equivalence, in which
/// every vertex visited more than once has dimension >= 2. Sorted by
/// (length, arrows). Requires max_len >= 1.
std::vector<Cycle> quasi_primitive_cycles(const QuiverSetting& s, Int max_len);

/// |alpha|^2: the generator length bound for the invariant ring (every
/// trace generator comes from a quasi-primitive cycle of at most this
/// length).
Int default_cycle_length_bound(const DimensionVector& alpha);

/// For a strongly connected genuine setting with alpha all ones, the
/// quotient is smooth iff the number of primitive cycles equals
/// #arrows - #vertices + 1. Throws on precondition violation.
bool coregular_alpha_one(const QuiverSetting& s);

}  // namespace quivarity
