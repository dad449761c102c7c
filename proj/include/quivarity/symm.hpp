#pragma once

#include <string>
#include <vector>

#include "quivarity/quiver.hpp"

namespace quivarity {

/// Splitting of a symmetric quiver setting at its dimension-1 articulation
/// vertices. Components pairwise intersect only in junction vertices and
/// their arrow sets partition the arrows of the input.
struct ConnectedSumDecomposition {
    std::vector<QuiverSetting> components;
    std::vector<std::string> junction_vertices;
};

/// Requires a genuine, symmetric, strongly connected, loopless setting.
ConnectedSumDecomposition connected_sum_decompose(const QuiverSetting& s);

/// Independent coregularity test for symmetric strongly connected loopless
/// settings: true iff every connected-sum component is one of the four
/// prime shapes
///   I    n <-> m, single arrows;
///   II   1 <-> n with k parallel arrows each way, k <= n;
///   III  1 <-> n <-> m path, single arrows;
///   IV   n <-> 2 <-> m path, single arrows;
/// matched up to graph isomorphism respecting dimensions. (A lone arrowless
/// vertex is accepted as the degenerate empty sum.)
bool classify_symmetric(const QuiverSetting& s);

}  // namespace quivarity
