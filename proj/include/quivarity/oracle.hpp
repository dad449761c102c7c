#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "quivarity/cycles.hpp"
#include "quivarity/quiver.hpp"

namespace quivarity {

/// A point of the representation space: one real matrix per arrow, of shape
/// alpha[target] x alpha[source]. Stored parallel to the quiver's canonical
/// arrow order.
struct Representation {
    std::vector<Eigen::MatrixXd> matrices;

    static Representation zero(const QuiverSetting& s);
    /// Zero everywhere except the identity on one loop arrow.
    static Representation loop_unit(const QuiverSetting& s, int arrow);
};

/// Standard-normal entries, reproducible across platforms (the normal
/// deviates are generated from the raw engine output, not from
/// std::normal_distribution).
Representation random_representation(const QuiverSetting& s, std::mt19937_64& rng);

/// A base change: one invertible block per vertex, acting on a
/// representation by W_a -> g[target] W_a g[source]^{-1}.
struct GaugeElement {
    std::vector<Eigen::MatrixXd> blocks;

    static GaugeElement identity(const QuiverSetting& s);
};

/// Random gauge with every block's condition number below max_condition
/// (resampled otherwise). Conjugating a cycle product loses roughly
/// eps * condition^2 of relative accuracy, so the default keeps trace
/// invariance well inside 1e-8.
GaugeElement random_gauge(const QuiverSetting& s, std::mt19937_64& rng,
                          double max_condition = 100.0);

/// Tr(W[c.arrows[0]] * W[c.arrows[1]] * ...). Throws on shape mismatch.
double eval_cycle_trace(const QuiverSetting& s, const Representation& w, const Cycle& c);

/// Throws std::invalid_argument when a block is singular or mis-shaped.
Representation apply_gauge(const QuiverSetting& s, const Representation& w,
                           const GaugeElement& g);

/// Jacobian of the trace-generator map at w: one row per cycle, one column
/// per matrix entry in canonical arrow order (row-major within an arrow).
/// The derivative of Tr(W_{a_1}...W_{a_p}) in entry (r, s) of W_a is the
/// (s, r) entry of the sum over occurrences of a of the cyclic product of
/// the remaining matrices.
Eigen::MatrixXd generator_jacobian(const QuiverSetting& s, const std::vector<Cycle>& generators,
                                   const Representation& w);

/// Estimates dim iss as the generic rank of the generator map: the maximum
/// over `samples` random representations of the numerical Jacobian rank
/// (singular values above tol * sigma_max). Generators default to the
/// quasi-primitive cycles of length <= |alpha|^2. Throws when the bound
/// admits no generators although the quiver has cycles.
Int estimate_iss_dimension(const QuiverSetting& s, int samples, double tol, std::uint64_t seed,
                           std::optional<Int> max_len = std::nullopt);

}  // namespace quivarity
