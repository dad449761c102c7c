#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quivarity {

using Int = std::int64_t;

/// One arrow of a quiver, stored as indices into the owning quiver's
/// canonical (sorted) vertex list. Loops (src == dst) and parallel arrows
/// (repeated entries) are allowed.
struct Arrow {
    int src = 0;
    int dst = 0;

    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// A finite directed multigraph. Vertices are identified by opaque strings
/// and kept sorted lexicographically; arrows are kept sorted by
/// (src, dst), so equal quivers compare equal.
class Quiver {
public:
    Quiver() = default;

    /// Builds a quiver from vertex ids and (from, to) arrow pairs.
    /// Throws std::invalid_argument on duplicate vertex ids or on arrows
    /// with undeclared endpoints.
    Quiver(std::vector<std::string> vertex_ids,
           const std::vector<std::pair<std::string, std::string>>& arrows);

    /// Internal fast path: ids must already be sorted and unique, arrow
    /// indices in range. Arrows are re-canonicalized.
    static Quiver from_indexed(std::vector<std::string> sorted_ids,
                               std::vector<Arrow> arrows);

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertex_ids() const { return ids_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::string& vertex_id(int v) const { return ids_[static_cast<std::size_t>(v)]; }

    /// Index of a vertex id, or -1 when absent.
    int vertex_index(std::string_view id) const;

    int loop_count(int v) const;
    int arrow_count_between(int src, int dst) const;
    bool has_loops() const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::vector<std::string> ids_;
    std::vector<Arrow> arrows_;
};

/// A dimension vector, stored positionally over the canonical vertex order
/// of its quiver (entry i belongs to vertex_ids()[i]). Entries are
/// non-negative.
class DimensionVector {
public:
    DimensionVector() = default;
    explicit DimensionVector(std::vector<Int> dims);

    static DimensionVector ones(const Quiver& q);
    /// The indicator vector of a single vertex.
    static DimensionVector indicator(const Quiver& q, int v);

    Int operator[](int v) const { return dims_[static_cast<std::size_t>(v)]; }
    int count() const { return static_cast<int>(dims_.size()); }
    /// |alpha|, the sum of all entries.
    Int total() const;
    const std::vector<Int>& values() const { return dims_; }

    friend bool operator==(const DimensionVector&, const DimensionVector&) = default;

private:
    std::vector<Int> dims_;
};

/// A quiver together with a dimension vector.
struct QuiverSetting {
    Quiver quiver;
    DimensionVector alpha;

    QuiverSetting() = default;
    QuiverSetting(Quiver q, DimensionVector a);

    /// True when no vertex has dimension zero.
    bool genuine() const;

    friend bool operator==(const QuiverSetting&, const QuiverSetting&) = default;
};

/// The integer matrix of the Euler form of a quiver:
/// entry(i, j) = delta_ij - #{arrows j -> i}. A quiver is uniquely
/// determined by this matrix, see quiver_from_euler().
class EulerForm {
public:
    EulerForm(std::vector<std::string> vertex_ids, std::vector<Int> row_major);

    int size() const { return static_cast<int>(ids_.size()); }
    Int entry(int i, int j) const {
        return m_[static_cast<std::size_t>(i) * ids_.size() + static_cast<std::size_t>(j)];
    }
    const std::vector<std::string>& vertex_ids() const { return ids_; }
    const std::vector<Int>& row_major() const { return m_; }

    friend bool operator==(const EulerForm&, const EulerForm&) = default;

private:
    std::vector<std::string> ids_;
    std::vector<Int> m_;
};

EulerForm euler_matrix(const Quiver& q);

/// Inverse of euler_matrix. Throws std::invalid_argument when the matrix is
/// not of Euler-form shape (diagonal > 1 or positive off-diagonal entries).
Quiver quiver_from_euler(const EulerForm& e);

/// Evaluates the bilinear form a^T M b exactly. Accumulates in 128-bit and
/// throws std::overflow_error if the result leaves the 64-bit range.
/// Throws std::invalid_argument on an index-set mismatch.
Int chi(const EulerForm& e, const DimensionVector& a, const DimensionVector& b);

/// chi(alpha, eps_v) = alpha_v - sum of target dimensions over arrows
/// leaving v. Same value as chi(euler_matrix(q), alpha, indicator(v)).
Int chi_alpha_eps(const QuiverSetting& s, int v);

/// chi(eps_v, alpha) = alpha_v - sum of source dimensions over arrows
/// entering v.
Int chi_eps_alpha(const QuiverSetting& s, int v);

/// Strongly connected components in canonical order (sorted by smallest
/// vertex id). Each component keeps all arrows between its own vertices and
/// the restricted dimension vector; arrows between components are dropped.
std::vector<QuiverSetting> scc_decompose(const QuiverSetting& s);

bool is_strongly_connected(const Quiver& q);

/// Removes every vertex of dimension zero together with its incident
/// arrows. The result is genuine (possibly empty).
QuiverSetting strip_zero_vertices(const QuiverSetting& s);

/// Restriction of a setting to a subset of vertex indices, keeping all
/// arrows inside the subset.
QuiverSetting induced_subsetting(const QuiverSetting& s, const std::vector<int>& vertices);

/// Multiset subquiver test: every vertex of `small` is a vertex of `big`
/// and each arrow multiplicity in `small` is at most that in `big`.
bool is_subquiver(const Quiver& small, const Quiver& big);

/// True iff the Euler matrix is symmetric, i.e. arrow counts i->j and j->i
/// agree for every pair.
bool is_symmetric(const Quiver& q);

}  // namespace quivarity
