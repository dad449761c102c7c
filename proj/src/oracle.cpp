#include "quivarity/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace quivarity {

namespace {

Eigen::Index rows_of(const QuiverSetting& s, const Arrow& a) {
    return static_cast<Eigen::Index>(s.alpha[a.dst]);
}

Eigen::Index cols_of(const QuiverSetting& s, const Arrow& a) {
    return static_cast<Eigen::Index>(s.alpha[a.src]);
}

void check_shapes(const QuiverSetting& s, const Representation& w) {
    if (static_cast<int>(w.matrices.size()) != s.quiver.arrow_count())
        throw std::invalid_argument("representation: arrow count mismatch");
    for (int i = 0; i < s.quiver.arrow_count(); ++i) {
        const Arrow& a = s.quiver.arrows()[static_cast<std::size_t>(i)];
        const Eigen::MatrixXd& m = w.matrices[static_cast<std::size_t>(i)];
        if (m.rows() != rows_of(s, a) || m.cols() != cols_of(s, a))
            throw std::invalid_argument("representation: matrix shape mismatch");
    }
}

// uniform in [0, 1) from the top 53 bits of the engine output
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller; kept free of std::normal_distribution so streams are
// identical across standard libraries
double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    while (u1 == 0.0) u1 = uniform01(rng);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = gaussian(rng);
    return m;
}

}  // namespace

Representation Representation::zero(const QuiverSetting& s) {
    Representation w;
    w.matrices.reserve(static_cast<std::size_t>(s.quiver.arrow_count()));
    for (const Arrow& a : s.quiver.arrows())
        w.matrices.push_back(Eigen::MatrixXd::Zero(rows_of(s, a), cols_of(s, a)));
    return w;
}

Representation Representation::loop_unit(const QuiverSetting& s, int arrow) {
    if (arrow < 0 || arrow >= s.quiver.arrow_count())
        throw std::invalid_argument("loop_unit: arrow index out of range");
    const Arrow& a = s.quiver.arrows()[static_cast<std::size_t>(arrow)];
    if (a.src != a.dst) throw std::invalid_argument("loop_unit: arrow is not a loop");
    Representation w = zero(s);
    w.matrices[static_cast<std::size_t>(arrow)] =
        Eigen::MatrixXd::Identity(rows_of(s, a), cols_of(s, a));
    return w;
}

Representation random_representation(const QuiverSetting& s, std::mt19937_64& rng) {
    Representation w;
    w.matrices.reserve(static_cast<std::size_t>(s.quiver.arrow_count()));
    for (const Arrow& a : s.quiver.arrows())
        w.matrices.push_back(gaussian_matrix(rows_of(s, a), cols_of(s, a), rng));
    return w;
}

GaugeElement GaugeElement::identity(const QuiverSetting& s) {
    GaugeElement g;
    g.blocks.reserve(static_cast<std::size_t>(s.quiver.vertex_count()));
    for (int v = 0; v < s.quiver.vertex_count(); ++v) {
        Eigen::Index d = static_cast<Eigen::Index>(s.alpha[v]);
        g.blocks.push_back(Eigen::MatrixXd::Identity(d, d));
    }
    return g;
}

GaugeElement random_gauge(const QuiverSetting& s, std::mt19937_64& rng, double max_condition) {
    GaugeElement g;
    g.blocks.reserve(static_cast<std::size_t>(s.quiver.vertex_count()));
    for (int v = 0; v < s.quiver.vertex_count(); ++v) {
        Eigen::Index d = static_cast<Eigen::Index>(s.alpha[v]);
        while (true) {
            Eigen::MatrixXd candidate = gaussian_matrix(d, d, rng);
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(candidate);
            double smin = svd.singularValues()(d - 1);
            if (smin > 0 && svd.singularValues()(0) / smin <= max_condition) {
                g.blocks.push_back(std::move(candidate));
                break;
            }
        }
    }
    return g;
}

double eval_cycle_trace(const QuiverSetting& s, const Representation& w, const Cycle& c) {
    check_shapes(s, w);
    if (c.arrows.empty()) throw std::invalid_argument("eval_cycle_trace: empty cycle");
    for (int idx : c.arrows)
        if (idx < 0 || idx >= s.quiver.arrow_count())
            throw std::invalid_argument("eval_cycle_trace: arrow index out of range");
    Eigen::MatrixXd product = w.matrices[static_cast<std::size_t>(c.arrows.front())];
    for (std::size_t i = 1; i < c.arrows.size(); ++i) {
        const Eigen::MatrixXd& next = w.matrices[static_cast<std::size_t>(c.arrows[i])];
        if (product.cols() != next.rows())
            throw std::invalid_argument("eval_cycle_trace: shape mismatch along cycle");
        product = product * next;
    }
    if (product.rows() != product.cols())
        throw std::invalid_argument("eval_cycle_trace: cycle is not closed");
    return product.trace();
}

Representation apply_gauge(const QuiverSetting& s, const Representation& w,
                           const GaugeElement& g) {
    check_shapes(s, w);
    if (static_cast<int>(g.blocks.size()) != s.quiver.vertex_count())
        throw std::invalid_argument("gauge: block count mismatch");
    std::vector<Eigen::MatrixXd> inverses;
    inverses.reserve(g.blocks.size());
    for (int v = 0; v < s.quiver.vertex_count(); ++v) {
        const Eigen::MatrixXd& b = g.blocks[static_cast<std::size_t>(v)];
        Eigen::Index d = static_cast<Eigen::Index>(s.alpha[v]);
        if (b.rows() != d || b.cols() != d)
            throw std::invalid_argument("gauge: block shape mismatch");
        Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
        if (!lu.isInvertible()) throw std::invalid_argument("gauge: singular block");
        inverses.push_back(lu.inverse());
    }
    Representation out;
    out.matrices.reserve(w.matrices.size());
    for (int i = 0; i < s.quiver.arrow_count(); ++i) {
        const Arrow& a = s.quiver.arrows()[static_cast<std::size_t>(i)];
        out.matrices.push_back(g.blocks[static_cast<std::size_t>(a.dst)] *
                               w.matrices[static_cast<std::size_t>(i)] *
                               inverses[static_cast<std::size_t>(a.src)]);
    }
    return out;
}

Eigen::MatrixXd generator_jacobian(const QuiverSetting& s, const std::vector<Cycle>& generators,
                                   const Representation& w) {
    check_shapes(s, w);
    const int arrow_count = s.quiver.arrow_count();
    std::vector<Eigen::Index> offset(static_cast<std::size_t>(arrow_count) + 1, 0);
    for (int i = 0; i < arrow_count; ++i) {
        const Arrow& a = s.quiver.arrows()[static_cast<std::size_t>(i)];
        offset[static_cast<std::size_t>(i) + 1] =
            offset[static_cast<std::size_t>(i)] + rows_of(s, a) * cols_of(s, a);
    }
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(generators.size()),
                                                offset.back());
    for (std::size_t row = 0; row < generators.size(); ++row) {
        const std::vector<int>& arrows = generators[row].arrows;
        const std::size_t p = arrows.size();
        for (std::size_t i = 0; i < p; ++i) {
            const int arrow = arrows[i];
            const Arrow& a = s.quiver.arrows()[static_cast<std::size_t>(arrow)];
            // cyclic product of the other matrices, starting after position i
            Eigen::Index d = cols_of(s, a);
            Eigen::MatrixXd partial = Eigen::MatrixXd::Identity(d, d);
            for (std::size_t step = 1; step < p; ++step)
                partial = partial * w.matrices[static_cast<std::size_t>(arrows[(i + step) % p])];
            // d Tr / d W(r, s) accumulates partial(s, r)
            const Eigen::Index rows = rows_of(s, a);
            const Eigen::Index cols = cols_of(s, a);
            for (Eigen::Index r = 0; r < rows; ++r)
                for (Eigen::Index c = 0; c < cols; ++c)
                    jac(static_cast<Eigen::Index>(row),
                        offset[static_cast<std::size_t>(arrow)] + r * cols + c) += partial(c, r);
        }
    }
    return jac;
}

namespace {

bool has_cycle(const QuiverSetting& s) {
    for (const QuiverSetting& component : scc_decompose(s))
        if (component.quiver.arrow_count() > 0) return true;
    return false;
}

}  // namespace

Int estimate_iss_dimension(const QuiverSetting& s, int samples, double tol, std::uint64_t seed,
                           std::optional<Int> max_len) {
    if (samples < 1) throw std::invalid_argument("estimate_iss_dimension: samples must be >= 1");
    const Int bound = max_len.value_or(default_cycle_length_bound(s.alpha));
    std::vector<Cycle> generators =
        bound >= 1 ? quasi_primitive_cycles(s, bound) : std::vector<Cycle>{};
    if (generators.empty()) {
        if (s.alpha.total() > 0 && has_cycle(s))
            throw std::invalid_argument(
                "estimate_iss_dimension: no generators within the length bound");
        return 0;  // acyclic quivers have a trivial invariant ring
    }
    std::mt19937_64 rng(seed);
    Int best = 0;
    for (int i = 0; i < samples; ++i) {
        Representation w = random_representation(s, rng);
        Eigen::MatrixXd jac = generator_jacobian(s, generators, w);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
        const auto& sv = svd.singularValues();
        if (sv.size() == 0 || sv(0) == 0.0) continue;
        Int rank = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            if (sv(k) > tol * sv(0)) ++rank;
        best = std::max(best, rank);
    }
    return best;
}

}  // namespace quivarity
