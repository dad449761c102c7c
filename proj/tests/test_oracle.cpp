#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/SVD>

#include "quivarity/oracle.hpp"
#include "quivarity/simples.hpp"
#include "test_support.hpp"

using namespace quivarity;
using test_support::make_setting;

namespace {

// central finite differences of the generator map, as an independent check
// of the analytic Jacobian
Eigen::MatrixXd fd_jacobian(const QuiverSetting& s, const std::vector<Cycle>& generators,
                            const Representation& w, double h) {
    Eigen::Index cols = 0;
    for (const Eigen::MatrixXd& m : w.matrices) cols += m.size();
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(generators.size()), cols);
    Eigen::Index col = 0;
    for (std::size_t arrow = 0; arrow < w.matrices.size(); ++arrow) {
        const Eigen::MatrixXd& m = w.matrices[arrow];
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                Representation plus = w, minus = w;
                plus.matrices[arrow](r, c) += h;
                minus.matrices[arrow](r, c) -= h;
                for (std::size_t g = 0; g < generators.size(); ++g)
                    jac(static_cast<Eigen::Index>(g), col) =
                        (eval_cycle_trace(s, plus, generators[g]) -
                         eval_cycle_trace(s, minus, generators[g])) /
                        (2 * h);
                ++col;
            }
    }
    return jac;
}

}  // namespace

TEST_CASE("eval_cycle_trace") {
    SUBCASE("zero representation") {
        auto s = make_setting({{"v", 2}}, {{"v", "v", 2}});
        Representation w = Representation::zero(s);
        for (const Cycle& c : quasi_primitive_cycles(s, 4))
            CHECK(eval_cycle_trace(s, w, c) == 0.0);
    }
    SUBCASE("identity loop evaluates to the dimension") {
        for (Int n : {1, 2, 3, 4}) {
            auto s = make_setting({{"v", n}}, {{"v", "v", 1}});
            Representation w = Representation::loop_unit(s, 0);
            CHECK(eval_cycle_trace(s, w, make_cycle({0})) == static_cast<double>(n));
        }
    }
    SUBCASE("hand-computed product of two loop matrices") {
        auto s = make_setting({{"v", 2}}, {{"v", "v", 2}});
        Representation w = Representation::zero(s);
        w.matrices[0] << 1, 2, 3, 4;   // X
        w.matrices[1] << 0, 1, 1, 0;   // Y
        CHECK(eval_cycle_trace(s, w, make_cycle({0, 1})) == doctest::Approx(5.0));
        // trace is rotation invariant
        CHECK(eval_cycle_trace(s, w, make_cycle({1, 0})) == doctest::Approx(5.0));
    }
    SUBCASE("shape mismatch is rejected") {
        auto s = make_setting({{"v", 2}}, {{"v", "v", 2}});
        Representation w = Representation::zero(s);
        w.matrices[0] = Eigen::MatrixXd::Zero(1, 1);
        CHECK_THROWS_AS(eval_cycle_trace(s, w, make_cycle({0})), std::invalid_argument);
    }
}

TEST_CASE("apply_gauge") {
    auto s = make_setting({{"a", 1}, {"v", 2}},
                          {{"a", "v", 1}, {"v", "a", 1}, {"v", "v", 1}});
    std::mt19937_64 rng(99);
    SUBCASE("identity gauge is a no-op") {
        Representation w = random_representation(s, rng);
        Representation same = apply_gauge(s, w, GaugeElement::identity(s));
        for (std::size_t i = 0; i < w.matrices.size(); ++i)
            CHECK((same.matrices[i] - w.matrices[i]).norm() == doctest::Approx(0.0));
    }
    SUBCASE("dimension-1 conjugation leaves loops alone") {
        auto lone = make_setting({{"v", 1}}, {{"v", "v", 1}});
        Representation w = random_representation(lone, rng);
        GaugeElement g = GaugeElement::identity(lone);
        g.blocks[0](0, 0) = 3.25;
        Representation out = apply_gauge(lone, w, g);
        CHECK(out.matrices[0](0, 0) == doctest::Approx(w.matrices[0](0, 0)));
    }
    SUBCASE("traces are gauge invariant") {
        auto generators = quasi_primitive_cycles(s, 9);
        REQUIRE(!generators.empty());
        for (int trial = 0; trial < 100; ++trial) {
            Representation w = random_representation(s, rng);
            GaugeElement g = random_gauge(s, rng);
            Representation tw = apply_gauge(s, w, g);
            for (const Cycle& c : generators) {
                double f = eval_cycle_trace(s, w, c);
                double ft = eval_cycle_trace(s, tw, c);
                CHECK(std::abs(ft - f) <= 1e-8 * (1.0 + std::abs(f)));
            }
        }
    }
    SUBCASE("singular blocks are rejected") {
        Representation w = random_representation(s, rng);
        GaugeElement g = GaugeElement::identity(s);
        g.blocks[1].setZero();
        CHECK_THROWS_AS(apply_gauge(s, w, g), std::invalid_argument);
    }
}

TEST_CASE("analytic jacobian matches finite differences") {
    std::mt19937_64 rng(2024);
    std::vector<QuiverSetting> settings = {
        make_setting({{"v", 2}}, {{"v", "v", 2}}),
        make_setting({{"a", 1}, {"b", 1}, {"c", 1}}, {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}}),
        make_setting({{"a", 1}, {"v", 2}}, {{"a", "v", 1}, {"v", "a", 1}, {"v", "v", 1}}),
    };
    for (const QuiverSetting& s : settings) {
        auto generators = quasi_primitive_cycles(s, default_cycle_length_bound(s.alpha));
        for (int point = 0; point < 4; ++point) {
            Representation w = random_representation(s, rng);
            Eigen::MatrixXd analytic = generator_jacobian(s, generators, w);
            Eigen::MatrixXd numeric = fd_jacobian(s, generators, w, 1e-6);
            REQUIRE(analytic.rows() == numeric.rows());
            REQUIRE(analytic.cols() == numeric.cols());
            for (Eigen::Index r = 0; r < analytic.rows(); ++r)
                for (Eigen::Index c = 0; c < analytic.cols(); ++c) {
                    double scale = std::max(std::abs(analytic(r, c)), std::abs(numeric(r, c)));
                    CHECK(std::abs(analytic(r, c) - numeric(r, c)) <= 1e-4 * (1.0 + scale));
                }
        }
    }
}

TEST_CASE("estimate_iss_dimension") {
    SUBCASE("one loop at dimension one") {
        auto s = make_setting({{"v", 1}}, {{"v", "v", 1}});
        CHECK(estimate_iss_dimension(s, 4, 1e-8, 1) == 1);
    }
    SUBCASE("two loops at dimension two") {
        auto s = make_setting({{"v", 2}}, {{"v", "v", 2}});
        CHECK(estimate_iss_dimension(s, 8, 1e-8, 1) == 5);
    }
    SUBCASE("oriented 3-cycle with ones") {
        auto s = make_setting({{"a", 1}, {"b", 1}, {"c", 1}},
                              {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
        CHECK(estimate_iss_dimension(s, 4, 1e-8, 1) == 1);
    }
    SUBCASE("acyclic settings have dimension zero") {
        auto s = make_setting({{"a", 2}, {"b", 3}}, {{"a", "b", 2}});
        CHECK(estimate_iss_dimension(s, 2, 1e-8, 1) == 0);
    }
    SUBCASE("a too-small bound on a cycle-bearing quiver is an error") {
        auto s = make_setting({{"a", 1}, {"b", 1}}, {{"a", "b", 1}, {"b", "a", 1}});
        CHECK_THROWS_AS(estimate_iss_dimension(s, 2, 1e-8, 1, Int{1}), std::invalid_argument);
    }
    SUBCASE("deterministic in the seed") {
        auto s = make_setting({{"v", 2}}, {{"v", "v", 2}});
        CHECK(estimate_iss_dimension(s, 3, 1e-8, 42) == estimate_iss_dimension(s, 3, 1e-8, 42));
    }
}

TEST_CASE("rank never drops when generators are added") {
    auto s = make_setting({{"v", 2}}, {{"v", "v", 2}});
    auto generators = quasi_primitive_cycles(s, 4);
    std::mt19937_64 rng(5);
    Representation w = random_representation(s, rng);
    auto rank_of = [&](std::size_t prefix) {
        std::vector<Cycle> subset(generators.begin(),
                                  generators.begin() + static_cast<std::ptrdiff_t>(prefix));
        if (subset.empty()) return Int{0};
        Eigen::MatrixXd jac = generator_jacobian(s, subset, w);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
        Int rank = 0;
        for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
            if (svd.singularValues()(k) > 1e-8 * svd.singularValues()(0)) ++rank;
        return rank;
    };
    Int previous = 0;
    for (std::size_t prefix = 0; prefix <= generators.size(); ++prefix) {
        Int rank = rank_of(prefix);
        CHECK(rank >= previous);
        previous = rank;
    }
    CHECK(previous == 5);
}

TEST_CASE("gaussian sampling is reproducible") {
    auto s = make_setting({{"v", 3}}, {{"v", "v", 1}});
    std::mt19937_64 a(7), b(7);
    Representation wa = random_representation(s, a);
    Representation wb = random_representation(s, b);
    CHECK(wa.matrices[0] == wb.matrices[0]);
}
