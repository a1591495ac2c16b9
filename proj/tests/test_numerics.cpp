#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qconcept/numerics.hpp"

using namespace qconcept;

namespace {

std::vector<cdouble> sample(double lo, double hi, int n, auto f) {
    std::vector<cdouble> out(n);
    const double dx = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[i] = f(lo + i * dx);
    return out;
}

}  // namespace

TEST_CASE("simpson integrates constants exactly") {
    const auto s = sample(0.0, 1.0, 101, [](double) { return 1.0; });
    CHECK(integrate(s, 0.01).real() == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("simpson is exact for x^2") {
    const auto s = sample(0.0, 1.0, 101, [](double x) { return x * x; });
    CHECK(integrate(s, 0.01).real() == Catch::Approx(1.0 / 3.0).margin(1e-12));
}

TEST_CASE("simpson reproduces the Gaussian integral") {
    const int n = 4097;
    const double dx = 20.0 / (n - 1);
    const auto s = sample(-10.0, 10.0, n, [](double x) { return std::exp(-x * x); });
    CHECK(integrate(s, dx).real() ==
          Catch::Approx(std::sqrt(std::numbers::pi)).margin(1e-10));
}

TEST_CASE("simpson rejects even sample counts") {
    const auto s = sample(0.0, 1.0, 100, [](double x) { return x; });
    CHECK_THROWS_AS(integrate(s, 1.0 / 99, quadrature_rule::simpson), bad_sample_count);
    // Trapezoid accepts them.
    CHECK(integrate(s, 1.0 / 99, quadrature_rule::trapezoid).real() ==
          Catch::Approx(0.5).margin(1e-9));
}

TEST_CASE("integrate validates dx and length") {
    const auto s = sample(0.0, 1.0, 5, [](double x) { return x; });
    CHECK_THROWS_AS(integrate(s, -0.25), std::invalid_argument);
    const std::vector<cdouble> two{1.0, 2.0};
    CHECK_THROWS_AS(integrate(two, 0.1), bad_sample_count);
}

TEST_CASE("integration is linear") {
    std::mt19937_64 rng(7);
    const auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<cdouble> f(101), g(101), combo(101);
    const cdouble alpha{1.7, -0.3}, beta{-0.4, 2.1};
    for (int i = 0; i < 101; ++i) {
        f[i] = {uniform(), uniform()};
        g[i] = {uniform(), uniform()};
        combo[i] = alpha * f[i] + beta * g[i];
    }
    const cdouble lhs = integrate(combo, 0.01);
    const cdouble rhs = alpha * integrate(f, 0.01) + beta * integrate(g, 0.01);
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("simpson shows fourth-order convergence on exp(-x^2)") {
    const double exact = std::sqrt(std::numbers::pi) * std::erf(4.0);
    const auto err = [&](int n) {
        const double dx = 8.0 / (n - 1);
        const auto s = sample(-4.0, 4.0, n, [](double x) { return std::exp(-x * x); });
        return std::abs(integrate(s, dx).real() - exact);
    };
    CHECK(err(17) / err(33) >= 8.0);
}

TEST_CASE("central derivative is exact for linear functions") {
    const auto s = sample(-2.0, 3.0, 51, [](double x) { return x; });
    const auto d = central_derivative(s, 0.1);
    REQUIRE(d.size() == s.size());
    for (const auto& v : d) CHECK(std::abs(v - cdouble{1.0, 0.0}) < 1e-10);
}

TEST_CASE("central derivative of sin is cos") {
    const int n = 2001;
    const double dx = 2.0 * std::numbers::pi / (n - 1);
    const auto s = sample(-std::numbers::pi, std::numbers::pi, n,
                          [](double x) { return std::sin(x); });
    const auto d = central_derivative(s, dx);
    double max_err = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = -std::numbers::pi + i * dx;
        max_err = std::max(max_err, std::abs(d[i].real() - std::cos(x)));
    }
    CHECK(max_err < 1e-5);
}

TEST_CASE("central derivative of constants vanishes") {
    const auto s = sample(0.0, 1.0, 21, [](double) { return 42.0; });
    for (const auto& v : central_derivative(s, 0.05)) CHECK(std::abs(v) < 1e-12);
}
