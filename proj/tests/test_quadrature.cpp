#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "monocs/monopole.hpp"
#include "monocs/quadrature.hpp"

using monocs::QuadratureRule;

TEST_CASE("gauss_legendre_01 frozen small rules") {
    std::vector<double> x, w;
    monocs::gauss_legendre_01(1, x, w);
    CHECK(x[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-15));

    monocs::gauss_legendre_01(2, x, w);
    double d = 0.5 / std::sqrt(3.0);
    CHECK(x[0] == doctest::Approx(0.5 - d).epsilon(1e-15));
    CHECK(x[1] == doctest::Approx(0.5 + d).epsilon(1e-15));
    CHECK(w[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(monocs::gauss_legendre_01(0, x, w), std::invalid_argument);
}

TEST_CASE("gauss_legendre_01 nodes ordered inside (0,1), weights sum to one") {
    std::vector<double> x, w;
    for (int n : {1, 2, 3, 5, 8, 13, 21, 34}) {
        monocs::gauss_legendre_01(n, x, w);
        REQUIRE(static_cast<int>(x.size()) == n);
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            CHECK(x[i] > 0.0);
            CHECK(x[i] < 1.0);
            if (i > 0) CHECK(x[i] > x[i - 1]);
            CHECK(w[i] > 0.0);
            total += w[i];
        }
        CHECK(std::abs(total - 1.0) <= 1e-14);
    }
}

TEST_CASE("radial rule integrates monomials exactly through degree 2n-1 and not beyond") {
    std::vector<double> x, w;
    for (int n : {2, 3, 4, 7, 11}) {
        monocs::gauss_legendre_01(n, x, w);
        for (int d = 0; d <= 2 * n - 1; ++d) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += w[i] * std::pow(x[i], d);
            CHECK(std::abs(s - 1.0 / (d + 1)) <= 1e-14);
        }
        // first non-exact degree must show a real error while it is still
        // large enough to see (it shrinks like 16^-n)
        if (n <= 5) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += w[i] * std::pow(x[i], 2 * n);
            CHECK(std::abs(s - 1.0 / (2 * n + 1)) > 1e-9);
        }
    }
}

TEST_CASE("uniform angular grid kills every non-aliased harmonic") {
    for (int a : {3, 9, 15}) {
        for (int f = -(a - 1); f <= a - 1; ++f) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < a; ++k)
                s += std::polar(1.0, 2.0 * std::numbers::pi * f * k / a);
            s /= static_cast<double>(a);
            if (f == 0)
                CHECK(std::abs(s - 1.0) <= 1e-14);
            else
                CHECK(std::abs(s) <= 1e-14);
        }
        // frequency a aliases back to the constant
        std::complex<double> s = 0.0;
        for (int k = 0; k < a; ++k) s += std::polar(1.0, 2.0 * std::numbers::pi * a * k / a);
        CHECK(std::abs(s / static_cast<double>(a) - 1.0) <= 1e-12);
    }
}

TEST_CASE("make_quadrature validation and level sizing") {
    CHECK_THROWS_AS(monocs::make_quadrature(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(monocs::make_quadrature(5, 0), std::invalid_argument);

    QuadratureRule r = monocs::make_quadrature(7, 4);
    CHECK(r.angular_count == 7);
    CHECK(r.radial_count() == 4);
    CHECK(r.angular_exact_freq() == 6);
    CHECK(r.radial_exact_degree() == 7);

    monocs::SpinLevel lv = monocs::make_level(3, 2);  // quanta = 7
    QuadratureRule s = monocs::make_quadrature(lv);
    CHECK(s.angular_count == 15);
    CHECK(s.radial_count() == 11);
    CHECK(s.angular_exact_freq() >= lv.quanta());
    CHECK(s.radial_exact_degree() >= lv.quanta());
}
