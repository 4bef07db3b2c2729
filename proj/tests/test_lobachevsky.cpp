#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "entvol/lobachevsky.hpp"

using entvol::bloch_wigner;
using entvol::dilog;
using entvol::lobachevsky;
using entvol::lobachevsky_quadrature;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("pinned constants") {
    CHECK_THAT(entvol::ideal_tetrahedron_volume(), WithinAbs(1.0149416064096536, 1e-13));
    CHECK_THAT(entvol::ideal_octahedron_volume(), WithinAbs(3.663862376708876, 1e-13));
    CHECK_THAT(lobachevsky(pi / 6.0), WithinAbs(0.5074708032048268, 1e-13));
}

TEST_CASE("zeros, oddness and pi-periodicity") {
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK_THAT(lobachevsky(pi / 2.0), WithinAbs(0.0, 1e-13));
    CHECK_THAT(lobachevsky(pi), WithinAbs(0.0, 1e-13));
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double x = dist(rng);
        CHECK_THAT(lobachevsky(-x), WithinAbs(-lobachevsky(x), 1e-14));
        CHECK_THAT(lobachevsky(x + pi), WithinAbs(lobachevsky(x), 1e-13));
    }
}

TEST_CASE("series and quadrature routes agree") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(1e-4, pi - 1e-4);
    for (int i = 0; i < 200; ++i) {
        const double x = dist(rng);
        CHECK_THAT(lobachevsky_quadrature(x), WithinAbs(lobachevsky(x), 1e-12));
    }
    CHECK_THAT(lobachevsky_quadrature(pi / 3.0), WithinAbs(lobachevsky(pi / 3.0), 1e-13));
}

TEST_CASE("triplication identity") {
    // L(3x) = 3 L(x) + 3 L(x + pi/3) + 3 L(x - pi/3)
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double x = dist(rng);
        const double rhs =
            3.0 * (lobachevsky(x) + lobachevsky(x + pi / 3.0) + lobachevsky(x - pi / 3.0));
        CHECK_THAT(lobachevsky(3.0 * x), WithinAbs(rhs, 1e-13));
    }
}

TEST_CASE("dilog spot values") {
    CHECK_THAT(dilog(1.0).real(), WithinAbs(pi * pi / 6.0, 1e-14));
    CHECK_THAT(dilog(-1.0).real(), WithinAbs(-pi * pi / 12.0, 1e-14));
    const double li_half = pi * pi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0);
    CHECK_THAT(dilog(0.5).real(), WithinAbs(li_half, 1e-14));
    CHECK_THAT(dilog(0.5).imag(), WithinAbs(0.0, 1e-15));
    CHECK(std::abs(dilog(0.0)) == 0.0);
}

TEST_CASE("dilog inversion identity on random points") {
    // Li2(z) + Li2(1/z) = -pi^2/6 - log^2(-z)/2 for z off [0, 1]
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> mod(0.2, 5.0);
    std::uniform_real_distribution<double> arg(0.1, pi - 0.1);
    for (int i = 0; i < 100; ++i) {
        const std::complex<double> z = std::polar(mod(rng), arg(rng));
        const std::complex<double> lnz = std::log(-z);
        const std::complex<double> lhs = dilog(z) + dilog(1.0 / z);
        const std::complex<double> rhs = -pi * pi / 6.0 - 0.5 * lnz * lnz;
        CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("series and log-argument routes agree where both apply") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> re(-0.5, 0.4), im(-0.3, 0.3);
    for (int i = 0; i < 200; ++i) {
        const std::complex<double> z(re(rng), im(rng));
        if (std::abs(z) > 0.5) continue;
        CHECK_THAT(std::abs(entvol::detail::dilog_series(z) - entvol::detail::dilog_bernoulli(z)),
                   WithinAbs(0.0, 1e-14));
    }
}

TEST_CASE("Bloch-Wigner function") {
    // regular ideal tetrahedron: D(exp(i pi/3)) = 3 L(pi/3)
    const std::complex<double> w = std::polar(1.0, pi / 3.0);
    CHECK_THAT(bloch_wigner(w), WithinAbs(entvol::ideal_tetrahedron_volume(), 1e-13));
    CHECK(bloch_wigner(0.7) == 0.0);  // real arguments give zero

    // five-term symmetry D(z) = D(1 - 1/z) = D(1/(1 - z))
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.05, 2.0);
    for (int i = 0; i < 200; ++i) {
        const std::complex<double> z(re(rng), im(rng));
        const double d = bloch_wigner(z);
        CHECK_THAT(bloch_wigner(1.0 - 1.0 / z), WithinAbs(d, 1e-12));
        CHECK_THAT(bloch_wigner(1.0 / (1.0 - z)), WithinAbs(d, 1e-12));
        CHECK_THAT(bloch_wigner(std::conj(z)), WithinAbs(-d, 1e-12));
    }
}

TEST_CASE("Bloch-Wigner matches the Lobachevsky angle sum") {
    // z = sin(beta)/sin(gamma) e^{i alpha} with alpha + beta + gamma = pi
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> dist(0.1, 1.0);
    for (int i = 0; i < 100; ++i) {
        double a = dist(rng), b = dist(rng), g = dist(rng);
        const double s = pi / (a + b + g);
        a *= s; b *= s; g *= s;
        const std::complex<double> z = std::polar(std::sin(b) / std::sin(g), a);
        CHECK_THAT(bloch_wigner(z),
                   WithinAbs(lobachevsky(a) + lobachevsky(b) + lobachevsky(g), 1e-12));
    }
}
