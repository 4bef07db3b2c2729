#pragma once

// Lobachevsky function, complex dilogarithm, and the Bloch-Wigner function.
// An ideal tetrahedron with dihedral angles (a, b, c) has volume
// L(a) + L(b) + L(c) = D(z) for its shape parameter z.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace entvol {

namespace detail {

// zeta(2n) for n = 1..ZETA_COUNT via direct summation with an
// Euler-Maclaurin tail; accurate to full double precision.
inline const std::vector<double>& even_zetas() {
    static const std::vector<double> z = [] {
        constexpr int count = 64;
        std::vector<double> out(count + 1, 0.0);
        for (int n = 1; n <= count; ++n) {
            const double s = 2.0 * n;
            const int big_k = 200;
            double sum = 0.0;
            for (int k = big_k - 1; k >= 1; --k) sum += std::pow(k, -s);
            const double kk = big_k;
            sum += std::pow(kk, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(kk, -s) +
                   s * std::pow(kk, -s - 1.0) / 12.0;
            out[static_cast<std::size_t>(n)] = sum;
        }
        return out;
    }();
    return z;
}

}  // namespace detail

// L(x) = -int_0^x log|2 sin t| dt, odd and pi-periodic.  Evaluated on the
// reduced range |x| <= pi/2 through
//   L(x) = x(1 - log|2x|) + sum_{n>=1} zeta(2n) x^{2n+1} / (n(2n+1) pi^{2n}).
inline double lobachevsky(double theta) {
    const double pi = std::numbers::pi;
    double x = std::remainder(theta, pi);  // x in [-pi/2, pi/2]
    if (x == 0.0) return 0.0;
    const double r2 = (x / pi) * (x / pi);
    double sum = 0.0;
    double xpow = x * r2;  // x^{2n+1} / pi^{2n}
    const auto& zetas = detail::even_zetas();
    for (int n = 1; n < static_cast<int>(zetas.size()); ++n) {
        const double term = zetas[static_cast<std::size_t>(n)] * xpow / (n * (2.0 * n + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
        xpow *= r2;
    }
    return x * (1.0 - std::log(std::abs(2.0 * x))) + sum;
}

// Independent evaluation by adaptive Simpson quadrature of the smooth part
// -log(sin t / t); the log(2t) part integrates in closed form.  Test oracle.
inline double lobachevsky_quadrature(double theta) {
    const double pi = std::numbers::pi;
    const double x = std::remainder(theta, pi);
    if (x == 0.0) return 0.0;
    const double sgn = x < 0.0 ? -1.0 : 1.0;
    const double ax = std::abs(x);
    auto f = [](double t) {
        if (t < 1e-8) return t * t / 6.0;  // -log(sin t / t) ~ t^2/6
        return -std::log(std::sin(t) / t);
    };
    auto simpson = [&](double a, double b, double fa, double fm, double fb) {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    };
    auto adapt = [&](auto&& self, double a, double b, double fa, double fm, double fb,
                     double whole, double eps, int depth) -> double {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = f(lm), frm = f(rm);
        const double left = simpson(a, m, fa, flm, fm);
        const double right = simpson(m, b, fm, frm, fb);
        if (depth > 40 || std::abs(left + right - whole) < 15.0 * eps)
            return left + right + (left + right - whole) / 15.0;
        return self(self, a, m, fa, flm, fm, left, 0.5 * eps, depth + 1) +
               self(self, m, b, fm, frm, fb, right, 0.5 * eps, depth + 1);
    };
    const double fa = f(0.0), fb = f(ax), fm = f(0.5 * ax);
    const double whole = simpson(0.0, ax, fa, fm, fb);
    const double smooth = adapt(adapt, 0.0, ax, fa, fm, fb, whole, 1e-14, 0);
    return sgn * (ax * (1.0 - std::log(2.0 * ax)) + smooth);
}

inline double ideal_tetrahedron_volume() { return 3.0 * lobachevsky(std::numbers::pi / 3.0); }
inline double ideal_octahedron_volume() { return 8.0 * lobachevsky(std::numbers::pi / 4.0); }

namespace detail {

inline std::complex<double> dilog_series(std::complex<double> z) {
    // plain power series, |z| <= 1/2
    std::complex<double> sum = 0.0, zp = z;
    for (int n = 1; n <= 80; ++n) {
        const std::complex<double> term = zp / static_cast<double>(n * n);
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
        zp *= z;
    }
    return sum;
}

inline std::complex<double> dilog_bernoulli(std::complex<double> z) {
    // Li2(z) = sum_{k>=0} B_k w^{k+1} / (k+1)!,  w = -log(1-z); |w| < 2 pi.
    // With B_{2n} = (-1)^{n+1} 2 (2n)! zeta(2n) / (2 pi)^{2n}, the even terms
    // collapse to +- 2 zeta(2n) / (2n+1) * (w / 2 pi)^{2n} * w.
    const std::complex<double> w = -std::log(1.0 - z);
    std::complex<double> sum = w - w * w / 4.0;  // B_0 and B_1 = -1/2 terms
    const auto& zetas = even_zetas();
    const std::complex<double> r2 = (w / (2.0 * std::numbers::pi)) * (w / (2.0 * std::numbers::pi));
    std::complex<double> rpow = r2;
    for (int n = 1; n < static_cast<int>(zetas.size()); ++n) {
        const double sgn = (n % 2 == 1) ? 1.0 : -1.0;
        const std::complex<double> term =
            sgn * 2.0 * zetas[static_cast<std::size_t>(n)] / (2.0 * n + 1.0) * rpow * w;
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
        rpow *= r2;
    }
    return sum;
}

}  // namespace detail

// Complex dilogarithm Li2(z), principal branch.  Functional equations reduce
// the argument toward the origin; the remaining disk uses the power series
// (|z| <= 1/2) or the log-argument series (elsewhere in the reduced region,
// where no Moebius image of z has modulus <= 1/2, e.g. z near exp(i pi/3)).
inline std::complex<double> dilog(std::complex<double> z) {
    const double pi = std::numbers::pi;
    const double pi2_6 = pi * pi / 6.0;
    if (z == std::complex<double>(0.0, 0.0)) return 0.0;
    if (z == std::complex<double>(1.0, 0.0)) return pi2_6;

    std::complex<double> shift = 0.0;
    double sign = 1.0;
    if (std::abs(z) > 1.0) {
        const std::complex<double> lnz = std::log(-z);
        shift += -pi2_6 - 0.5 * lnz * lnz;
        sign = -sign;
        z = 1.0 / z;
    }
    if (z.real() > 0.5) {
        shift += sign * (pi2_6 - std::log(z) * std::log(1.0 - z));
        sign = -sign;
        z = 1.0 - z;
    }
    const std::complex<double> core =
        (std::abs(z) <= 0.5) ? detail::dilog_series(z) : detail::dilog_bernoulli(z);
    return shift + sign * core;
}

// Bloch-Wigner D(z) = Im Li2(z) + arg(1-z) log|z|; the volume of the ideal
// tetrahedron with shape z (Im z > 0).
inline double bloch_wigner(std::complex<double> z) {
    if (z.imag() == 0.0) return 0.0;
    return dilog(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

}  // namespace entvol
