#pragma once

// Hyperbolic volume of the layered triangulation by maximizing the
// Lobachevsky volume functional over the angle-structure polytope
// (Casson-Rivin).  The functional is strictly concave on the affine
// constraint set, so equality-constrained Newton ascent converges to the
// unique critical point, which realizes the complete structure.

#include <algorithm>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "entvol/layered.hpp"
#include "entvol/lobachevsky.hpp"

namespace entvol {

struct SolverConfig {
    double grad_tol = 1e-12;      // projected gradient norm
    double residual_tol = 1e-9;   // complex gluing-equation residual
    double angle_floor = 1e-6;    // below this the geometry is degenerate
    int max_iter = 500;
};

// theta layout: 3i + 0/1/2 = (alpha, beta, gamma) of tetrahedron i, assigned
// to (side pair 1, side pair 2, diagonal pair).
struct AngleStructure {
    Eigen::VectorXd theta;

    double angle(int tet, int pair) const { return theta[3 * tet + pair]; }
    double min_angle() const { return theta.minCoeff(); }
};

struct VolumeResult {
    std::string word;
    double volume = 0.0;
    std::vector<std::complex<double>> shapes;  // per tetrahedron, Im z > 0
    Eigen::VectorXd angles;
    double residual = 0.0;
    double min_angle = 0.0;
    int iterations = 0;
};

namespace detail {

struct ConstraintSystem {
    Eigen::MatrixXd basis;   // orthonormal null-space basis Z
    Eigen::VectorXd origin;  // particular solution of C theta = b
};

inline ConstraintSystem constraint_system(const LayeredTriangulation& tri) {
    const int n = tri.n;
    const int vars = 3 * n;
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(2 * n, vars);
    Eigen::VectorXd b(2 * n);
    const double pi = std::numbers::pi;
    for (int i = 0; i < n; ++i) {
        for (int p = 0; p < 3; ++p) c(i, 3 * i + p) = 1.0;
        b[i] = pi;
    }
    for (std::size_t id = 0; id < tri.edges.size(); ++id) {
        for (auto [t, e] : tri.edges[id].slots)
            c(n + static_cast<int>(id), 3 * t + LayeredTriangulation::pair_of_slot(e)) += 1.0;
        b[n + static_cast<int>(id)] = 2.0 * pi;
    }
    ConstraintSystem sys;
    sys.origin = c.completeOrthogonalDecomposition().solve(b);
    // One redundancy among the edge rows is expected; rank-revealing LU
    // yields the null space of whatever the actual rank is.
    Eigen::FullPivLU<Eigen::MatrixXd> lu(c);
    lu.setThreshold(1e-10);
    Eigen::MatrixXd kernel = lu.kernel();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(kernel);
    sys.basis = qr.householderQ() * Eigen::MatrixXd::Identity(vars, kernel.cols());
    return sys;
}

// Smoothed max-min slack over {theta_j, pi - theta_j}: ascend
// f(y) = -(1/k) log sum exp(-k * slack) for increasing k.
inline Eigen::VectorXd max_min_slack(const ConstraintSystem& sys) {
    const int vars = static_cast<int>(sys.origin.size());
    const int dim = static_cast<int>(sys.basis.cols());
    const double pi = std::numbers::pi;
    Eigen::VectorXd y = Eigen::VectorXd::Zero(dim);

    for (double k : {16.0, 64.0, 256.0, 1024.0}) {
        for (int iter = 0; iter < 100; ++iter) {
            const Eigen::VectorXd theta = sys.origin + sys.basis * y;
            Eigen::VectorXd expo(2 * vars);
            for (int j = 0; j < vars; ++j) {
                expo[j] = -k * theta[j];
                expo[vars + j] = -k * (pi - theta[j]);
            }
            const double shift = expo.maxCoeff();
            Eigen::VectorXd p(vars), q(vars);
            double s = 0.0;
            for (int j = 0; j < vars; ++j) {
                p[j] = std::exp(expo[j] - shift);
                q[j] = std::exp(expo[vars + j] - shift);
                s += p[j] + q[j];
            }
            p /= s;
            q /= s;
            const Eigen::VectorXd g_theta = p - q;
            const Eigen::VectorXd g = sys.basis.transpose() * g_theta;
            if (g.norm() < 1e-12) break;
            const Eigen::VectorXd w = p + q;
            Eigen::MatrixXd h = -k * sys.basis.transpose() * w.asDiagonal() * sys.basis;
            h += k * g * g.transpose();
            Eigen::MatrixXd neg_h = -h;
            neg_h += 1e-12 * Eigen::MatrixXd::Identity(dim, dim);
            const Eigen::VectorXd dy = neg_h.ldlt().solve(g);

            auto objective = [&](const Eigen::VectorXd& yy) {
                const Eigen::VectorXd th = sys.origin + sys.basis * yy;
                double mx = -k * th.minCoeff();
                mx = std::max(mx, -k * (pi - th.maxCoeff()));
                double acc = 0.0;
                for (int j = 0; j < vars; ++j)
                    acc += std::exp(-k * th[j] - mx) + std::exp(-k * (pi - th[j]) - mx);
                return -(mx + std::log(acc)) / k;
            };
            const double f0 = objective(y);
            double step = 1.0;
            while (step > 1e-16 && objective(y + step * dy) <= f0) step *= 0.5;
            if (step <= 1e-16) break;
            y += step * dy;
        }
    }
    return sys.origin + sys.basis * y;
}

}  // namespace detail

inline AngleStructure initial_point(const LayeredTriangulation& tri) {
    const detail::ConstraintSystem sys = detail::constraint_system(tri);
    AngleStructure s;
    s.theta = detail::max_min_slack(sys);
    if (s.theta.minCoeff() < 1e-3 || (std::numbers::pi - s.theta.maxCoeff()) < 1e-3)
        throw empty_polytope("no sufficiently interior angle structure found");
    return s;
}

namespace detail {

inline double total_volume(const Eigen::VectorXd& theta) {
    double v = 0.0;
    for (int j = 0; j < theta.size(); ++j) v += lobachevsky(theta[j]);
    return v;
}

inline std::vector<std::complex<double>> recover_shapes(const Eigen::VectorXd& theta, int n) {
    std::vector<std::complex<double>> shapes(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double a = theta[3 * i], b = theta[3 * i + 1], g = theta[3 * i + 2];
        const double mod = std::sin(b) / std::sin(g);
        shapes[static_cast<std::size_t>(i)] = std::polar(mod, a);
    }
    return shapes;
}

inline double gluing_residual(const LayeredTriangulation& tri,
                              const std::vector<std::complex<double>>& shapes) {
    double worst = 0.0;
    for (const auto& edge : tri.edges) {
        std::complex<double> prod = 1.0;
        for (auto [t, e] : edge.slots) {
            const std::complex<double> z = shapes[static_cast<std::size_t>(t)];
            switch (LayeredTriangulation::pair_of_slot(e)) {
                case 0: prod *= z; break;
                case 1: prod *= 1.0 / (1.0 - z); break;
                default: prod *= 1.0 - 1.0 / z; break;
            }
        }
        worst = std::max(worst, std::abs(prod - 1.0));
    }
    return worst;
}

}  // namespace detail

inline VolumeResult maximize_volume(const LayeredTriangulation& tri, const AngleStructure& start,
                                    const SolverConfig& config = {}) {
    const detail::ConstraintSystem sys = detail::constraint_system(tri);
    const int dim = static_cast<int>(sys.basis.cols());
    const double pi = std::numbers::pi;

    Eigen::VectorXd theta = start.theta;
    int iterations = 0;
    bool converged = false;
    double grad_norm = 0.0;

    for (; iterations < config.max_iter; ++iterations) {
        Eigen::VectorXd g_theta(theta.size());
        for (int j = 0; j < theta.size(); ++j) g_theta[j] = -std::log(2.0 * std::sin(theta[j]));
        const Eigen::VectorXd g = sys.basis.transpose() * g_theta;
        grad_norm = g.norm();
        if (grad_norm < config.grad_tol) { converged = true; break; }

        Eigen::VectorXd cot(theta.size());
        for (int j = 0; j < theta.size(); ++j) cot[j] = std::cos(theta[j]) / std::sin(theta[j]);
        // -H = Z^T diag(cot) Z is positive definite on the constraint null
        // space (strict concavity of the volume functional there).
        Eigen::MatrixXd neg_h = sys.basis.transpose() * cot.asDiagonal() * sys.basis;
        Eigen::LLT<Eigen::MatrixXd> llt(neg_h);
        double ridge = 1e-14;
        while (llt.info() != Eigen::Success && ridge < 1.0) {
            llt.compute(neg_h + ridge * Eigen::MatrixXd::Identity(dim, dim));
            ridge *= 10.0;
        }
        if (llt.info() != Eigen::Success)
            throw solver_no_convergence("Newton system not solvable", grad_norm);
        const Eigen::VectorXd dy = llt.solve(g);
        const Eigen::VectorXd dtheta = sys.basis * dy;

        // Fraction-to-boundary: keep every angle above 0.1x the current
        // minimum and below pi by the analogous margin.
        const double lo = 0.1 * theta.minCoeff();
        const double hi = 0.1 * (pi - theta.maxCoeff());
        double alpha = 1.0;
        for (int j = 0; j < theta.size(); ++j) {
            if (dtheta[j] < 0.0) alpha = std::min(alpha, (theta[j] - lo) / (-dtheta[j]));
            else if (dtheta[j] > 0.0) alpha = std::min(alpha, (pi - theta[j] - hi) / dtheta[j]);
        }
        double step = alpha;
        // Backtrack on the volume only while increments are resolvable in
        // double precision; near the optimum the predicted gain drops below
        // rounding noise and the damped Newton step is accepted as is.
        const double slope = g.dot(dy);
        const double v0 = detail::total_volume(theta);
        if (slope * alpha > 1e-12 * (std::abs(v0) + 1.0)) {
            while (step > 1e-18 &&
                   detail::total_volume(theta + step * dtheta) < v0 + 1e-4 * step * slope)
                step *= 0.5;
            if (step <= 1e-18)
                throw solver_no_convergence("line search failed", grad_norm);
        }
        theta += step * dtheta;
    }
    if (!converged)
        throw solver_no_convergence("iteration cap reached, gradient norm " +
                                        std::to_string(grad_norm),
                                    grad_norm);

    VolumeResult res;
    res.word = tri.word;
    res.angles = theta;
    res.min_angle = theta.minCoeff();
    if (res.min_angle < config.angle_floor)
        throw degenerate_geometry("optimum has near-zero angle: non-geometric triangulation");
    res.volume = detail::total_volume(theta);
    res.shapes = detail::recover_shapes(theta, tri.n);
    res.residual = detail::gluing_residual(tri, res.shapes);
    res.iterations = iterations;
    if (res.residual > config.residual_tol)
        throw internal_gluing_error("gluing residual above tolerance at the critical point");
    return res;
}

inline VolumeResult volume(const CyclicWord& w, const SolverConfig& config = {}) {
    const LayeredTriangulation tri = build_triangulation(w);
    return maximize_volume(tri, initial_point(tri), config);
}

// Max per-tetrahedron discrepancy between the Bloch-Wigner volume of the
// recovered shape and the Lobachevsky sum of its angles.
inline double bloch_wigner_check(const VolumeResult& res) {
    double worst = 0.0;
    for (std::size_t i = 0; i < res.shapes.size(); ++i) {
        const double lob = lobachevsky(res.angles[3 * static_cast<int>(i)]) +
                           lobachevsky(res.angles[3 * static_cast<int>(i) + 1]) +
                           lobachevsky(res.angles[3 * static_cast<int>(i) + 2]);
        worst = std::max(worst, std::abs(bloch_wigner(res.shapes[i]) - lob));
    }
    return worst;
}

}  // namespace entvol
