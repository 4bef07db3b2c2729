#pragma once

// Penner construction on a filling curve system A u B: positive twists along
// A-curves, negative twists along B-curves, acting on per-curve weights.
// The resulting nonnegative integer matrix is primitive for valid words and
// its spectral radius is the dilatation.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "entvol/errors.hpp"
#include "entvol/torus_rep.hpp"

namespace entvol {

struct IntersectionSystem {
    int m = 0;                                  // number of A-curves
    int n = 0;                                  // number of B-curves
    std::vector<std::vector<long>> inter;       // m x n, inter[i][j] = i(a_i, b_j)

    int dim() const { return m + n; }

    void validate() const {
        if (m < 1 || n < 1) throw parse_error("intersection system needs m >= 1 and n >= 1");
        if (static_cast<int>(inter.size()) != m)
            throw parse_error("intersection matrix row count mismatch");
        std::vector<bool> col_pos(static_cast<std::size_t>(n), false);
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(inter[i].size()) != n)
                throw parse_error("intersection matrix column count mismatch");
            bool row_pos = false;
            for (int j = 0; j < n; ++j) {
                if (inter[i][j] < 0) throw parse_error("intersection numbers must be nonnegative");
                if (inter[i][j] > 0) { row_pos = true; col_pos[static_cast<std::size_t>(j)] = true; }
            }
            if (!row_pos) throw parse_error("row " + std::to_string(i + 1) + " has no intersection");
        }
        for (int j = 0; j < n; ++j)
            if (!col_pos[static_cast<std::size_t>(j)])
                throw parse_error("column " + std::to_string(j + 1) + " has no intersection");
    }

    // Plain text: line 1 "m n", then m lines of n nonnegative integers.
    static IntersectionSystem load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw io_error("cannot open intersection system file: " + path);
        IntersectionSystem sys;
        if (!(in >> sys.m >> sys.n)) throw parse_error("bad header in intersection system file");
        if (sys.m < 1 || sys.n < 1) throw parse_error("intersection system needs m >= 1 and n >= 1");
        sys.inter.assign(static_cast<std::size_t>(sys.m),
                         std::vector<long>(static_cast<std::size_t>(sys.n), 0));
        for (int i = 0; i < sys.m; ++i)
            for (int j = 0; j < sys.n; ++j)
                if (!(in >> sys.inter[i][j]))
                    throw parse_error("truncated intersection matrix");
        sys.validate();
        return sys;
    }
};

// A_i = t_{a_i}^{+1}, B_j = t_{b_j}^{-1}; indices are 1-based in text form.
struct TwistToken {
    enum Kind { A, B } kind;
    int index;  // 0-based

    friend bool operator==(const TwistToken& x, const TwistToken& y) {
        return x.kind == y.kind && x.index == y.index;
    }
};

using TwistWord = std::vector<TwistToken>;

// Space-separated tokens "A1 B2 ...".
inline TwistWord parse_twist_word(const std::string& text, const IntersectionSystem& sys) {
    TwistWord word;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 'A' && tok[0] != 'a' && tok[0] != 'B' && tok[0] != 'b'))
            throw parse_error("bad twist token: " + tok);
        int idx = 0;
        try {
            idx = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw parse_error("bad twist token index: " + tok);
        }
        const bool is_a = (tok[0] == 'A' || tok[0] == 'a');
        const int limit = is_a ? sys.m : sys.n;
        if (idx < 1 || idx > limit) throw parse_error("twist token out of range: " + tok);
        word.push_back({is_a ? TwistToken::A : TwistToken::B, idx - 1});
    }
    if (word.empty()) throw parse_error("empty twist word");
    return word;
}

struct PennerMatrix {
    int d = 0;
    std::vector<BigInt> e;  // row-major d x d

    static PennerMatrix identity(int d) {
        PennerMatrix m;
        m.d = d;
        m.e.assign(static_cast<std::size_t>(d) * d, 0);
        for (int i = 0; i < d; ++i) m.at(i, i) = 1;
        return m;
    }

    BigInt& at(int i, int j) { return e[static_cast<std::size_t>(i) * d + j]; }
    const BigInt& at(int i, int j) const { return e[static_cast<std::size_t>(i) * d + j]; }

    friend PennerMatrix operator*(const PennerMatrix& x, const PennerMatrix& y) {
        PennerMatrix z;
        z.d = x.d;
        z.e.assign(static_cast<std::size_t>(x.d) * x.d, 0);
        for (int i = 0; i < x.d; ++i)
            for (int k = 0; k < x.d; ++k) {
                const BigInt& xik = x.at(i, k);
                if (xik == 0) continue;
                for (int j = 0; j < x.d; ++j) z.at(i, j) += xik * y.at(k, j);
            }
        return z;
    }
    friend bool operator==(const PennerMatrix& x, const PennerMatrix& y) {
        return x.d == y.d && x.e == y.e;
    }
};

// Coordinates are indexed a_1..a_m, b_1..b_n.  t_{a_i} adds the b-weights
// into w(a_i); t_{b_j}^{-1} adds the a-weights into w(b_j).
inline PennerMatrix twist_matrix(const IntersectionSystem& sys, const TwistToken& tok) {
    const int limit = tok.kind == TwistToken::A ? sys.m : sys.n;
    if (tok.index < 0 || tok.index >= limit) throw parse_error("twist token index out of range");
    PennerMatrix m = PennerMatrix::identity(sys.dim());
    if (tok.kind == TwistToken::A) {
        for (int j = 0; j < sys.n; ++j)
            m.at(tok.index, sys.m + j) = sys.inter[tok.index][j];
    } else {
        for (int i = 0; i < sys.m; ++i)
            m.at(sys.m + tok.index, i) = sys.inter[i][tok.index];
    }
    return m;
}

inline PennerMatrix word_product(const IntersectionSystem& sys, const TwistWord& w) {
    PennerMatrix m = PennerMatrix::identity(sys.dim());
    for (const auto& tok : w) m = m * twist_matrix(sys, tok);
    return m;
}

// Penner's criterion: every generator must occur at least once.
inline void validate_pA(const TwistWord& w, const IntersectionSystem& sys) {
    std::vector<bool> seen_a(static_cast<std::size_t>(sys.m), false);
    std::vector<bool> seen_b(static_cast<std::size_t>(sys.n), false);
    for (const auto& tok : w)
        (tok.kind == TwistToken::A ? seen_a : seen_b)[static_cast<std::size_t>(tok.index)] = true;
    std::string missing;
    for (int i = 0; i < sys.m; ++i)
        if (!seen_a[static_cast<std::size_t>(i)]) missing += " A" + std::to_string(i + 1);
    for (int j = 0; j < sys.n; ++j)
        if (!seen_b[static_cast<std::size_t>(j)]) missing += " B" + std::to_string(j + 1);
    if (!missing.empty())
        throw not_pseudo_anosov("not pseudo-Anosov: missing generators:" + missing);
}

// Primitivity via boolean support powers up to the Wielandt bound (d-1)^2+1.
inline bool is_primitive(const PennerMatrix& m) {
    const int d = m.d;
    std::vector<std::vector<bool>> base(static_cast<std::size_t>(d),
                                        std::vector<bool>(static_cast<std::size_t>(d), false));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j) > 0;
    auto positive = [&](const std::vector<std::vector<bool>>& x) {
        for (const auto& row : x)
            for (bool v : row)
                if (!v) return false;
        return true;
    };
    auto mul = [&](const std::vector<std::vector<bool>>& x, const std::vector<std::vector<bool>>& y) {
        std::vector<std::vector<bool>> z(static_cast<std::size_t>(d),
                                         std::vector<bool>(static_cast<std::size_t>(d), false));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k)
                if (x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
                    for (int j = 0; j < d; ++j)
                        if (y[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                            z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        return z;
    };
    const int wielandt = (d - 1) * (d - 1) + 1;
    auto pow = base;
    for (int k = 1; k <= wielandt; ++k) {
        if (k > 1) pow = mul(pow, base);
        if (positive(pow)) return true;
    }
    return false;
}

struct PerronResult {
    double lambda = 0.0;
    std::vector<double> right;  // unit-sum, strictly positive
    std::vector<double> left;
    int iterations = 0;
};

namespace detail {

// Scale a big-integer matrix into doubles; a common power-of-two factor is
// dropped (it rescales eigenvectors only, not the iteration).
inline std::vector<double> to_double_scaled(const PennerMatrix& m, int& shift) {
    long maxbits = 0;
    for (const auto& v : m.e)
        if (v > 0) maxbits = std::max(maxbits, static_cast<long>(boost::multiprecision::msb(v)) + 1);
    shift = maxbits > 900 ? static_cast<int>(maxbits - 900) : 0;
    std::vector<double> out(m.e.size(), 0.0);
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        BigInt v = m.e[i] >> shift;
        out[i] = static_cast<double>(v);
    }
    return out;
}

}  // namespace detail

// Power iteration on M and its transpose.  Requires primitivity so the
// dominant eigenvalue is simple and strictly dominant.
inline PerronResult spectral_radius(const PennerMatrix& m, double rel_tol = 1e-14,
                                    long max_iter = 1000000) {
    if (!is_primitive(m))
        throw not_primitive("matrix is not primitive; power iteration unreliable");
    const int d = m.d;
    int shift = 0;
    const std::vector<double> a = detail::to_double_scaled(m, shift);
    if (shift != 0)
        throw not_primitive("matrix entries exceed double range for power iteration");

    auto iterate = [&](bool transpose, int& iters) {
        std::vector<double> x(static_cast<std::size_t>(d), 1.0 / d);
        std::vector<double> y(static_cast<std::size_t>(d), 0.0);
        double lambda = 0.0, prev = -1.0;
        long it = 0;
        for (; it < max_iter; ++it) {
            double norm = 0.0;
            for (int i = 0; i < d; ++i) {
                double s = 0.0;
                for (int j = 0; j < d; ++j)
                    s += (transpose ? a[static_cast<std::size_t>(j) * d + i]
                                    : a[static_cast<std::size_t>(i) * d + j]) *
                         x[static_cast<std::size_t>(j)];
                y[static_cast<std::size_t>(i)] = s;
                norm += s;
            }
            lambda = norm;  // x has unit sum, entries positive
            for (int i = 0; i < d; ++i) y[static_cast<std::size_t>(i)] /= norm;
            double dx = 0.0;
            for (int i = 0; i < d; ++i)
                dx = std::max(dx, std::abs(y[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)]));
            std::swap(x, y);
            if (prev > 0.0 && std::abs(lambda - prev) <= rel_tol * lambda && dx <= rel_tol) {
                ++it;
                break;
            }
            prev = lambda;
        }
        iters = static_cast<int>(it);
        return std::make_pair(lambda, x);
    };

    PerronResult res;
    int it_r = 0, it_l = 0;
    auto [lam_r, vr] = iterate(false, it_r);
    auto [lam_l, vl] = iterate(true, it_l);
    (void)lam_r;
    (void)lam_l;
    // Two-sided Rayleigh quotient: accuracy is quadratic in the eigenvector
    // error, comfortably inside 1e-12 relative.
    double num = 0.0, den = 0.0;
    for (int i = 0; i < d; ++i) {
        double s = 0.0;
        for (int j = 0; j < d; ++j)
            s += a[static_cast<std::size_t>(i) * d + j] * vr[static_cast<std::size_t>(j)];
        num += vl[static_cast<std::size_t>(i)] * s;
        den += vl[static_cast<std::size_t>(i)] * vr[static_cast<std::size_t>(i)];
    }
    res.lambda = num / den;
    res.right = std::move(vr);
    res.left = std::move(vl);
    res.iterations = std::max(it_r, it_l);
    return res;
}

// Exact characteristic polynomial coefficients (monic, degree d) by
// Faddeev-LeVerrier; intermediate divisions are exact for integer matrices.
// Returned as c[0] + c[1] x + ... + c[d] x^d with c[d] = 1.
inline std::vector<BigInt> char_poly(const PennerMatrix& m) {
    const int d = m.d;
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1, 0);
    c[static_cast<std::size_t>(d)] = 1;
    PennerMatrix mk = PennerMatrix::identity(d);
    for (int k = 1; k <= d; ++k) {
        mk = m * mk;
        BigInt tr = 0;
        for (int i = 0; i < d; ++i) tr += mk.at(i, i);
        BigInt ck = -tr;
        if (ck % k != 0) throw internal_gluing_error("Faddeev-LeVerrier exact division failed");
        ck /= k;
        c[static_cast<std::size_t>(d - k)] = ck;
        for (int i = 0; i < d; ++i) mk.at(i, i) += ck;
    }
    return c;
}

// phi_k = A_1^k . w for k = 1..k_max; strict monotone growth is asserted.
inline std::vector<std::pair<int, double>> family(const IntersectionSystem& sys,
                                                  const TwistWord& w, int k_max) {
    validate_pA(w, sys);
    if (k_max < 1) throw parse_error("family requires k_max >= 1");
    std::vector<std::pair<int, double>> out;
    const PennerMatrix base = word_product(sys, w);
    const PennerMatrix twist = twist_matrix(sys, {TwistToken::A, 0});
    PennerMatrix prefix = twist;
    double prev = 1.0;
    for (int k = 1; k <= k_max; ++k) {
        const PennerMatrix mk = prefix * base;
        const double lam = spectral_radius(mk).lambda;
        if (lam <= prev)
            throw internal_gluing_error("family dilatations failed to increase strictly");
        out.emplace_back(k, lam);
        prev = lam;
        prefix = prefix * twist;
    }
    return out;
}

}  // namespace entvol
