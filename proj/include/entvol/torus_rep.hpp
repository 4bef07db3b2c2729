#pragma once

// Exact linear representation of once-punctured-torus mapping classes:
// L -> (1 1; 0 1), R -> (1 0; 1 1).  Dilatation and entropy come from the
// exact integer trace via lambda + 1/lambda = tr (det = 1).

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "entvol/word.hpp"

namespace entvol {

using BigInt = boost::multiprecision::cpp_int;

struct WordMatrix {
    BigInt a, b, c, d;  // (a b; c d)

    BigInt det() const { return a * d - b * c; }
    BigInt trace() const { return a + d; }

    friend WordMatrix operator*(const WordMatrix& x, const WordMatrix& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const WordMatrix& x, const WordMatrix& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

inline WordMatrix matrix_L() { return {1, 1, 0, 1}; }
inline WordMatrix matrix_R() { return {1, 0, 1, 1}; }
inline WordMatrix matrix_identity() { return {1, 0, 0, 1}; }

// Product of L/R factors for an arbitrary letter string (leftmost first).
inline WordMatrix letters_matrix(const std::string& letters) {
    WordMatrix m = matrix_identity();
    for (char ch : letters) m = m * (ch == 'L' ? matrix_L() : matrix_R());
    return m;
}

inline WordMatrix word_matrix(const CyclicWord& w) { return letters_matrix(w.letters()); }

namespace detail {

// log of a positive big integer without overflow: t = m * 2^e, m in [0.5, 1).
inline double log_bigint(const BigInt& t) {
    const long bits = static_cast<long>(boost::multiprecision::msb(t)) + 1;
    if (bits <= 52) return std::log(static_cast<double>(t));
    const BigInt shifted = t >> (bits - 52);
    const double mant = static_cast<double>(shifted) * std::ldexp(1.0, -52);
    return std::log(mant) + static_cast<double>(bits) * std::log(2.0);
}

}  // namespace detail

// ent = log((tr + sqrt(tr^2 - 4)) / 2), safe for huge traces.
inline double entropy_from_trace(const BigInt& tr) {
    if (tr < 3) throw not_pseudo_anosov("trace below 3: not a pseudo-Anosov word");
    const double logt = detail::log_bigint(tr);
    // lambda = (t/2)(1 + sqrt(1 - 4/t^2)); 4/t^2 underflows harmlessly.
    const double ratio = (tr <= BigInt(1) << 600) ? 4.0 / std::exp(2.0 * logt) : 0.0;
    return logt - std::log(2.0) + std::log1p(std::sqrt(1.0 - ratio));
}

inline double entropy(const CyclicWord& w) { return entropy_from_trace(word_matrix(w).trace()); }

inline double dilatation(const CyclicWord& w) { return std::exp(entropy(w)); }

}  // namespace entvol
