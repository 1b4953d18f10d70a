#ifndef QWEYL_QCOMBINATORICS_HPP
#define QWEYL_QCOMBINATORICS_HPP

#include <utility>

#include "qweyl/scalar.hpp"

namespace qweyl {

// q-numbers and friends, in the symmetric normalization
//   [x]_q = (q^x - q^-x)/(q - q^-1),
// parameterized by q_i = q^di throughout.

/// [x]_{q_i} as an explicit Laurent polynomial (no division performed).
Scalar q_number(long long x, const QExp& di = QExp(1));

/// [n]_{q_i}! for n >= 0.
Scalar q_factorial(long long n, const QExp& di = QExp(1));

/// Gaussian binomial [n choose k]_{q_i}; n may be negative, k >= 0.
/// Always a Laurent polynomial.  Memoized.
Scalar q_binom(long long n, long long k, const QExp& di = QExp(1));

/// The Laurent polynomial a_k(x) with a_k(q_i^n) = [n choose k]_{q_i}:
/// a_k(x) = [x;0][x;-1]...[x;-k+1] / [k]! where
/// [x;v]_{q_i} = (x q_i^v - x^-1 q_i^-v)/(q_i - q_i^-1).
struct SymbolicQBinom {
    long long k = 0;
    XLaurent value;
};

SymbolicQBinom q_binom_symbolic(long long k, const QExp& di = QExp(1));

/// [x;v]_{q_i} as an XLaurent.
XLaurent q_bracket_shifted(long long v, const QExp& di = QExp(1));

/// Finite form of the cancelled infinite-product ratio
/// (q_i^-2n x)_{q_i,inf} / (x)_{q_i,inf}:
/// n >= 0 gives (prod_{v=0}^{n-1} (1 + q_i^{2(v-n)} x), 1),
/// n <  0 gives (1, prod_{v=0}^{|n|-1} (1 + q_i^{2v} x)).
std::pair<XLaurent, XLaurent> q_pochhammer_ratio(long long n, const QExp& di = QExp(1));

/// (x)_{q_i,k} = (1+x)(1+q_i^2 x)...(1+q_i^{2(k-1)} x).
XLaurent q_pochhammer(long long k, const QExp& di = QExp(1));

} // namespace qweyl

#endif // QWEYL_QCOMBINATORICS_HPP
