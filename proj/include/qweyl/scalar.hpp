#ifndef QWEYL_SCALAR_HPP
#define QWEYL_SCALAR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qweyl/errors.hpp"

namespace qweyl {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact exponent of q, stored as a reduced fraction.  In a configured
/// session every exponent is an integer multiple of 1/D, but values carry
/// their own denominator so arithmetic never depends on ambient state.
class QExp {
public:
    QExp() : num_(0), den_(1) {}
    QExp(long long num) : num_(num), den_(1) {} // NOLINT(google-explicit-constructor)
    QExp(long long num, long long den);
    explicit QExp(const Rational& r);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    QExp operator+(const QExp& o) const;
    QExp operator-(const QExp& o) const;
    QExp operator-() const { return QExp(-num_, den_); }
    QExp operator*(long long k) const;
    QExp operator*(const QExp& o) const;

    bool operator==(const QExp& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QExp& o) const { return !(*this == o); }
    bool operator<(const QExp& o) const;

    Rational to_rational() const { return Rational(static_cast<long>(num_), static_cast<long>(den_)); }
    std::string str() const;

private:
    void reduce();
    long long num_;
    long long den_; // > 0
};

/// Sparse Laurent polynomial in a root s = q^(1/unit) with rational
/// coefficients.  Canonical form: unit minimal, no zero coefficients.
class QLaurent {
public:
    QLaurent() : unit_(1) {}
    explicit QLaurent(const Rational& c);
    static QLaurent qpow(const QExp& e, const Rational& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    Rational constant_value() const;

    QLaurent operator+(const QLaurent& o) const;
    QLaurent operator-(const QLaurent& o) const;
    QLaurent operator-() const;
    QLaurent operator*(const QLaurent& o) const;

    QLaurent shifted(const QExp& e) const; // multiply by q^e
    QLaurent scaled(const Rational& c) const;

    bool operator==(const QLaurent& o) const { return unit_ == o.unit_ && terms_ == o.terms_; }
    bool operator!=(const QLaurent& o) const { return !(*this == o); }

    QExp low_exp() const;
    QExp high_exp() const;
    std::size_t term_count() const { return terms_.size(); }

    /// Value at q = 1 (sum of coefficients).
    Rational eval_one() const;

    /// Substitute q -> q^r (rescale all exponents).
    QLaurent stretch(const QExp& r) const;

    long long unit() const { return unit_; }
    const std::map<long long, Rational>& raw_terms() const { return terms_; }

    std::string str() const;

    // Division helpers on the underlying one-variable polynomial ring.
    // Both arguments are brought to a common unit internally.
    static QLaurent gcd(const QLaurent& a, const QLaurent& b);
    static bool divide(const QLaurent& a, const QLaurent& b, QLaurent& quot); // exact division
    static void divmod(const QLaurent& a, const QLaurent& b, QLaurent& quot, QLaurent& rem);

private:
    void normalize();
    static long long common_unit(const QLaurent& a, const QLaurent& b);
    QLaurent rescaled_to_unit(long long new_unit) const;

    long long unit_; // >= 1; stored exponent of q = key/unit_
    std::map<long long, Rational> terms_;

    friend class Scalar;
};

/// Element of the coefficient field Q(q^(1/D)): a reduced fraction of
/// Laurent polynomials.  Denominator is a genuine polynomial, monic, with
/// nonzero constant term; gcd(num, den) = 1.  Equality is representational.
class Scalar {
public:
    Scalar() = default;                          // zero
    Scalar(long long v);                         // NOLINT(google-explicit-constructor)
    Scalar(const Rational& v);                   // NOLINT(google-explicit-constructor)
    Scalar(const QLaurent& num, const QLaurent& den);
    explicit Scalar(const QLaurent& num);

    static Scalar qpow(const QExp& e);           // q^e
    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    /// True when the value is c*q^e for some nonzero rational c.
    bool is_monomial() const { return num_.term_count() == 1 && den_.is_constant(); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(long long k) const;
    /// Multiply by q^e in place; cheap (only numerator exponents shift).
    Scalar& mul_qpow(const QExp& e);

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// q -> 1 limit; throws PoleAtQ1 when the reduced denominator vanishes.
    Rational limit_q1() const;

    /// Substitute q -> q^r.
    Scalar stretch(const QExp& r) const;

    const QLaurent& num() const { return num_; }
    const QLaurent& den() const { return den_; }

    std::string str() const;

private:
    void reduce();
    QLaurent num_;
    QLaurent den_ = QLaurent(Rational(1));
};

/// Laurent polynomial in a reserved placeholder x with Scalar coefficients.
/// The placeholder is distinct from every torus generator; substitution is
/// the only bridge back into Scalar.
class XLaurent {
public:
    XLaurent() = default;
    explicit XLaurent(const Scalar& c);
    static XLaurent xpow(long long k, const Scalar& coeff = Scalar(1));

    bool is_zero() const { return terms_.empty(); }

    XLaurent operator+(const XLaurent& o) const;
    XLaurent operator-(const XLaurent& o) const;
    XLaurent operator*(const XLaurent& o) const;
    XLaurent scaled(const Scalar& c) const;
    XLaurent operator/(const Scalar& c) const;

    bool operator==(const XLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const XLaurent& o) const { return !(*this == o); }

    /// Substitute x = q^e.
    Scalar substitute_qpow(const QExp& e) const;
    /// Substitute x = v for any nonzero Scalar (needed for x^-1 terms).
    Scalar substitute(const Scalar& v) const;

    long long low_deg() const;
    long long high_deg() const;
    const std::map<long long, Scalar>& raw_terms() const { return terms_; }

    std::string str() const;

private:
    void normalize();
    std::map<long long, Scalar> terms_;
};

/// Identity overload: a Scalar holds no placeholder.
inline Scalar substitute_qpow(const Scalar& a, const QExp&) { return a; }
inline Scalar substitute_qpow(const XLaurent& a, const QExp& e) { return a.substitute_qpow(e); }

} // namespace qweyl

#endif // QWEYL_SCALAR_HPP
