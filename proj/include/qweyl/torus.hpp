#ifndef QWEYL_TORUS_HPP
#define QWEYL_TORUS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qweyl/scalar.hpp"

namespace qweyl {

using Expt = std::vector<long>; // dense exponent vector, one slot per generator

/// A quantum torus: Laurent generators x_0..x_{n-1} with
/// x_a x_b = q^{kappa[a][b]} x_b x_a, kappa antisymmetric.
/// Generators flagged central have an identically zero kappa row.
struct TorusPresentation {
    int n = 0;
    std::vector<std::string> names;
    std::vector<std::vector<Rational>> kappa;

    TorusPresentation(int n_, std::vector<std::string> names_);

    /// Set the relation x_a x_b = q^e x_b x_a (and its inverse pair).
    void set_kappa(int a, int b, const Rational& e);

    bool is_central(int g) const;
    bool structurally_equal(const TorusPresentation& o) const;

    /// Exponent c with x^u x^v = q^c x^{u+v} in normal order.
    Rational reorder_exponent(const Expt& u, const Expt& v) const;
    /// Exponent c with x^u x^v = q^c x^v x^u.
    Rational comm_exponent(const Expt& u, const Expt& v) const;
};

using PresPtr = std::shared_ptr<const TorusPresentation>;

/// Sparse element of the quantum torus in normal order (ascending generator
/// index inside every monomial); no zero coefficients are stored.
class TorusElement {
public:
    TorusElement() = default; // null; only for containers
    explicit TorusElement(PresPtr pres);
    static TorusElement constant(PresPtr pres, const Scalar& c);
    static TorusElement monomial(PresPtr pres, const Expt& e, const Scalar& c = Scalar(1));
    static TorusElement generator(PresPtr pres, int g);

    const PresPtr& pres() const { return pres_; }
    bool is_null() const { return pres_ == nullptr; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Scalar scalar_value() const;
    const std::map<Expt, Scalar>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    TorusElement operator+(const TorusElement& o) const;
    TorusElement operator-(const TorusElement& o) const;
    TorusElement operator-() const;
    TorusElement operator*(const TorusElement& o) const;
    TorusElement& operator+=(const TorusElement& o) { return *this = *this + o; }
    TorusElement& operator-=(const TorusElement& o) { return *this = *this - o; }
    TorusElement& operator*=(const TorusElement& o) { return *this = *this * o; }
    TorusElement scaled(const Scalar& c) const;
    TorusElement mul_qpow(const QExp& e) const;

    bool operator==(const TorusElement& o) const;
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    /// Inverse of a single monomial (with the q-power correction making it
    /// two-sided).  Throws DivisionByZero on zero, Error on non-monomials.
    TorusElement monomial_inverse() const;

    /// Integer power; negative powers require a monomial.
    TorusElement pow(long k) const;

    /// x^m * a * (x^m)^-1; support unchanged, coefficients pick up q-powers.
    TorusElement conjugated_by(const Expt& m) const;

    /// Min/max exponent of generator g over the support.
    std::pair<long, long> exponent_range(int g) const;
    /// Total degree with unit weights on the given generators.
    long weighted_degree(const std::vector<int>& gens) const;

    std::string str() const;

private:
    void insert_term(const Expt& e, const Scalar& c);
    void check_same(const TorusElement& o) const;

    PresPtr pres_;
    std::map<Expt, Scalar> terms_;
};

/// Number of degree-k monomials of the q-polynomial subalgebra on the given
/// generators with the given positive weights.
Integer graded_dimension(int ngens, const std::vector<long>& weights, long k);

} // namespace qweyl

#endif // QWEYL_TORUS_HPP
