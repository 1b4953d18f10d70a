#ifndef QWEYL_OREFIELD_HPP
#define QWEYL_OREFIELD_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qweyl/torus.hpp"

namespace qweyl {

struct FracLimits {
    long degree_cap = 64;   // per-variable denominator degree cap
    long solver_pad_cap = 12; // largest support padding tried by the solver
};

/// Univariate view of a torus element: F = sum_e C_e (x^w)^e where w is a
/// primitive direction and every coefficient C_e commutes trivially with
/// x^w.  When additionally all coefficient monomials commute with each
/// other, the views in direction w form a commutative ring with exact
/// division by monic-leading elements.
class UnivariateView {
public:
    /// Detect a direction (or verify a given one).  Returns nullopt when the
    /// support is not collinear or coefficients fail to commute with x^w.
    static std::optional<UnivariateView> collect(const TorusElement& e,
                                                 const Expt* direction = nullptr);

    const Expt& direction() const { return w_; }
    long low_degree() const;
    long high_degree() const;
    long span() const { return high_degree() - low_degree(); }
    bool commutative_coeffs() const { return commutative_; }
    const std::map<long, TorusElement>& coeffs() const { return coeffs_; }
    const PresPtr& pres() const { return pres_; }

    TorusElement to_element() const;

    static UnivariateView mul(const UnivariateView& a, const UnivariateView& b);
    /// Exact division; requires the divisor's leading coefficient to be a
    /// monomial.  Returns nullopt if division leaves a remainder.
    static std::optional<UnivariateView> divide(const UnivariateView& a, const UnivariateView& b);
    /// Monic gcd via Euclid; nullopt when a remainder's leading coefficient
    /// stops being a monomial.
    static std::optional<UnivariateView> gcd(const UnivariateView& a, const UnivariateView& b);
    /// Least (or at least a small) common multiple; falls back to a*b.
    static UnivariateView lcm(const UnivariateView& a, const UnivariateView& b);

    static bool same_direction(const Expt& a, const Expt& b);

private:
    PresPtr pres_;
    Expt w_;
    std::map<long, TorusElement> coeffs_;
    bool commutative_ = false;
};

struct ChainFactor {
    TorusElement poly;
    bool inverted = false;
};
using Chain = std::vector<ChainFactor>;

/// Left-fraction element of the skew field of fractions:
///   element = den[0]^-1 den[1]^-1 ... den[r-1]^-1 * num.
/// Denominator factors are nonzero, non-scalar torus polynomials, kept as an
/// ordered list (univariate factors whenever the fast path produced them).
class OreFraction {
public:
    OreFraction() = default; // null
    static OreFraction zero(PresPtr pres);
    static OreFraction one(PresPtr pres);
    static OreFraction poly(TorusElement p);
    static OreFraction scalar(PresPtr pres, const Scalar& c);
    static OreFraction from_parts(std::vector<TorusElement> den, TorusElement num);

    bool is_null() const { return num_.is_null(); }
    bool is_zero() const { return !is_null() && num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    const std::vector<TorusElement>& den() const { return den_; }
    const TorusElement& num() const { return num_; }
    const PresPtr& pres() const { return num_.pres(); }

    /// Product of den factors as a single polynomial D with element = D^-1 num.
    TorusElement den_product() const;

    /// True when every denominator factor admits a univariate view.
    bool univariate_denominators() const;

    std::string str() const;

private:
    std::vector<TorusElement> den_;
    TorusElement num_;
};

// ---- push primitives ----

/// p^-1 * L = L' * P^-1 with P a product of conjugates of p (same variable).
/// Requires a univariate view of p.  Returns (L', P-factors).
std::pair<TorusElement, std::vector<TorusElement>> push_right(const TorusElement& p,
                                                              const TorusElement& L,
                                                              const FracLimits& lim = {});

/// X * t^-1 = T^-1 * X' with T a product of conjugates of t.
/// Returns (T-factors, X').
std::pair<std::vector<TorusElement>, TorusElement> push_left(const TorusElement& X,
                                                             const TorusElement& t,
                                                             const FracLimits& lim = {});

// ---- Ore common multiples (degree-boxed linear solver) ----

/// Find nonzero u, u' with u*Q = u'*Q'.  Solves the linear system over the
/// coefficient field on growing support boxes; the result is verified by
/// re-multiplication.  Throws DegreeCapExceeded past the padical cap.
void common_left_multiple(const TorusElement& Q, const TorusElement& Qp, const FracLimits& lim,
                          TorusElement& u, TorusElement& up);

/// Find nonzero v, v' with Q*v = Q'*v'.
void common_right_multiple(const TorusElement& Q, const TorusElement& Qp, const FracLimits& lim,
                           TorusElement& v, TorusElement& vp);

// ---- fraction arithmetic ----

OreFraction normalize_chain(const Chain& chain, const FracLimits& lim = {});

OreFraction frac_mul(const OreFraction& a, const OreFraction& b, const FracLimits& lim = {});
OreFraction frac_add(const OreFraction& a, const OreFraction& b, const FracLimits& lim = {});
OreFraction frac_sub(const OreFraction& a, const OreFraction& b, const FracLimits& lim = {});
OreFraction frac_inverse(const OreFraction& a, const FracLimits& lim = {});
OreFraction frac_scaled(const OreFraction& a, const Scalar& c);
OreFraction frac_pow(const OreFraction& a, long k, const FracLimits& lim = {});
bool frac_equal(const OreFraction& a, const OreFraction& b, const FracLimits& lim = {});

/// Substitute generator images into a polynomial / fraction.  images[g] is
/// the image of generator g; negative exponents take fraction inverses.
OreFraction substitute_generators(const TorusElement& e, const std::vector<OreFraction>& images,
                                  const FracLimits& lim = {});
OreFraction substitute_generators(const OreFraction& f, const std::vector<OreFraction>& images,
                                  const FracLimits& lim = {});

} // namespace qweyl

#endif // QWEYL_OREFIELD_HPP
