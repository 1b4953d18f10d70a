#include "qweyl/torus.hpp"

#include <sstream>

namespace qweyl {

TorusPresentation::TorusPresentation(int n_, std::vector<std::string> names_)
    : n(n_), names(std::move(names_)), kappa(n_, std::vector<Rational>(n_, Rational(0))) {
    if (static_cast<int>(names.size()) != n) throw Error("TorusPresentation: name count mismatch");
}

void TorusPresentation::set_kappa(int a, int b, const Rational& e) {
    if (a == b && e != 0) throw Error("TorusPresentation: kappa_aa must vanish");
    kappa[a][b] = e;
    kappa[b][a] = -e;
}

bool TorusPresentation::is_central(int g) const {
    for (int b = 0; b < n; ++b)
        if (kappa[g][b] != 0) return false;
    return true;
}

bool TorusPresentation::structurally_equal(const TorusPresentation& o) const {
    return n == o.n && kappa == o.kappa;
}

Rational TorusPresentation::reorder_exponent(const Expt& u, const Expt& v) const {
    // x^u x^v = q^c x^{u+v}: swap every x_a (a from u) past every x_b (b from v)
    // with a > b.
    Rational c(0);
    for (int a = 1; a < n; ++a) {
        if (u[a] == 0) continue;
        for (int b = 0; b < a; ++b) {
            if (v[b] == 0 || kappa[a][b] == 0) continue;
            c += kappa[a][b] * u[a] * v[b];
        }
    }
    return c;
}

Rational TorusPresentation::comm_exponent(const Expt& u, const Expt& v) const {
    Rational c(0);
    for (int a = 0; a < n; ++a) {
        if (u[a] == 0) continue;
        for (int b = 0; b < n; ++b) {
            if (v[b] == 0 || kappa[a][b] == 0) continue;
            c += kappa[a][b] * u[a] * v[b];
        }
    }
    return c;
}

TorusElement::TorusElement(PresPtr pres) : pres_(std::move(pres)) {}

TorusElement TorusElement::constant(PresPtr pres, const Scalar& c) {
    TorusElement e(std::move(pres));
    if (!c.is_zero()) e.terms_.emplace(Expt(e.pres_->n, 0), c);
    return e;
}

TorusElement TorusElement::monomial(PresPtr pres, const Expt& e, const Scalar& c) {
    TorusElement t(std::move(pres));
    if (static_cast<int>(e.size()) != t.pres_->n) throw Error("TorusElement: exponent size mismatch");
    if (!c.is_zero()) t.terms_.emplace(e, c);
    return t;
}

TorusElement TorusElement::generator(PresPtr pres, int g) {
    Expt e(pres->n, 0);
    e[g] = 1;
    return monomial(std::move(pres), e);
}

bool TorusElement::is_scalar() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Expt& e = terms_.begin()->first;
    for (long x : e)
        if (x != 0) return false;
    return true;
}

Scalar TorusElement::scalar_value() const {
    if (terms_.empty()) return Scalar();
    if (!is_scalar()) throw Error("TorusElement: not a scalar");
    return terms_.begin()->second;
}

void TorusElement::insert_term(const Expt& e, const Scalar& c) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TorusElement::check_same(const TorusElement& o) const {
    if (pres_ == o.pres_) return;
    if (pres_ && o.pres_ && pres_->structurally_equal(*o.pres_)) return;
    throw PresentationMismatch();
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
    check_same(o);
    TorusElement r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

TorusElement TorusElement::operator-() const {
    TorusElement r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const { return *this + (-o); }

TorusElement TorusElement::operator*(const TorusElement& o) const {
    check_same(o);
    TorusElement r(pres_);
    if (terms_.empty() || o.terms_.empty()) return r;
    const int n = pres_->n;
    Expt sum(n, 0);
    for (const auto& [u, cu] : terms_)
        for (const auto& [v, cv] : o.terms_) {
            Rational reo = pres_->reorder_exponent(u, v);
            for (int g = 0; g < n; ++g) sum[g] = u[g] + v[g];
            Scalar c = cu * cv;
            if (reo != 0) c.mul_qpow(QExp(reo));
            r.insert_term(sum, c);
        }
    return r;
}

TorusElement TorusElement::scaled(const Scalar& c) const {
    TorusElement r(pres_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

TorusElement TorusElement::mul_qpow(const QExp& e) const {
    TorusElement r = *this;
    for (auto& [u, c] : r.terms_) c.mul_qpow(e);
    return r;
}

bool TorusElement::operator==(const TorusElement& o) const {
    check_same(o);
    return terms_ == o.terms_;
}

TorusElement TorusElement::monomial_inverse() const {
    if (terms_.empty()) throw DivisionByZero("TorusElement: inverse of zero");
    if (terms_.size() != 1) throw Error("TorusElement: inverse of a non-monomial");
    const auto& [m, c] = *terms_.begin();
    Expt neg(m.size());
    for (std::size_t g = 0; g < m.size(); ++g) neg[g] = -m[g];
    // (c x^m)^-1 = c^-1 q^{-kappa(m,-m)} x^{-m}
    Scalar coeff = c.inverse();
    Rational corr = pres_->reorder_exponent(m, neg);
    if (corr != 0) coeff.mul_qpow(QExp(-Rational(corr)));
    return monomial(pres_, neg, coeff);
}

TorusElement TorusElement::pow(long k) const {
    if (k == 0) return constant(pres_, Scalar(1));
    TorusElement base = k > 0 ? *this : monomial_inverse();
    long n = k > 0 ? k : -k;
    TorusElement acc = constant(pres_, Scalar(1));
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

TorusElement TorusElement::conjugated_by(const Expt& m) const {
    TorusElement r(pres_);
    for (const auto& [u, c] : terms_) {
        Rational gamma = pres_->comm_exponent(m, u);
        Scalar cc = c;
        if (gamma != 0) cc.mul_qpow(QExp(gamma));
        r.terms_.emplace(u, cc);
    }
    return r;
}

std::pair<long, long> TorusElement::exponent_range(int g) const {
    long lo = 0, hi = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            lo = hi = e[g];
            first = false;
        } else {
            lo = std::min(lo, e[g]);
            hi = std::max(hi, e[g]);
        }
    }
    return {lo, hi};
}

long TorusElement::weighted_degree(const std::vector<int>& gens) const {
    long best = 0;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int g : gens) d += e[g] > 0 ? e[g] : -e[g];
        best = std::max(best, d);
    }
    return best;
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        bool unit_exp = true;
        for (long x : e)
            if (x != 0) unit_exp = false;
        std::string cs = c.str();
        bool plain = c.is_one();
        if (plain && unit_exp) {
            out << "1";
            continue;
        }
        bool wrote = false;
        if (!plain) {
            bool simple = c.is_rational() || c.is_monomial();
            if (simple) out << cs;
            else out << "(" << cs << ")";
            wrote = true;
        }
        for (int g = 0; g < pres_->n; ++g) {
            if (e[g] == 0) continue;
            if (wrote) out << "*";
            out << pres_->names[g];
            if (e[g] != 1) out << "^" << e[g];
            wrote = true;
        }
    }
    return out.str();
}

Integer graded_dimension(int ngens, const std::vector<long>& weights, long k) {
    if (k < 0) return 0;
    std::vector<Integer> count(k + 1, 0);
    count[0] = 1;
    for (int g = 0; g < ngens; ++g) {
        long w = weights[g];
        if (w <= 0) throw Error("graded_dimension: weights must be positive");
        for (long t = w; t <= k; ++t) count[t] += count[t - w];
    }
    return count[k];
}

} // namespace qweyl
