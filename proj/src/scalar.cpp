#include "qweyl/scalar.hpp"

#include <numeric>
#include <sstream>

namespace qweyl {

// ---- QExp ----

QExp::QExp(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw DivisionByZero("QExp: zero denominator");
    reduce();
}

QExp::QExp(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (!c.get_num().fits_slong_p() || !c.get_den().fits_slong_p())
        throw Error("QExp: exponent out of range");
    num_ = c.get_num().get_si();
    den_ = c.get_den().get_si();
}

void QExp::reduce() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
}

QExp QExp::operator+(const QExp& o) const {
    long long l = std::lcm(den_, o.den_);
    return QExp(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

QExp QExp::operator-(const QExp& o) const { return *this + QExp(-o.num_, o.den_); }

QExp QExp::operator*(long long k) const { return QExp(num_ * k, den_); }

QExp QExp::operator*(const QExp& o) const { return QExp(num_ * o.num_, den_ * o.den_); }

bool QExp::operator<(const QExp& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::string QExp::str() const {
    std::ostringstream out;
    if (den_ == 1) out << num_;
    else out << num_ << "/" << den_;
    return out.str();
}

// ---- QLaurent ----

QLaurent::QLaurent(const Rational& c) : unit_(1) {
    if (c != 0) terms_[0] = c;
}

QLaurent QLaurent::qpow(const QExp& e, const Rational& coeff) {
    QLaurent p;
    if (coeff == 0) return p;
    p.unit_ = e.den();
    p.terms_[e.num()] = coeff;
    p.normalize();
    return p;
}

void QLaurent::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
    if (terms_.empty()) { unit_ = 1; return; }
    long long g = unit_;
    for (const auto& [e, c] : terms_) {
        g = std::gcd(g, e < 0 ? -e : e);
        if (g == 1) break;
    }
    if (g > 1) {
        std::map<long long, Rational> reduced;
        for (auto& [e, c] : terms_) reduced.emplace(e / g, std::move(c));
        terms_ = std::move(reduced);
        unit_ /= g;
    }
}

long long QLaurent::common_unit(const QLaurent& a, const QLaurent& b) {
    return std::lcm(a.unit_, b.unit_);
}

QLaurent QLaurent::rescaled_to_unit(long long new_unit) const {
    QLaurent r;
    r.unit_ = new_unit;
    long long f = new_unit / unit_;
    for (const auto& [e, c] : terms_) r.terms_[e * f] = c;
    return r;
}

Rational QLaurent::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

QLaurent QLaurent::operator+(const QLaurent& o) const {
    long long u = common_unit(*this, o);
    QLaurent a = rescaled_to_unit(u);
    const QLaurent b = o.rescaled_to_unit(u);
    for (const auto& [e, c] : b.terms_) {
        auto [it, fresh] = a.terms_.emplace(e, c);
        if (!fresh) it->second += c;
    }
    a.normalize();
    return a;
}

QLaurent QLaurent::operator-() const {
    QLaurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

QLaurent QLaurent::operator-(const QLaurent& o) const { return *this + (-o); }

QLaurent QLaurent::operator*(const QLaurent& o) const {
    QLaurent r;
    if (terms_.empty() || o.terms_.empty()) return r;
    long long u = common_unit(*this, o);
    const QLaurent a = rescaled_to_unit(u);
    const QLaurent b = o.rescaled_to_unit(u);
    r.unit_ = u;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, fresh] = r.terms_.emplace(ea + eb, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    r.normalize();
    return r;
}

QLaurent QLaurent::shifted(const QExp& e) const {
    if (e.is_zero() || terms_.empty()) return *this;
    long long u = std::lcm(unit_, e.den());
    QLaurent a = rescaled_to_unit(u);
    long long off = e.num() * (u / e.den());
    QLaurent r;
    r.unit_ = u;
    for (auto& [k, c] : a.terms_) r.terms_.emplace(k + off, std::move(c));
    r.normalize();
    return r;
}

QLaurent QLaurent::scaled(const Rational& c) const {
    QLaurent r;
    if (c == 0) return r;
    r.unit_ = unit_;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

QExp QLaurent::low_exp() const {
    if (terms_.empty()) return QExp(0);
    return QExp(terms_.begin()->first, unit_);
}

QExp QLaurent::high_exp() const {
    if (terms_.empty()) return QExp(0);
    return QExp(terms_.rbegin()->first, unit_);
}

Rational QLaurent::eval_one() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

QLaurent QLaurent::stretch(const QExp& r) const {
    QLaurent out;
    if (terms_.empty()) return out;
    // exponent e/unit -> e*r
    long long u = unit_ * r.den();
    out.unit_ = u;
    for (const auto& [e, c] : terms_) {
        auto [it, fresh] = out.terms_.emplace(e * r.num(), c);
        if (!fresh) it->second += c;
    }
    out.normalize();
    return out;
}

namespace {

// Dense view of a QLaurent shifted to an ordinary polynomial, plus the shift.
struct PolyView {
    std::vector<Rational> coeff; // coeff[i] of s^i, s = q^(1/unit)
    long long shift = 0;
};

PolyView to_poly(const QLaurent& a, long long unit) {
    PolyView v;
    if (a.is_zero()) return v;
    const auto scaled = [&](long long e) { return e * (unit / a.unit()); };
    long long lo = scaled(a.raw_terms().begin()->first);
    long long hi = scaled(a.raw_terms().rbegin()->first);
    v.shift = lo;
    v.coeff.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (const auto& [e, c] : a.raw_terms()) v.coeff[static_cast<std::size_t>(scaled(e) - lo)] = c;
    return v;
}

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Standard remainder step; divisor must be nonempty.
void poly_divmod(std::vector<Rational> a, const std::vector<Rational>& b,
                 std::vector<Rational>& q, std::vector<Rational>& r) {
    q.clear();
    if (a.size() < b.size()) { r = std::move(a); return; }
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        Rational f = a[i] / lead;
        if (f != 0) {
            q[i - b.size() + 1] = f;
            for (std::size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= f * b[j];
        }
        if (i == 0) break;
    }
    trim(a);
    r = std::move(a);
}

void make_primitive(std::vector<Rational>& p) {
    trim(p);
    if (p.empty()) return;
    // Divide by the leading coefficient; fine over a field and keeps sizes small.
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::vector<Rational> q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        make_primitive(b);
    }
    make_primitive(a);
    return a;
}

QLaurent from_poly(const std::vector<Rational>& p, long long shift, long long unit) {
    QLaurent r;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r = r + QLaurent::qpow(QExp(shift + static_cast<long long>(i), unit), p[i]);
    return r;
}

} // namespace

QLaurent QLaurent::gcd(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long long u = common_unit(a, b);
    PolyView pa = to_poly(a, u);
    PolyView pb = to_poly(b, u);
    std::vector<Rational> g = poly_gcd(pa.coeff, pb.coeff);
    return from_poly(g, 0, u);
}

void QLaurent::divmod(const QLaurent& a, const QLaurent& b, QLaurent& quot, QLaurent& rem) {
    if (b.is_zero()) throw DivisionByZero("QLaurent: division by zero");
    long long u = common_unit(a, b);
    PolyView pa = to_poly(a, u);
    PolyView pb = to_poly(b, u);
    std::vector<Rational> q, r;
    if (a.is_zero()) { quot = QLaurent(); rem = QLaurent(); return; }
    poly_divmod(pa.coeff, pb.coeff, q, r);
    quot = from_poly(q, pa.shift - pb.shift, u);
    rem = from_poly(r, pa.shift, u);
}

bool QLaurent::divide(const QLaurent& a, const QLaurent& b, QLaurent& quot) {
    QLaurent q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) return false;
    quot = q;
    return true;
}

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest exponent first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        QExp e(it->first, unit_);
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        Rational ac = neg ? Rational(-c) : c;
        if (e.is_zero()) {
            out << ac.get_str();
        } else {
            if (ac != 1) out << ac.get_str() << "*";
            if (e.num() == 1 && e.den() == 1) out << "q";
            else if (e.is_integer()) out << "q^" << e.num();
            else out << "q^(" << e.str() << ")";
        }
        first = false;
    }
    return out.str();
}

// ---- Scalar ----

Scalar::Scalar(long long v) : num_(QLaurent(Rational(static_cast<long>(v)))) {}

Scalar::Scalar(const Rational& v) : num_(QLaurent(v)) {}

Scalar::Scalar(const QLaurent& num) : num_(num) {}

Scalar::Scalar(const QLaurent& num, const QLaurent& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("Scalar: zero denominator");
    reduce();
}

Scalar Scalar::qpow(const QExp& e) { return Scalar(QLaurent::qpow(e)); }

bool Scalar::is_one() const {
    return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
           num_.constant_value() == den_.constant_value();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = QLaurent(Rational(1));
        return;
    }
    if (den_.is_constant()) {
        Rational c = den_.constant_value();
        if (c != 1) num_ = num_.scaled(Rational(1) / c);
        den_ = QLaurent(Rational(1));
        return;
    }
    if (num_.term_count() == 1) {
        // unit numerator: move it wholesale into the denominator side
        QExp e = num_.low_exp();
        Rational c = num_.raw_terms().begin()->second;
        num_ = QLaurent(Rational(1));
        den_ = den_.shifted(-e).scaled(Rational(1) / c);
        QExp shift = den_.low_exp();
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
        Rational lead = den_.raw_terms().rbegin()->second;
        if (lead != 1) {
            den_ = den_.scaled(Rational(1) / lead);
            num_ = num_.scaled(Rational(1) / lead);
        }
        return;
    }
    QLaurent g = QLaurent::gcd(num_, den_);
    if (!(g.is_constant())) {
        QLaurent qn, qd;
        if (!QLaurent::divide(num_, g, qn) || !QLaurent::divide(den_, g, qd))
            throw Error("Scalar: gcd failed to divide");
        num_ = qn;
        den_ = qd;
    }
    // Denominator: shift so its lowest exponent is 0, make it monic; the
    // compensating q-power and content go into the numerator.
    QExp shift = den_.low_exp();
    den_ = den_.shifted(-shift);
    num_ = num_.shifted(-shift);
    Rational lead = den_.raw_terms().rbegin()->second;
    if (lead != 1) {
        den_ = den_.scaled(Rational(1) / lead);
        num_ = num_.scaled(Rational(1) / lead);
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero("Scalar: division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("Scalar: inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long long k) const {
    if (k == 0) return Scalar(1);
    Scalar base = k > 0 ? *this : inverse();
    long long n = k > 0 ? k : -k;
    Scalar acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Scalar& Scalar::mul_qpow(const QExp& e) {
    num_ = num_.shifted(e);
    return *this;
}

Rational Scalar::limit_q1() const {
    Rational d = den_.eval_one();
    if (d == 0) throw PoleAtQ1();
    return num_.eval_one() / d;
}

Scalar Scalar::stretch(const QExp& r) const {
    if (r.is_zero()) {
        // q -> q^0 collapses everything to its value at 1.
        return Scalar(limit_q1());
    }
    return Scalar(num_.stretch(r), den_.stretch(r));
}

std::string Scalar::str() const {
    if (den_.is_constant()) {
        Rational d = den_.constant_value();
        if (d == 1 || num_.is_zero()) return num_.str();
    }
    std::string n = num_.str();
    std::string d = den_.str();
    return "(" + n + ")/(" + d + ")";
}

// ---- XLaurent ----

XLaurent::XLaurent(const Scalar& c) {
    if (!c.is_zero()) terms_[0] = c;
}

XLaurent XLaurent::xpow(long long k, const Scalar& coeff) {
    XLaurent r;
    if (!coeff.is_zero()) r.terms_[k] = coeff;
    return r;
}

void XLaurent::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

XLaurent XLaurent::operator+(const XLaurent& o) const {
    XLaurent r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto [it, fresh] = r.terms_.emplace(e, c);
        if (!fresh) it->second += c;
    }
    r.normalize();
    return r;
}

XLaurent XLaurent::operator-(const XLaurent& o) const {
    XLaurent neg;
    for (const auto& [e, c] : o.terms_) neg.terms_[e] = -c;
    return *this + neg;
}

XLaurent XLaurent::operator*(const XLaurent& o) const {
    XLaurent r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            auto [it, fresh] = r.terms_.emplace(ea + eb, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    r.normalize();
    return r;
}

XLaurent XLaurent::scaled(const Scalar& c) const {
    XLaurent r;
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

XLaurent XLaurent::operator/(const Scalar& c) const { return scaled(c.inverse()); }

Scalar XLaurent::substitute_qpow(const QExp& e) const {
    Scalar s;
    for (const auto& [k, c] : terms_) s += Scalar(c).mul_qpow(e * k);
    return s;
}

Scalar XLaurent::substitute(const Scalar& v) const {
    Scalar s;
    for (const auto& [k, c] : terms_) s += c * v.pow(k);
    return s;
}

long long XLaurent::low_deg() const { return terms_.empty() ? 0 : terms_.begin()->first; }

long long XLaurent::high_deg() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

std::string XLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        out << "(" << it->second.str() << ")";
        if (it->first != 0) out << "*x^" << it->first;
        first = false;
    }
    return out.str();
}

} // namespace qweyl
