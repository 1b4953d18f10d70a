#include "qweyl/orefield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qweyl {

// ---- UnivariateView ----

bool UnivariateView::same_direction(const Expt& a, const Expt& b) {
    // parallel with the same orientation
    if (a.size() != b.size()) return false;
    long num = 0, den = 0; // b = (num/den) * a once fixed
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0 && b[i] == 0) continue;
        if (a[i] == 0 || b[i] == 0) return false;
        if (den == 0) {
            num = b[i];
            den = a[i];
        } else if (b[i] * den != a[i] * num) {
            return false;
        }
    }
    return den == 0 || (num > 0) == (den > 0);
}

namespace {

Expt primitive_direction(const Expt& d) {
    long g = 0;
    for (long x : d) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw Error("primitive_direction: zero vector");
    Expt w(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) w[i] = d[i] / g;
    return w;
}

bool decompose_along(const Expt& diff, const Expt& w, long& m) {
    // diff = m * w exactly?
    int pivot = -1;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) {
            pivot = static_cast<int>(i);
            break;
        }
    if (pivot < 0) return false;
    if (diff[pivot] % w[pivot] != 0) return false;
    m = diff[pivot] / w[pivot];
    for (std::size_t i = 0; i < w.size(); ++i)
        if (diff[i] != m * w[i]) return false;
    return true;
}

} // namespace

std::optional<UnivariateView> UnivariateView::collect(const TorusElement& e, const Expt* direction) {
    if (e.is_null() || e.is_zero()) return std::nullopt;
    UnivariateView v;
    v.pres_ = e.pres();
    const auto& terms = e.terms();
    const Expt& base = terms.begin()->first;
    if (terms.size() == 1) {
        if (direction == nullptr) return std::nullopt; // no preferred direction for monomials
        v.w_ = *direction;
    } else if (direction != nullptr) {
        v.w_ = *direction;
    } else {
        auto it = std::next(terms.begin());
        Expt diff(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) diff[i] = it->first[i] - base[i];
        v.w_ = primitive_direction(diff);
    }
    // Split the support into degrees along w relative to the first term.
    std::map<long, TorusElement> groups;
    for (const auto& [u, c] : terms) {
        Expt diff(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - base[i];
        long m = 0;
        bool zero = std::all_of(diff.begin(), diff.end(), [](long x) { return x == 0; });
        if (!zero && !decompose_along(diff, v.w_, m)) return std::nullopt;
        auto [it, fresh] = groups.emplace(m, TorusElement::monomial(e.pres(), u, c));
        if (!fresh) it->second += TorusElement::monomial(e.pres(), u, c);
    }
    TorusElement wmono = TorusElement::monomial(e.pres(), v.w_);
    for (auto& [m, part] : groups) {
        TorusElement coeff = (m == 0) ? part : part * wmono.pow(-m);
        for (const auto& [u, c] : coeff.terms())
            if (e.pres()->comm_exponent(v.w_, u) != 0) return std::nullopt;
        v.coeffs_.emplace(m, std::move(coeff));
    }
    // Mutual commutativity of all coefficient monomials.
    v.commutative_ = true;
    std::vector<const Expt*> support;
    for (const auto& [m, c] : v.coeffs_)
        for (const auto& [u, s] : c.terms()) support.push_back(&u);
    for (std::size_t i = 0; i < support.size() && v.commutative_; ++i)
        for (std::size_t j = i + 1; j < support.size(); ++j)
            if (e.pres()->comm_exponent(*support[i], *support[j]) != 0) {
                v.commutative_ = false;
                break;
            }
    return v;
}

long UnivariateView::low_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

long UnivariateView::high_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

TorusElement UnivariateView::to_element() const {
    TorusElement r(pres_);
    TorusElement wmono = TorusElement::monomial(pres_, w_);
    for (const auto& [m, c] : coeffs_) r += c * wmono.pow(m);
    return r;
}

UnivariateView UnivariateView::mul(const UnivariateView& a, const UnivariateView& b) {
    UnivariateView r;
    r.pres_ = a.pres_;
    r.w_ = a.w_;
    r.commutative_ = a.commutative_ && b.commutative_;
    for (const auto& [m, c] : a.coeffs_)
        for (const auto& [k, d] : b.coeffs_) {
            TorusElement prod = c * d;
            if (prod.is_zero()) continue;
            auto [it, fresh] = r.coeffs_.emplace(m + k, prod);
            if (!fresh) {
                it->second += prod;
                if (it->second.is_zero()) r.coeffs_.erase(it);
            }
        }
    return r;
}

std::optional<UnivariateView> UnivariateView::divide(const UnivariateView& a, const UnivariateView& b) {
    if (b.coeffs_.empty()) throw DivisionByZero("UnivariateView: division by zero");
    UnivariateView rem = a, quot;
    quot.pres_ = a.pres_;
    quot.w_ = a.w_;
    quot.commutative_ = a.commutative_ && b.commutative_;
    if (rem.coeffs_.empty()) return quot;
    const auto& blead = b.coeffs_.rbegin()->second;
    if (!blead.is_monomial()) return std::nullopt;
    TorusElement blead_inv = blead.monomial_inverse();
    const long bdeg = b.high_degree();
    // Laurent exactness: quotient degrees live in [low_a - low_b, high_a - high_b].
    const long qlow = a.low_degree() - b.low_degree();
    while (!rem.coeffs_.empty()) {
        long rdeg = rem.high_degree();
        long qdeg = rdeg - bdeg;
        if (qdeg < qlow) return std::nullopt;
        TorusElement qc = rem.coeffs_.rbegin()->second * blead_inv;
        quot.coeffs_.emplace(qdeg, qc);
        // rem -= qc * (x^w)^qdeg * b
        for (const auto& [k, d] : b.coeffs_) {
            TorusElement sub = qc * d;
            auto it = rem.coeffs_.find(qdeg + k);
            if (it == rem.coeffs_.end()) {
                if (!sub.is_zero()) rem.coeffs_.emplace(qdeg + k, -sub);
            } else {
                it->second -= sub;
                if (it->second.is_zero()) rem.coeffs_.erase(it);
            }
        }
        if (!rem.coeffs_.empty() && rem.high_degree() >= rdeg) return std::nullopt;
    }
    return quot;
}

std::optional<UnivariateView> UnivariateView::gcd(const UnivariateView& a, const UnivariateView& b) {
    if (!a.commutative_ || !b.commutative_) return std::nullopt;
    UnivariateView x = a, y = b;
    auto normalize = [](UnivariateView& v) -> bool {
        if (v.coeffs_.empty()) return true;
        // shift low degree to 0 and make the leading coefficient 1
        const auto& lead = v.coeffs_.rbegin()->second;
        if (!lead.is_monomial()) return false;
        TorusElement inv = lead.monomial_inverse();
        std::map<long, TorusElement> shifted;
        long lo = v.low_degree();
        for (auto& [m, c] : v.coeffs_) shifted.emplace(m - lo, c * inv);
        v.coeffs_ = std::move(shifted);
        return true;
    };
    if (!normalize(x) || !normalize(y)) return std::nullopt;
    while (!y.coeffs_.empty()) {
        // remainder of x by y
        UnivariateView rem = x;
        const auto& ylead = y.coeffs_.rbegin()->second;
        if (!ylead.is_monomial()) return std::nullopt;
        TorusElement ylead_inv = ylead.monomial_inverse();
        long ydeg = y.high_degree();
        while (!rem.coeffs_.empty() && rem.high_degree() >= ydeg) {
            long rdeg = rem.high_degree();
            TorusElement qc = rem.coeffs_.rbegin()->second * ylead_inv;
            for (const auto& [k, d] : y.coeffs_) {
                TorusElement sub = qc * d;
                auto it = rem.coeffs_.find(rdeg - ydeg + k);
                if (it == rem.coeffs_.end()) {
                    if (!sub.is_zero()) rem.coeffs_.emplace(rdeg - ydeg + k, -sub);
                } else {
                    it->second -= sub;
                    if (it->second.is_zero()) rem.coeffs_.erase(it);
                }
            }
            if (!rem.coeffs_.empty() && rem.high_degree() >= rdeg) return std::nullopt;
        }
        x = y;
        y = rem;
        if (!normalize(y)) return std::nullopt;
    }
    return x;
}

UnivariateView UnivariateView::lcm(const UnivariateView& a, const UnivariateView& b) {
    if (divide(b, a)) return b;
    if (divide(a, b)) return a;
    auto g = gcd(a, b);
    if (g && g->high_degree() > g->low_degree()) {
        auto q = divide(b, *g);
        if (q) return mul(a, *q);
    }
    return mul(a, b);
}

// ---- OreFraction ----

OreFraction OreFraction::zero(PresPtr pres) {
    OreFraction f;
    f.num_ = TorusElement(std::move(pres));
    return f;
}

OreFraction OreFraction::one(PresPtr pres) {
    OreFraction f;
    f.num_ = TorusElement::constant(std::move(pres), Scalar(1));
    return f;
}

OreFraction OreFraction::poly(TorusElement p) {
    OreFraction f;
    f.num_ = std::move(p);
    return f;
}

OreFraction OreFraction::scalar(PresPtr pres, const Scalar& c) {
    OreFraction f;
    f.num_ = TorusElement::constant(std::move(pres), c);
    return f;
}

OreFraction OreFraction::from_parts(std::vector<TorusElement> den, TorusElement num) {
    OreFraction f;
    f.den_ = std::move(den);
    f.num_ = std::move(num);
    return f;
}

TorusElement OreFraction::den_product() const {
    TorusElement d = TorusElement::constant(pres(), Scalar(1));
    // element = den[0]^-1 ... den[r-1]^-1 num, so the single denominator is
    // den[r-1] * ... * den[0].
    for (auto it = den_.rbegin(); it != den_.rend(); ++it) d = d * *it;
    return d;
}

bool OreFraction::univariate_denominators() const {
    for (const auto& d : den_) {
        if (d.is_monomial()) continue;
        TorusElement core = d;
        Expt m;
        for (int g = 0; g < d.pres()->n; ++g) {
            auto [lo, hi] = d.exponent_range(g);
            if (lo != 0) {
                m.assign(d.pres()->n, 0);
                for (int h = 0; h < d.pres()->n; ++h) m[h] = d.exponent_range(h).first;
                core = d * TorusElement::monomial(d.pres(), m).monomial_inverse();
                break;
            }
        }
        if (core.is_monomial()) continue;
        if (!UnivariateView::collect(core)) return false;
    }
    return true;
}

std::string OreFraction::str() const {
    if (is_null()) return "<null>";
    std::ostringstream out;
    for (const auto& d : den_) out << "(" << d.str() << ")^-1*";
    bool paren = den_.size() > 0 && num_.term_count() > 1;
    if (paren) out << "(" << num_.str() << ")";
    else out << num_.str();
    return out.str();
}

// ---- pushes ----

namespace {

// t = core * x^m where m is the componentwise support minimum; core then has
// per-coordinate lowest exponent 0 (often enough to expose a univariate view).
bool strip_right_monomial(const TorusElement& t, TorusElement& core, Expt& m) {
    const int n = t.pres()->n;
    m.assign(n, 0);
    bool nontrivial = false;
    for (int g = 0; g < n; ++g) {
        auto [lo, hi] = t.exponent_range(g);
        m[g] = lo;
        if (lo != 0) nontrivial = true;
    }
    if (!nontrivial) {
        core = t;
        return false;
    }
    core = t * TorusElement::monomial(t.pres(), m).monomial_inverse();
    return true;
}

void enforce_degree_cap(const UnivariateView& v, const FracLimits& lim) {
    if (v.span() > lim.degree_cap)
        throw DegreeCapExceeded("denominator degree " + std::to_string(v.span()) +
                                " exceeds cap " + std::to_string(lim.degree_cap));
}

} // namespace

std::pair<std::vector<TorusElement>, TorusElement> push_left(const TorusElement& X,
                                                             const TorusElement& t,
                                                             const FracLimits& lim) {
    const PresPtr& pres = t.pres();
    if (t.is_zero()) throw DivisionByZero("push_left: inverted factor is zero");
    if (X.is_zero()) return {{}, X};
    if (t.is_scalar()) return {{}, X.scaled(t.scalar_value().inverse())};
    if (t.is_monomial()) return {{}, X * t.monomial_inverse()};
    {
        TorusElement core;
        Expt m;
        if (strip_right_monomial(t, core, m)) {
            // X t^-1 = (X M^-1) core^-1
            TorusElement Xm = X * TorusElement::monomial(t.pres(), m).monomial_inverse();
            return push_left(Xm, core, lim);
        }
    }
    if (X.is_scalar()) return {{t}, X};
    auto tv = UnivariateView::collect(t);
    if (!tv || !tv->commutative_coeffs())
        throw NotInvertibleInClass("push_left: factor is not univariate with commuting coefficients");
    // X t^-1 = T^-1 X' with T = lcm of the conjugates x^u t x^-u.
    std::vector<std::pair<Expt, UnivariateView>> conj;
    UnivariateView T = *UnivariateView::collect(t.conjugated_by(X.terms().begin()->first),
                                                &tv->direction());
    for (const auto& [u, c] : X.terms()) {
        auto cu = UnivariateView::collect(t.conjugated_by(u), &tv->direction());
        if (!cu) throw NotInvertibleInClass("push_left: conjugate left the univariate class");
        T = UnivariateView::lcm(T, *cu);
        conj.emplace_back(u, std::move(*cu));
    }
    enforce_degree_cap(T, lim);
    TorusElement Xp(pres);
    std::size_t idx = 0;
    for (const auto& [u, c] : X.terms()) {
        auto r = UnivariateView::divide(T, conj[idx].second);
        if (!r) throw Error("push_left: lcm did not divide");
        Xp += r->to_element() * TorusElement::monomial(pres, u, c);
        ++idx;
    }
    return {{T.to_element()}, Xp};
}

std::pair<TorusElement, std::vector<TorusElement>> push_right(const TorusElement& p,
                                                              const TorusElement& L,
                                                              const FracLimits& lim) {
    const PresPtr& pres = p.pres();
    if (p.is_zero()) throw DivisionByZero("push_right: inverted factor is zero");
    if (L.is_zero()) return {L, {}};
    if (p.is_scalar()) return {L.scaled(p.scalar_value().inverse()), {}};
    if (p.is_monomial()) return {p.monomial_inverse() * L, {}};
    {
        TorusElement core;
        Expt m;
        if (strip_right_monomial(p, core, m)) {
            // p^-1 L = M^-1 core^-1 L = (M^-1 L') P^-1
            auto [Lp, P] = push_right(core, L, lim);
            return {TorusElement::monomial(p.pres(), m).monomial_inverse() * Lp, std::move(P)};
        }
    }
    auto pv = UnivariateView::collect(p);
    if (!pv || !pv->commutative_coeffs())
        throw NotInvertibleInClass("push_right: factor is not univariate with commuting coefficients");
    if (L.is_scalar()) return {L, {p}};
    // p^-1 L = L' P^-1 with P = lcm of the conjugates x^-u p x^u.
    std::vector<std::pair<Expt, UnivariateView>> conj;
    Expt first = L.terms().begin()->first;
    Expt mfirst(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) mfirst[i] = -first[i];
    UnivariateView P = *UnivariateView::collect(p.conjugated_by(mfirst), &pv->direction());
    for (const auto& [u, c] : L.terms()) {
        Expt mu(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) mu[i] = -u[i];
        auto cu = UnivariateView::collect(p.conjugated_by(mu), &pv->direction());
        if (!cu) throw NotInvertibleInClass("push_right: conjugate left the univariate class");
        P = UnivariateView::lcm(P, *cu);
        conj.emplace_back(u, std::move(*cu));
    }
    enforce_degree_cap(P, lim);
    TorusElement Lp(pres);
    std::size_t idx = 0;
    for (const auto& [u, c] : L.terms()) {
        auto r = UnivariateView::divide(P, conj[idx].second);
        if (!r) throw Error("push_right: lcm did not divide");
        Lp += TorusElement::monomial(pres, u, c) * r->to_element();
        ++idx;
    }
    return {Lp, {P.to_element()}};
}

// ---- common multiples ----

namespace {

// Nonzero kernel vector of the homogeneous system given by rows of Scalars.
// Rows are cleared to Laurent polynomials, then reduced by fraction-free
// (Bareiss) elimination; only back-substitution divides.
std::optional<std::vector<Scalar>> kernel_vector(const std::vector<std::vector<Scalar>>& srows,
                                                 int ncols) {
    const int nrows = static_cast<int>(srows.size());
    std::vector<std::vector<QLaurent>> rows(nrows, std::vector<QLaurent>(ncols));
    for (int r = 0; r < nrows; ++r) {
        QLaurent common(Rational(1));
        for (int c = 0; c < ncols; ++c) {
            const QLaurent& d = srows[r][c].den();
            if (d.is_constant()) continue;
            QLaurent g = QLaurent::gcd(common, d);
            QLaurent extra;
            if (!QLaurent::divide(d, g, extra)) extra = d;
            common = common * extra;
        }
        for (int c = 0; c < ncols; ++c) {
            if (srows[r][c].is_zero()) continue;
            QLaurent scaled;
            if (!QLaurent::divide(common, srows[r][c].den(), scaled))
                throw Error("kernel_vector: common denominator failed");
            rows[r][c] = srows[r][c].num() * scaled;
        }
    }
    std::vector<int> pivot_col_of_row;
    std::vector<char> col_is_pivot(ncols, 0);
    QLaurent prev(Rational(1));
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int piv = -1;
        std::size_t best = 0;
        for (int r = row; r < nrows; ++r) {
            if (rows[r][col].is_zero()) continue;
            std::size_t sz = rows[r][col].term_count();
            if (piv < 0 || sz < best) {
                piv = r;
                best = sz;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[row], rows[piv]);
        const QLaurent lead = rows[row][col];
        for (int r = row + 1; r < nrows; ++r) {
            if (rows[r][col].is_zero()) {
                // still rescale per Bareiss to keep the division exact later
                for (int c = col; c < ncols; ++c) {
                    if (rows[r][c].is_zero()) continue;
                    QLaurent t = lead * rows[r][c];
                    QLaurent qout;
                    if (!QLaurent::divide(t, prev, qout)) throw Error("bareiss division failed");
                    rows[r][c] = qout;
                }
                continue;
            }
            QLaurent f = rows[r][col];
            for (int c = col; c < ncols; ++c) {
                QLaurent t = lead * rows[r][c] - f * rows[row][c];
                if (t.is_zero()) {
                    rows[r][c] = t;
                    continue;
                }
                QLaurent qout;
                if (!QLaurent::divide(t, prev, qout)) throw Error("bareiss division failed");
                rows[r][c] = qout;
            }
        }
        prev = lead;
        pivot_col_of_row.push_back(col);
        col_is_pivot[col] = 1;
        ++row;
    }
    int free_col = -1;
    for (int col = 0; col < ncols; ++col)
        if (!col_is_pivot[col]) {
            free_col = col;
            break;
        }
    if (free_col < 0) return std::nullopt;
    std::vector<Scalar> x(ncols, Scalar());
    x[free_col] = Scalar(1);
    for (int r = static_cast<int>(pivot_col_of_row.size()) - 1; r >= 0; --r) {
        int pc = pivot_col_of_row[r];
        Scalar s;
        for (int c = pc + 1; c < ncols; ++c)
            if (!x[c].is_zero() && !rows[r][c].is_zero()) s += Scalar(rows[r][c]) * x[c];
        if (!s.is_zero()) x[pc] = -s / Scalar(rows[r][pc]);
    }
    return x;
}

struct Box {
    std::vector<int> coords;          // active coordinates
    std::vector<std::pair<long, long>> range; // inclusive per active coordinate
    std::vector<Expt> monomials(int n) const {
        std::vector<Expt> out;
        Expt cur(n, 0);
        std::size_t k = coords.size();
        std::vector<long> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = range[i].first;
        for (;;) {
            for (std::size_t i = 0; i < k; ++i) cur[coords[i]] = idx[i];
            out.push_back(cur);
            std::size_t i = 0;
            for (; i < k; ++i) {
                if (idx[i] < range[i].second) {
                    ++idx[i];
                    for (std::size_t j = 0; j < i; ++j) idx[j] = range[j].first;
                    break;
                }
            }
            if (i == k) break;
            if (k == 0) break;
        }
        if (k == 0) out.assign(1, Expt(n, 0));
        return out;
    }
    std::size_t size() const {
        std::size_t s = 1;
        for (const auto& [lo, hi] : range) s *= static_cast<std::size_t>(hi - lo + 1);
        return s;
    }
};

Box support_box(const TorusElement& e, const std::vector<int>& coords, long pad) {
    Box b;
    b.coords = coords;
    for (int g : coords) {
        auto [lo, hi] = e.exponent_range(g);
        b.range.emplace_back(lo - pad, hi + pad);
    }
    return b;
}

void common_multiple_impl(const TorusElement& Q, const TorusElement& Qp, bool left,
                          const FracLimits& lim, TorusElement& u, TorusElement& up) {
    if (Q.is_zero() || Qp.is_zero()) throw DivisionByZero("common multiple of zero");
    const PresPtr& pres = Q.pres();
    const int n = pres->n;
    if (Q == Qp) {
        u = TorusElement::constant(pres, Scalar(1));
        up = u;
        return;
    }
    std::vector<int> coords;
    for (int g = 0; g < n; ++g) {
        auto [l1, h1] = Q.exponent_range(g);
        auto [l2, h2] = Qp.exponent_range(g);
        if (l1 != 0 || h1 != 0 || l2 != 0 || h2 != 0) coords.push_back(g);
    }
    for (long pad = 0; pad <= lim.solver_pad_cap; pad = pad == 0 ? 1 : pad * 2) {
        Box bu = support_box(Qp, coords, pad);
        Box bup = support_box(Q, coords, pad);
        std::vector<Expt> mu = bu.monomials(n);
        std::vector<Expt> mup = bup.monomials(n);
        const int ncols = static_cast<int>(mu.size() + mup.size());
        if (ncols > 20000) break;
        // rows indexed by product monomials
        std::map<Expt, int> rowindex;
        std::vector<std::vector<Scalar>> rows;
        auto row_of = [&](const Expt& h) -> std::vector<Scalar>& {
            auto [it, fresh] = rowindex.emplace(h, static_cast<int>(rows.size()));
            if (fresh) rows.emplace_back(ncols, Scalar());
            return rows[it->second];
        };
        Expt h(n, 0);
        for (std::size_t col = 0; col < mu.size(); ++col) {
            const Expt& e = mu[col];
            for (const auto& [v, c] : Q.terms()) {
                Rational reo = left ? pres->reorder_exponent(e, v) : pres->reorder_exponent(v, e);
                for (int g = 0; g < n; ++g) h[g] = e[g] + v[g];
                Scalar entry = c;
                if (reo != 0) entry.mul_qpow(QExp(reo));
                row_of(h)[col] += entry;
            }
        }
        for (std::size_t col = 0; col < mup.size(); ++col) {
            const Expt& e = mup[col];
            for (const auto& [v, c] : Qp.terms()) {
                Rational reo = left ? pres->reorder_exponent(e, v) : pres->reorder_exponent(v, e);
                for (int g = 0; g < n; ++g) h[g] = e[g] + v[g];
                Scalar entry = c;
                if (reo != 0) entry.mul_qpow(QExp(reo));
                row_of(h)[static_cast<int>(mu.size() + col)] -= entry;
            }
        }
        auto sol = kernel_vector(rows, ncols);
        if (!sol) continue;
        TorusElement cu(pres), cup(pres);
        for (std::size_t col = 0; col < mu.size(); ++col)
            if (!(*sol)[col].is_zero()) cu += TorusElement::monomial(pres, mu[col], (*sol)[col]);
        for (std::size_t col = 0; col < mup.size(); ++col)
            if (!(*sol)[mu.size() + col].is_zero())
                cup += TorusElement::monomial(pres, mup[col], (*sol)[mu.size() + col]);
        if (cu.is_zero() || cup.is_zero()) continue;
        // verify by re-multiplication
        TorusElement lhs = left ? cu * Q : Q * cu;
        TorusElement rhs = left ? cup * Qp : Qp * cup;
        if (lhs != rhs) throw Error("common multiple verification failed");
        u = std::move(cu);
        up = std::move(cup);
        return;
    }
    throw DegreeCapExceeded("no common multiple found within the solver box cap");
}

} // namespace

void common_left_multiple(const TorusElement& Q, const TorusElement& Qp, const FracLimits& lim,
                          TorusElement& u, TorusElement& up) {
    common_multiple_impl(Q, Qp, true, lim, u, up);
}

void common_right_multiple(const TorusElement& Q, const TorusElement& Qp, const FracLimits& lim,
                           TorusElement& v, TorusElement& vp) {
    common_multiple_impl(Q, Qp, false, lim, v, vp);
}

// ---- chain normalization ----

namespace {

// Append one denominator factor, folding scalars and skipping units.
void append_den(std::vector<TorusElement>& dens, TorusElement t, TorusElement& num) {
    if (t.is_scalar()) {
        num = num.scaled(t.scalar_value().inverse());
        return;
    }
    dens.push_back(std::move(t));
}

// Try to cancel trailing denominator factors into the numerator by exact
// left division inside a univariate class.
void cancel_trailing(std::vector<TorusElement>& dens, TorusElement& num) {
    while (!dens.empty() && !num.is_zero()) {
        TorusElement t = dens.back();
        if (num == t) {
            num = TorusElement::constant(num.pres(), Scalar(1));
            dens.pop_back();
            continue;
        }
        {
            TorusElement core;
            Expt m;
            if (strip_right_monomial(t, core, m)) {
                // (core M)^-1 = core'^-1 M^-1 with core' = M^-1 core M
                Expt minv(m.size());
                for (std::size_t i = 0; i < m.size(); ++i) minv[i] = -m[i];
                dens.back() = core.conjugated_by(minv);
                num = TorusElement::monomial(num.pres(), m).monomial_inverse() * num;
                continue;
            }
        }
        auto tv = UnivariateView::collect(t);
        if (!tv) break;
        auto nv = UnivariateView::collect(num, &tv->direction());
        if (!nv) break;
        auto q = UnivariateView::divide(*nv, *tv);
        if (!q) break;
        num = q->to_element();
        dens.pop_back();
    }
    if (num.is_zero()) dens.clear();
}

} // namespace

OreFraction normalize_chain(const Chain& chain, const FracLimits& lim) {
    if (chain.empty()) throw Error("normalize_chain: empty chain has no presentation");
    PresPtr pres = chain.front().poly.pres();
    std::vector<TorusElement> dens;
    TorusElement num = TorusElement::constant(pres, Scalar(1));
    for (const auto& item : chain) {
        if (!item.inverted) {
            if (item.poly.is_zero()) {
                return OreFraction::zero(pres);
            }
            num = num * item.poly;
            continue;
        }
        TorusElement t = item.poly;
        if (t.is_zero()) throw DivisionByZero("normalize_chain: inverted zero");
        if (t.is_scalar()) {
            num = num.scaled(t.scalar_value().inverse());
            continue;
        }
        if (t.is_monomial()) {
            num = num * t.monomial_inverse();
            continue;
        }
        {
            TorusElement core;
            Expt m;
            if (strip_right_monomial(t, core, m)) {
                // t^-1 = M^-1 core^-1: absorb the monomial, keep the core
                num = num * TorusElement::monomial(pres, m).monomial_inverse();
                t = std::move(core);
            }
        }
        if (num.is_scalar()) {
            // D^-1 c t^-1 = D^-1 t^-1 c (scalars are central)
            dens.push_back(t);
            continue;
        }
        if (num == t) {
            num = TorusElement::constant(pres, Scalar(1));
            continue;
        }
        // num * t^-1 = T^-1 num'
        auto tv = UnivariateView::collect(t);
        if (tv && tv->commutative_coeffs()) {
            // cancellation first: when t right-divides num the inverse is free
            auto nv = UnivariateView::collect(num, &tv->direction());
            if (nv) {
                auto q = UnivariateView::divide(*nv, *tv);
                if (q) {
                    num = q->to_element();
                    continue;
                }
            }
            auto [T, numprime] = push_left(num, t, lim);
            for (auto& f : T) append_den(dens, std::move(f), num);
            num = std::move(numprime);
        } else {
            TorusElement T, numprime;
            common_left_multiple(num, t, lim, T, numprime);
            append_den(dens, std::move(T), num);
            num = std::move(numprime);
        }
        if (num.is_zero()) return OreFraction::zero(pres);
    }
    cancel_trailing(dens, num);
    return OreFraction::from_parts(std::move(dens), std::move(num));
}

// ---- fraction arithmetic ----

OreFraction frac_mul(const OreFraction& a, const OreFraction& b, const FracLimits& lim) {
    if (a.is_zero() || b.is_zero()) return OreFraction::zero(a.pres());
    Chain chain;
    for (const auto& d : a.den()) chain.push_back({d, true});
    chain.push_back({a.num(), false});
    for (const auto& d : b.den()) chain.push_back({d, true});
    chain.push_back({b.num(), false});
    return normalize_chain(chain, lim);
}

OreFraction frac_scaled(const OreFraction& a, const Scalar& c) {
    if (c.is_zero()) return OreFraction::zero(a.pres());
    return OreFraction::from_parts(a.den(), a.num().scaled(c));
}

OreFraction frac_add(const OreFraction& a, const OreFraction& b, const FracLimits& lim) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const PresPtr& pres = a.pres();
    if (a.den() == b.den()) {
        TorusElement num = a.num() + b.num();
        if (num.is_zero()) return OreFraction::zero(pres);
        Chain chain;
        for (const auto& d : a.den()) chain.push_back({d, true});
        chain.push_back({num, false});
        return normalize_chain(chain, lim);
    }
    if (b.is_polynomial()) {
        // a + b = Da^-1 (Na + Da * Nb)
        Chain chain;
        for (const auto& d : a.den()) chain.push_back({d, true});
        chain.push_back({a.num() + a.den_product() * b.num(), false});
        return normalize_chain(chain, lim);
    }
    if (a.is_polynomial()) return frac_add(b, a, lim);
    // a + b = Da^-1 (Na + X) with X = Da * Db^-1 * Nb = P^-1 Y,
    // so a + b = Da^-1 P^-1 (P Na + Y).
    Chain xchain;
    xchain.push_back({a.den_product(), false});
    for (const auto& d : b.den()) xchain.push_back({d, true});
    xchain.push_back({b.num(), false});
    OreFraction X = normalize_chain(xchain, lim);
    Chain chain;
    for (const auto& d : a.den()) chain.push_back({d, true});
    for (const auto& d : X.den()) chain.push_back({d, true});
    chain.push_back({X.den_product() * a.num() + X.num(), false});
    return normalize_chain(chain, lim);
}

OreFraction frac_sub(const OreFraction& a, const OreFraction& b, const FracLimits& lim) {
    return frac_add(a, frac_scaled(b, Scalar(-1)), lim);
}

OreFraction frac_inverse(const OreFraction& a, const FracLimits& lim) {
    if (a.is_zero()) throw DivisionByZero("frac_inverse: zero");
    Chain chain;
    chain.push_back({a.num(), true});
    for (auto it = a.den().rbegin(); it != a.den().rend(); ++it) chain.push_back({*it, false});
    return normalize_chain(chain, lim);
}

OreFraction frac_pow(const OreFraction& a, long k, const FracLimits& lim) {
    if (k == 0) return OreFraction::one(a.pres());
    OreFraction base = k > 0 ? a : frac_inverse(a, lim);
    long n = k > 0 ? k : -k;
    OreFraction acc = OreFraction::one(a.pres());
    for (long i = 0; i < n; ++i) acc = frac_mul(acc, base, lim);
    return acc;
}

bool frac_equal(const OreFraction& a, const OreFraction& b, const FracLimits& lim) {
    if (a.den() == b.den()) return a.num() == b.num();
    if (a.is_zero()) return b.is_zero();
    if (b.is_zero()) return false;
    return frac_sub(a, b, lim).is_zero();
}

// ---- substitution ----

OreFraction substitute_generators(const TorusElement& e, const std::vector<OreFraction>& images,
                                  const FracLimits& lim) {
    if (images.empty()) throw Error("substitute_generators: no images");
    PresPtr target = images[0].pres();
    if (e.is_zero()) return OreFraction::zero(target);
    const int n = e.pres()->n;
    if (static_cast<int>(images.size()) != n) throw Error("substitute_generators: image count");
    std::map<std::pair<int, long>, OreFraction> pow_cache;
    auto image_pow = [&](int g, long k) -> const OreFraction& {
        auto key = std::make_pair(g, k);
        auto it = pow_cache.find(key);
        if (it == pow_cache.end()) it = pow_cache.emplace(key, frac_pow(images[g], k, lim)).first;
        return it->second;
    };
    OreFraction total = OreFraction::zero(target);
    for (const auto& [u, c] : e.terms()) {
        OreFraction term = OreFraction::scalar(target, c);
        for (int g = 0; g < n; ++g) {
            if (u[g] == 0) continue;
            term = frac_mul(term, image_pow(g, u[g]), lim);
            if (term.is_zero()) break;
        }
        total = frac_add(total, term, lim);
    }
    return total;
}

OreFraction substitute_generators(const OreFraction& f, const std::vector<OreFraction>& images,
                                  const FracLimits& lim) {
    PresPtr target = images.empty() ? nullptr : images[0].pres();
    OreFraction acc = OreFraction::one(target);
    for (const auto& d : f.den()) {
        OreFraction dimg = substitute_generators(d, images, lim);
        if (dimg.is_zero()) throw DivisionByZero("substitute_generators: denominator image is zero");
        acc = frac_mul(acc, frac_inverse(dimg, lim), lim);
    }
    return frac_mul(acc, substitute_generators(f.num(), images, lim), lim);
}

} // namespace qweyl
