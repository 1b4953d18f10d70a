#include "qweyl/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qweyl {

namespace {

void validate_gcm(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) throw ConfigError("GCM: empty matrix");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw ConfigError("GCM: matrix is not square");
        if (a[i][i] != 2) throw ConfigError("GCM: a_ii must equal 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && a[i][j] > 0) throw ConfigError("GCM: off-diagonal entries must be <= 0");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw ConfigError("GCM: a_ij = 0 must imply a_ji = 0");
        }
    }
}

} // namespace

std::vector<Rational> solve_symmetrizer(const IntMatrix& a) {
    validate_gcm(a);
    const int n = static_cast<int>(a.size());
    std::vector<Rational> d(n, Rational(0));
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        // Propagate ratios d_j = d_i * a_ij / a_ji over the component.
        comp[start] = ncomp;
        d[start] = 1;
        std::vector<int> stack{start};
        std::vector<int> members{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                Rational dj = d[i] * a[i][j] / Rational(a[j][i]);
                if (comp[j] < 0) {
                    comp[j] = ncomp;
                    d[j] = dj;
                    stack.push_back(j);
                    members.push_back(j);
                } else if (d[j] != dj) {
                    throw NotSymmetrizable("inconsistent ratio cycle in GCM");
                }
            }
        }
        Rational mn = d[members[0]];
        for (int m : members) mn = std::min(mn, d[m]);
        for (int m : members) d[m] /= mn;
        ++ncomp;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i] * a[i][j] != d[j] * a[j][i])
                throw NotSymmetrizable("symmetrizer check failed");
    return d;
}

Gcm::Gcm(IntMatrix a, std::vector<Rational> d, std::vector<IntVector> epsilon)
    : a_(std::move(a)) {
    validate_gcm(a_);
    rank_ = static_cast<int>(a_.size());
    if (d.empty()) {
        d_ = solve_symmetrizer(a_);
    } else {
        if (static_cast<int>(d.size()) != rank_) throw ConfigError("GCM: symmetrizer size mismatch");
        for (const auto& x : d)
            if (x <= 0) throw ConfigError("GCM: symmetrizer entries must be positive");
        d_ = std::move(d);
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (d_[i] * a_[i][j] != d_[j] * a_[j][i])
                    throw NotSymmetrizable("given symmetrizer does not symmetrize the GCM");
    }
    if (epsilon.empty()) {
        epsilon_.assign(rank_, IntVector(rank_, 0));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (i != j && a_[i][j] != 0) epsilon_[i][j] = i < j ? 1 : -1;
    } else {
        if (static_cast<int>(epsilon.size()) != rank_) throw ConfigError("GCM: epsilon size mismatch");
        epsilon_ = std::move(epsilon);
        for (int i = 0; i < rank_; ++i) {
            if (static_cast<int>(epsilon_[i].size()) != rank_)
                throw ConfigError("GCM: epsilon size mismatch");
            for (int j = 0; j < rank_; ++j) {
                long e = epsilon_[i][j];
                if (i != j && a_[i][j] != 0) {
                    if (e != 1 && e != -1) throw ConfigError("GCM: epsilon_ij must be +-1 on edges");
                    if (epsilon_[j][i] != -e) throw ConfigError("GCM: epsilon must be antisymmetric");
                } else if (e != 0) {
                    throw ConfigError("GCM: epsilon_ij must vanish off edges");
                }
            }
        }
    }
}

long Gcm::lcd() const {
    long l = 1;
    for (const auto& x : d_) l = std::lcm(l, x.get_den().get_si());
    return l;
}

std::vector<std::vector<int>> Gcm::components() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(rank_, 0);
    for (int start = 0; start < rank_; ++start) {
        if (seen[start]) continue;
        std::vector<int> comp{start};
        seen[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < rank_; ++j)
                if (!seen[j] && a_[i][j] != 0) {
                    seen[j] = 1;
                    comp.push_back(j);
                    stack.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

Rational det_rational(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

} // namespace

std::vector<Gcm::Type> Gcm::classify() const {
    std::vector<Type> out;
    for (const auto& comp : components()) {
        const std::size_t n = comp.size();
        std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                b[i][j] = d_[comp[i]] * a_[comp[i]][comp[j]];
        // Leading principal minors of the symmetrized block.
        bool proper_positive = true;
        for (std::size_t k = 1; k + 1 <= n; ++k) {
            std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub[i][j] = b[i][j];
            if (det_rational(sub) <= 0) {
                proper_positive = false;
                break;
            }
        }
        Rational full = det_rational(b);
        if (proper_positive && full > 0) out.push_back(Type::Finite);
        else if (proper_positive && full == 0) out.push_back(Type::Affine);
        else out.push_back(Type::Indefinite);
    }
    return out;
}

int Gcm::braid_order(int i, int j) const {
    long p = a_[i][j] * a_[j][i];
    switch (p) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: return 0;
    }
}

std::string type_name(Gcm::Type t) {
    switch (t) {
        case Gcm::Type::Finite: return "finite";
        case Gcm::Type::Affine: return "affine";
        default: return "indefinite";
    }
}

// ---- RootDatum ----

RootDatum::RootDatum(const Gcm& g, IntMatrix coroots, IntMatrix roots, std::string preset_name)
    : rank_(g.rank()), coroots_(std::move(coroots)), roots_(std::move(roots)),
      preset_(std::move(preset_name)) {
    if (coroots_.size() != static_cast<std::size_t>(rank_) ||
        roots_.size() != static_cast<std::size_t>(rank_))
        throw NotARootDatum("coroot/root count must match GCM rank");
    dimY_ = static_cast<int>(coroots_[0].size());
    for (const auto& v : coroots_)
        if (static_cast<int>(v.size()) != dimY_) throw NotARootDatum("coroot dimension mismatch");
    for (const auto& v : roots_)
        if (static_cast<int>(v.size()) != dimY_) throw NotARootDatum("root dimension mismatch");
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (cartan_entry(i, j) != g.a(i, j))
                throw NotARootDatum("pairing of coroots and roots does not reproduce the GCM");
}

long RootDatum::pair(const IntVector& y, const IntVector& x) const {
    long s = 0;
    for (int m = 0; m < dimY_; ++m) s += y[m] * x[m];
    return s;
}

long RootDatum::cartan_entry(int i, int j) const { return pair(coroots_[i], roots_[j]); }

IntVector RootDatum::reflect_y(int i, const IntVector& y) const {
    long c = pair(y, roots_[i]);
    IntVector r = y;
    for (int m = 0; m < dimY_; ++m) r[m] -= c * coroots_[i][m];
    return r;
}

IntVector RootDatum::reflect_x(int i, const IntVector& x) const {
    long c = pair(coroots_[i], x);
    IntVector r = x;
    for (int m = 0; m < dimY_; ++m) r[m] -= c * roots_[i][m];
    return r;
}

IntVector RootDatum::apply_y(const WeylWord& w, IntVector v) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = reflect_y(*it, v);
    return v;
}

IntVector RootDatum::apply_x(const WeylWord& w, IntVector v) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = reflect_x(*it, v);
    return v;
}

IntMatrix RootDatum::reflection_matrix_y(int i) const {
    IntMatrix m(dimY_, IntVector(dimY_, 0));
    for (int b = 0; b < dimY_; ++b) {
        IntVector e(dimY_, 0);
        e[b] = 1;
        IntVector img = reflect_y(i, e);
        for (int r = 0; r < dimY_; ++r) m[r][b] = img[r];
    }
    return m;
}

RootDatum RootDatum::standard(const Gcm& g) {
    const int n = g.rank();
    // Corank of A over the rationals.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rational(g.a(i, j));
    // Row-reduce to find the rank and a set of independent columns.
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = row;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[row]);
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[row][col];
            for (int c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    const int corank = n - row;
    const int dim = n + corank;
    // Coroots are the first n basis vectors; roots get the GCM columns on
    // those coordinates plus derivation rows completing independence.
    std::vector<int> free_cols;
    {
        std::vector<char> is_piv(n, 0);
        for (int c : pivot_cols) is_piv[c] = 1;
        for (int c = 0; c < n; ++c)
            if (!is_piv[c]) free_cols.push_back(c);
    }
    IntMatrix coroots(n, IntVector(dim, 0));
    IntMatrix roots(n, IntVector(dim, 0));
    for (int i = 0; i < n; ++i) coroots[i][i] = 1;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) roots[j][i] = g.a(i, j);
        for (int t = 0; t < corank; ++t) roots[j][n + t] = (free_cols[t] == j) ? 1 : 0;
    }
    return RootDatum(g, std::move(coroots), std::move(roots), "standard");
}

IntMatrix RootDatum::affine_a_matrix(int m) {
    if (m < 2) throw ConfigError("affine preset needs m >= 2");
    IntMatrix a(m, IntVector(m, 0));
    for (int i = 0; i < m; ++i) a[i][i] = 2;
    if (m == 2) {
        a[0][1] = a[1][0] = -2;
    } else {
        for (int i = 0; i < m; ++i) {
            int next = (i + 1) % m;
            a[i][next] -= 1;
            a[next][i] -= 1;
        }
    }
    return a;
}

RootDatum RootDatum::affine_gl(int m) {
    Gcm g(affine_a_matrix(m), std::vector<Rational>(m, Rational(1)));
    const int dim = m + 2; // eps_1..eps_m, c, d
    auto eps = [&](int i) { return i; };
    const int c = m, dd = m + 1;
    IntMatrix coroots(m, IntVector(dim, 0));
    for (int i = 1; i < m; ++i) {
        coroots[i][eps(i - 1)] = 1;
        coroots[i][eps(i)] = -1;
    }
    coroots[0][c] = 1;
    coroots[0][eps(0)] = -1;
    coroots[0][eps(m - 1)] = 1;
    // Roots in dual coordinates: apply the Gram form (eps orthonormal, (c,d)=1).
    IntMatrix roots(m, IntVector(dim, 0));
    for (int j = 0; j < m; ++j) {
        const IntVector& v = coroots[j];
        for (int t = 0; t < m; ++t) roots[j][eps(t)] = v[eps(t)];
        roots[j][c] = v[dd];
        roots[j][dd] = v[c];
    }
    return RootDatum(g, std::move(coroots), std::move(roots), "affine-gl " + std::to_string(m));
}

RootDatum RootDatum::affine_sl(int m) {
    Gcm g(affine_a_matrix(m), std::vector<Rational>(m, Rational(1)));
    const int dim = m + 1; // coroot_1..coroot_{m-1}, c, d
    const int c = m - 1, dd = m;
    IntMatrix coroots(m, IntVector(dim, 0));
    for (int i = 1; i < m; ++i) coroots[i][i - 1] = 1;
    coroots[0][c] = 1;
    for (int i = 0; i + 1 < m; ++i) coroots[0][i] = -1; // c - theta_check
    IntMatrix roots(m, IntVector(dim, 0));
    for (int j = 0; j < m; ++j) {
        for (int i = 1; i < m; ++i) roots[j][i - 1] = g.a(i, j);
        roots[j][c] = 0;
        roots[j][dd] = (j == 0) ? 1 : 0;
    }
    return RootDatum(g, std::move(coroots), std::move(roots), "affine-sl " + std::to_string(m));
}

RootDatum RootDatum::affine_psl(int m) {
    // Dual datum: swap the roles of roots and coroots of affine-sl.
    RootDatum sl = affine_sl(m);
    Gcm g(affine_a_matrix(m), std::vector<Rational>(m, Rational(1)));
    IntMatrix coroots(m), roots(m);
    for (int i = 0; i < m; ++i) {
        coroots[i] = sl.root(i);
        roots[i] = sl.coroot(i);
    }
    return RootDatum(g, std::move(coroots), std::move(roots), "affine-psl " + std::to_string(m));
}

// ---- words ----

namespace {

// s_i on coroot-lattice coordinates: c_i -= sum_j c_j a_ji.
void reflect_coroot_coords(const Gcm& g, int i, IntVector& c) {
    long s = 0;
    for (int j = 0; j < g.rank(); ++j) s += c[j] * g.a(j, i);
    c[i] -= s;
}

} // namespace

bool is_reduced(const Gcm& g, const WeylWord& w) {
    const int n = static_cast<int>(w.size());
    for (int idx : w)
        if (idx < 0 || idx >= g.rank()) throw ConfigError("word letter out of range");
    for (int p = 0; p < n; ++p) {
        // s_{i_n} ... s_{i_{p+1}} (coroot_{i_p}) must stay non-negative.
        IntVector c(g.rank(), 0);
        c[w[p]] = 1;
        for (int t = p + 1; t < n; ++t) reflect_coroot_coords(g, w[t], c);
        for (long x : c)
            if (x < 0) return false;
    }
    return true;
}

std::vector<IntVector> verma_rotated_coroots(const Gcm& g, const WeylWord& w) {
    const int n = static_cast<int>(w.size());
    std::vector<IntVector> out;
    out.reserve(n);
    for (int p = 0; p < n; ++p) {
        IntVector c(g.rank(), 0);
        c[w[p]] = 1;
        for (int t = p + 1; t < n; ++t) reflect_coroot_coords(g, w[t], c);
        out.push_back(std::move(c));
    }
    return out;
}

IntVector verma_exponents(const Gcm& g, const WeylWord& w, const IntVector& coroot_pairings) {
    if (static_cast<int>(coroot_pairings.size()) != g.rank())
        throw ConfigError("verma_exponents: pairing vector size mismatch");
    for (long c : coroot_pairings)
        if (c < 0) throw NotDominant();
    if (!is_reduced(g, w)) throw NonReducedWord();
    const int n = static_cast<int>(w.size());
    IntVector out(n, 0);
    for (int p = 0; p < n; ++p) {
        IntVector c(g.rank(), 0);
        c[w[p]] = 1;
        for (int t = p + 1; t < n; ++t) reflect_coroot_coords(g, w[t], c);
        long k = 0;
        for (int j = 0; j < g.rank(); ++j) k += c[j] * coroot_pairings[j];
        out[p] = k;
    }
    return out;
}

IntVector verma_exponents(const Gcm& g, const RootDatum& rd, const WeylWord& w,
                          const IntVector& lambda) {
    IntVector pairings(g.rank(), 0);
    for (int i = 0; i < g.rank(); ++i) pairings[i] = rd.pair(rd.coroot(i), lambda);
    return verma_exponents(g, w, pairings);
}

std::vector<Integer> growth_series(int N, int kmax) {
    if (N < 1 || kmax < 0) throw ConfigError("growth_series: need N >= 1, kmax >= 0");
    std::vector<Integer> c(kmax + 1, 0);
    c[0] = 1;
    // Multiply by (1 - t^i)^-1 = sum_mu t^(i mu), N times for each i <= kmax.
    for (int i = 1; i <= kmax; ++i)
        for (int rep = 0; rep < N; ++rep)
            for (int k = i; k <= kmax; ++k) c[k] += c[k - i];
    return c;
}

} // namespace qweyl
