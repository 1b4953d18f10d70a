#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "qweyl/qcombinatorics.hpp"
#include "qweyl/torus.hpp"

using namespace qweyl;

namespace {

// Quantum plane: y x = q^2 x y  (x = generator 0, y = generator 1).
PresPtr quantum_plane() {
    auto p = std::make_shared<TorusPresentation>(2, std::vector<std::string>{"x", "y"});
    p->set_kappa(1, 0, Rational(2));
    return p;
}

// Rank 3 with mixed rational exponents and one central generator.
PresPtr rank3_mixed() {
    auto p = std::make_shared<TorusPresentation>(3, std::vector<std::string>{"u", "v", "c"});
    p->set_kappa(1, 0, Rational(1, 2));
    return p;
}

TorusElement gen(const PresPtr& p, int g) { return TorusElement::generator(p, g); }

// Independent free-word oracle: expand (x+y)^n as words over {x,y}, then
// normal-order each word by adjacent swaps y x -> q^2 x y.
TorusElement binomial_power_oracle(const PresPtr& p, int n) {
    TorusElement total(p);
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        // Letter sequence; bit t set means letter y at position t.
        std::string word;
        for (int t = 0; t < n; ++t) word += (mask >> t) & 1 ? 'y' : 'x';
        long swaps = 0;
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t i = 0; i + 1 < word.size(); ++i) {
                if (word[i] == 'y' && word[i + 1] == 'x') {
                    std::swap(word[i], word[i + 1]);
                    ++swaps;
                    moved = true;
                }
            }
        }
        long k = static_cast<long>(std::count(word.begin(), word.end(), 'x'));
        Expt e{k, n - k};
        total += TorusElement::monomial(p, e, Scalar::qpow(QExp(2 * swaps)));
    }
    return total;
}

TorusElement random_element(const PresPtr& p, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), expo(-2, 2), coef(-2, 2);
    TorusElement r(p);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Expt e(p->n);
        for (int g = 0; g < p->n; ++g) e[g] = expo(rng);
        r += TorusElement::monomial(p, e, Scalar(coef(rng)));
    }
    return r;
}

} // namespace

TEST_CASE("monomial times one, zero absorbs") {
    auto p = quantum_plane();
    TorusElement one = TorusElement::constant(p, Scalar(1));
    TorusElement m = TorusElement::monomial(p, {2, -1}, Scalar(3));
    CHECK(m * one == m);
    CHECK(one * m == m);
    CHECK((m - m).is_zero());
    CHECK((TorusElement(p) * m).is_zero());
}

TEST_CASE("quantum plane square: (x+y)^2 = x^2 + (1+q^2) x y + y^2") {
    auto p = quantum_plane();
    TorusElement s = gen(p, 0) + gen(p, 1);
    TorusElement sq = s * s;
    TorusElement expect = TorusElement::monomial(p, {2, 0}) +
                          TorusElement::monomial(p, {0, 2}) +
                          TorusElement::monomial(p, {1, 1}, Scalar(1) + Scalar::qpow(QExp(2)));
    CHECK(sq == expect);
}

TEST_CASE("q-binomial theorem against the free-word oracle") {
    auto p = quantum_plane();
    TorusElement s = gen(p, 0) + gen(p, 1);
    for (int n : {1, 2, 3, 5}) {
        TorusElement direct = s.pow(n);
        CHECK(direct == binomial_power_oracle(p, n));
        // Closed form: sum_k q^{k(n-k)} [n choose k] x^k y^{n-k}.
        TorusElement closed(p);
        for (long k = 0; k <= n; ++k) {
            Scalar c = q_binom(n, k);
            c.mul_qpow(QExp(k * (n - k)));
            closed += TorusElement::monomial(p, {k, n - k}, c);
        }
        CHECK(direct == closed);
    }
}

TEST_CASE("associativity and distributivity on random triples") {
    for (const auto& p : {quantum_plane(), rank3_mixed()}) {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 200; ++trial) {
            TorusElement a = random_element(p, rng);
            TorusElement b = random_element(p, rng);
            TorusElement c = random_element(p, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
        }
    }
}

TEST_CASE("commutation exponent antisymmetry and the q-power swap law") {
    for (const auto& p : {quantum_plane(), rank3_mixed()}) {
        std::mt19937 rng(31);
        std::uniform_int_distribution<int> expo(-3, 3);
        for (int trial = 0; trial < 100; ++trial) {
            Expt u(p->n), v(p->n);
            for (int g = 0; g < p->n; ++g) {
                u[g] = expo(rng);
                v[g] = expo(rng);
            }
            CHECK(p->comm_exponent(u, v) + p->comm_exponent(v, u) == 0);
            TorusElement xu = TorusElement::monomial(p, u);
            TorusElement xv = TorusElement::monomial(p, v);
            // x^u x^v = q^{comm(u,v)} x^v x^u
            TorusElement lhs = xu * xv;
            TorusElement rhs = (xv * xu).mul_qpow(QExp(p->comm_exponent(u, v)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("monomial conjugation") {
    auto p = quantum_plane();
    // Conjugating a central element changes nothing (c is central in rank3).
    auto p3 = rank3_mixed();
    TorusElement c = gen(p3, 2) + TorusElement::constant(p3, Scalar(5));
    CHECK(c.conjugated_by({1, 2, -1}) == c);
    // x (1+y) x^-1 = 1 + q^-2 y in the quantum plane.
    TorusElement a = TorusElement::constant(p, Scalar(1)) + gen(p, 1);
    TorusElement conj = a.conjugated_by({1, 0});
    TorusElement expect = TorusElement::constant(p, Scalar(1)) +
                          TorusElement::monomial(p, {0, 1}, Scalar::qpow(QExp(-2)));
    CHECK(conj == expect);
    // Conjugation by m then -m is the identity.
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        TorusElement r = random_element(p, rng);
        CHECK(r.conjugated_by({2, -3}).conjugated_by({-2, 3}) == r);
    }
    // Conjugation agrees with multiplying by the monomial and its inverse.
    TorusElement m = TorusElement::monomial(p, {2, -3}, Scalar(1));
    TorusElement viamul = m * a * m.monomial_inverse();
    CHECK(viamul == a.conjugated_by({2, -3}));
}

TEST_CASE("monomial inverse is two-sided") {
    auto p = quantum_plane();
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> expo(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        Expt e{expo(rng), expo(rng)};
        TorusElement m = TorusElement::monomial(p, e, Scalar(7));
        TorusElement inv = m.monomial_inverse();
        CHECK((m * inv).scalar_value().is_one());
        CHECK((inv * m).scalar_value().is_one());
    }
}

TEST_CASE("normal forms distinguish orderings") {
    auto p = quantum_plane();
    TorusElement xy = gen(p, 0) * gen(p, 1);
    TorusElement yx = gen(p, 1) * gen(p, 0);
    CHECK(xy != yx);
    CHECK(xy == yx.mul_qpow(QExp(-2)));
}

TEST_CASE("graded dimension counts monomials") {
    CHECK(graded_dimension(2, {1, 1}, 3) == 4);
    CHECK(graded_dimension(2, {1, 1}, 0) == 1);
    CHECK(graded_dimension(3, {1, 1, 1}, 2) == 6);
    // Against the growth-series bound C^(N)_k with principal weights.
}
