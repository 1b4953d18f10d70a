#ifndef QWEYL_CARTAN_HPP
#define QWEYL_CARTAN_HPP

#include <string>
#include <vector>

#include "qweyl/scalar.hpp"

namespace qweyl {

using IntMatrix = std::vector<std::vector<long>>;
using IntVector = std::vector<long>;
using WeylWord = std::vector<int>;

/// Solve d_i a_ij = d_j a_ji for positive rationals, normalized so the
/// minimum over each indecomposable component is 1.  Throws NotSymmetrizable
/// when a cycle carries inconsistent ratios.
std::vector<Rational> solve_symmetrizer(const IntMatrix& a);

/// Generalized Cartan matrix with a symmetrizer and an orientation.
class Gcm {
public:
    Gcm(IntMatrix a,
        std::vector<Rational> d = {},       // solved when empty
        std::vector<IntVector> epsilon = {} // default orientation when empty
    );

    int rank() const { return rank_; }
    long a(int i, int j) const { return a_[i][j]; }
    const IntMatrix& matrix() const { return a_; }
    const Rational& d(int i) const { return d_[i]; }
    const std::vector<Rational>& symmetrizer() const { return d_; }
    long epsilon(int i, int j) const { return epsilon_[i][j]; }

    /// q_i = q^{d_i} as an exponent of q.
    QExp qi_exp(int i) const { return QExp(d_[i]); }

    /// Least common denominator of the symmetrizer.
    long lcd() const;

    /// Connected components of the Coxeter graph, each a list of indices.
    std::vector<std::vector<int>> components() const;

    enum class Type { Finite, Affine, Indefinite };
    /// Classification of each indecomposable component, in component order.
    std::vector<Type> classify() const;

    /// Braid order m(i,j): 2,3,4,6 for a_ij*a_ji = 0,1,2,3; 0 means infinite.
    int braid_order(int i, int j) const;

private:
    int rank_;
    IntMatrix a_;
    std::vector<Rational> d_;
    std::vector<IntVector> epsilon_;
};

std::string type_name(Gcm::Type t);

/// Root datum: Y = Z^M with a chosen basis, X realized on the dual basis so
/// that the pairing of basis vectors is the identity matrix.  Coroots are
/// integer vectors in Y, roots integer vectors in X.
class RootDatum {
public:
    RootDatum(const Gcm& g, IntMatrix coroots, IntMatrix roots, std::string preset_name);

    /// Standard realization for an arbitrary GCM: Y = Z^(rank + corank).
    static RootDatum standard(const Gcm& g);
    /// Affine presets from explicit lattice data; m >= 2.
    static RootDatum affine_gl(int m);
    static RootDatum affine_sl(int m);
    static RootDatum affine_psl(int m);
    /// The GCM of a preset (all presets: A^{(1)}_{m-1}).
    static IntMatrix affine_a_matrix(int m);

    int rank() const { return rank_; }
    int dimY() const { return dimY_; }
    const IntVector& coroot(int i) const { return coroots_[i]; }
    const IntVector& root(int i) const { return roots_[i]; }
    const std::string& preset_name() const { return preset_; }

    long pair(const IntVector& y, const IntVector& x) const;
    /// <coroot_i, root_j>; equals the GCM entry by the root-datum axiom.
    long cartan_entry(int i, int j) const;

    IntVector reflect_y(int i, const IntVector& y) const; // s_i(y) = y - <y,alpha_i> coroot_i
    IntVector reflect_x(int i, const IntVector& x) const; // s_i(x) = x - <coroot_i,x> alpha_i

    /// Apply a word left-to-right: apply((i,j), v) = s_i(s_j(v)).
    IntVector apply_y(const WeylWord& w, IntVector v) const;
    IntVector apply_x(const WeylWord& w, IntVector v) const;

    /// Matrix of s_i on Y coordinates (columns = images of basis vectors).
    IntMatrix reflection_matrix_y(int i) const;

private:
    int rank_;
    int dimY_;
    IntMatrix coroots_;
    IntMatrix roots_;
    std::string preset_;
};

/// Reduced-word criterion: every suffix keeps the rotated coroot
/// non-negative.  Works from the GCM alone.
bool is_reduced(const Gcm& g, const WeylWord& w);

/// Verma exponent sequence k_p for a reduced word and a dominant weight
/// given by its coroot pairings c_i = <coroot_i, lambda> >= 0.
IntVector verma_exponents(const Gcm& g, const WeylWord& w, const IntVector& coroot_pairings);

/// The rotated coroots s_{i_n}...s_{i_{p+1}}(coroot_{i_p}) in coroot-lattice
/// coordinates; k_p is their pairing with lambda.  For braid-equal reduced
/// words these agree as multisets.
std::vector<IntVector> verma_rotated_coroots(const Gcm& g, const WeylWord& w);

/// Same, with lambda an explicit dominant X vector of a root datum.
IntVector verma_exponents(const Gcm& g, const RootDatum& rd, const WeylWord& w, const IntVector& lambda);

/// Coefficients C^(N)_0..C^(N)_kmax of (prod_{i>=1} (1-t^i))^-N.
std::vector<Integer> growth_series(int N, int kmax);

} // namespace qweyl

#endif // QWEYL_CARTAN_HPP
