#pragma once

// Bilinear lattices (Z^n, B) with characteristic forms, and the
// discriminant construction  (B, c)  ->  (G_B = H#/H, phi_{B,c}).
//
// H# = { x in Q^n : B x integral }.  Through the Smith decomposition
// U B V = D the group G_B splits as
//     G_B = (+)_i Z/d_i . [g_i]   (+)   (Ker B) (x) Q/Z
// with torsion lifts g_i = V e_i / d_i (d_i > 1) and kernel basis
// k_j = V e_j (d_j = 0).  This splitting is the stored section; every
// section-dependent quantity downstream refers to it.
//
// Coker B = Z^n / B Z^n is coordinatized as T (+) Z^b by the splitting
// dual to that section: the free coordinates are alpha(k_j), and the
// torsion part of alpha is the unique a in T with lambda(a, g_i) = alpha(g_i)
// for every i.  (Reading (U alpha)_i mod d_i alone is not enough: the
// free entries of U alpha also contribute to alpha(g_i).)

#include "spinc/zlinalg.hpp"

#include <vector>

namespace spinc {

class BilinearLattice {
public:
    explicit BilinearLattice(IntMatrix b);

    const IntMatrix& matrix() const { return b_; }
    std::size_t rank() const { return b_.rows(); }

private:
    IntMatrix b_;
};

/// c_i == B_ii (mod 2) for all i.
bool is_characteristic(const BilinearLattice& lattice, const IntVector& c);

struct WuClass {
    Mod2Vector w;
    bool operator==(const WuClass&) const = default;
};

/// All solutions of B w == diag(B) (mod 2).
std::vector<WuClass> wu_classes(const BilinearLattice& lattice);

class DiscriminantData {
public:
    explicit DiscriminantData(BilinearLattice lattice);

    const BilinearLattice& lattice() const { return lattice_; }
    const IntMatrix& matrix() const { return lattice_.matrix(); }
    const SmithDecomposition& smith() const { return smith_; }

    std::size_t free_rank() const { return kernel_.size(); }
    const std::vector<IntVector>& kernel_basis() const { return kernel_; }
    /// Invariant factors d_i > 1 of Tors Coker B, each dividing the next.
    const std::vector<Integer>& torsion_factors() const { return factors_; }
    const std::vector<RatVector>& torsion_lifts() const { return lifts_; }
    Integer torsion_order() const;
    bool is_nondegenerate() const { return kernel_.empty(); }

    bool is_dual(const RatVector& x) const;
    /// sum_i a_i g_i.
    RatVector torsion_element(const std::vector<Integer>& coords) const;

    /// Torsion coordinates of [alpha] in Coker B, each in [0, d_i).
    std::vector<Integer> torsion_coordinates(const IntVector& alpha) const;
    /// Free coordinates alpha(k_j).
    IntVector free_coordinates(const IntVector& alpha) const;
    /// An integer covector representing the i-th torsion generator of Coker B.
    IntVector torsion_generator_covector(std::size_t i) const;

    /// Canonical representative of c modulo 2 Im B (c characteristic).
    IntVector canonical_chern(const IntVector& c) const;
    bool chern_equal(const IntVector& c, const IntVector& c2) const;
    /// Canonical representatives of all |det B| classes; throws
    /// std::domain_error for degenerate B.
    std::vector<IntVector> canonical_chern_vectors() const;

private:
    BilinearLattice lattice_;
    SmithDecomposition smith_;
    std::vector<std::size_t> torsion_positions_;
    std::vector<std::size_t> free_positions_;
    // Torsion part of U^{-1} e_j for each free position j.
    std::vector<std::vector<Integer>> free_corrections_;
    std::vector<Integer> factors_;
    std::vector<RatVector> lifts_;
    std::vector<IntVector> kernel_;
    LatticeReducer image_;
};

/// x^T B y mod 1, for x, y in H#.
QmodZ linking_pairing(const DiscriminantData& d, const RatVector& x, const RatVector& y);
/// (x^T B x - c^T x) / 2 mod 1.
QmodZ phi_eval(const DiscriminantData& d, const IntVector& c, const RatVector& x);
/// alpha(x) mod 1.
QmodZ evaluation_pairing(const DiscriminantData& d, const IntVector& alpha, const RatVector& x);
/// c(k_j)/2 for each kernel basis vector.  phi_eval itself takes the value
/// -(c(k_j)/2) t on t k_j; the slopes carry the opposite orientation sign.
std::vector<Rational> radical_slope(const DiscriminantData& d, const IntVector& c);

}  // namespace spinc
