#pragma once

// Exact integer linear algebra: Smith normal form, integer and mod-2
// solvers, lattice reduction.

#include "spinc/exact.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace spinc {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using Mod2Vector = std::vector<std::uint8_t>;

IntVector int_vector(std::initializer_list<long> xs);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    IntVector diagonal() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntVector operator*(const IntVector& v) const;
    RatVector operator*(const RatVector& v) const;
    bool operator==(const IntMatrix& o) const = default;

    /// Bareiss fraction-free elimination.
    Integer determinant() const;
    /// Deletes the listed rows and the same-index columns (square matrices).
    IntMatrix without(std::vector<std::size_t> indices) const;
    /// [[A,0],[0,B]].
    IntMatrix direct_sum(const IntMatrix& other) const;

    // Elementary operations (used by Smith reduction and presentation moves).
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& k);
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& k);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Integer gcd_of(const IntVector& v);

/// U * M * V = D with U, V unimodular, D diagonal with d_1 | d_2 | ...
/// (zeros last), all d_i >= 0.  The inverses of U and V are tracked
/// alongside.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix U_inverse;
    IntMatrix V_inverse;

    std::size_t rank() const;
    /// Diagonal entries d_1..d_min(rows,cols).
    IntVector invariant_factors() const;
};

/// Pivot rule: smallest nonzero absolute value, ties broken by lowest row
/// then lowest column.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Some integer x with M x = v, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& v);

/// Affine solution set of M x = v over F_2.
struct Mod2Solutions {
    bool solvable = false;
    Mod2Vector particular;
    std::vector<Mod2Vector> kernel;

    std::size_t count_log2() const { return kernel.size(); }
    /// All 2^k solutions in a deterministic order; throws if k > max_log2.
    std::vector<Mod2Vector> enumerate(std::size_t max_log2 = 20) const;
};

Mod2Solutions solve_mod2(const IntMatrix& m, const IntVector& v);

/// Basis of {x : M x = 0}, read off the Smith decomposition.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Echelon basis of a sublattice of Z^n with canonical reduction of vectors
/// modulo the lattice.
class LatticeReducer {
public:
    /// Lattice spanned by the given generators (all of length n).
    LatticeReducer(std::size_t n, const std::vector<IntVector>& generators);

    /// Canonical representative of v modulo the lattice.
    IntVector reduce(IntVector v) const;
    bool contains(const IntVector& v) const;

private:
    std::size_t dim_;
    std::vector<IntVector> basis_;        // echelon rows
    std::vector<std::size_t> pivots_;     // strictly increasing
};

}  // namespace spinc
