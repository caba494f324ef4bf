#pragma once

/**
 * @file exact.hpp
 * @brief Exact arithmetic substrate: rationals, residues modulo 1 and
 *        integer combinations of roots of unity.
 *
 * Rationals are GMP `mpq_class` values, always kept canonical (reduced,
 * positive denominator).  `QmodZ` is a rational in [0,1).  A
 * `CyclotomicSum` is a dense integer vector indexed by exponents of
 * zeta_N = exp(2 pi i / N); equality is decided exactly by reducing the
 * difference modulo the N-th cyclotomic polynomial.
 */

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace spinc {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Integer floor_of(const Rational& r);
std::string to_string(const Rational& r);   // "n" or "n/d"

/// A residue class in Q/Z, stored by its representative in [0,1).
class QmodZ {
public:
    QmodZ() = default;
    explicit QmodZ(const Rational& r);
    QmodZ(long num, long den) : QmodZ(make_rational(num, den)) {}

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    QmodZ operator+(const QmodZ& o) const { return QmodZ(Rational(value_ + o.value_)); }
    QmodZ operator-(const QmodZ& o) const { return QmodZ(Rational(value_ - o.value_)); }
    QmodZ operator-() const { return QmodZ(Rational(-value_)); }
    QmodZ scaled(const Integer& k) const { return QmodZ(Rational(value_ * k)); }
    QmodZ& operator+=(const QmodZ& o) { return *this = *this + o; }

    bool operator==(const QmodZ& o) const { return value_ == o.value_; }
    std::strong_ordering operator<=>(const QmodZ& o) const;

    std::string str() const { return to_string(value_); }

private:
    Rational value_{0};
};

/// r - floor(r), canonical.
QmodZ qmodz_reduce(const Rational& r);

/// Integer polynomial, lowest degree first; no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    /// Remainder of division by a monic polynomial.
    IntPolynomial mod_monic(const IntPolynomial& divisor) const;
    /// Exact quotient by a monic divisor; throws if the remainder is nonzero.
    IntPolynomial div_exact_monic(const IntPolynomial& divisor) const;

    std::string str() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Phi_N.  Results are memoized; safe to call concurrently.
const IntPolynomial& cyclotomic_polynomial(std::uint64_t n);

/// Sum of integer multiples of N-th roots of unity:
/// value = sum_a coeffs[a] * exp(2 pi i a / N).
class CyclotomicSum {
public:
    /// The zero sum with modulus 1.
    CyclotomicSum() : modulus_(1), coeffs_(1, 0) {}
    CyclotomicSum(std::uint64_t modulus, std::vector<std::int64_t> coeffs);

    static CyclotomicSum root_of_unity(std::uint64_t exponent, std::uint64_t modulus);
    static CyclotomicSum integer(std::int64_t k);

    std::uint64_t modulus() const { return modulus_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    /// Same value written over a multiple M of the modulus.
    CyclotomicSum rescaled(std::uint64_t multiple) const;
    CyclotomicSum conjugate() const;

    CyclotomicSum operator+(const CyclotomicSum& o) const;
    CyclotomicSum operator-(const CyclotomicSum& o) const;
    CyclotomicSum operator*(const CyclotomicSum& o) const;

    /// Residue modulo Phi_N; the zero polynomial iff the sum vanishes.
    IntPolynomial reduced() const;
    std::complex<double> approx() const;   // display only
    std::string str() const;               // e.g. "1+ζ4"

private:
    std::uint64_t modulus_;
    std::vector<std::int64_t> coeffs_;
};

CyclotomicSum cyclo_from_angles(const std::vector<QmodZ>& angles);
bool cyclo_equals(const CyclotomicSum& a, const CyclotomicSum& b);
/// |a|^2; throws std::logic_error if a * conj(a) does not reduce to a constant.
Rational cyclo_abs_squared(const CyclotomicSum& a);

}  // namespace spinc
