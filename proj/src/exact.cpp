#include "spinc/exact.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace spinc {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer floor_of(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

QmodZ::QmodZ(const Rational& r) : value_(r)
{
    value_.canonicalize();
    value_ -= floor_of(value_);
}

std::strong_ordering QmodZ::operator<=>(const QmodZ& o) const
{
    int c = cmp(value_, o.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QmodZ qmodz_reduce(const Rational& r) { return QmodZ(r); }

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const
{
    if (is_zero() || o.is_zero()) return {};
    std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const
{
    std::vector<Integer> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return IntPolynomial(std::move(out));
}

namespace {

// In-place long division by a monic divisor; returns the quotient.
std::vector<Integer> divide_monic(std::vector<Integer>& rem, const IntPolynomial& divisor)
{
    const auto& d = divisor.coeffs();
    if (d.empty() || d.back() != 1) throw std::invalid_argument("divisor is not monic");
    const std::size_t dd = d.size() - 1;
    if (rem.size() <= dd) return {};
    std::vector<Integer> quot(rem.size() - dd, 0);
    for (std::size_t k = rem.size(); k-- > dd;) {
        const Integer lead = rem[k];
        if (lead == 0) continue;
        quot[k - dd] = lead;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= lead * d[j];
    }
    return quot;
}

}  // namespace

IntPolynomial IntPolynomial::mod_monic(const IntPolynomial& divisor) const
{
    std::vector<Integer> rem = coeffs_;
    divide_monic(rem, divisor);
    return IntPolynomial(std::move(rem));
}

IntPolynomial IntPolynomial::div_exact_monic(const IntPolynomial& divisor) const
{
    std::vector<Integer> rem = coeffs_;
    auto quot = divide_monic(rem, divisor);
    if (!IntPolynomial(std::move(rem)).is_zero()) throw std::logic_error("inexact polynomial division");
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str() const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Integer& c = coeffs_[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || k == 0) out += mag.get_str();
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

const IntPolynomial& cyclotomic_polynomial(std::uint64_t n)
{
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
    static std::mutex mutex;
    static std::map<std::uint64_t, IntPolynomial> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<Integer> xn(n + 1, 0);
    xn[0] = -1;
    xn[n] = 1;
    IntPolynomial poly(std::move(xn));
    for (std::uint64_t d = 1; d < n; ++d) {
        if (n % d == 0) poly = poly.div_exact_monic(cyclotomic_polynomial(d));
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(poly)).first->second;
}

// ---------------------------------------------------------------------------
// CyclotomicSum

CyclotomicSum::CyclotomicSum(std::uint64_t modulus, std::vector<std::int64_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs))
{
    if (modulus_ == 0) throw std::invalid_argument("CyclotomicSum: modulus must be positive");
    if (coeffs_.size() != modulus_) throw std::invalid_argument("CyclotomicSum: need exactly N coefficients");
}

CyclotomicSum CyclotomicSum::root_of_unity(std::uint64_t exponent, std::uint64_t modulus)
{
    std::vector<std::int64_t> c(modulus, 0);
    c[exponent % modulus] = 1;
    return {modulus, std::move(c)};
}

CyclotomicSum CyclotomicSum::integer(std::int64_t k) { return {1, {k}}; }

CyclotomicSum CyclotomicSum::rescaled(std::uint64_t multiple) const
{
    if (multiple == 0 || multiple % modulus_ != 0)
        throw std::invalid_argument("rescaled: target is not a multiple of the modulus");
    const std::uint64_t step = multiple / modulus_;
    std::vector<std::int64_t> c(multiple, 0);
    for (std::uint64_t a = 0; a < modulus_; ++a) c[a * step] = coeffs_[a];
    return {multiple, std::move(c)};
}

CyclotomicSum CyclotomicSum::conjugate() const
{
    std::vector<std::int64_t> c(modulus_, 0);
    for (std::uint64_t a = 0; a < modulus_; ++a) c[(modulus_ - a) % modulus_] = coeffs_[a];
    return {modulus_, std::move(c)};
}

CyclotomicSum CyclotomicSum::operator+(const CyclotomicSum& o) const
{
    const std::uint64_t n = std::lcm(modulus_, o.modulus_);
    CyclotomicSum a = rescaled(n), b = o.rescaled(n);
    for (std::uint64_t k = 0; k < n; ++k) a.coeffs_[k] += b.coeffs_[k];
    return a;
}

CyclotomicSum CyclotomicSum::operator-(const CyclotomicSum& o) const
{
    const std::uint64_t n = std::lcm(modulus_, o.modulus_);
    CyclotomicSum a = rescaled(n), b = o.rescaled(n);
    for (std::uint64_t k = 0; k < n; ++k) a.coeffs_[k] -= b.coeffs_[k];
    return a;
}

CyclotomicSum CyclotomicSum::operator*(const CyclotomicSum& o) const
{
    const std::uint64_t n = std::lcm(modulus_, o.modulus_);
    CyclotomicSum a = rescaled(n), b = o.rescaled(n);
    std::vector<std::int64_t> c(n, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::uint64_t j = 0; j < n; ++j) c[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
    }
    return {n, std::move(c)};
}

IntPolynomial CyclotomicSum::reduced() const
{
    std::vector<Integer> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = Integer(static_cast<long>(coeffs_[k]));
    return IntPolynomial(std::move(c)).mod_monic(cyclotomic_polynomial(modulus_));
}

std::complex<double> CyclotomicSum::approx() const
{
    std::complex<double> z{0.0, 0.0};
    for (std::uint64_t a = 0; a < modulus_; ++a) {
        if (coeffs_[a] == 0) continue;
        const double t = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(modulus_);
        z += static_cast<double>(coeffs_[a]) * std::complex<double>(std::cos(t), std::sin(t));
    }
    return z;
}

namespace {

std::string subscript(std::uint64_t n)
{
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string plain = std::to_string(n), out;
    for (char ch : plain) out += digits[ch - '0'];
    return out;
}

}  // namespace

std::string CyclotomicSum::str() const
{
    std::string out;
    for (std::uint64_t a = 0; a < modulus_; ++a) {
        const std::int64_t c = coeffs_[a];
        if (c == 0) continue;
        const std::int64_t mag = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (a == 0) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) out += std::to_string(mag) + "·";
        out += "ζ" + subscript(modulus_);
        if (a != 1) out += "^" + std::to_string(a);
    }
    return out.empty() ? "0" : out;
}

CyclotomicSum cyclo_from_angles(const std::vector<QmodZ>& angles)
{
    std::uint64_t n = 1;
    for (const auto& t : angles) n = std::lcm(n, t.value().get_den().get_ui());
    std::vector<std::int64_t> c(n, 0);
    for (const auto& t : angles) {
        const Integer k = t.value().get_num() * (n / t.value().get_den().get_ui());
        c[k.get_ui()] += 1;
    }
    return {n, std::move(c)};
}

bool cyclo_equals(const CyclotomicSum& a, const CyclotomicSum& b) { return (a - b).reduced().is_zero(); }

Rational cyclo_abs_squared(const CyclotomicSum& a)
{
    const IntPolynomial r = (a * a.conjugate()).reduced();
    if (r.degree() > 0) throw std::logic_error("cyclo_abs_squared: product did not reduce to a rational");
    return Rational(r.coeff(0));
}

}  // namespace spinc
