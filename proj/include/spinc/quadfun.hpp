#pragma once

/**
 * @file quadfun.hpp
 * @brief Quadratic functions on finite abelian groups.
 *
 * A quadratic function q : G -> Q/Z is stored as a dense table of
 * numerators over a common modulus N (q(x) = table[x] / N mod 1).  The
 * associated pairing b_q(x,y) = q(x+y) - q(x) - q(y) must be bilinear;
 * q(0) need not vanish.  Functions coming from a degenerate lattice also
 * carry the slopes of their restriction to the Q/Z-radical.
 *
 * Group elements are indexed in mixed radix with the first coordinate most
 * significant, so index order is lexicographic order on coordinate tuples.
 */

#include "spinc/lattice.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinc {

inline constexpr std::uint64_t kDefaultOrderCap = 10000;
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// Raised when a group exceeds the configured order cap.
class OrderCapExceeded : public std::runtime_error {
public:
    OrderCapExceeded(const Integer& order, std::uint64_t cap);
};

class FiniteAbelianGroup {
public:
    using Element = std::vector<std::int64_t>;

    FiniteAbelianGroup() = default;
    /// Invariant factors d_i >= 2 with d_i | d_{i+1}.
    explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::int64_t order() const { return order_; }
    std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }

    std::int64_t index(const Element& e) const;
    Element element(std::int64_t idx) const;
    std::int64_t generator(std::size_t i) const { return strides_[i]; }

    std::int64_t add(std::int64_t x, std::int64_t y) const;
    std::int64_t negate(std::int64_t x) const;
    std::int64_t scale(std::int64_t x, std::int64_t k) const;
    std::int64_t order_of(std::int64_t x) const;

    bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }

private:
    std::vector<std::int64_t> factors_;
    std::vector<std::int64_t> strides_;
    std::int64_t order_ = 1;
};

/// Images of the source generators; induces a bijective homomorphism.
struct GroupIso {
    std::vector<std::int64_t> images;

    std::int64_t apply(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target, std::int64_t x) const;
    /// True if the induced map is a well-defined bijective homomorphism.
    bool is_valid(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target) const;
    static GroupIso identity(const FiniteAbelianGroup& g);
};

class QuadraticFunction {
public:
    QuadraticFunction() = default;
    /// Throws std::invalid_argument if b_q is not bilinear or a slope has
    /// denominator not dividing 2.
    QuadraticFunction(FiniteAbelianGroup group, std::int64_t modulus, std::vector<std::int64_t> numerators,
                      std::vector<Rational> radical_slopes = {});
    static QuadraticFunction from_values(FiniteAbelianGroup group, const std::vector<QmodZ>& values,
                                         std::vector<Rational> radical_slopes = {});
    /// The finite part of phi_{B,c} through the stored section, with the
    /// radical slopes attached.
    static QuadraticFunction from_discriminant(const DiscriminantData& d, const IntVector& c,
                                               std::uint64_t order_cap = kDefaultOrderCap);

    const FiniteAbelianGroup& group() const { return group_; }
    std::int64_t modulus() const { return modulus_; }
    const std::vector<std::int64_t>& numerators() const { return table_; }
    const std::vector<Rational>& radical_slopes() const { return slopes_; }

    QmodZ value(std::int64_t x) const;
    std::int64_t numerator(std::int64_t x) const { return table_.at(static_cast<std::size_t>(x)); }

    /// x -> q(x + shift) - q(shift).
    QuadraticFunction translated(std::int64_t shift) const;
    /// x -> q(iso^{-1} x) on the target group of iso.
    QuadraticFunction transported(const GroupIso& iso, const FiniteAbelianGroup& target) const;
    /// The same function over a multiple of its modulus.
    QuadraticFunction with_modulus(std::int64_t multiple) const;

    bool pointwise_equal(const QuadraticFunction& o) const;
    /// True if b_q has trivial radical.
    bool is_nondegenerate() const;

private:
    FiniteAbelianGroup group_;
    std::int64_t modulus_ = 1;
    std::vector<std::int64_t> table_{0};
    std::vector<Rational> slopes_;
};

QmodZ bilinear_of(const QuadraticFunction& q, std::int64_t x, std::int64_t y);
QmodZ defect_of(const QuadraticFunction& q, std::int64_t x);
CyclotomicSum gauss_sum(const QuadraticFunction& q);

/// Radical slope vectors are compatible iff one is carried to the other by
/// GL(b, Z): same length and same gcd.
bool radical_compatible(const std::vector<Rational>& a, const std::vector<Rational>& b);

struct QuadFingerprint {
    std::vector<std::int64_t> factors;
    std::vector<QmodZ> values;     // sorted
    std::vector<QmodZ> defects;    // sorted
    CyclotomicSum gauss;
    std::size_t radical_rank = 0;
    Rational radical_gcd;          // gcd of the slopes, >= 0

    /// Name of the first differing component, or empty if equal.
    std::string first_difference(const QuadFingerprint& o) const;
    bool operator==(const QuadFingerprint& o) const { return first_difference(o).empty(); }
};

QuadFingerprint invariant_fingerprint(const QuadraticFunction& q);

enum class SearchStatus { Found, NotFound, BudgetExhausted };

/// Constraints for the generic isometry search between two finite groups.
/// All values are numerators over a shared modulus.
struct IsometryProblem {
    const FiniteAbelianGroup* source = nullptr;
    const FiniteAbelianGroup* target = nullptr;
    /// Pairings that must be preserved: b_t(F x, F y) == b_s(x, y).
    std::function<std::int64_t(std::int64_t, std::int64_t)> source_pairing;
    std::function<std::int64_t(std::int64_t, std::int64_t)> target_pairing;
    /// Optional pointwise values that must be preserved on generators.
    std::function<std::int64_t(std::int64_t)> source_value;
    std::function<std::int64_t(std::int64_t)> target_value;
    /// Final acceptance test for a complete candidate; defaults to true.
    std::function<bool(const GroupIso&)> accept;
    std::uint64_t budget = kDefaultSearchBudget;
};

struct IsometrySearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<GroupIso> iso;
    std::uint64_t nodes = 0;
};

/// Enumerates bijective homomorphisms generator by generator (largest
/// order first, candidate images in lexicographic order), pruning on the
/// supplied pairing and generator values.  Returns the first candidate the
/// acceptance test admits.
IsometrySearchResult search_isometries(const IsometryProblem& problem);

/// An isomorphism F with q'(F x) = q(x) for all x, if any.  Throws
/// OrderCapExceeded above the cap and std::runtime_error if the search
/// budget runs out.
std::optional<GroupIso> is_isomorphic(const QuadraticFunction& q, const QuadraticFunction& q2,
                                      std::uint64_t order_cap = kDefaultOrderCap,
                                      std::uint64_t budget = kDefaultSearchBudget);

/// Same search, reporting budget exhaustion instead of throwing.
IsometrySearchResult find_isomorphism(const QuadraticFunction& q, const QuadraticFunction& q2,
                                      std::uint64_t order_cap = kDefaultOrderCap,
                                      std::uint64_t budget = kDefaultSearchBudget);

}  // namespace spinc
