#pragma once

/**
 * @file classify.hpp
 * @brief Degree-0 classification of closed Spin^c 3-manifolds given by
 *        decorated surgery presentations.
 *
 * Write H_1 = T (+) Z^b and let r = c(k)/2 be the radical slopes of the
 * Chern vector on the kernel basis.  An isomorphism psi of H_1 has the shape
 * (tau, u) -> (d tau + h u, A u) with d a torsion isomorphism, h a coupling
 * Z^b -> T' and A in GL(b, Z).  Pulling phi' back along the dual of psi
 * gives two conditions:
 *   - A r = r', which some A satisfies iff gcd(r) = gcd(r');
 *   - q'(d x + beta) - q'(beta) = q(x) for all x in T, where beta = h(r)
 *     ranges over gcd(r) . T' as h varies.
 * So (B, s) and (B', s') are Y^c-equivalent iff b = b', gcd(r) = gcd(r'),
 * and some translate of the finite function q' by gcd(r) . T' is
 * isomorphic to q.  Rational homology spheres (b = 0) and torsion-free
 * H_1 (T = 0) are the two degenerate ends of this statement.
 *
 * The second route decides the same relation from the linking pairing,
 * the Chern class and Gauss sums over compatible sections only, and is
 * kept separate so the two can be cross-checked.
 */

#include "spinc/presentation.hpp"
#include "spinc/quadfun.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinc {

struct ClassifyOptions {
    std::uint64_t order_cap = kDefaultOrderCap;
    std::uint64_t search_budget = kDefaultSearchBudget;
};

/// Everything derived from one presentation, relative to its stored section.
struct SpincAnalysis {
    DecoratedPresentation presentation;
    DiscriminantData discriminant;
    IntVector canonical_chern;
    QuadraticFunction finite_part;        // phi restricted to the torsion section
    IntVector slopes;                     // r_j = c(k_j)/2
    Integer slope_gcd;                    // gcd(r), >= 0
    std::vector<Integer> chern_torsion;   // torsion coordinates of [c] in Coker B
    IntVector chern_free;                 // c(k_j) = 2 r_j
    /// Linking pairing on the torsion generators, numerators over
    /// finite_part.modulus().
    std::vector<std::vector<std::int64_t>> linking;

    std::int64_t chern_torsion_element() const;
};

SpincAnalysis analyse(const DecoratedPresentation& p, const ClassifyOptions& opts = {});

struct InvariantReport {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion_factors;
    Integer chern_free_gcd;                // gcd of c(k_j); 0 when b = 0
    std::vector<Integer> chern_torsion;    // section-dependent
    CyclotomicSum gauss;                   // of the finite part, section-dependent
    std::vector<QmodZ> value_multiset;     // of the finite part, section-dependent
    std::vector<Rational> radical_slopes;
    IntVector canonical_chern;
    /// Section-independent invariant: the minimum over translates of the
    /// finite part by gcd(r) . T.
    QuadFingerprint fingerprint;

    /// Name of the first differing Y^c-invariant component, or empty.
    std::string first_difference(const InvariantReport& o) const;
};

InvariantReport invariants_report(const DecoratedPresentation& p, const ClassifyOptions& opts = {});
InvariantReport invariants_report(const SpincAnalysis& a);

enum class Regime { RationalHomologySphere, TorsionFree, Mixed };
std::string to_string(Regime r);

/// psi = (torsion_map, coupling, free_map) on H_1 = T (+) Z^b.
struct YcWitness {
    GroupIso torsion_map;                 // d : T -> T'
    std::int64_t shift = 0;               // beta = h(r) in T'
    IntMatrix free_map;                   // A, b x b, A r = r'
    IntVector coupling_row;               // h(u) = (coupling_row . u) * coupling_target
    std::int64_t coupling_target = 0;

    std::string str(const SpincAnalysis& source, const SpincAnalysis& target) const;
};

struct EquivalenceVerdict {
    enum class Kind { Equivalent, Inequivalent, Unknown };
    Kind kind = Kind::Unknown;
    Regime regime = Regime::RationalHomologySphere;
    std::optional<YcWitness> witness;     // Equivalent
    std::string reason;                   // Inequivalent: differing invariant; Unknown: budget note

    bool equivalent() const { return kind == Kind::Equivalent; }
};

std::string to_string(EquivalenceVerdict::Kind k);

/// Decides Y^c-equivalence by searching for psi with phi' = phi o psi#.
EquivalenceVerdict yc_equivalent(const DecoratedPresentation& p, const DecoratedPresentation& p2,
                                 const ClassifyOptions& opts = {});
EquivalenceVerdict yc_equivalent(const SpincAnalysis& a, const SpincAnalysis& b, const ClassifyOptions& opts = {});

/// Independent decision: a linking-pairing isometry d with a coupling
/// carrying the Chern class to the Chern class, such that the Gauss sums of
/// phi and phi' over psi-compatible sections agree.
bool yc_equivalent_by_invariants(const SpincAnalysis& a, const SpincAnalysis& b, const ClassifyOptions& opts = {});

/// Checks that w realizes phi' = phi o psi# between the two analyses.
bool verify_witness(const SpincAnalysis& a, const SpincAnalysis& b, const YcWitness& w);

/// Partition of the given Chern vectors of B into Y^c classes (indices into
/// the input, each class sorted, classes ordered by first member).
std::vector<std::vector<std::size_t>> partition_chern_vectors(const IntMatrix& b, const std::vector<IntVector>& cherns,
                                                              const ClassifyOptions& opts = {});

struct ChernPartition {
    std::vector<IntVector> chern_vectors;            // canonical representatives
    std::vector<std::vector<std::size_t>> classes;   // indices into chern_vectors
};

/// All Chern classes of a nondegenerate B, partitioned into Y^c classes.
ChernPartition yc_classes(const IntMatrix& b, const ClassifyOptions& opts = {});

/// Orbits of Z_p under multiplication by the square roots of 1; p odd.
std::int64_t lens_yc_count(std::int64_t p);

/// Number of orbits of Spin^c structures on L(p; q1, q2) under positive
/// self-diffeomorphisms.
std::int64_t lens_diffeo_count(std::int64_t p, std::int64_t q1, std::int64_t q2);

}  // namespace spinc
