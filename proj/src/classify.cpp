#include "spinc/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace spinc {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t to_int64(const Integer& x)
{
    if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return x.get_si();
}

// Distinct elements g.x of the group, in order of first appearance.
std::vector<std::int64_t> multiples_subgroup(const FiniteAbelianGroup& g, const Integer& k)
{
    std::vector<std::int64_t> out;
    if (k == 0 || g.order() == 1) return {0};
    Integer kr;
    mpz_fdiv_r(kr.get_mpz_t(), k.get_mpz_t(), Integer(static_cast<long>(g.exponent())).get_mpz_t());
    const std::int64_t kk = kr.get_si();
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (std::int64_t x = 0; x < g.order(); ++x) {
        const std::int64_t y = g.scale(x, kk);
        if (!seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = true;
            out.push_back(y);
        }
    }
    return out;
}

// For each element y of k.G, some x with k.x = y.
std::vector<std::pair<std::int64_t, std::int64_t>> multiples_with_roots(const FiniteAbelianGroup& g, const Integer& k)
{
    if (k == 0 || g.order() == 1) return {{0, 0}};
    Integer kr;
    mpz_fdiv_r(kr.get_mpz_t(), k.get_mpz_t(), Integer(static_cast<long>(g.exponent())).get_mpz_t());
    const std::int64_t kk = kr.get_si();
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (std::int64_t x = 0; x < g.order(); ++x) {
        const std::int64_t y = g.scale(x, kk);
        if (!seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = true;
            out.emplace_back(y, x);
        }
    }
    return out;
}

// Unimodular P with P r = gcd(r) e_1, and its inverse.
std::pair<IntMatrix, IntMatrix> align_to_first_axis(const IntVector& r)
{
    IntMatrix col(r.size(), 1);
    for (std::size_t i = 0; i < r.size(); ++i) col(i, 0) = r[i];
    const SmithDecomposition s = smith_normal_form(col);
    IntMatrix p = s.U, pinv = s.U_inverse;
    if (s.V(0, 0) < 0) {
        for (std::size_t i = 0; i < p.rows(); ++i) p.negate_row(i);
        for (std::size_t j = 0; j < pinv.cols(); ++j) pinv.negate_col(j);
    }
    return {p, pinv};
}

QuadFingerprint section_free_fingerprint(const SpincAnalysis& a)
{
    const QuadraticFunction& q = a.finite_part;
    std::optional<QuadraticFunction> best;
    std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> best_key;
    for (std::int64_t shift : multiples_subgroup(q.group(), a.slope_gcd)) {
        QuadraticFunction t = q.translated(shift);
        std::vector<std::int64_t> values(t.numerators()), defects;
        defects.reserve(values.size());
        for (std::int64_t x = 0; x < t.group().order(); ++x)
            defects.push_back(mod(t.numerator(x) - t.numerator(t.group().negate(x)), t.modulus()));
        std::sort(values.begin(), values.end());
        std::sort(defects.begin(), defects.end());
        auto key = std::make_pair(std::move(values), std::move(defects));
        if (!best || key < best_key) {
            best_key = std::move(key);
            best = std::move(t);
        }
    }
    return invariant_fingerprint(*best);
}

}  // namespace

std::int64_t SpincAnalysis::chern_torsion_element() const
{
    FiniteAbelianGroup::Element e;
    for (const auto& t : chern_torsion) e.push_back(to_int64(t));
    return finite_part.group().index(e);
}

SpincAnalysis analyse(const DecoratedPresentation& p, const ClassifyOptions& opts)
{
    validate(p);
    DiscriminantData disc{BilinearLattice(p.matrix)};
    IntVector canon = disc.canonical_chern(p.chern);
    QuadraticFunction q = QuadraticFunction::from_discriminant(disc, canon, opts.order_cap);

    IntVector chern_free = disc.free_coordinates(canon);
    IntVector slopes;
    for (const auto& f : chern_free) slopes.push_back(f / 2);
    Integer g = gcd_of(slopes);
    auto chern_torsion = disc.torsion_coordinates(canon);

    const std::size_t k = disc.torsion_factors().size();
    const std::int64_t n = q.modulus();
    std::vector<std::vector<std::int64_t>> linking(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const QmodZ v = linking_pairing(disc, disc.torsion_lifts()[i], disc.torsion_lifts()[j]);
            linking[i][j] = Rational(v.value() * n).get_num().get_si();
        }

    return SpincAnalysis{p,      std::move(disc),          std::move(canon),         std::move(q),
                         slopes, std::move(g),             std::move(chern_torsion), std::move(chern_free),
                         std::move(linking)};
}

// ---------------------------------------------------------------------------
// Reports

std::string InvariantReport::first_difference(const InvariantReport& o) const
{
    if (free_rank != o.free_rank) return "free_rank";
    if (torsion_factors != o.torsion_factors) return "torsion_factors";
    if (chern_free_gcd != o.chern_free_gcd) return "chern_free_gcd";
    return fingerprint.first_difference(o.fingerprint);
}

InvariantReport invariants_report(const SpincAnalysis& a)
{
    InvariantReport r;
    r.free_rank = a.discriminant.free_rank();
    r.torsion_factors = a.discriminant.torsion_factors();
    r.chern_free_gcd = gcd_of(a.chern_free);
    r.chern_torsion = a.chern_torsion;
    r.gauss = gauss_sum(a.finite_part);
    for (std::int64_t x = 0; x < a.finite_part.group().order(); ++x) r.value_multiset.push_back(a.finite_part.value(x));
    std::sort(r.value_multiset.begin(), r.value_multiset.end());
    r.radical_slopes = a.finite_part.radical_slopes();
    r.canonical_chern = a.canonical_chern;
    r.fingerprint = section_free_fingerprint(a);
    return r;
}

InvariantReport invariants_report(const DecoratedPresentation& p, const ClassifyOptions& opts)
{
    return invariants_report(analyse(p, opts));
}

std::string to_string(Regime r)
{
    switch (r) {
    case Regime::RationalHomologySphere: return "rational_homology_sphere";
    case Regime::TorsionFree: return "torsion_free";
    case Regime::Mixed: return "mixed";
    }
    return "?";
}

std::string to_string(EquivalenceVerdict::Kind k)
{
    switch (k) {
    case EquivalenceVerdict::Kind::Equivalent: return "Equivalent";
    case EquivalenceVerdict::Kind::Inequivalent: return "Inequivalent";
    case EquivalenceVerdict::Kind::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

std::string element_str(const FiniteAbelianGroup& g, std::int64_t x)
{
    std::string s = "(";
    const auto e = g.element(x);
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
}

}  // namespace

std::string YcWitness::str(const SpincAnalysis& source, const SpincAnalysis& target) const
{
    const auto& gs = source.finite_part.group();
    const auto& gt = target.finite_part.group();
    std::ostringstream os;
    os << "torsion:";
    if (gs.rank() == 0) os << " trivial";
    for (std::size_t i = 0; i < gs.rank(); ++i)
        os << " " << element_str(gs, gs.generator(i)) << "->" << element_str(gt, torsion_map.images[i]);
    os << "; free: " << (free_map.rows() ? free_map.str() : std::string("none"));
    if (free_map.rows() == 1 && free_map(0, 0) == -1) os << " (sign flip)";
    if (gt.rank() > 0 && free_map.rows() > 0) os << "; shift: " << element_str(gt, shift);
    return os.str();
}

// ---------------------------------------------------------------------------
// Decision by phi-isomorphism

EquivalenceVerdict yc_equivalent(const SpincAnalysis& a, const SpincAnalysis& b, const ClassifyOptions& opts)
{
    EquivalenceVerdict v;
    const bool no_free = a.discriminant.free_rank() == 0 && b.discriminant.free_rank() == 0;
    const bool no_torsion = a.discriminant.torsion_factors().empty() && b.discriminant.torsion_factors().empty();
    v.regime = no_free ? Regime::RationalHomologySphere : no_torsion ? Regime::TorsionFree : Regime::Mixed;

    const InvariantReport ra = invariants_report(a), rb = invariants_report(b);
    if (auto diff = ra.first_difference(rb); !diff.empty()) {
        v.kind = EquivalenceVerdict::Kind::Inequivalent;
        v.reason = diff;
        return v;
    }

    const auto& gt = b.finite_part.group();
    if (a.finite_part.group() == gt && a.slopes == b.slopes && a.finite_part.pointwise_equal(b.finite_part)) {
        YcWitness w;
        w.torsion_map = GroupIso::identity(gt);
        w.free_map = IntMatrix::identity(a.slopes.size());
        w.coupling_row = IntVector(a.slopes.size(), 0);
        v.kind = EquivalenceVerdict::Kind::Equivalent;
        v.witness = std::move(w);
        return v;
    }

    bool exhausted = false;
    for (auto [shift, root] : multiples_with_roots(gt, a.slope_gcd)) {
        const QuadraticFunction candidate = b.finite_part.translated(shift);
        const auto res = find_isomorphism(a.finite_part, candidate, opts.order_cap, opts.search_budget);
        if (res.status == SearchStatus::BudgetExhausted) {
            exhausted = true;
            continue;
        }
        if (res.status != SearchStatus::Found) continue;

        YcWitness w;
        w.torsion_map = *res.iso;
        w.shift = shift;
        const std::size_t rank = a.slopes.size();
        if (rank == 0) {
            w.free_map = IntMatrix(0, 0);
        } else if (a.slope_gcd == 0) {
            w.free_map = IntMatrix::identity(rank);
            w.coupling_row = IntVector(rank, 0);
        } else {
            auto [pa, pa_inv] = align_to_first_axis(a.slopes);
            auto [pb, pb_inv] = align_to_first_axis(b.slopes);
            w.free_map = pb_inv * pa;
            w.coupling_row = pa.row(0);
            w.coupling_target = root;
        }
        v.kind = EquivalenceVerdict::Kind::Equivalent;
        v.witness = std::move(w);
        return v;
    }
    v.kind = exhausted ? EquivalenceVerdict::Kind::Unknown : EquivalenceVerdict::Kind::Inequivalent;
    v.reason = exhausted ? "search budget exhausted" : "phi_isomorphism";
    return v;
}

EquivalenceVerdict yc_equivalent(const DecoratedPresentation& p, const DecoratedPresentation& p2,
                                 const ClassifyOptions& opts)
{
    return yc_equivalent(analyse(p, opts), analyse(p2, opts), opts);
}

bool verify_witness(const SpincAnalysis& a, const SpincAnalysis& b, const YcWitness& w)
{
    const auto& gs = a.finite_part.group();
    const auto& gt = b.finite_part.group();
    if (!w.torsion_map.is_valid(gs, gt)) return false;

    const std::size_t rank = a.slopes.size();
    if (b.slopes.size() != rank || w.free_map.rows() != rank || w.free_map.cols() != rank) return false;
    if (rank > 0) {
        if (abs(w.free_map.determinant()) != 1) return false;
        if (w.free_map * a.slopes != b.slopes) return false;
    }

    // h(r) must equal the shift, and psi must carry [c] to [c'].
    std::int64_t h_of_r = 0, h_of_c = 0;
    if (rank > 0 && !w.coupling_row.empty()) {
        h_of_r = gt.scale(w.coupling_target, to_int64(dot(w.coupling_row, a.slopes) % gt.exponent()));
        h_of_c = gt.scale(w.coupling_target, to_int64(dot(w.coupling_row, a.chern_free) % gt.exponent()));
    }
    if (h_of_r != w.shift) return false;
    if (rank > 0 && w.free_map * a.chern_free != b.chern_free) return false;
    const std::int64_t image_c = gt.add(w.torsion_map.apply(gs, gt, a.chern_torsion_element()), h_of_c);
    if (image_c != b.chern_torsion_element()) return false;

    for (std::int64_t x = 0; x < gs.order(); ++x) {
        const std::int64_t fx = w.torsion_map.apply(gs, gt, x);
        const QmodZ lhs = b.finite_part.value(gt.add(fx, w.shift)) - b.finite_part.value(w.shift);
        if (lhs != a.finite_part.value(x)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Decision by linking pairing, Chern class and Gauss sums

bool yc_equivalent_by_invariants(const SpincAnalysis& a, const SpincAnalysis& b, const ClassifyOptions& opts)
{
    const auto& gs = a.finite_part.group();
    const auto& gt = b.finite_part.group();
    if (a.discriminant.free_rank() != b.discriminant.free_rank()) return false;
    if (!(gs == gt)) return false;
    if (gcd_of(a.chern_free) != gcd_of(b.chern_free)) return false;
    if (static_cast<std::uint64_t>(gs.order()) > opts.order_cap)
        throw OrderCapExceeded(Integer(static_cast<long>(gs.order())), opts.order_cap);

    const std::int64_t l = std::lcm(a.finite_part.modulus(), b.finite_part.modulus());
    auto pairing = [l](const SpincAnalysis& s, const FiniteAbelianGroup& g) {
        const std::int64_t scale = l / s.finite_part.modulus();
        return [&s, &g, l, scale](std::int64_t x, std::int64_t y) {
            const auto ex = g.element(x), ey = g.element(y);
            std::int64_t acc = 0;
            for (std::size_t i = 0; i < ex.size(); ++i)
                for (std::size_t j = 0; j < ey.size(); ++j)
                    acc = mod(acc + mod(ex[i] * ey[j], l) * mod(s.linking[i][j] * scale, l), l);
            return acc;
        };
    };

    const CyclotomicSum gauss_a = gauss_sum(a.finite_part);
    const std::int64_t ca = a.chern_torsion_element(), cb = b.chern_torsion_element();
    const auto shifts = multiples_subgroup(gt, a.slope_gcd);

    IsometryProblem p;
    p.source = &gs;
    p.target = &gt;
    p.source_pairing = pairing(a, gs);
    p.target_pairing = pairing(b, gt);
    p.budget = opts.search_budget;
    p.accept = [&](const GroupIso& d) {
        // psi(c) = (d c_T + h(c_free), A c_free); h(c_free) = 2 h(r) = 2 beta.
        const std::int64_t delta = gt.add(cb, gt.negate(d.apply(gs, gt, ca)));
        for (std::int64_t beta : shifts) {
            if (gt.scale(beta, 2) != delta) continue;
            if (cyclo_equals(gauss_sum(b.finite_part.translated(beta)), gauss_a)) return true;
        }
        return false;
    };
    const auto res = search_isometries(p);
    if (res.status == SearchStatus::BudgetExhausted) throw std::runtime_error("isometry search budget exhausted");
    return res.status == SearchStatus::Found;
}

// ---------------------------------------------------------------------------
// Censuses

std::vector<std::vector<std::size_t>> partition_chern_vectors(const IntMatrix& b, const std::vector<IntVector>& cherns,
                                                              const ClassifyOptions& opts)
{
    std::vector<SpincAnalysis> analyses;
    analyses.reserve(cherns.size());
    for (const auto& c : cherns) analyses.push_back(analyse({b, c}, opts));

    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < analyses.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes) {
            const auto v = yc_equivalent(analyses[cls.front()], analyses[i], opts);
            if (v.kind == EquivalenceVerdict::Kind::Unknown)
                throw std::runtime_error("partition: undecided comparison (" + v.reason + ")");
            if (v.equivalent()) {
                cls.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i});
    }
    return classes;
}

ChernPartition yc_classes(const IntMatrix& b, const ClassifyOptions& opts)
{
    const DiscriminantData d{BilinearLattice(b)};
    if (d.torsion_order() > opts.order_cap) throw OrderCapExceeded(d.torsion_order(), opts.order_cap);
    ChernPartition out;
    out.chern_vectors = d.canonical_chern_vectors();
    out.classes = partition_chern_vectors(b, out.chern_vectors, opts);
    return out;
}

std::int64_t lens_yc_count(std::int64_t p)
{
    if (p < 1 || p % 2 == 0) throw std::domain_error("lens Y^c census is only available for odd p");
    std::vector<std::int64_t> roots;
    for (std::int64_t r = 0; r < p; ++r)
        if ((r * r) % p == 1 % p) roots.push_back(r);
    std::vector<bool> seen(static_cast<std::size_t>(p), false);
    std::int64_t orbits = 0;
    for (std::int64_t i = 0; i < p; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++orbits;
        for (auto r : roots) seen[static_cast<std::size_t>((r * i) % p)] = true;
    }
    return orbits;
}

std::int64_t lens_diffeo_count(std::int64_t p, std::int64_t q1, std::int64_t q2)
{
    if (p < 2) throw std::invalid_argument("lens_diffeo_count: p must be at least 2");
    q1 = mod(q1, p);
    q2 = mod(q2, p);
    if (std::gcd(q1, p) != 1 || std::gcd(q2, p) != 1)
        throw std::invalid_argument("lens_diffeo_count: q1 and q2 must be invertible mod p");
    if ((q1 * q1) % p != (q2 * q2) % p || q1 == q2 || q1 == mod(-q2, p)) return p / 2 + 1;

    std::int64_t inv = 1;
    while ((q1 * inv) % p != 1) ++inv;
    const std::int64_t ratio = (q2 * inv) % p;
    std::int64_t b = 0, c = 0;
    for (std::int64_t i = 0; i < p; ++i) {
        const std::int64_t u = mod(q1 + q2 - i, p), w = (ratio * i) % p;
        if (i != u && u != w && i != w) ++b;
        if (i == u && u == w) ++c;
    }
    const Rational count = make_rational(p, 2) - make_rational(b, 4) + make_rational(c, 2);
    if (count.get_den() != 1) throw std::logic_error("lens_diffeo_count: orbit formula gave a non-integer");
    return count.get_num().get_si();
}

}  // namespace spinc
