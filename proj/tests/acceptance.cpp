// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include "spinc/classify.hpp"
#include "spinc/spaces.hpp"

#include "corpus.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using namespace spinc;
using fixtures::pres;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
public:
    void require(bool cond, const std::string& what)
    {
        if (!cond && out_.pass) {
            out_.pass = false;
            out_.detail = what;
        }
    }
    void note(const std::string& s) { notes_ << s; }
    Outcome outcome() const
    {
        Outcome o = out_;
        if (o.pass) o.detail = notes_.str();
        return o;
    }

private:
    Outcome out_;
    std::ostringstream notes_;
};

CyclotomicSum z8(std::uint64_t k) { return CyclotomicSum::root_of_unity(k, 8); }

// 1. RP3: gamma = 1 + i and 1 - i, phases exp(+-2 pi i / 8), Inequivalent.
void rp3_distinction(Check& c)
{
    const auto r0 = invariants_report(pres(IntMatrix{{2}}, {0}));
    const auto r2 = invariants_report(pres(IntMatrix{{2}}, {2}));
    const auto i = CyclotomicSum::root_of_unity(1, 4);
    c.require(cyclo_equals(r0.gauss, CyclotomicSum::integer(1) + i), "gamma(s=0) != 1+i");
    c.require(cyclo_equals(r2.gauss, CyclotomicSum::integer(1) - i), "gamma(s=2) != 1-i");
    // sqrt(2) = zeta_8 + zeta_8^7, so gamma = sqrt(2) * zeta_8^{+-1}.
    const auto sqrt2 = z8(1) + z8(7);
    c.require(cyclo_equals(r0.gauss, z8(1) * sqrt2), "phase(s=0) != exp(2 pi i/8)");
    c.require(cyclo_equals(r2.gauss, z8(7) * sqrt2), "phase(s=2) != exp(-2 pi i/8)");
    const auto v = yc_equivalent(pres(IntMatrix{{2}}, {0}), pres(IntMatrix{{2}}, {2}));
    c.require(v.kind == EquivalenceVerdict::Kind::Inequivalent, "compare did not return Inequivalent");
    c.note("gamma = " + r0.gauss.str() + ", " + r2.gauss.str() + "; verdict " + to_string(v.kind) + " (" + v.reason +
           ")");
}

// 2. S2 x S1: {0}, {+-2}, {+-4}, {+-6}.
void s2xs1_census(Check& c)
{
    std::vector<IntVector> cherns;
    for (long s = -6; s <= 6; s += 2) cherns.push_back(int_vector({s}));
    const auto classes = partition_chern_vectors(IntMatrix{{0}}, cherns);
    std::set<std::set<long>> got;
    for (const auto& cls : classes) {
        std::set<long> members;
        for (auto idx : cls) members.insert(cherns[idx][0].get_si());
        got.insert(members);
    }
    const std::set<std::set<long>> want = {{0}, {-2, 2}, {-4, 4}, {-6, 6}};
    c.require(got == want, "partition differs from {0},{+-2},{+-4},{+-6}");
    c.note(std::to_string(classes.size()) + " classes");
}

// 3. Lens cross-oracle.
void lens_cross_oracle(Check& c)
{
    std::ostringstream os;
    for (long p = 3; p <= 25; p += 2) {
        const auto n = static_cast<std::int64_t>(yc_classes(spaces::lens(p, 1)).classes.size());
        c.require(n == lens_yc_count(p), "p = " + std::to_string(p) + ": " + std::to_string(n) + " classes vs " +
                                             std::to_string(lens_yc_count(p)));
        os << p << ":" << n << " ";
    }
    c.note(os.str());
}

// 4. p = 15.
void counterexample(Check& c)
{
    const auto d = lens_diffeo_count(15, 1, 1);
    const auto y = lens_yc_count(15);
    c.require(d == 8, "lens_diffeo_count(15,1,1) = " + std::to_string(d));
    c.require(y == 6, "lens_yc_count(15) = " + std::to_string(y));
    c.require(y < (15 - 1) / 2 + 1, "Y^c count is not below (p-1)/2+1");
    c.note("diffeo 8, yc 6");
}

// 5. Route agreement on random QHS pairs with |H_1| <= 100.
void route_agreement(Check& c)
{
    std::mt19937_64 rng(2024);
    int pairs = 0, equivalent = 0;
    while (pairs < 240) {
        const IntMatrix b = fixtures::random_qhs_matrix(rng, 100);
        const auto a = analyse({b, fixtures::random_chern(rng, b)});
        // Same matrix; a moved copy; a moved copy of another Chern class.
        DecoratedPresentation other{b, fixtures::random_chern(rng, b)};
        const std::uint64_t seed = rng();
        if (pairs % 3 == 1) other = random_walk(a.presentation, 8, seed);
        if (pairs % 3 == 2) other = random_walk(other, 8, seed);
        const auto o = analyse(other);
        const auto v = yc_equivalent(a, o);
        const bool route3 = yc_equivalent_by_invariants(a, o);
        c.require(v.kind != EquivalenceVerdict::Kind::Unknown, "Unknown verdict on a QHS pair");
        c.require(v.equivalent() == route3, "routes disagree on B = " + b.str());
        if (v.equivalent()) c.require(verify_witness(a, o, *v.witness), "witness failed on B = " + b.str());
        equivalent += v.equivalent();
        ++pairs;
    }
    c.note(std::to_string(pairs) + " pairs, " + std::to_string(equivalent) + " equivalent");
}

// 6. 100 walks of 40 moves.
void move_invariance(Check& c)
{
    const auto corpus = fixtures::corpus();
    int walks = 0;
    for (const auto& [name, p] : corpus) {
        const auto a = analyse(p);
        const auto ra = invariants_report(a);
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto b = analyse(random_walk(p, 40, seed * 7919 + 13));
            const auto diff = ra.first_difference(invariants_report(b));
            c.require(diff.empty(), name + " seed " + std::to_string(seed) + ": " + diff + " changed");
            const auto v = yc_equivalent(a, b);
            c.require(v.equivalent(), name + " seed " + std::to_string(seed) + ": verdict " + to_string(v.kind));
            if (v.equivalent()) c.require(verify_witness(a, b, *v.witness), name + ": witness failed");
            ++walks;
        }
    }
    c.note(std::to_string(walks) + " walks x 40 moves");
}

// 7. Y-moves with random payloads.
void ymove_invariance(Check& c)
{
    const auto corpus = fixtures::corpus();
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> d(-3, 3);
    std::vector<SpincAnalysis> base;
    for (const auto& e : corpus) base.push_back(analyse(e.p));
    int moves = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (int t = 0; t < 5; ++t) {
            IntVector column(corpus[i].p.size());
            for (auto& x : column) x = d(rng);
            const auto y = analyse(apply_move(corpus[i].p, moves::YMove{column, d(rng)}));
            c.require(invariants_report(base[i]).first_difference(invariants_report(y)).empty(),
                      corpus[i].name + ": fingerprint changed");
            for (std::size_t j = 0; j < corpus.size(); ++j)
                c.require(yc_equivalent(base[i], base[j]).kind == yc_equivalent(y, base[j]).kind,
                          corpus[i].name + " vs " + corpus[j].name + ": verdict changed");
            ++moves;
        }
    }
    c.note(std::to_string(moves) + " Y-moves");
}

// 8. Distinct Chern classes give pointwise-distinct functions.
void embedding(Check& c)
{
    std::vector<IntMatrix> mats;
    for (const auto& e : fixtures::corpus())
        if (e.p.matrix.determinant() != 0 && abs(e.p.matrix.determinant()) <= 30) mats.push_back(e.p.matrix);
    for (long p = 2; p <= 30; ++p)
        for (long q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) mats.push_back(spaces::lens(p, q));
    std::mt19937_64 rng(8);
    for (int k = 0; k < 40; ++k) mats.push_back(fixtures::random_qhs_matrix(rng, 30));

    std::size_t functions = 0;
    for (const auto& b : mats) {
        const DiscriminantData d{BilinearLattice(b)};
        std::vector<QuadraticFunction> qs;
        for (const auto& ch : d.canonical_chern_vectors()) qs.push_back(QuadraticFunction::from_discriminant(d, ch));
        for (std::size_t i = 0; i < qs.size(); ++i)
            for (std::size_t j = i + 1; j < qs.size(); ++j)
                c.require(!qs[i].pointwise_equal(qs[j]), "two Chern classes share a function on B = " + b.str());
        functions += qs.size();
    }
    c.note(std::to_string(mats.size()) + " matrices, " + std::to_string(functions) + " functions");
}

// 9. |gamma|^2 = |G|.
void gauss_modulus(Check& c)
{
    std::mt19937_64 rng(99);
    std::size_t checked = 0;
    auto check_matrix = [&](const IntMatrix& b, std::size_t max_classes) {
        const DiscriminantData d{BilinearLattice(b)};
        const auto all = d.canonical_chern_vectors();
        for (std::size_t k = 0; k < all.size() && k < max_classes; ++k) {
            const auto q = QuadraticFunction::from_discriminant(d, all[(k * 7919) % all.size()]);
            if (!q.is_nondegenerate()) continue;
            c.require(cyclo_abs_squared(gauss_sum(q)) == q.group().order(), "|gamma|^2 != |G| on B = " + b.str());
            ++checked;
        }
    };
    for (long p = 2; p <= 200; ++p) check_matrix(spaces::lens(p, 1), 1000);
    for (long p = 2; p <= 60; ++p)
        for (long q = 2; q < p; ++q)
            if (std::gcd(p, q) == 1 && q % 5 == 2) check_matrix(spaces::lens(p, q), 2);
    for (int k = 0; k < 40; ++k) check_matrix(fixtures::random_qhs_matrix(rng, 200), 4);
    for (const auto& e : fixtures::corpus())
        if (e.p.matrix.determinant() != 0) check_matrix(e.p.matrix, 1000);
    c.note(std::to_string(checked) + " functions");
}

// 10. Spin structures: count from the Smith form mod 2; beta images valid
// and homogeneous.
void spin_combinatorics(Check& c)
{
    std::size_t images = 0;
    for (const auto& [name, p] : fixtures::corpus()) {
        const auto s = smith_normal_form(p.matrix);
        std::size_t even = 0;
        for (const auto& d : s.invariant_factors()) even += mpz_even_p(d.get_mpz_t()) ? 1 : 0;
        const auto spins = spin_structures(p);
        c.require(spins.size() == (std::size_t{1} << even), name + ": wrong number of spin structures");
        for (const auto& w : spins) {
            const auto img = beta(p, w);
            try {
                validate(img);
            } catch (const std::exception& e) {
                c.require(false, name + ": invalid beta image: " + e.what());
                continue;
            }
            const auto a = analyse(img);
            for (std::int64_t x = 0; x < a.finite_part.group().order(); ++x)
                c.require(defect_of(a.finite_part, x).is_zero(), name + ": beta image is not homogeneous");
            for (const auto& r : a.slopes) c.require(r == 0, name + ": beta image has a nonzero radical slope");
            ++images;
        }
    }
    c.note(std::to_string(images) + " beta images");
}

}  // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<void(Check&)> run;
        double budget_s;
    };
    const std::vector<Criterion> criteria = {
        {"RP3 Gauss sums and distinction", rp3_distinction, 1},
        {"S2xS1 census", s2xs1_census, 1},
        {"lens cross-oracle, odd p <= 25", lens_cross_oracle, 60},
        {"p = 15 counterexample", counterexample, 1},
        {"route agreement on QHS pairs", route_agreement, 300},
        {"move invariance, 100 walks x 40", move_invariance, 120},
        {"Y-move invariance", ymove_invariance, 60},
        {"Chern embedding, |det| <= 30", embedding, 600},
        {"Gauss sum modulus", gauss_modulus, 600},
        {"spin combinatorics", spin_combinatorics, 600},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > criteria[i].budget_s)
            check.require(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(criteria[i].budget_s));
        const auto o = check.outcome();
        failed += o.pass ? 0 : 1;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << (i + 1) << "] " << criteria[i].name << "  (" << timing
                  << ")  " << o.detail << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
