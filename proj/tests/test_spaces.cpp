#include "spinc/classify.hpp"
#include "spinc/spaces.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <numeric>

using namespace spinc;
using fixtures::pres;

TEST_CASE("standard manifolds")
{
    CHECK(spaces::s3() == IntMatrix{{1}});
    CHECK(spaces::s3(-1) == IntMatrix{{-1}});
    CHECK(spaces::rp3() == IntMatrix{{2}});
    CHECK(spaces::s2xs1() == IntMatrix{{0}});
    CHECK(spaces::t3() == IntMatrix(3, 3));
    CHECK(spaces::e8().determinant() == 1);
    CHECK(spaces::e8().is_symmetric());

    const auto rp3 = invariants_report(pres(spaces::rp3(), {0}));
    CHECK(rp3.torsion_factors == std::vector<Integer>{2});
    CHECK(DiscriminantData(BilinearLattice(spaces::rp3())).canonical_chern_vectors().size() == 2);

    const auto t3 = invariants_report(pres(spaces::t3(), {0, 0, 0}));
    CHECK(t3.free_rank == 3);
    CHECK(spin_structures(pres(spaces::t3(), {0, 0, 0})).size() == 8);

    const auto e8 = invariants_report(spaces::with_default_chern(spaces::e8()));
    CHECK(e8.torsion_factors.empty());
    CHECK(e8.free_rank == 0);
    CHECK(cyclo_equals(e8.gauss, CyclotomicSum::integer(1)));
}

TEST_CASE("lens space chains")
{
    CHECK(spaces::lens(9, 1) == IntMatrix{{9}});
    CHECK(spaces::lens(5, 2) == IntMatrix{{3, -1}, {-1, 2}});
    CHECK_THROWS(spaces::lens(6, 2));
    CHECK_THROWS(spaces::lens(5, 0));

    for (long p = 2; p <= 50; ++p) {
        CHECK(spaces::lens(p, 1) == IntMatrix{{p}});
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto a = spaces::negative_continued_fraction(p, q);
            // Fold the continued fraction back: a_1 - 1/(a_2 - 1/(...)) = p/q.
            Rational v = a.back();
            for (std::size_t k = a.size() - 1; k-- > 0;) v = Rational(a[k]) - 1 / v;
            CHECK(v == make_rational(p, q));
            for (auto ai : a) CHECK(ai >= 2);
            CHECK(abs(spaces::lens(p, q).determinant()) == p);
        }
    }
}

TEST_CASE("connected sums")
{
    const auto rp3 = pres(spaces::rp3(), {0});
    const auto s3 = pres(spaces::s3(), {1});
    CHECK(invariants_report(spaces::connected_sum(rp3, s3)).first_difference(invariants_report(rp3)).empty());
    CHECK(yc_equivalent(spaces::connected_sum(rp3, s3), rp3).equivalent());

    const auto mixed = invariants_report(spaces::connected_sum(pres(spaces::s2xs1(), {0}), rp3));
    CHECK(mixed.free_rank == 1);
    CHECK(mixed.torsion_factors == std::vector<Integer>{2});

    // Torsion factors merge; Gauss sums multiply.
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const IntMatrix b1 = fixtures::random_qhs_matrix(rng, 12, 2), b2 = fixtures::random_qhs_matrix(rng, 12, 2);
        const DecoratedPresentation a{b1, fixtures::random_chern(rng, b1)}, b{b2, fixtures::random_chern(rng, b2)};
        const auto ra = invariants_report(a), rb = invariants_report(b);
        const auto rs = invariants_report(spaces::connected_sum(a, b));
        CHECK(cyclo_equals(rs.gauss, ra.gauss * rb.gauss));
        Integer pa = 1, ps = 1;
        for (const auto& d : ra.torsion_factors) pa *= d;
        for (const auto& d : rb.torsion_factors) pa *= d;
        for (const auto& d : rs.torsion_factors) ps *= d;
        CHECK(pa == ps);
    }
}
