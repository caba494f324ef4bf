#include "spinc/zlinalg.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace spinc;

namespace {

// Leibniz expansion.
Integer det_by_permutations(const IntMatrix& m)
{
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        Integer term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// gcd of all k x k minors.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k)
{
    Integer g = 0;
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.end() - static_cast<long>(k), rsel.end(), true);
    do {
        std::fill(csel.begin(), csel.end(), false);
        std::fill(csel.end() - static_cast<long>(k), csel.end(), true);
        do {
            IntMatrix sub(k, k);
            std::size_t a = 0;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (!rsel[i]) continue;
                std::size_t b = 0;
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (csel[j]) sub(a, b++) = m(i, j);
                ++a;
            }
            Integer d = det_by_permutations(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
    return g;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("matrix basics")
{
    const IntMatrix a{{1, 2}, {3, 4}};
    CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
    CHECK(a * IntMatrix::identity(2) == a);
    CHECK(a * int_vector({1, 1}) == int_vector({3, 7}));
    CHECK(a.determinant() == -2);
    CHECK(a.direct_sum(IntMatrix{{5}}) == IntMatrix{{1, 2, 0}, {3, 4, 0}, {0, 0, 5}});
    CHECK(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}.without({1}) == IntMatrix{{1, 3}, {7, 9}});
    CHECK_FALSE(a.is_symmetric());
    CHECK(gcd_of(int_vector({-4, 6, 0})) == 2);
    CHECK(gcd_of(int_vector({0, 0})) == 0);
}

TEST_CASE("Bareiss determinant agrees with the Leibniz expansion")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix m = random_matrix(rng, n, n, 9);
        CHECK(m.determinant() == det_by_permutations(m));
    }
}

TEST_CASE("Smith normal form")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
        IntMatrix m = random_matrix(rng, r, c, trial % 3 == 0 ? 2 : 12);
        if (trial % 7 == 0 && r > 1)   // force a dependent row
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);
        const SmithDecomposition s = smith_normal_form(m);

        CHECK(s.U * m * s.V == s.D);
        CHECK(s.U * s.U_inverse == IntMatrix::identity(r));
        CHECK(s.V * s.V_inverse == IntMatrix::identity(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);

        const IntVector d = s.invariant_factors();
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(d[i] >= 0);
            if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
            if (i + 1 < d.size() && d[i] == 0) CHECK(d[i + 1] == 0);
        }
        // d_1 ... d_k = k-th determinantal divisor.
        Integer prod = 1;
        for (std::size_t k = 1; k <= std::min<std::size_t>(d.size(), 3); ++k) {
            prod *= d[k - 1];
            CHECK(prod == determinantal_divisor(m, k));
        }
    }
}

TEST_CASE("integer solutions against a brute-force box search")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const IntMatrix m = random_matrix(rng, 2, 2, 4);
        const IntVector v = {Integer(static_cast<long>(rng() % 9) - 4), Integer(static_cast<long>(rng() % 9) - 4)};
        const auto x = solve_integer(m, v);
        if (x) CHECK(m * *x == v);

        // When det != 0 any solution satisfies |x_i| <= |adj| |v| / |det| <= 32 here.
        if (m.determinant() == 0) continue;
        bool brute = false;
        for (long a = -40; a <= 40 && !brute; ++a)
            for (long b = -40; b <= 40 && !brute; ++b) brute = (m * int_vector({a, b}) == v);
        CHECK(brute == x.has_value());
    }
}

TEST_CASE("mod-2 solutions against exhaustive enumeration")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix m = fixtures::random_symmetric(rng, n, -3, 3);
        const IntVector v = m.diagonal();
        const Mod2Solutions sol = solve_mod2(m, v);

        std::vector<Mod2Vector> brute;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Mod2Vector w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = (mask >> i) & 1u;
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                Integer acc = 0;
                for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * w[j];
                ok = mpz_even_p(Integer(acc - v[i]).get_mpz_t());
            }
            if (ok) brute.push_back(w);
        }
        // diag(B) is always in the mod-2 image of a symmetric B.
        CHECK(sol.solvable);
        auto all = sol.enumerate();
        std::sort(all.begin(), all.end());
        std::sort(brute.begin(), brute.end());
        CHECK(all == brute);
    }
    const auto none = solve_mod2(IntMatrix{{2}}, int_vector({1}));
    CHECK_FALSE(none.solvable);
}

TEST_CASE("kernel basis")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m = random_matrix(rng, 3, 4, 3);
        if (trial % 2) m = m.transpose() * m;   // 4x4 symmetric with rank <= 3
        const auto k = kernel_basis(m);
        const auto s = smith_normal_form(m);
        CHECK(k.size() + s.rank() == m.cols());
        for (const auto& v : k) CHECK(m * v == IntVector(m.rows(), 0));
    }
    CHECK(kernel_basis(IntMatrix{{0}}).size() == 1);
    CHECK(kernel_basis(IntMatrix{{1, 2}, {2, 4}}).size() == 1);
}

TEST_CASE("lattice reduction is canonical modulo the lattice")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix b = fixtures::random_symmetric(rng, 3, -4, 4);
        std::vector<IntVector> gens;
        for (std::size_t j = 0; j < 3; ++j) gens.push_back(b.col(j));
        const LatticeReducer red(3, gens);

        const IntVector v = fixtures::random_chern(rng, b, 9);
        const IntVector rv = red.reduce(v);
        IntVector diff(3);
        for (std::size_t i = 0; i < 3; ++i) diff[i] = v[i] - rv[i];
        CHECK(red.contains(diff));
        CHECK(solve_integer(b, diff).has_value());

        // Shifting by a lattice vector leaves the representative unchanged.
        const IntVector shift = b * int_vector({static_cast<long>(trial % 5) - 2, 3, -1});
        IntVector w(3);
        for (std::size_t i = 0; i < 3; ++i) w[i] = v[i] + shift[i];
        CHECK(red.reduce(w) == rv);
    }
}
