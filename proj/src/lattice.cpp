#include "spinc/lattice.hpp"

#include <stdexcept>

namespace spinc {

BilinearLattice::BilinearLattice(IntMatrix b) : b_(std::move(b))
{
    if (!b_.is_symmetric()) throw std::invalid_argument("bilinear lattice: matrix is not symmetric");
}

bool is_characteristic(const BilinearLattice& lattice, const IntVector& c)
{
    const IntMatrix& b = lattice.matrix();
    if (c.size() != b.rows()) throw std::invalid_argument("is_characteristic: dimension mismatch");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (mpz_odd_p(c[i].get_mpz_t()) != mpz_odd_p(b(i, i).get_mpz_t())) return false;
    return true;
}

std::vector<WuClass> wu_classes(const BilinearLattice& lattice)
{
    const IntMatrix& b = lattice.matrix();
    std::vector<WuClass> out;
    for (auto& w : solve_mod2(b, b.diagonal()).enumerate()) out.push_back({std::move(w)});
    return out;
}

namespace {

std::vector<IntVector> columns_of(const IntMatrix& m)
{
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return cols;
}

}  // namespace

DiscriminantData::DiscriminantData(BilinearLattice lattice)
    : lattice_(std::move(lattice)),
      smith_(smith_normal_form(lattice_.matrix())),
      image_(lattice_.rank(), columns_of(lattice_.matrix()))
{
    const std::size_t n = lattice_.rank();
    for (std::size_t i = 0; i < n; ++i) {
        const Integer& di = smith_.D(i, i);
        if (di == 0) {
            free_positions_.push_back(i);
            kernel_.push_back(smith_.V.col(i));
        } else if (di > 1) {
            torsion_positions_.push_back(i);
            factors_.push_back(di);
            RatVector g(n);
            for (std::size_t r = 0; r < n; ++r) g[r] = make_rational(smith_.V(r, i), di);
            lifts_.push_back(std::move(g));
        }
    }

    // With S = V^T U^{-1}, alpha(g_i) = (S U alpha)_i / d_i and
    // lambda(g_k, g_i) = S_ik / d_i.  For each free position j solve
    // sum_k S_ik t_k = S_ij (mod d_i) over the torsion positions.
    const std::size_t m = torsion_positions_.size();
    if (m == 0 || free_positions_.empty()) {
        free_corrections_.assign(free_positions_.size(), std::vector<Integer>(m, 0));
        return;
    }
    const IntMatrix s = smith_.V.transpose() * smith_.U_inverse;
    IntMatrix sys(m, 2 * m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) sys(a, b) = s(torsion_positions_[a], torsion_positions_[b]);
        sys(a, m + a) = -factors_[a];
    }
    for (std::size_t j : free_positions_) {
        IntVector rhs(m);
        for (std::size_t a = 0; a < m; ++a) rhs[a] = s(torsion_positions_[a], j);
        const auto sol = solve_integer(sys, rhs);
        if (!sol) throw std::logic_error("DiscriminantData: linking pairing is degenerate on the torsion");
        std::vector<Integer> t(m);
        for (std::size_t a = 0; a < m; ++a) mpz_fdiv_r(t[a].get_mpz_t(), (*sol)[a].get_mpz_t(), factors_[a].get_mpz_t());
        free_corrections_.push_back(std::move(t));
    }
}

Integer DiscriminantData::torsion_order() const
{
    Integer o = 1;
    for (const auto& d : factors_) o *= d;
    return o;
}

bool DiscriminantData::is_dual(const RatVector& x) const
{
    if (x.size() != lattice_.rank()) return false;
    for (const auto& y : matrix() * x)
        if (y.get_den() != 1) return false;
    return true;
}

RatVector DiscriminantData::torsion_element(const std::vector<Integer>& coords) const
{
    if (coords.size() != lifts_.size()) throw std::invalid_argument("torsion_element: coordinate count mismatch");
    RatVector x(lattice_.rank(), 0);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t r = 0; r < x.size(); ++r) x[r] += coords[i] * lifts_[i][r];
    return x;
}

std::vector<Integer> DiscriminantData::torsion_coordinates(const IntVector& alpha) const
{
    if (alpha.size() != lattice_.rank()) throw std::invalid_argument("torsion_coordinates: dimension mismatch");
    const IntVector ua = smith_.U * alpha;
    std::vector<Integer> t;
    for (std::size_t k = 0; k < torsion_positions_.size(); ++k) {
        Integer acc = ua[torsion_positions_[k]];
        for (std::size_t f = 0; f < free_positions_.size(); ++f)
            acc += ua[free_positions_[f]] * free_corrections_[f][k];
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), factors_[k].get_mpz_t());
        t.push_back(r);
    }
    return t;
}

IntVector DiscriminantData::free_coordinates(const IntVector& alpha) const
{
    IntVector f;
    for (const auto& k : kernel_) f.push_back(dot(alpha, k));
    return f;
}

IntVector DiscriminantData::torsion_generator_covector(std::size_t i) const
{
    return smith_.U_inverse.col(torsion_positions_.at(i));
}

IntVector DiscriminantData::canonical_chern(const IntVector& c) const
{
    if (!is_characteristic(lattice_, c)) throw std::invalid_argument("canonical_chern: vector is not characteristic");
    const IntVector c0 = matrix().diagonal();
    IntVector alpha(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) alpha[i] = (c[i] - c0[i]) / 2;
    alpha = image_.reduce(std::move(alpha));
    IntVector out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c0[i] + 2 * alpha[i];
    return out;
}

bool DiscriminantData::chern_equal(const IntVector& c, const IntVector& c2) const
{
    return canonical_chern(c) == canonical_chern(c2);
}

std::vector<IntVector> DiscriminantData::canonical_chern_vectors() const
{
    if (!is_nondegenerate()) throw std::domain_error("degenerate linking matrix has infinitely many Chern classes");
    const std::size_t n = lattice_.rank();
    const IntVector c0 = matrix().diagonal();
    std::vector<IntVector> out;
    std::vector<Integer> t(factors_.size(), 0);
    for (;;) {
        IntVector alpha(n, 0);
        for (std::size_t k = 0; k < t.size(); ++k) {
            const IntVector gen = torsion_generator_covector(k);
            for (std::size_t r = 0; r < n; ++r) alpha[r] += t[k] * gen[r];
        }
        IntVector c(n);
        for (std::size_t r = 0; r < n; ++r) c[r] = c0[r] + 2 * alpha[r];
        out.push_back(canonical_chern(c));
        std::size_t k = 0;
        while (k < t.size() && ++t[k] == factors_[k]) t[k++] = 0;
        if (k == t.size()) break;
    }
    return out;
}

namespace {

void require_dual(const DiscriminantData& d, const RatVector& x)
{
    if (!d.is_dual(x)) throw std::invalid_argument("vector is not in the dual lattice");
}

}  // namespace

QmodZ linking_pairing(const DiscriminantData& d, const RatVector& x, const RatVector& y)
{
    require_dual(d, x);
    require_dual(d, y);
    return QmodZ(dot(x, d.matrix() * y));
}

QmodZ phi_eval(const DiscriminantData& d, const IntVector& c, const RatVector& x)
{
    require_dual(d, x);
    if (!is_characteristic(d.lattice(), c)) throw std::invalid_argument("phi_eval: form is not characteristic");
    const Rational v = (dot(x, d.matrix() * x) - dot(c, x)) / 2;
    return QmodZ(v);
}

QmodZ evaluation_pairing(const DiscriminantData& d, const IntVector& alpha, const RatVector& x)
{
    if (alpha.size() != d.lattice().rank()) throw std::invalid_argument("evaluation_pairing: dimension mismatch");
    require_dual(d, x);
    return QmodZ(dot(alpha, x));
}

std::vector<Rational> radical_slope(const DiscriminantData& d, const IntVector& c)
{
    std::vector<Rational> s;
    for (const auto& k : d.kernel_basis()) s.push_back(make_rational(dot(c, k), 2));
    return s;
}

}  // namespace spinc
