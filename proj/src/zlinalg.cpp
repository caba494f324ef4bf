#include "spinc/zlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spinc {

IntVector int_vector(std::initializer_list<long> xs)
{
    IntVector v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const
{
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const
{
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntVector IntMatrix::diagonal() const
{
    IntVector v(std::min(rows_, cols_));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)(i, i);
    return v;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix product: dimension mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
        }
    return p;
}

IntVector IntMatrix::operator*(const IntVector& v) const
{
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix * vector: dimension mismatch");
    IntVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

RatVector IntMatrix::operator*(const RatVector& v) const
{
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix * vector: dimension mismatch");
    RatVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

Integer IntMatrix::determinant() const
{
    if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix IntMatrix::without(std::vector<std::size_t> indices) const
{
    if (!is_square()) throw std::invalid_argument("without: matrix must be square");
    std::sort(indices.begin(), indices.end());
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < rows_; ++i)
        if (!std::binary_search(indices.begin(), indices.end(), i)) keep.push_back(i);
    IntMatrix m(keep.size(), keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b) m(a, b) = (*this)(keep[a], keep[b]);
    return m;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& other) const
{
    IntMatrix m(rows_ + other.rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) m(rows_ + i, cols_ + j) = other(i, j);
    return m;
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& k)
{
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += k * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& k)
{
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += k * (*this)(i, source);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j)
{
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Integer dot(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVector& a, const RatVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const RatVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer gcd_of(const IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SmithDecomposition::rank() const
{
    std::size_t r = 0;
    for (const auto& d : D.diagonal())
        if (d != 0) ++r;
    return r;
}

IntVector SmithDecomposition::invariant_factors() const { return D.diagonal(); }

namespace {

// Working state: every row operation on D is mirrored on U (left) and as
// the inverse column operation on U_inverse; likewise for columns.
struct SmithState {
    SmithDecomposition s;

    void row_add(std::size_t t, std::size_t src, const Integer& k)
    {
        s.D.add_row_multiple(t, src, k);
        s.U.add_row_multiple(t, src, k);
        s.U_inverse.add_col_multiple(src, t, -k);
    }
    void col_add(std::size_t t, std::size_t src, const Integer& k)
    {
        s.D.add_col_multiple(t, src, k);
        s.V.add_col_multiple(t, src, k);
        s.V_inverse.add_row_multiple(src, t, -k);
    }
    void row_swap(std::size_t a, std::size_t b)
    {
        s.D.swap_rows(a, b);
        s.U.swap_rows(a, b);
        s.U_inverse.swap_cols(a, b);
    }
    void col_swap(std::size_t a, std::size_t b)
    {
        s.D.swap_cols(a, b);
        s.V.swap_cols(a, b);
        s.V_inverse.swap_rows(a, b);
    }
    void row_negate(std::size_t i)
    {
        s.D.negate_row(i);
        s.U.negate_row(i);
        s.U_inverse.negate_col(i);
    }
};

// Floor-style quotient so that remainders land in [0, |p|).
Integer quotient(const Integer& a, const Integer& p)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithState st{{IntMatrix::identity(rows), m, IntMatrix::identity(cols), IntMatrix::identity(rows),
                   IntMatrix::identity(cols)}};
    IntMatrix& d = st.s.D;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing block.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (d(i, j) == 0) continue;
                    if (pi == rows || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == rows) {
                // Trailing block is zero.
                for (std::size_t k = 0; k < std::min(rows, cols); ++k)
                    if (d(k, k) < 0) st.row_negate(k);
                return st.s;
            }

            st.row_swap(t, pi);
            st.col_swap(t, pj);
            const Integer p = d(t, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                st.row_add(i, t, -quotient(d(i, t), p));
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                st.col_add(j, t, -quotient(d(t, j), p));
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot row/column cleared; enforce divisibility of the rest.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j) {
                    Integer r;
                    mpz_tdiv_r(r.get_mpz_t(), d(i, j).get_mpz_t(), p.get_mpz_t());
                    if (r != 0) {
                        bad = i;
                        break;
                    }
                }
            if (bad == rows) break;
            st.row_add(t, bad, 1);
        }
    }
    for (std::size_t k = 0; k < std::min(rows, cols); ++k)
        if (d(k, k) < 0) st.row_negate(k);
    return st.s;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& v)
{
    if (v.size() != m.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
    const SmithDecomposition s = smith_normal_form(m);
    const IntVector uv = s.U * v;
    IntVector y(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Integer di = i < m.cols() ? s.D(i, i) : Integer(0);
        if (di == 0) {
            if (uv[i] != 0) return std::nullopt;
            continue;
        }
        if (!mpz_divisible_p(uv[i].get_mpz_t(), di.get_mpz_t())) return std::nullopt;
        y[i] = uv[i] / di;
    }
    return s.V * y;
}

// ---------------------------------------------------------------------------
// F_2

std::vector<Mod2Vector> Mod2Solutions::enumerate(std::size_t max_log2) const
{
    if (!solvable) return {};
    if (kernel.size() > max_log2) throw std::length_error("Mod2Solutions::enumerate: solution set too large");
    std::vector<Mod2Vector> out;
    const std::uint64_t count = std::uint64_t{1} << kernel.size();
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Mod2Vector x = particular;
        for (std::size_t k = 0; k < kernel.size(); ++k)
            if (mask >> k & 1)
                for (std::size_t i = 0; i < x.size(); ++i) x[i] ^= kernel[k][i];
        out.push_back(std::move(x));
    }
    return out;
}

Mod2Solutions solve_mod2(const IntMatrix& m, const IntVector& v)
{
    if (v.size() != m.rows()) throw std::invalid_argument("solve_mod2: dimension mismatch");
    const std::size_t rows = m.rows(), cols = m.cols();
    // Augmented matrix over F_2.
    std::vector<Mod2Vector> a(rows, Mod2Vector(cols + 1, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = mpz_odd_p(m(i, j).get_mpz_t()) ? 1 : 0;
        a[i][cols] = mpz_odd_p(v[i].get_mpz_t()) ? 1 : 0;
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t p = r;
        while (p < rows && !a[p][j]) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && a[i][j])
                for (std::size_t k = j; k <= cols; ++k) a[i][k] ^= a[r][k];
        pivot_cols.push_back(j);
        ++r;
    }
    Mod2Solutions out;
    for (std::size_t i = r; i < rows; ++i)
        if (a[i][cols]) return out;
    out.solvable = true;
    out.particular.assign(cols, 0);
    for (std::size_t k = 0; k < r; ++k) out.particular[pivot_cols[k]] = a[k][cols];
    std::vector<bool> is_pivot(cols, false);
    for (auto j : pivot_cols) is_pivot[j] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Mod2Vector x(cols, 0);
        x[f] = 1;
        for (std::size_t k = 0; k < r; ++k) x[pivot_cols[k]] = a[k][f];
        out.kernel.push_back(std::move(x));
    }
    return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m)
{
    const SmithDecomposition s = smith_normal_form(m);
    std::vector<IntVector> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const bool zero = j >= m.rows() || s.D(j, j) == 0;
        if (zero) basis.push_back(s.V.col(j));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// LatticeReducer

LatticeReducer::LatticeReducer(std::size_t n, const std::vector<IntVector>& generators) : dim_(n)
{
    std::vector<IntVector> rows;
    for (const auto& g : generators) {
        if (g.size() != n) throw std::invalid_argument("LatticeReducer: generator length mismatch");
        rows.push_back(g);
    }
    // Integer row echelon form by repeated Euclidean steps per column.
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < rows.size(); ++j) {
        for (;;) {
            std::size_t p = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][j] != 0 && (p == rows.size() || mpz_cmpabs(rows[i][j].get_mpz_t(), rows[p][j].get_mpz_t()) < 0)) p = i;
            if (p == rows.size()) break;
            std::swap(rows[r], rows[p]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][j] == 0) continue;
                const Integer q = quotient(rows[i][j], rows[r][j]);
                for (std::size_t k = j; k < n; ++k) rows[i][k] -= q * rows[r][k];
                if (rows[i][j] != 0) done = false;
            }
            if (done) {
                if (rows[r][j] < 0)
                    for (auto& x : rows[r]) x = -x;
                pivots_.push_back(j);
                basis_.push_back(rows[r]);
                ++r;
                break;
            }
        }
    }
    // Reduce entries above each pivot so the basis is in Hermite form.
    for (std::size_t k = 0; k < basis_.size(); ++k)
        for (std::size_t i = 0; i < k; ++i) {
            const Integer q = quotient(basis_[i][pivots_[k]], basis_[k][pivots_[k]]);
            if (q == 0) continue;
            for (std::size_t c = 0; c < n; ++c) basis_[i][c] -= q * basis_[k][c];
        }
}

IntVector LatticeReducer::reduce(IntVector v) const
{
    if (v.size() != dim_) throw std::invalid_argument("LatticeReducer::reduce: length mismatch");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const std::size_t p = pivots_[k];
        const Integer q = quotient(v[p], basis_[k][p]);
        if (q == 0) continue;
        for (std::size_t c = 0; c < dim_; ++c) v[c] -= q * basis_[k][c];
    }
    return v;
}

bool LatticeReducer::contains(const IntVector& v) const
{
    const IntVector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace spinc
