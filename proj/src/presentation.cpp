#include "spinc/presentation.hpp"

#include <sstream>

namespace spinc {

void validate(const DecoratedPresentation& p)
{
    const IntMatrix& b = p.matrix;
    if (!b.is_square()) throw PresentationError("linking matrix is not square");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = i + 1; j < b.cols(); ++j)
            if (b(i, j) != b(j, i))
                throw PresentationError("linking matrix is not symmetric at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")",
                                        static_cast<long>(i));
    if (p.chern.size() != b.rows())
        throw PresentationError("chern vector has length " + std::to_string(p.chern.size()) + ", expected " +
                                std::to_string(b.rows()));
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (mpz_odd_p(p.chern[i].get_mpz_t()) != mpz_odd_p(b(i, i).get_mpz_t()))
            throw PresentationError("parity violation at index " + std::to_string(i) + ": chern entry " +
                                        p.chern[i].get_str() + " and framing " + b(i, i).get_str() + " differ mod 2",
                                    static_cast<long>(i));
}

bool chern_equal(const DecoratedPresentation& p, const IntVector& s2)
{
    validate(p);
    validate({p.matrix, s2});
    IntVector half(s2.size());
    for (std::size_t i = 0; i < s2.size(); ++i) half[i] = (p.chern[i] - s2[i]) / 2;
    return solve_integer(p.matrix, half).has_value();
}

std::vector<WuClass> spin_structures(const DecoratedPresentation& p)
{
    return wu_classes(BilinearLattice(p.matrix));
}

DecoratedPresentation beta(const DecoratedPresentation& p, const WuClass& r)
{
    const IntMatrix& b = p.matrix;
    if (r.w.size() != b.rows()) throw PresentationError("spin structure has the wrong length");
    IntVector lift(r.w.size());
    for (std::size_t i = 0; i < lift.size(); ++i) lift[i] = r.w[i];
    const IntVector br = b * lift;
    const IntVector diag = b.diagonal();
    for (std::size_t i = 0; i < br.size(); ++i)
        if (mpz_odd_p(br[i].get_mpz_t()) != mpz_odd_p(diag[i].get_mpz_t()))
            throw PresentationError("not a characteristic solution at index " + std::to_string(i), static_cast<long>(i));
    return {b, br};
}

std::string describe(const MoveRecord& m)
{
    std::ostringstream os;
    std::visit(
        [&](const auto& mv) {
            using T = std::decay_t<decltype(mv)>;
            if constexpr (std::is_same_v<T, moves::HandleSlide>)
                os << "HandleSlide(" << mv.i << "," << mv.j << "," << (mv.sign > 0 ? "+1" : "-1") << ")";
            else if constexpr (std::is_same_v<T, moves::ReverseOrientation>)
                os << "ReverseOrientation(" << mv.i << ")";
            else if constexpr (std::is_same_v<T, moves::Stabilize>)
                os << "Stabilize(" << (mv.sign > 0 ? "+1" : "-1") << ")";
            else if constexpr (std::is_same_v<T, moves::Destabilize>)
                os << "Destabilize(" << mv.i << ")";
            else if constexpr (std::is_same_v<T, moves::SlamDunk>)
                os << "SlamDunk(" << mv.i << "," << mv.j << ")";
            else {
                os << "YMove([";
                for (std::size_t k = 0; k < mv.column.size(); ++k) os << (k ? "," : "") << mv.column[k].get_str();
                os << "]," << mv.framing.get_str() << ")";
            }
        },
        m);
    return os.str();
}

namespace {

void require_index(std::size_t i, std::size_t n, const char* move)
{
    if (i >= n) throw PresentationError(std::string(move) + ": component index " + std::to_string(i) + " out of range");
}

bool is_isolated_unit(const DecoratedPresentation& p, std::size_t i)
{
    const IntMatrix& b = p.matrix;
    if (b(i, i) != 1 && b(i, i) != -1) return false;
    for (std::size_t k = 0; k < b.cols(); ++k)
        if (k != i && b(i, k) != 0) return false;
    return true;
}

// Component j is a 0-framed meridian of component i and links nothing else.
bool is_meridian_pair(const DecoratedPresentation& p, std::size_t i, std::size_t j)
{
    const IntMatrix& b = p.matrix;
    if (i == j || b(j, j) != 0) return false;
    if (b(i, j) != 1 && b(i, j) != -1) return false;
    for (std::size_t k = 0; k < b.cols(); ++k)
        if (k != i && k != j && b(j, k) != 0) return false;
    return true;
}

DecoratedPresentation slide(const DecoratedPresentation& p, const moves::HandleSlide& m)
{
    require_index(m.i, p.size(), "HandleSlide");
    require_index(m.j, p.size(), "HandleSlide");
    if (m.i == m.j) throw PresentationError("HandleSlide: a component cannot slide over itself", static_cast<long>(m.i));
    if (m.sign != 1 && m.sign != -1) throw PresentationError("HandleSlide: sign must be +1 or -1");
    DecoratedPresentation q = p;
    const Integer e = m.sign;
    q.matrix.add_col_multiple(m.i, m.j, e);
    q.matrix.add_row_multiple(m.i, m.j, e);
    q.chern[m.i] += e * q.chern[m.j];
    return q;
}

DecoratedPresentation reverse(const DecoratedPresentation& p, const moves::ReverseOrientation& m)
{
    require_index(m.i, p.size(), "ReverseOrientation");
    DecoratedPresentation q = p;
    q.matrix.negate_col(m.i);
    q.matrix.negate_row(m.i);
    q.chern[m.i] = -q.chern[m.i];
    return q;
}

DecoratedPresentation stabilize(const DecoratedPresentation& p, const moves::Stabilize& m)
{
    if (m.sign != 1 && m.sign != -1) throw PresentationError("Stabilize: sign must be +1 or -1");
    DecoratedPresentation q;
    q.matrix = p.matrix.direct_sum(IntMatrix{{m.sign}});
    q.chern = p.chern;
    q.chern.emplace_back(m.sign);
    return q;
}

DecoratedPresentation destabilize(const DecoratedPresentation& p, const moves::Destabilize& m)
{
    require_index(m.i, p.size(), "Destabilize");
    if (!is_isolated_unit(p, m.i))
        throw PresentationError("Destabilize: component " + std::to_string(m.i) + " is not an isolated +-1 unknot",
                                static_cast<long>(m.i));
    DecoratedPresentation q;
    q.matrix = p.matrix.without({m.i});
    q.chern = p.chern;
    q.chern.erase(q.chern.begin() + static_cast<long>(m.i));
    return q;
}

DecoratedPresentation slam_dunk(const DecoratedPresentation& p, const moves::SlamDunk& m)
{
    require_index(m.i, p.size(), "SlamDunk");
    require_index(m.j, p.size(), "SlamDunk");
    if (!is_meridian_pair(p, m.i, m.j))
        throw PresentationError("SlamDunk: component " + std::to_string(m.j) +
                                    " is not a 0-framed meridian of component " + std::to_string(m.i),
                                static_cast<long>(m.j));
    // Shift s by 2 B (k e_i) so that s_j = 0, then drop both components.
    const Integer e = p.matrix(m.i, m.j);
    const Integer k = -e * p.chern[m.j] / 2;
    DecoratedPresentation q;
    q.chern = p.chern;
    for (std::size_t l = 0; l < q.chern.size(); ++l) q.chern[l] += 2 * k * p.matrix(l, m.i);
    q.matrix = p.matrix.without({m.i, m.j});
    const std::size_t lo = std::min(m.i, m.j), hi = std::max(m.i, m.j);
    q.chern.erase(q.chern.begin() + static_cast<long>(hi));
    q.chern.erase(q.chern.begin() + static_cast<long>(lo));
    return q;
}

DecoratedPresentation y_move(const DecoratedPresentation& p, const moves::YMove& m)
{
    const std::size_t n = p.size();
    if (m.column.size() != n)
        throw PresentationError("YMove: linking column has length " + std::to_string(m.column.size()) + ", expected " +
                                std::to_string(n));
    DecoratedPresentation q;
    q.matrix = IntMatrix(n + 2, n + 2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) q.matrix(a, b) = p.matrix(a, b);
    for (std::size_t a = 0; a < n; ++a) q.matrix(a, n) = q.matrix(n, a) = m.column[a];
    q.matrix(n, n) = m.framing;
    q.matrix(n, n + 1) = q.matrix(n + 1, n) = 1;
    q.chern = p.chern;
    q.chern.push_back(m.framing);
    q.chern.emplace_back(0);
    return q;
}

}  // namespace

DecoratedPresentation apply_move(const DecoratedPresentation& p, const MoveRecord& m)
{
    validate(p);
    return std::visit(
        [&](const auto& mv) -> DecoratedPresentation {
            using T = std::decay_t<decltype(mv)>;
            if constexpr (std::is_same_v<T, moves::HandleSlide>) return slide(p, mv);
            else if constexpr (std::is_same_v<T, moves::ReverseOrientation>) return reverse(p, mv);
            else if constexpr (std::is_same_v<T, moves::Stabilize>) return stabilize(p, mv);
            else if constexpr (std::is_same_v<T, moves::Destabilize>) return destabilize(p, mv);
            else if constexpr (std::is_same_v<T, moves::SlamDunk>) return slam_dunk(p, mv);
            else return y_move(p, mv);
        },
        m);
}

std::vector<MoveRecord> valid_moves(const DecoratedPresentation& p)
{
    const std::size_t n = p.size();
    std::vector<MoveRecord> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) {
                out.emplace_back(moves::HandleSlide{i, j, +1});
                out.emplace_back(moves::HandleSlide{i, j, -1});
            }
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(moves::ReverseOrientation{i});
    out.emplace_back(moves::Stabilize{+1});
    out.emplace_back(moves::Stabilize{-1});
    for (std::size_t i = 0; i < n; ++i)
        if (is_isolated_unit(p, i)) out.emplace_back(moves::Destabilize{i});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (is_meridian_pair(p, i, j)) out.emplace_back(moves::SlamDunk{i, j});
    return out;
}

std::uint64_t WalkRng::next()
{
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
}

std::size_t WalkRng::below(std::size_t n) { return static_cast<std::size_t>((next() >> 32) % n); }

DecoratedPresentation random_walk(const DecoratedPresentation& p, std::size_t steps, std::uint64_t seed,
                                  std::vector<MoveRecord>* log)
{
    validate(p);
    WalkRng rng(seed);
    DecoratedPresentation cur = p;
    for (std::size_t s = 0; s < steps; ++s) {
        const auto options = valid_moves(cur);
        const MoveRecord& m = options[rng.below(options.size())];
        cur = apply_move(cur, m);
        if (log) log->push_back(m);
    }
    return cur;
}

}  // namespace spinc
