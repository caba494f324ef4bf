#pragma once

// Decorated surgery presentations (B, s): a symmetric linking matrix and a
// Chern vector with s_i == B_ii (mod 2), taken modulo 2 Im B.  Kirby moves
// act at the level of the linking matrix.

#include "spinc/lattice.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace spinc {

/// Validation failure; `index` names the offending component when known.
class PresentationError : public std::invalid_argument {
public:
    PresentationError(const std::string& what, long index = -1) : std::invalid_argument(what), index_(index) {}
    long index() const { return index_; }

private:
    long index_;
};

struct DecoratedPresentation {
    IntMatrix matrix;
    IntVector chern;

    std::size_t size() const { return matrix.rows(); }
    bool operator==(const DecoratedPresentation&) const = default;
};

/// Throws PresentationError on an asymmetric matrix, a length mismatch or a
/// parity violation.
void validate(const DecoratedPresentation& p);

/// True iff (s - s2)/2 lies in Im B.
bool chern_equal(const DecoratedPresentation& p, const IntVector& s2);

std::vector<WuClass> spin_structures(const DecoratedPresentation& p);
/// (B, B r) for the 0/1 lift r of a characteristic solution.
DecoratedPresentation beta(const DecoratedPresentation& p, const WuClass& r);

namespace moves {

/// Slide component i over component j: B -> E^T B E, s -> E^T s with
/// E = I + sign * e_j e_i^T.
struct HandleSlide {
    std::size_t i, j;
    int sign;
};
struct ReverseOrientation {
    std::size_t i;
};
/// Disjoint unknot with framing sign and Chern entry sign.
struct Stabilize {
    int sign;
};
/// Remove an isolated +-1 framed unknot.
struct Destabilize {
    std::size_t i;
};
/// Remove component i together with its 0-framed meridian j.
struct SlamDunk {
    std::size_t i, j;
};
/// Append the bordered block [[x, 1], [1, 0]] linked to the old components
/// by `column`, with Chern entries (x, 0).
struct YMove {
    IntVector column;
    Integer framing;
};

}  // namespace moves

using MoveRecord = std::variant<moves::HandleSlide, moves::ReverseOrientation, moves::Stabilize, moves::Destabilize,
                                moves::SlamDunk, moves::YMove>;

std::string describe(const MoveRecord& m);

/// Throws PresentationError when the move's preconditions fail.
DecoratedPresentation apply_move(const DecoratedPresentation& p, const MoveRecord& m);

/// Every Kirby move applicable to p (Y-moves excluded).
std::vector<MoveRecord> valid_moves(const DecoratedPresentation& p);

/// 64-bit linear congruential generator
///     x_{k+1} = 6364136223846793005 * x_k + 1442695040888963407  (mod 2^64),
/// seeded with x_0 = seed; draws in [0, n) use the high 32 bits of the state.
class WalkRng {
public:
    explicit WalkRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::size_t below(std::size_t n);

private:
    std::uint64_t state_;
};

/// Applies `steps` uniformly chosen valid Kirby moves.  Deterministic in
/// (p, steps, seed).  The applied moves are appended to `log` if given.
DecoratedPresentation random_walk(const DecoratedPresentation& p, std::size_t steps, std::uint64_t seed,
                                  std::vector<MoveRecord>* log = nullptr);

}  // namespace spinc
