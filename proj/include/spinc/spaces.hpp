#pragma once

// Linking matrices of standard closed 3-manifolds.

#include "spinc/presentation.hpp"

namespace spinc::spaces {

IntMatrix s3(int sign = 1);   // [[+-1]]
IntMatrix rp3();              // [[2]]
IntMatrix s2xs1();            // [[0]]
IntMatrix t3();               // 0-framed Borromean rings
IntMatrix e8();               // the E8 form, det 1

/// Chain of unknots for L(p,q), from p/q = a_1 - 1/(a_2 - 1/(...)) with
/// a_i >= 2: diagonal (a_1, ..., a_m), off-diagonal -1.  |det| = p.
IntMatrix lens(long p, long q);
/// The a_i above.
std::vector<long> negative_continued_fraction(long p, long q);

/// Block-diagonal matrix and concatenated Chern vectors.
DecoratedPresentation connected_sum(const DecoratedPresentation& a, const DecoratedPresentation& b);

/// (B, diag(B)): the Chern vector of the Wu class representative.
DecoratedPresentation with_default_chern(const IntMatrix& b);

}  // namespace spinc::spaces
