#include "spinc/spaces.hpp"

#include <numeric>
#include <stdexcept>

namespace spinc::spaces {

IntMatrix s3(int sign)
{
    if (sign != 1 && sign != -1) throw std::invalid_argument("s3: sign must be +1 or -1");
    return IntMatrix{{sign}};
}

IntMatrix rp3() { return IntMatrix{{2}}; }

IntMatrix s2xs1() { return IntMatrix{{0}}; }

IntMatrix t3() { return IntMatrix(3, 3); }

IntMatrix e8()
{
    // Dynkin diagram: chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
    IntMatrix m(8, 8);
    for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
    auto edge = [&](std::size_t a, std::size_t b) { m(a, b) = m(b, a) = -1; };
    for (std::size_t i = 0; i + 1 < 7; ++i) edge(i, i + 1);
    edge(4, 7);
    return m;
}

std::vector<long> negative_continued_fraction(long p, long q)
{
    if (p < 2 || q <= 0 || q >= p || std::gcd(p, q) != 1)
        throw std::invalid_argument("lens: need p >= 2 and 0 < q < p coprime to p");
    std::vector<long> a;
    long num = p, den = q;
    while (den != 0) {
        // a = ceil(num/den); num/den = a - den'/den with 0 <= den' < den
        const long ai = (num + den - 1) / den;
        a.push_back(ai);
        const long rem = ai * den - num;
        num = den;
        den = rem;
    }
    return a;
}

IntMatrix lens(long p, long q)
{
    const auto a = negative_continued_fraction(p, q);
    IntMatrix m(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        m(i, i) = a[i];
        if (i + 1 < a.size()) m(i, i + 1) = m(i + 1, i) = -1;
    }
    if (abs(m.determinant()) != p) throw std::logic_error("lens: chain determinant differs from p");
    return m;
}

DecoratedPresentation connected_sum(const DecoratedPresentation& a, const DecoratedPresentation& b)
{
    validate(a);
    validate(b);
    DecoratedPresentation out{a.matrix.direct_sum(b.matrix), a.chern};
    out.chern.insert(out.chern.end(), b.chern.begin(), b.chern.end());
    return out;
}

DecoratedPresentation with_default_chern(const IntMatrix& b) { return {b, b.diagonal()}; }

}  // namespace spinc::spaces
