#include "spinc/quadfun.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace spinc {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

OrderCapExceeded::OrderCapExceeded(const Integer& order, std::uint64_t cap)
    : std::runtime_error("group order " + order.get_str() + " exceeds the cap " + std::to_string(cap))
{
}

// ---------------------------------------------------------------------------
// FiniteAbelianGroup

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors))
{
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw std::invalid_argument("invariant factors must divide each other in order");
    }
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * factors_[i];
    for (auto d : factors_) order_ *= d;
}

std::int64_t FiniteAbelianGroup::index(const Element& e) const
{
    if (e.size() != factors_.size()) throw std::invalid_argument("element has wrong number of coordinates");
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) idx += mod(e[i], factors_[i]) * strides_[i];
    return idx;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::element(std::int64_t idx) const
{
    if (idx < 0 || idx >= order_) throw std::out_of_range("group element index out of range");
    Element e(factors_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = idx / strides_[i];
        idx %= strides_[i];
    }
    return e;
}

std::int64_t FiniteAbelianGroup::add(std::int64_t x, std::int64_t y) const
{
    std::int64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t a = x / strides_[i], b = y / strides_[i];
        x %= strides_[i];
        y %= strides_[i];
        std::int64_t s = a + b;
        if (s >= factors_[i]) s -= factors_[i];
        out += s * strides_[i];
    }
    return out;
}

std::int64_t FiniteAbelianGroup::negate(std::int64_t x) const
{
    std::int64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t a = x / strides_[i];
        x %= strides_[i];
        out += (a == 0 ? 0 : factors_[i] - a) * strides_[i];
    }
    return out;
}

std::int64_t FiniteAbelianGroup::scale(std::int64_t x, std::int64_t k) const
{
    std::int64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t a = x / strides_[i];
        x %= strides_[i];
        out += mod((a % factors_[i]) * mod(k, factors_[i]), factors_[i]) * strides_[i];
    }
    return out;
}

std::int64_t FiniteAbelianGroup::order_of(std::int64_t x) const
{
    std::int64_t o = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t a = x / strides_[i];
        x %= strides_[i];
        o = std::lcm(o, factors_[i] / std::gcd(a, factors_[i]));
    }
    return o;
}

// ---------------------------------------------------------------------------
// GroupIso

std::int64_t GroupIso::apply(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target,
                             std::int64_t x) const
{
    const auto coords = source.element(x);
    std::int64_t y = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) y = target.add(y, target.scale(images[i], coords[i]));
    return y;
}

bool GroupIso::is_valid(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target) const
{
    if (images.size() != source.rank() || source.order() != target.order()) return false;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] < 0 || images[i] >= target.order()) return false;
        if (target.scale(images[i], source.factors()[i]) != 0) return false;
    }
    std::vector<bool> hit(static_cast<std::size_t>(target.order()), false);
    // Walk the source in index order, accumulating images incrementally.
    std::vector<std::int64_t> image_of(static_cast<std::size_t>(source.order()), 0);
    for (std::int64_t x = 1; x < source.order(); ++x) {
        // x = prev + generator i where i is the last nonzero coordinate.
        auto coords = source.element(x);
        std::size_t i = coords.size();
        while (coords[i - 1] == 0) --i;
        const std::int64_t prev = x - source.generator(i - 1);
        image_of[static_cast<std::size_t>(x)] = target.add(image_of[static_cast<std::size_t>(prev)], images[i - 1]);
    }
    for (auto y : image_of) {
        if (hit[static_cast<std::size_t>(y)]) return false;
        hit[static_cast<std::size_t>(y)] = true;
    }
    return true;
}

GroupIso GroupIso::identity(const FiniteAbelianGroup& g)
{
    GroupIso iso;
    for (std::size_t i = 0; i < g.rank(); ++i) iso.images.push_back(g.generator(i));
    return iso;
}

// ---------------------------------------------------------------------------
// QuadraticFunction

QuadraticFunction::QuadraticFunction(FiniteAbelianGroup group, std::int64_t modulus,
                                     std::vector<std::int64_t> numerators, std::vector<Rational> radical_slopes)
    : group_(std::move(group)), modulus_(modulus), table_(std::move(numerators)), slopes_(std::move(radical_slopes))
{
    if (modulus_ < 1) throw std::invalid_argument("quadratic function: modulus must be positive");
    if (static_cast<std::int64_t>(table_.size()) != group_.order())
        throw std::invalid_argument("quadratic function: value table size differs from group order");
    for (auto& v : table_) v = mod(v, modulus_);
    for (const auto& s : slopes_)
        if (s.get_den() != 1 && s.get_den() != 2)
            throw std::invalid_argument("quadratic function: radical slope must be a half-integer");

    // b_q is bilinear iff x -> b_q(x, g_i) is a homomorphism for every generator.
    const std::size_t k = group_.rank();
    for (std::size_t i = 0; i < k; ++i) {
        const std::int64_t gi = group_.generator(i);
        auto delta = [&](std::int64_t x) { return mod(numerator(group_.add(x, gi)) - numerator(x) - numerator(gi), modulus_); };
        for (std::size_t j = 0; j < k; ++j) {
            const std::int64_t gj = group_.generator(j);
            const std::int64_t dj = delta(gj);
            for (std::int64_t x = 0; x < group_.order(); ++x)
                if (delta(group_.add(x, gj)) != mod(delta(x) + dj, modulus_))
                    throw std::invalid_argument("quadratic function: associated pairing is not bilinear");
        }
    }
}

QuadraticFunction QuadraticFunction::from_values(FiniteAbelianGroup group, const std::vector<QmodZ>& values,
                                                 std::vector<Rational> radical_slopes)
{
    std::int64_t n = 1;
    for (const auto& v : values) n = std::lcm(n, static_cast<std::int64_t>(v.value().get_den().get_si()));
    std::vector<std::int64_t> num;
    num.reserve(values.size());
    for (const auto& v : values) {
        const Rational scaled = v.value() * n;
        num.push_back(scaled.get_num().get_si());
    }
    return QuadraticFunction(std::move(group), n, std::move(num), std::move(radical_slopes));
}

QuadraticFunction QuadraticFunction::from_discriminant(const DiscriminantData& d, const IntVector& c,
                                                       std::uint64_t order_cap)
{
    const Integer order = d.torsion_order();
    if (order > order_cap) throw OrderCapExceeded(order, order_cap);
    std::vector<std::int64_t> factors;
    for (const auto& f : d.torsion_factors()) factors.push_back(f.get_si());
    FiniteAbelianGroup group(factors);
    const std::int64_t n = 2 * group.exponent();
    const std::size_t k = group.rank();

    auto numerator_of = [n](const QmodZ& v) { return Rational(v.value() * n).get_num().get_si(); };
    const auto& lifts = d.torsion_lifts();
    std::vector<std::int64_t> gen_value(k);
    std::vector<std::vector<std::int64_t>> pairing(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
        gen_value[i] = numerator_of(phi_eval(d, c, lifts[i]));
        for (std::size_t j = 0; j < k; ++j) pairing[i][j] = numerator_of(linking_pairing(d, lifts[i], lifts[j]));
    }

    // q(y + g_i) = q(y) + q(g_i) + b(y, g_i), filling in index order.
    std::vector<std::int64_t> table(static_cast<std::size_t>(group.order()), 0);
    for (std::int64_t x = 1; x < group.order(); ++x) {
        auto coords = group.element(x);
        std::size_t i = k;
        while (coords[i - 1] == 0) --i;
        --i;
        coords[i] -= 1;
        std::int64_t b = 0;
        for (std::size_t j = 0; j < k; ++j) b = mod(b + mod(coords[j] * pairing[j][i], n), n);
        const std::int64_t prev = x - group.generator(i);
        table[static_cast<std::size_t>(x)] = mod(table[static_cast<std::size_t>(prev)] + gen_value[i] + b, n);
    }
    return QuadraticFunction(std::move(group), n, std::move(table), radical_slope(d, c));
}

QmodZ QuadraticFunction::value(std::int64_t x) const { return QmodZ(numerator(x), modulus_); }

QuadraticFunction QuadraticFunction::translated(std::int64_t shift) const
{
    std::vector<std::int64_t> t(table_.size());
    const std::int64_t base = numerator(shift);
    for (std::int64_t x = 0; x < group_.order(); ++x)
        t[static_cast<std::size_t>(x)] = numerator(group_.add(x, shift)) - base;
    return QuadraticFunction(group_, modulus_, std::move(t), slopes_);
}

QuadraticFunction QuadraticFunction::transported(const GroupIso& iso, const FiniteAbelianGroup& target) const
{
    if (!iso.is_valid(group_, target)) throw std::invalid_argument("transported: map is not an isomorphism");
    std::vector<std::int64_t> t(table_.size());
    for (std::int64_t x = 0; x < group_.order(); ++x)
        t[static_cast<std::size_t>(iso.apply(group_, target, x))] = numerator(x);
    return QuadraticFunction(target, modulus_, std::move(t), slopes_);
}

QuadraticFunction QuadraticFunction::with_modulus(std::int64_t multiple) const
{
    if (multiple % modulus_ != 0) throw std::invalid_argument("with_modulus: not a multiple of the modulus");
    std::vector<std::int64_t> t(table_);
    for (auto& v : t) v *= multiple / modulus_;
    return QuadraticFunction(group_, multiple, std::move(t), slopes_);
}

bool QuadraticFunction::pointwise_equal(const QuadraticFunction& o) const
{
    if (!(group_ == o.group_)) return false;
    const std::int64_t l = std::lcm(modulus_, o.modulus_);
    for (std::size_t x = 0; x < table_.size(); ++x)
        if (table_[x] * (l / modulus_) != o.table_[x] * (l / o.modulus_)) return false;
    return true;
}

bool QuadraticFunction::is_nondegenerate() const
{
    for (std::int64_t x = 1; x < group_.order(); ++x) {
        bool pairs = false;
        for (std::size_t i = 0; i < group_.rank() && !pairs; ++i) pairs = !bilinear_of(*this, x, group_.generator(i)).is_zero();
        if (!pairs) return false;
    }
    return true;
}

QmodZ bilinear_of(const QuadraticFunction& q, std::int64_t x, std::int64_t y)
{
    const auto& g = q.group();
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order()) throw std::out_of_range("bilinear_of: element out of range");
    return QmodZ(q.numerator(g.add(x, y)) - q.numerator(x) - q.numerator(y), q.modulus());
}

QmodZ defect_of(const QuadraticFunction& q, std::int64_t x)
{
    const auto& g = q.group();
    if (x < 0 || x >= g.order()) throw std::out_of_range("defect_of: element out of range");
    return QmodZ(q.numerator(x) - q.numerator(g.negate(x)), q.modulus());
}

CyclotomicSum gauss_sum(const QuadraticFunction& q)
{
    std::vector<std::int64_t> c(static_cast<std::size_t>(q.modulus()), 0);
    for (auto v : q.numerators()) c[static_cast<std::size_t>(v)] += 1;
    return {static_cast<std::uint64_t>(q.modulus()), std::move(c)};
}

namespace {

Integer doubled_gcd(const std::vector<Rational>& slopes)
{
    Integer g = 0;
    for (const auto& s : slopes) g = gcd(g, Integer(Rational(s * 2).get_num()));
    return g;
}

}  // namespace

bool radical_compatible(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    return a.size() == b.size() && doubled_gcd(a) == doubled_gcd(b);
}

std::string QuadFingerprint::first_difference(const QuadFingerprint& o) const
{
    if (factors != o.factors) return "invariant_factors";
    if (radical_rank != o.radical_rank) return "radical_rank";
    if (radical_gcd != o.radical_gcd) return "radical_slopes";
    if (!cyclo_equals(gauss, o.gauss)) return "gauss_sum";
    if (values != o.values) return "value_multiset";
    if (defects != o.defects) return "defect_multiset";
    return {};
}

QuadFingerprint invariant_fingerprint(const QuadraticFunction& q)
{
    QuadFingerprint f;
    f.factors = q.group().factors();
    for (std::int64_t x = 0; x < q.group().order(); ++x) {
        f.values.push_back(q.value(x));
        f.defects.push_back(defect_of(q, x));
    }
    std::sort(f.values.begin(), f.values.end());
    std::sort(f.defects.begin(), f.defects.end());
    f.gauss = gauss_sum(q);
    f.radical_rank = q.radical_slopes().size();
    f.radical_gcd = make_rational(doubled_gcd(q.radical_slopes()), 2);
    return f;
}

// ---------------------------------------------------------------------------
// Isometry search

namespace {

struct SearchState {
    const IsometryProblem& p;
    std::vector<std::size_t> order;                       // generator processing order
    std::map<std::int64_t, std::vector<std::int64_t>> by_order;
    std::vector<std::int64_t> images;
    std::vector<std::int64_t> source_gen;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    bool descend(std::size_t depth)
    {
        if (++nodes > p.budget) {
            exhausted = true;
            return false;
        }
        if (depth == order.size()) {
            GroupIso iso{images};
            if (!iso.is_valid(*p.source, *p.target)) return false;
            return !p.accept || p.accept(iso);
        }
        const std::size_t i = order[depth];
        const std::int64_t gi = source_gen[i];
        const std::int64_t want_self = p.source_pairing(gi, gi);
        const std::int64_t want_value = p.source_value ? p.source_value(gi) : 0;
        for (std::int64_t y : by_order[p.source->factors()[i]]) {
            if (p.source_value && p.target_value(y) != want_value) continue;
            if (p.target_pairing(y, y) != want_self) continue;
            bool ok = true;
            for (std::size_t t = 0; t < depth && ok; ++t) {
                const std::size_t j = order[t];
                ok = p.target_pairing(y, images[j]) == p.source_pairing(gi, source_gen[j]);
            }
            if (!ok) continue;
            images[i] = y;
            if (descend(depth + 1)) return true;
            if (exhausted) return false;
        }
        images[i] = -1;
        return false;
    }
};

}  // namespace

IsometrySearchResult search_isometries(const IsometryProblem& problem)
{
    IsometrySearchResult result;
    const auto& src = *problem.source;
    const auto& tgt = *problem.target;
    if (!(src == tgt)) return result;

    SearchState st{problem, {}, {}, std::vector<std::int64_t>(src.rank(), -1), {}, 0, false};
    for (std::size_t i = src.rank(); i-- > 0;) st.order.push_back(i);
    for (std::size_t i = 0; i < src.rank(); ++i) st.source_gen.push_back(src.generator(i));
    for (std::int64_t y = 0; y < tgt.order(); ++y) st.by_order[tgt.order_of(y)].push_back(y);

    const bool found = st.descend(0);
    result.nodes = st.nodes;
    if (found) {
        result.status = SearchStatus::Found;
        result.iso = GroupIso{st.images};
    } else {
        result.status = st.exhausted ? SearchStatus::BudgetExhausted : SearchStatus::NotFound;
    }
    return result;
}

IsometrySearchResult find_isomorphism(const QuadraticFunction& q, const QuadraticFunction& q2,
                                      std::uint64_t order_cap, std::uint64_t budget)
{
    for (const auto* f : {&q, &q2})
        if (static_cast<std::uint64_t>(f->group().order()) > order_cap)
            throw OrderCapExceeded(Integer(static_cast<long>(f->group().order())), order_cap);

    IsometrySearchResult none;
    if (!(q.group() == q2.group()) || !radical_compatible(q.radical_slopes(), q2.radical_slopes())) return none;

    const std::int64_t l = std::lcm(q.modulus(), q2.modulus());
    const QuadraticFunction a = q.with_modulus(l), b = q2.with_modulus(l);
    std::vector<std::int64_t> va(a.numerators()), vb(b.numerators());
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb) return none;

    const auto& ga = a.group();
    IsometryProblem p;
    p.source = &a.group();
    p.target = &b.group();
    p.source_pairing = [&](std::int64_t x, std::int64_t y) { return mod(a.numerator(ga.add(x, y)) - a.numerator(x) - a.numerator(y), l); };
    p.target_pairing = [&](std::int64_t x, std::int64_t y) { return mod(b.numerator(ga.add(x, y)) - b.numerator(x) - b.numerator(y), l); };
    p.source_value = [&](std::int64_t x) { return a.numerator(x); };
    p.target_value = [&](std::int64_t x) { return b.numerator(x); };
    p.budget = budget;
    return search_isometries(p);
}

std::optional<GroupIso> is_isomorphic(const QuadraticFunction& q, const QuadraticFunction& q2,
                                      std::uint64_t order_cap, std::uint64_t budget)
{
    auto r = find_isomorphism(q, q2, order_cap, budget);
    if (r.status == SearchStatus::BudgetExhausted) throw std::runtime_error("isomorphism search budget exhausted");
    return r.iso;
}

}  // namespace spinc
