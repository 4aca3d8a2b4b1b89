#include <orb/enumfrac.hpp>

#include <algorithm>

namespace orb {

UnitFractionTuple::UnitFractionTuple(std::vector<mpz_class> terms)
    : terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t < 2) fail("InvalidArgument", "unit-fraction terms must be >= 2");
    std::sort(terms_.begin(), terms_.end());
}

UnitFractionTuple UnitFractionTuple::of(const std::vector<long long>& terms) {
    std::vector<mpz_class> ts;
    ts.reserve(terms.size());
    for (long long t : terms) ts.emplace_back(static_cast<long>(t));
    return UnitFractionTuple(std::move(ts));
}

Rational UnitFractionTuple::sum() const {
    Rational s(0);
    for (const auto& t : terms_) s += unit_fraction(t);
    return s;
}

UnitFractionTuple sylvester_extend(const UnitFractionTuple& t, int steps) {
    if (steps < 1) fail("InvalidArgument", "steps must be positive");
    const Rational deficit = Rational(1) - t.sum();
    if (deficit.sign() <= 0 || deficit.num() != 1 || deficit.den() < 2)
        fail("NotDeficitForm", "sum is not of the form 1 - 1/b with integer b >= 2");

    std::vector<mpz_class> terms = t.terms();
    mpz_class b = deficit.den();
    for (int s = 0; s < steps; ++s) {
        terms.push_back(b + 1);   // restores the invariant with b' = b(b+1)
        b = b * (b + 1);
    }
    return UnitFractionTuple(std::move(terms));
}

FanoTail max_fano_tail(const UnitFractionTuple& prefix) {
    const Rational s = prefix.sum();
    if (s >= Rational(1)) return FanoTail::unbounded();

    // 1/m > 1 - s  <=>  m < q/p for 1 - s = p/q; largest such m is (q-1)/p.
    const Rational deficit = Rational(1) - s;
    mpz_class m_max;
    mpz_class q_minus_1 = deficit.den() - 1;
    mpz_fdiv_q(m_max.get_mpz_t(), q_minus_1.get_mpz_t(), deficit.num().get_mpz_t());

    mpz_class lower = prefix.terms().empty() ? mpz_class(2) : prefix.terms().back();
    if (lower < 2) lower = 2;
    if (m_max < lower) return FanoTail::none();
    return FanoTail::bounded(m_max);
}

namespace {

// Largest-sum-below-1 search. `partial` is the sum so far, `min_term` the
// smallest term allowed next, `remaining` the number of terms still to pick.
void bn_search(const Rational& partial, const mpz_class& min_term, int remaining,
               Rational& best) {
    // smallest admissible term keeps the running sum strictly below 1
    const Rational deficit = Rational(1) - partial;
    mpz_class a = deficit.reciprocal().floor() + 1;
    if (a < min_term) a = min_term;

    if (remaining == 1) {
        const Rational cand = partial + unit_fraction(a);
        if (cand > best) best = cand;
        return;
    }
    while (true) {
        // all remaining terms are >= a, so partial + remaining/a bounds the branch
        const Rational bound = partial + Rational(mpz_class(remaining), a);
        if (bound <= best) break;
        bn_search(partial + unit_fraction(a), a, remaining - 1, best);
        a += 1;
    }
}

} // namespace

Rational compute_bound_BN(int n, int search_limit) {
    if (n < 1) fail("InvalidArgument", "N must be positive");
    if (n > search_limit) fail("SearchLimitExceeded", "B_N search limited to N <= " +
                                                          std::to_string(search_limit));
    // The greedy tuple (2,3,7,43,...) seeds the bound; the search verifies
    // nothing beats it and would correct it if it did.
    UnitFractionTuple greedy = UnitFractionTuple::of({2});
    if (n > 1) greedy = sylvester_extend(greedy, n - 1);
    Rational best = greedy.sum();
    bn_search(Rational(0), mpz_class(2), n, best);
    return best;
}

namespace {

void prefix_search(std::vector<mpz_class>& acc, const Rational& partial,
                   long long min_term, long long cap, int remaining,
                   std::vector<UnitFractionTuple>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (long long a = min_term; a <= cap; ++a) {
        const Rational next = partial + Rational(1, a);
        if (next >= Rational(1)) continue;
        acc.emplace_back(static_cast<long>(a));
        prefix_search(acc, next, a, cap, remaining - 1, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<UnitFractionTuple> subunit_prefixes(int n, long long cap) {
    if (n < 1) fail("InvalidArgument", "N must be positive");
    std::vector<UnitFractionTuple> out;
    std::vector<mpz_class> acc;
    prefix_search(acc, Rational(0), 2, cap, n, out);
    return out;
}

} // namespace orb
