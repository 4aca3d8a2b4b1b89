#pragma once

/**
 * @file enumfrac.hpp
 * @brief Unit-fraction combinatorics: extension sequences, the finiteness
 *        bound B_N, maximal Fano tails and boundary-case enumeration.
 */

#include <orb/rational.hpp>

#include <vector>

namespace orb {

/// Nondecreasing tuple of integers >= 2 viewed through its sum of unit
/// fractions. Terms are arbitrary precision: extension sequences grow
/// doubly exponentially and leave int64 after half a dozen steps.
class UnitFractionTuple {
public:
    explicit UnitFractionTuple(std::vector<mpz_class> terms);
    static UnitFractionTuple of(const std::vector<long long>& terms);

    const std::vector<mpz_class>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Exact sum of 1/a_j.
    Rational sum() const;

private:
    std::vector<mpz_class> terms_;
};

/// Appends `steps` terms to a tuple whose sum is 1 - 1/b: first b+1, then
/// following the denominator recursion b <- b(b+1). After every step the
/// sum is again of the form 1 - 1/b'. Throws NotDeficitForm when the
/// precondition fails.
UnitFractionTuple sylvester_extend(const UnitFractionTuple& t, int steps);

struct FanoTail {
    enum class Kind { Bounded, Unbounded, NoTail };
    Kind kind;
    mpz_class max_tail;  // meaningful for Bounded only

    static FanoTail bounded(mpz_class m) { return {Kind::Bounded, std::move(m)}; }
    static FanoTail unbounded() { return {Kind::Unbounded, 0}; }
    static FanoTail none() { return {Kind::NoTail, 0}; }
};

/// Largest integer m >= max(last term, 2) with sum(prefix) + 1/m > 1;
/// Unbounded when sum(prefix) >= 1 already, NoTail when no m qualifies.
FanoTail max_fano_tail(const UnitFractionTuple& prefix);

/// max{ sum 1/a_j : 2 <= a_1 <= ... <= a_N, sum < 1 }, by exhaustive
/// branch-and-bound with the tail bound a <= 1 + 1/(1 - partial).
/// Throws SearchLimitExceeded for N beyond `search_limit`.
Rational compute_bound_BN(int n, int search_limit = 5);

/// All nondecreasing N-tuples with terms in [2, cap] and sum < 1,
/// in lexicographic order.
std::vector<UnitFractionTuple> subunit_prefixes(int n, long long cap);

} // namespace orb
