#pragma once

/**
 * @file fibration.hpp
 * @brief Combinatorial orbifold-base calculus for fibrations and local
 *        generator bookkeeping for sheaves of symmetric differentials.
 *
 * Base multiplicities are infima of t * m over the fiber components lying
 * over a divisor; exceptional components are the caller's business to
 * exclude (this module carries no geometry).
 */

#include <orb/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace orb {

/// One fiber component over a base divisor: multiplicity t in the pullback
/// and the Delta-multiplicity of the component itself.
struct FiberComponentData {
    long long t;          // >= 1
    Multiplicity m_delta; // >= 1 or inf
};

struct BaseDivisorRecord {
    std::string label;
    std::vector<FiberComponentData> components;  // nonempty
};

/// inf over components of t * m_delta (infinite only if every term is).
Multiplicity base_multiplicity(const BaseDivisorRecord& r);

/// Coefficients 1 - 1/m per record; multiplicity-1 records are dropped.
std::vector<std::pair<std::string, Rational>>
orbifold_base(const std::vector<BaseDivisorRecord>& records);

/// One local generator dx^(N): the exponent tuple N (summing to m) and the
/// coordinate denominator exponents floor(a_j * N_j).
struct SymdiffGenerator {
    std::vector<long long> exponents;
    std::vector<long long> denominator_exponents;
};

/// All generators of S^m(Omega^1) for coefficients a in [0,1]^n, in
/// lexicographically decreasing exponent order. Count is C(m+n-1, n-1).
std::vector<SymdiffGenerator> symdiff_generators(const std::vector<Rational>& a,
                                                 long long m);

/// Denominator exponents (floor(a_j * m))_j of the single p = n generator,
/// the m-th power of the orbifold canonical bundle.
std::vector<long long> canonical_power_exponents(const std::vector<Rational>& a,
                                                 long long m);

} // namespace orb
