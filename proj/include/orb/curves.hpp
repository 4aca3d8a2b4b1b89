#pragma once

/**
 * @file curves.hpp
 * @brief The Delta-rational / Delta-elliptic curve calculus (actual and
 *        virtual), rational-normal-curve criteria, the uniruledness decision
 *        cascade and the exceptional-type census on P^3.
 *
 * A marked curve records where it meets the boundary divisors and with which
 * contact orders. The induced orbifold divisor on the curve assigns each
 * contact point the weight max over touched divisors of max(1, m/t) — or
 * plain m/t in the virtual calculus, where weights may drop below 1.
 */

#include <orb/core.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace orb {

/// Contacts of one curve point: (divisor index, contact order), indices
/// distinct within a record.
struct ContactRecord {
    std::string point_id;
    std::vector<std::pair<int, int>> contacts;
};

/// Genus plus contact records at pairwise distinct points.
struct MarkedCurve {
    int genus = 0;
    std::vector<ContactRecord> records;
};

struct CurvePointWeight {
    std::string point_id;
    ExtRational weight;
};

/// The induced orbifold divisor on the curve; uncontacted points (weight 1)
/// are not listed. Non-virtual weights are >= 1; virtual ones may not be.
using CurveOrbifoldDivisor = std::vector<CurvePointWeight>;

CurveOrbifoldDivisor delta_g(const MarkedCurve& c, const OrbifoldType& t,
                             bool virtual_weights);

enum class CurveKind { DeltaRational, DeltaElliptic, Neither };

const char* to_string(CurveKind k);

struct CurveClass {
    CurveKind kind;
    Rational degree;  // deg(K_C + Delta_g) = 2g - 2 + sum(1 - 1/w), exact
};

/// Classifies by the exact sign of deg(K_C + Delta_g), enforcing the genus
/// constraints: DeltaRational needs genus 0, DeltaElliptic genus <= 1.
CurveClass curve_kind(const MarkedCurve& c, const OrbifoldType& t,
                      bool virtual_weights);

/// The marked curve of a degree-n rational normal curve meeting each of the
/// n+2 hyperplanes in one point with contact order n.
MarkedCurve rnc_curve(const OrbifoldType& t);

/// True iff sum 1/max(m_j, n) > 1, i.e. the RNC is genuinely Delta-rational
/// (not just virtually). Needs k = n+2 and finite multiplicities.
bool rnc_actual_check(const OrbifoldType& t);

enum class UniruledMethod { FewHyperplanes, PencilInduction, RationalNormalCurve, TangentConic };

const char* to_string(UniruledMethod m);

struct UniruledVerdict {
    enum class Status { NotFano, Provable, Exceptional };
    Status status;
    std::optional<UniruledMethod> method;  // set iff Provable
};

const char* to_string(UniruledVerdict::Status s);

/// Decision cascade over the constructive uniruledness arguments:
/// lines through the common center when k <= n+1, tangent conics for n = 2,
/// pencil induction when the sum omitting the second-largest entry exceeds 1,
/// and the rational-normal-curve criterion. Exceptional means none applies.
UniruledVerdict uniruledness_verdict(const OrbifoldType& t);

struct ExceptionalFamily {
    std::array<long long, 4> prefix;
    long long min_tail;  // every tail >= min_tail is exceptional
};

struct ExceptionalCensus {
    std::vector<std::array<long long, 5>> sporadic;  // sum over prefix < 1
    std::vector<ExceptionalFamily> families;         // sum over prefix >= 1
};

/// Exhaustive census of the n = 3 exceptional types, lexicographically
/// ordered; search bounds follow the tail bound behind compute_bound_BN.
ExceptionalCensus enumerate_exceptional_p3();

OrbifoldType census_type(const std::array<long long, 5>& tuple);

struct NiceFamilyDimension {
    Rational expected_dimension;  // -(K_X + Delta) . C, net of reparametrization
    Rational condition_count;     // Delta . C = d * sum(1 - 1/m_j)
};

/// Heuristic dimension count for degree-d rational curves meeting each
/// divisor with contact order exactly m_j; every m_j must divide d.
NiceFamilyDimension expected_nice_family_dimension(int n, long long d,
                                                   const OrbifoldType& t);

} // namespace orb
