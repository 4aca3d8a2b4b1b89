#include <orb/curves.hpp>

#include <algorithm>
#include <set>

namespace orb {

const char* to_string(CurveKind k) {
    switch (k) {
        case CurveKind::DeltaRational: return "DeltaRational";
        case CurveKind::DeltaElliptic: return "DeltaElliptic";
        case CurveKind::Neither: return "Neither";
    }
    return "?";
}

const char* to_string(UniruledMethod m) {
    switch (m) {
        case UniruledMethod::FewHyperplanes: return "FewHyperplanes";
        case UniruledMethod::PencilInduction: return "PencilInduction";
        case UniruledMethod::RationalNormalCurve: return "RationalNormalCurve";
        case UniruledMethod::TangentConic: return "TangentConic";
    }
    return "?";
}

const char* to_string(UniruledVerdict::Status s) {
    switch (s) {
        case UniruledVerdict::Status::NotFano: return "NotFano";
        case UniruledVerdict::Status::Provable: return "Provable";
        case UniruledVerdict::Status::Exceptional: return "Exceptional";
    }
    return "?";
}

namespace {

void validate_curve(const MarkedCurve& c, const OrbifoldType& t) {
    if (c.genus < 0) fail("InvalidArgument", "negative genus");
    std::set<std::string> ids;
    for (const auto& r : c.records) {
        if (!ids.insert(r.point_id).second)
            fail("InvalidArgument", "duplicate point id '" + r.point_id + "'");
        if (r.contacts.empty())
            fail("InvalidArgument", "contact record with no contacts");
        std::set<int> divisors;
        for (const auto& [j, order] : r.contacts) {
            if (j < 0 || j >= t.count())
                fail("IndexOutOfRange", "divisor index " + std::to_string(j) +
                                            " outside arrangement of size " +
                                            std::to_string(t.count()));
            if (!divisors.insert(j).second)
                fail("InvalidArgument", "repeated divisor index in one record");
            if (order < 1) fail("InvalidArgument", "contact order must be >= 1");
        }
    }
}

ExtRational contact_weight(const Multiplicity& m, int order, bool virtual_weights) {
    if (m.is_infinite()) return ExtRational::infinity();
    ExtRational w = ExtRational::of(m.value() / Rational(order));
    if (!virtual_weights) w = max(w, ExtRational::of(Rational(1)));
    return w;
}

} // namespace

CurveOrbifoldDivisor delta_g(const MarkedCurve& c, const OrbifoldType& t,
                             bool virtual_weights) {
    validate_curve(c, t);
    CurveOrbifoldDivisor out;
    out.reserve(c.records.size());
    for (const auto& r : c.records) {
        ExtRational w = contact_weight(t.mults()[r.contacts[0].first],
                                       r.contacts[0].second, virtual_weights);
        for (std::size_t i = 1; i < r.contacts.size(); ++i)
            w = max(w, contact_weight(t.mults()[r.contacts[i].first],
                                      r.contacts[i].second, virtual_weights));
        out.push_back({r.point_id, w});
    }
    return out;
}

CurveClass curve_kind(const MarkedCurve& c, const OrbifoldType& t,
                      bool virtual_weights) {
    const CurveOrbifoldDivisor div = delta_g(c, t, virtual_weights);
    Rational degree(2LL * c.genus - 2);
    for (const auto& p : div)
        degree += p.weight.coefficient_term();

    const int sign = degree.sign();
    CurveKind kind = CurveKind::Neither;
    if (sign < 0 && c.genus == 0) kind = CurveKind::DeltaRational;
    else if (sign == 0 && c.genus <= 1) kind = CurveKind::DeltaElliptic;
    return {kind, degree};
}

MarkedCurve rnc_curve(const OrbifoldType& t) {
    const int n = t.dimension();
    if (t.count() != n + 2)
        fail("WrongCount", "rational normal curve needs exactly n+2 hyperplanes");
    MarkedCurve c;
    c.genus = 0;
    c.records.reserve(n + 2);
    for (int j = 0; j < n + 2; ++j)
        c.records.push_back({"a" + std::to_string(j), {{j, n}}});
    return c;
}

bool rnc_actual_check(const OrbifoldType& t) {
    const int n = t.dimension();
    if (t.count() != n + 2)
        fail("WrongCount", "criterion needs exactly n+2 multiplicities");
    Rational s(0);
    for (const auto& m : t.mults()) {
        if (m.is_infinite())
            fail("InfiniteMultiplicity", "criterion needs finite multiplicities");
        const Rational star = std::max(m.value(), Rational(n));
        s += star.reciprocal();
    }
    return s > Rational(1);
}

UniruledVerdict uniruledness_verdict(const OrbifoldType& t) {
    for (const auto& m : t.mults())
        if (!m.is_integral() || m.value() < Rational(2))
            fail("UnsupportedMultiplicity",
                 "verdict needs finite integer multiplicities >= 2, got " + m.str());

    if (classify(t) != CanonicalClass::Fano)
        return {UniruledVerdict::Status::NotFano, std::nullopt};

    const int n = t.dimension();
    const int k = t.count();
    if (k <= n + 1)
        return {UniruledVerdict::Status::Provable, UniruledMethod::FewHyperplanes};
    if (k == n + 2) {
        if (n == 2)
            return {UniruledVerdict::Status::Provable, UniruledMethod::TangentConic};

        // pencil through H_n cap H_{n+1}: drop the second-largest entry
        Rational partial(0);
        std::vector<Multiplicity> reduced;
        reduced.reserve(k - 1);
        for (int j = 0; j < k; ++j) {
            if (j == n) continue;
            partial += t.mults()[j].reciprocal_or_zero();
            reduced.push_back(t.mults()[j]);
        }
        if (partial > Rational(1)) {
            const UniruledVerdict below =
                uniruledness_verdict(OrbifoldType(n - 1, std::move(reduced)));
            if (below.status == UniruledVerdict::Status::Provable)
                return {UniruledVerdict::Status::Provable, UniruledMethod::PencilInduction};
        }

        if (rnc_actual_check(t))
            return {UniruledVerdict::Status::Provable, UniruledMethod::RationalNormalCurve};
    }
    return {UniruledVerdict::Status::Exceptional, std::nullopt};
}

namespace {

Rational inv(long long m) { return Rational(1, m); }

// Largest integer m with r/m > deficit, i.e. m < r/deficit; 0 when none >= 2.
long long last_below(long long r, const Rational& deficit) {
    if (deficit.sign() <= 0) fail("InvalidArgument", "deficit must be positive");
    const Rational bound = Rational(r) / deficit;
    mpz_class q_minus_1 = bound.num() - 1;
    mpz_class m;
    mpz_fdiv_q(m.get_mpz_t(), q_minus_1.get_mpz_t(), bound.den().get_mpz_t());
    return m.get_si();
}

long long ceil_reciprocal(const Rational& deficit) {
    return deficit.reciprocal().ceil().get_si();
}

Rational star_term(long long m) { return inv(std::max(m, 3LL)); }

} // namespace

ExceptionalCensus enumerate_exceptional_p3() {
    // Exceptional on P^3 <=> Fano (sum 1/m_j > 1), pencil fails
    // (sum_{j != 3} 1/m_j <= 1) and the RNC criterion fails
    // (sum 1/max(m_j,3) <= 1). The last two are monotone in the tail m_4,
    // so per 4-prefix the exceptional tails form an interval.
    ExceptionalCensus census;
    const Rational one(1);

    for (long long m0 = 2; m0 < 5; ++m0) {               // 5/m0 > 1
        const Rational s1 = inv(m0);
        const long long m1_max = last_below(4, one - s1); // 1/m0 + 4/m1 > 1
        for (long long m1 = m0; m1 <= m1_max; ++m1) {
            const Rational s2 = s1 + inv(m1);
            if (s2 >= one) {
                // sum_{j != 3} >= 1/m0 + 1/m1 > 1 for every tail: never exceptional
                continue;
            }
            const long long m2_max = last_below(3, one - s2);
            for (long long m2 = m1; m2 <= m2_max; ++m2) {
                const Rational s3 = s2 + inv(m2);
                if (s3 >= one) continue;               // pencil always applies
                const long long m3_max = last_below(2, one - s3);
                const long long pencil_min = ceil_reciprocal(one - s3);
                const Rational star3 = star_term(m0) + star_term(m1) + star_term(m2);
                for (long long m3 = m2; m3 <= m3_max; ++m3) {
                    const Rational s4 = s3 + inv(m3);
                    const Rational star4 = star3 + star_term(m3);
                    if (star4 >= one) continue;        // RNC criterion holds for any tail
                    const long long rnc_min = ceil_reciprocal(one - star4);
                    const long long lower = std::max({m3, pencil_min, rnc_min});
                    if (s4 >= one) {
                        census.families.push_back({{m0, m1, m2, m3}, lower});
                    } else {
                        const long long upper = last_below(1, one - s4);
                        for (long long m4 = lower; m4 <= upper; ++m4)
                            census.sporadic.push_back({m0, m1, m2, m3, m4});
                    }
                }
            }
        }
    }
    return census;
}

OrbifoldType census_type(const std::array<long long, 5>& tuple) {
    return OrbifoldType::integral(3, {tuple.begin(), tuple.end()});
}

NiceFamilyDimension expected_nice_family_dimension(int n, long long d,
                                                   const OrbifoldType& t) {
    if (t.count() > n + 2)
        fail("WrongCount", "dimension count covers at most n+2 hyperplanes");
    if (d < 1) fail("InvalidArgument", "degree must be positive");
    Rational coeff_sum(0);
    for (const auto& m : t.mults()) {
        if (!m.is_integral())
            fail("DivisibilityViolation", "multiplicity " + m.str() + " cannot divide " +
                                              std::to_string(d));
        if (d % m.int_value() != 0)
            fail("DivisibilityViolation", "multiplicity " + m.str() + " does not divide " +
                                              std::to_string(d));
        coeff_sum += m.coefficient();
    }
    const Rational conditions = Rational(d) * coeff_sum;         // Delta . C
    const Rational dim = Rational((n + 1) * d) - conditions;     // -(K+Delta) . C
    return {dim, conditions};
}

} // namespace orb
