#include <orb/fibration.hpp>

#include <set>

namespace orb {

Multiplicity base_multiplicity(const BaseDivisorRecord& r) {
    if (r.components.empty())
        fail("InvalidArgument", "record '" + r.label + "' has no components");
    bool have_finite = false;
    Rational best(0);
    for (const auto& c : r.components) {
        if (c.t < 1) fail("InvalidArgument", "component multiplicity t must be >= 1");
        if (c.m_delta.is_infinite()) continue;
        const Rational v = Rational(c.t) * c.m_delta.value();
        if (!have_finite || v < best) {
            best = v;
            have_finite = true;
        }
    }
    return have_finite ? Multiplicity(best) : Multiplicity::infinity();
}

std::vector<std::pair<std::string, Rational>>
orbifold_base(const std::vector<BaseDivisorRecord>& records) {
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& r : records) {
        if (!seen.insert(r.label).second)
            fail("DuplicateLabel", "duplicate divisor label '" + r.label + "'");
        const Rational coeff = base_multiplicity(r).coefficient();
        if (!coeff.is_zero())
            out.emplace_back(r.label, coeff);
    }
    return out;
}

namespace {

void check_coefficients(const std::vector<Rational>& a) {
    for (const auto& c : a)
        if (c < Rational(0) || c > Rational(1))
            fail("InvalidCoefficient", "coefficient outside [0, 1]: " + c.str());
}

long long floor_ll(const Rational& x) { return x.floor().get_si(); }

void gen_recurse(const std::vector<Rational>& a, std::size_t pos, long long left,
                 std::vector<long long>& acc, std::vector<SymdiffGenerator>& out) {
    if (pos + 1 == a.size()) {
        acc[pos] = left;
        SymdiffGenerator g;
        g.exponents = acc;
        g.denominator_exponents.reserve(a.size());
        for (std::size_t j = 0; j < a.size(); ++j)
            g.denominator_exponents.push_back(floor_ll(a[j] * Rational(acc[j])));
        out.push_back(std::move(g));
        return;
    }
    for (long long nj = left; nj >= 0; --nj) {
        acc[pos] = nj;
        gen_recurse(a, pos + 1, left - nj, acc, out);
    }
}

} // namespace

std::vector<SymdiffGenerator> symdiff_generators(const std::vector<Rational>& a,
                                                 long long m) {
    check_coefficients(a);
    if (a.empty()) fail("InvalidArgument", "need at least one coordinate");
    if (m < 1) fail("InvalidArgument", "symmetric power m must be >= 1");
    std::vector<SymdiffGenerator> out;
    std::vector<long long> acc(a.size(), 0);
    gen_recurse(a, 0, m, acc, out);
    return out;
}

std::vector<long long> canonical_power_exponents(const std::vector<Rational>& a,
                                                 long long m) {
    check_coefficients(a);
    if (m < 1) fail("InvalidArgument", "symmetric power m must be >= 1");
    std::vector<long long> out;
    out.reserve(a.size());
    for (const auto& c : a)
        out.push_back(floor_ll(c * Rational(m)));
    return out;
}

} // namespace orb
