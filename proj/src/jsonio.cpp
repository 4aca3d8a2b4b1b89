#include <orb/jsonio.hpp>

#include <cstdio>
#include <sstream>

namespace orb {

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    fail("ParseError", "expected integer or \"p/q\" string, got " + j.dump());
}

Multiplicity multiplicity_from_json(const Json& j) {
    if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "infinity"))
        return Multiplicity::infinity();
    return Multiplicity(rational_from_json(j));
}

ArrangementOrbifold arrangement_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("hyperplanes") || !j.contains("mults"))
        fail("ParseError", "arrangement needs fields n, hyperplanes, mults");
    const int n = j.at("n").get<int>();
    std::vector<RatVec> planes;
    for (const auto& row : j.at("hyperplanes")) {
        RatVec covector;
        for (const auto& e : row) covector.push_back(rational_from_json(e));
        planes.push_back(std::move(covector));
    }
    std::vector<Multiplicity> mults;
    for (const auto& m : j.at("mults")) mults.push_back(multiplicity_from_json(m));
    return ArrangementOrbifold(n, std::move(planes), std::move(mults));
}

MarkedCurve curve_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("contacts"))
        fail("ParseError", "curve needs fields genus, contacts");
    MarkedCurve c;
    c.genus = j.at("genus").get<int>();
    for (const auto& rec : j.at("contacts")) {
        ContactRecord r;
        r.point_id = rec.at("point").get<std::string>();
        for (const auto& pair : rec.at("pairs")) {
            if (!pair.is_array() || pair.size() != 2)
                fail("ParseError", "contact pair must be [divisor, order]");
            r.contacts.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
        c.records.push_back(std::move(r));
    }
    return c;
}

std::vector<BaseDivisorRecord> base_records_from_json(const Json& j) {
    if (!j.is_array()) fail("ParseError", "expected an array of divisor records");
    std::vector<BaseDivisorRecord> out;
    for (const auto& rec : j) {
        BaseDivisorRecord r;
        r.label = rec.at("label").get<std::string>();
        for (const auto& comp : rec.at("components")) {
            FiberComponentData c{comp.at("t").get<long long>(),
                                 multiplicity_from_json(comp.at("m"))};
            r.components.push_back(std::move(c));
        }
        out.push_back(std::move(r));
    }
    return out;
}

RatVec point_from_string(const std::string& s) {
    RatVec out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ':')) out.push_back(Rational::parse(part));
    if (out.empty()) fail("ParseError", "empty point literal");
    return out;
}

std::vector<Multiplicity> mults_from_string(const std::string& s) {
    std::vector<Multiplicity> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(Multiplicity::parse(part));
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json to_json(const Rational& r) {
    if (r.is_integer() && r.num().fits_slong_p()) return r.num().get_si();
    return r.str();
}

Json to_json(const Multiplicity& m) {
    if (m.is_infinite()) return "inf";
    return to_json(m.value());
}

Json to_json(const ExtRational& e) {
    if (e.is_infinite()) return "inf";
    return to_json(e.value());
}

Json to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json to_json(const cdouble& z) {
    return Json::array({format_double(z.real()), format_double(z.imag())});
}

Json to_json(const UnitFractionTuple& t) {
    Json arr = Json::array();
    for (const auto& term : t.terms()) arr.push_back(to_json(term));
    return arr;
}

Json to_json(const ExceptionalCensus& c) {
    Json out;
    Json sporadic = Json::array();
    for (const auto& tuple : c.sporadic)
        sporadic.push_back(Json(tuple));
    Json families = Json::array();
    for (const auto& f : c.families)
        families.push_back(Json{{"prefix", f.prefix}, {"min_tail", f.min_tail}});
    out["sporadic"] = std::move(sporadic);
    out["families"] = std::move(families);
    return out;
}

Json to_json(const CurveOrbifoldDivisor& d) {
    Json arr = Json::array();
    for (const auto& p : d)
        arr.push_back(Json{{"point", p.point_id}, {"weight", to_json(p.weight)}});
    return arr;
}

Json to_json(const UniruledVerdict& v) {
    Json out;
    out["status"] = to_string(v.status);
    if (v.method) out["method"] = to_string(*v.method);
    return out;
}

namespace {

Json poly_json(const std::vector<cdouble>& coeffs) {
    Json arr = Json::array();
    for (const auto& c : coeffs) arr.push_back(to_json(c));
    return arr;
}

} // namespace

Json to_json(const RncSolution& s) {
    Json out;
    Json a = Json::array(), b = Json::array();
    for (const auto& v : s.a) a.push_back(to_json(v));
    for (const auto& v : s.b) b.push_back(to_json(v));
    out["a"] = std::move(a);
    out["b"] = std::move(b);
    Json polys = Json::array(), input_polys = Json::array();
    for (const auto& p : s.coordinate_polynomials) polys.push_back(poly_json(p));
    for (const auto& p : s.input_coordinate_polynomials) input_polys.push_back(poly_json(p));
    out["coordinate_polynomials"] = std::move(polys);
    out["input_coordinate_polynomials"] = std::move(input_polys);
    out["residual_report"] = format_double(s.residual_report);
    out["real_curve"] = s.real_curve;
    out["restarts_used"] = s.restarts_used;
    out["newton_iterations"] = s.newton_iterations;
    return out;
}

Json to_json(const VerifyReport& r) {
    Json out;
    out["pass"] = r.pass;
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name},
                              {"pass", c.pass},
                              {"value", format_double(c.value)},
                              {"bound", format_double(c.bound)}});
    out["checks"] = std::move(checks);
    return out;
}

} // namespace orb
