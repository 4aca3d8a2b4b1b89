#include <orb/cli.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace orb {

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IoError", "cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        fail("ParseError", std::string("bad JSON in ") + path + ": " + e.what());
    }
}

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoll(part));
        } catch (const std::exception&) {
            fail("ParseError", "bad integer list entry: " + part);
        }
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(Rational::parse(part));
    return out;
}

ArrangementOrbifold standard_arrangement(int n, const std::vector<long long>& mults) {
    std::vector<RatVec> covectors;
    for (int j = 0; j <= n; ++j) {
        RatVec e(n + 1, Rational(0));
        e[j] = Rational(1);
        covectors.push_back(std::move(e));
    }
    covectors.emplace_back(n + 1, Rational(1));
    std::vector<Multiplicity> ms;
    for (long long m : mults) ms.emplace_back(m);
    return ArrangementOrbifold(n, std::move(covectors), std::move(ms));
}

Json paper_tables(std::uint64_t seed) {
    Json doc;

    Json sequences = Json::array();
    sequences.push_back(to_json(sylvester_extend(UnitFractionTuple::of({2}), 4)));
    sequences.push_back(to_json(sylvester_extend(UnitFractionTuple::of({3, 3}), 3)));
    sequences.push_back(to_json(sylvester_extend(UnitFractionTuple::of({4, 4, 4}), 3)));
    doc["sylvester_sequences"] = std::move(sequences);

    Json bounds;
    for (int n = 1; n <= 4; ++n)
        bounds[std::to_string(n)] = to_json(compute_bound_BN(n));
    doc["bound_bn"] = std::move(bounds);

    const ExceptionalCensus census = enumerate_exceptional_p3();
    Json census_summary;
    census_summary["sporadic_count"] = census.sporadic.size();
    census_summary["family_count"] = census.families.size();
    Json sporadic_head = Json::array();
    for (std::size_t i = 0; i < census.sporadic.size() && i < 3; ++i)
        sporadic_head.push_back(Json(census.sporadic[i]));
    Json family_head = Json::array();
    for (std::size_t i = 0; i < census.families.size() && i < 3; ++i)
        family_head.push_back(Json{{"prefix", census.families[i].prefix},
                                   {"min_tail", census.families[i].min_tail}});
    census_summary["sporadic_first"] = std::move(sporadic_head);
    census_summary["families_first"] = std::move(family_head);
    census_summary["largest_sporadic_tail"] =
        census.sporadic.empty() ? 0 : census.sporadic.back()[4];
    doc["census_p3"] = std::move(census_summary);

    const OrbifoldType conic_type = OrbifoldType::integral(2, {2, 3, 7, 41});
    const CurveClass conic = curve_kind(rnc_curve(conic_type), conic_type, false);
    doc["tangent_conic_2_3_7_41"] =
        Json{{"degree", to_json(conic.degree)}, {"kind", to_string(conic.kind)}};

    Json instances;
    const std::vector<std::vector<long long>> instance_mults = {{2, 3, 7, 41},
                                                                {3, 3, 4, 13, 155}};
    for (const auto& mults : instance_mults) {
        const int n = static_cast<int>(mults.size()) - 2;
        const ArrangementOrbifold arr = standard_arrangement(n, mults);
        const RatVec point(n + 1, Rational(1));
        SolverConfig cfg;
        cfg.rng_seed = seed;
        const RncSolution sol = solve_rnc(arr, point, cfg);
        const VerifyReport report = verify_rnc(sol, arr, point, 1e-8);
        instances["n" + std::to_string(n)] =
            Json{{"solution", to_json(sol)}, {"verification", to_json(report)}};
    }
    doc["rnc_instances"] = std::move(instances);
    return doc;
}

void project_tsv(const Json& j, std::ostream& os) {
    auto scalar = [](const Json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (j.is_array()) {
        for (const auto& row : j) {
            if (row.is_array()) {
                std::string sep;
                for (const auto& cell : row) {
                    os << sep << (cell.is_structured() ? cell.dump() : scalar(cell));
                    sep = "\t";
                }
                os << "\n";
            } else if (row.is_object()) {
                std::string sep;
                for (const auto& [key, value] : row.items()) {
                    os << sep << (value.is_structured() ? value.dump() : scalar(value));
                    sep = "\t";
                }
                os << "\n";
            } else {
                os << scalar(row) << "\n";
            }
        }
    } else if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            os << key << "\t" << (value.is_structured() ? value.dump() : scalar(value)) << "\n";
    } else {
        os << scalar(j) << "\n";
    }
}

} // namespace

std::string render_payload(const Json& payload, bool tsv) {
    std::ostringstream os;
    if (tsv)
        project_tsv(payload, os);
    else
        os << payload.dump(2) << "\n";
    return os.str();
}

CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;

    CLI::App app{"orbcalc: hyperplane-arrangement orbifold calculator"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--tsv", result.tsv, "project the JSON payload to tab-separated text");
    app.add_option("--out", result.out_file, "write the payload to a file instead of stdout");

    // shared option storage; each subcommand wires what it needs
    int n = 0;
    std::string type_list, start_list, point_str, coeff_list;
    std::string curve_file, arrangement_file, records_file;
    int steps = 1;
    long long cap = 0, sym_power = 1;
    int bn_limit = 5;
    bool virtual_weights = false, top_power = false;
    double tol = 1e-8;
    std::uint64_t seed = 42;
    SolverConfig solver_cfg;

    std::function<Json()> action;

    auto* classify_cmd = app.add_subcommand("classify", "canonical-degree sign of a type");
    classify_cmd->add_option("--n", n, "projective dimension")->required();
    classify_cmd->add_option("--type", type_list, "comma-separated multiplicities, inf allowed");
    classify_cmd->callback([&] {
        action = [&]() -> Json {
            const OrbifoldType t(n, mults_from_string(type_list));
            return to_string(classify(t));
        };
    });

    auto* uniruled_cmd = app.add_subcommand("uniruled", "uniruledness decision for a type");
    uniruled_cmd->add_option("--n", n, "projective dimension")->required();
    uniruled_cmd->add_option("--type", type_list, "comma-separated integer multiplicities")
        ->required();
    uniruled_cmd->callback([&] {
        action = [&]() -> Json {
            const OrbifoldType t(n, mults_from_string(type_list));
            return to_json(uniruledness_verdict(t));
        };
    });

    auto* sylvester_cmd = app.add_subcommand("sylvester", "extend a unit-fraction tuple");
    sylvester_cmd->add_option("--start", start_list, "comma-separated starting terms")
        ->required();
    sylvester_cmd->add_option("--steps", steps, "number of terms to append")->required();
    sylvester_cmd->callback([&] {
        action = [&]() -> Json {
            const UnitFractionTuple t = UnitFractionTuple::of(parse_int_list(start_list));
            return to_json(sylvester_extend(t, steps));
        };
    });

    auto* bn_cmd = app.add_subcommand("bound-bn", "largest sum of N unit fractions below 1");
    bn_cmd->add_option("--n", n, "tuple length N")->required();
    bn_cmd->add_option("--limit", bn_limit, "search limit (default 5)");
    bn_cmd->callback([&] {
        action = [&]() -> Json { return to_json(compute_bound_BN(n, bn_limit)); };
    });

    auto* enum_cmd = app.add_subcommand("enumerate", "nondecreasing tuples with sum below 1");
    enum_cmd->add_option("--n", n, "tuple length")->required();
    enum_cmd->add_option("--cap", cap, "largest allowed term")->required();
    enum_cmd->callback([&] {
        action = [&]() -> Json {
            Json arr = Json::array();
            for (const auto& t : subunit_prefixes(n, cap)) arr.push_back(to_json(t));
            return arr;
        };
    });

    auto* census_cmd = app.add_subcommand("census", "exceptional types on P^3");
    census_cmd->callback([&] {
        action = [&]() -> Json { return to_json(enumerate_exceptional_p3()); };
    });

    auto* curve_cmd = app.add_subcommand("curve-check", "classify a marked curve for a type");
    curve_cmd->add_option("--curve", curve_file, "marked-curve JSON file")->required();
    curve_cmd->add_option("--n", n, "projective dimension")->required();
    curve_cmd->add_option("--type", type_list, "comma-separated multiplicities")->required();
    curve_cmd->add_flag("--virtual", virtual_weights, "use the virtual weight m/t");
    curve_cmd->callback([&] {
        action = [&]() -> Json {
            const MarkedCurve c = curve_from_json(read_json_file(curve_file));
            const OrbifoldType t(n, mults_from_string(type_list));
            const CurveClass cls = curve_kind(c, t, virtual_weights);
            return Json{{"kind", to_string(cls.kind)},
                        {"degree", to_json(cls.degree)},
                        {"divisor", to_json(delta_g(c, t, virtual_weights))}};
        };
    });

    auto* rnc_cmd = app.add_subcommand("rnc-solve", "rational normal curve through a point");
    rnc_cmd->add_option("--arrangement", arrangement_file, "arrangement JSON file")->required();
    rnc_cmd->add_option("--point", point_str, "homogeneous point p0:p1:...:pn")->required();
    rnc_cmd->add_option("--tol", tol, "verification tolerance (default 1e-8)");
    rnc_cmd->add_option("--seed", solver_cfg.rng_seed, "solver RNG seed");
    rnc_cmd->add_option("--restarts", solver_cfg.max_restarts, "max randomized restarts");
    rnc_cmd->callback([&] {
        action = [&]() -> Json {
            const ArrangementOrbifold arr =
                arrangement_from_json(read_json_file(arrangement_file));
            const RatVec point = point_from_string(point_str);
            const RncSolution sol = solve_rnc(arr, point, solver_cfg);
            const VerifyReport report = verify_rnc(sol, arr, point, tol);
            return Json{{"solution", to_json(sol)}, {"verification", to_json(report)}};
        };
    });

    auto* base_cmd = app.add_subcommand("orbifold-base", "orbifold base of a fibration");
    base_cmd->add_option("--records", records_file, "divisor records JSON file")->required();
    base_cmd->callback([&] {
        action = [&]() -> Json {
            const auto records = base_records_from_json(read_json_file(records_file));
            Json arr = Json::array();
            for (const auto& [label, coeff] : orbifold_base(records))
                arr.push_back(Json{{"label", label}, {"coefficient", to_json(coeff)}});
            return arr;
        };
    });

    auto* sym_cmd = app.add_subcommand("symdiff", "symmetric differential generators");
    sym_cmd->add_option("--a", coeff_list, "comma-separated coefficients in [0,1]")->required();
    sym_cmd->add_option("--m", sym_power, "symmetric power")->required();
    sym_cmd->add_flag("--top", top_power, "only the p = n canonical-power exponents");
    sym_cmd->callback([&] {
        action = [&]() -> Json {
            const std::vector<Rational> a = parse_rational_list(coeff_list);
            if (top_power) return Json(canonical_power_exponents(a, sym_power));
            Json arr = Json::array();
            for (const auto& g : symdiff_generators(a, sym_power))
                arr.push_back(Json{{"N", g.exponents},
                                   {"denominator_exponents", g.denominator_exponents}});
            return arr;
        };
    });

    auto* tables_cmd = app.add_subcommand("paper-tables", "worked example values, reproducibly");
    tables_cmd->add_option("--seed", seed, "RNG seed for the solver instances");
    tables_cmd->callback([&] { action = [&]() -> Json { return paper_tables(seed); }; });

    std::vector<const char*> argv;
    argv.push_back("orbcalc");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        result.raw_text = app.help();
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.payload = Json{{"status", "error"},
                              {"code", "Usage"},
                              {"message", e.what()}};
        result.diagnostics.push_back(app.help());
        result.exit_code = 2;
        return result;
    }

    try {
        result.payload = action();
        result.exit_code = 0;
    } catch (const DomainError& e) {
        result.payload = Json{{"status", "error"},
                              {"code", e.code()},
                              {"message", e.what()}};
        result.exit_code = 1;
    } catch (const std::exception& e) {
        result.payload = Json{{"status", "error"},
                              {"code", "Internal"},
                              {"message", e.what()}};
        result.exit_code = 1;
    }
    return result;
}

} // namespace orb
