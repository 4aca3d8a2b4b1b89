#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orb/cli.hpp>

#include <cstdio>
#include <fstream>

using namespace orb;

namespace {

CommandResult run_cli(std::initializer_list<std::string> args) {
    return run(std::vector<std::string>(args));
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/orbcalc_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("sylvester subcommand reproduces the worked sequence") {
    const CommandResult r = run_cli({"sylvester", "--start", "2", "--steps", "4"});
    CHECK(r.exit_code == 0);
    CHECK(r.payload == Json::parse("[2,3,7,43,1807]"));
}

TEST_CASE("classify emits the bare class name") {
    const CommandResult r = run_cli({"classify", "--n", "2", "--type", "2,3,7,42"});
    CHECK(r.exit_code == 0);
    CHECK(r.payload == Json("TrivialCanonical"));
}

TEST_CASE("uniruled emits a status object") {
    const CommandResult r = run_cli({"uniruled", "--n", "3", "--type", "2,3,7,43,1805"});
    CHECK(r.exit_code == 0);
    CHECK(r.payload.at("status") == "Exceptional");

    const CommandResult p = run_cli({"uniruled", "--n", "2", "--type", "2,3,7,41"});
    CHECK(p.payload.at("status") == "Provable");
    CHECK(p.payload.at("method") == "TangentConic");
}

TEST_CASE("bound-bn emits the exact rational") {
    CHECK(run_cli({"bound-bn", "--n", "3"}).payload == Json("41/42"));
}

TEST_CASE("enumerate lists tuples in lexicographic order") {
    const CommandResult r = run_cli({"enumerate", "--n", "2", "--cap", "4"});
    CHECK(r.payload == Json::parse("[[2,3],[2,4],[3,3],[3,4],[4,4]]"));
}

TEST_CASE("census payload carries sporadic tuples and families") {
    const CommandResult r = run_cli({"census"});
    CHECK(r.exit_code == 0);
    const auto& sporadic = r.payload.at("sporadic");
    CHECK(!sporadic.empty());
    bool found = false;
    for (const auto& t : sporadic) found = found || t == Json::parse("[2,3,7,43,1805]");
    CHECK(found);
    bool family = false;
    for (const auto& f : r.payload.at("families"))
        family = family || (f.at("prefix") == Json::parse("[2,3,7,42]") &&
                            f.at("min_tail") == 42);
    CHECK(family);
}

TEST_CASE("curve-check reads the documented JSON shape") {
    const TempFile curve("conic.json", R"({
      "genus": 0,
      "contacts": [
        {"point": "p0", "pairs": [[0, 2]]},
        {"point": "p1", "pairs": [[1, 2]]},
        {"point": "p2", "pairs": [[2, 2]]},
        {"point": "p3", "pairs": [[3, 2]]}
      ]
    })");
    const CommandResult r = run_cli(
        {"curve-check", "--curve", curve.path, "--n", "2", "--type", "2,3,7,41"});
    CHECK(r.exit_code == 0);
    CHECK(r.payload.at("kind") == "DeltaRational");
    CHECK(r.payload.at("degree") == "-1/861");
    CHECK(r.payload.at("divisor").size() == 4);
}

TEST_CASE("orbifold-base reads records and emits coefficients") {
    const TempFile records("records.json", R"([
      {"label": "A", "components": [{"t": 2, "m": 1}, {"t": 3, "m": 1}]},
      {"label": "B", "components": [{"t": 2, "m": "inf"}]},
      {"label": "C", "components": [{"t": 1, "m": 1}]}
    ])");
    const CommandResult r = run_cli({"orbifold-base", "--records", records.path});
    CHECK(r.exit_code == 0);
    CHECK(r.payload == Json::parse(R"([
      {"label": "A", "coefficient": "1/2"},
      {"label": "B", "coefficient": 1}
    ])"));
}

TEST_CASE("symdiff emits generators or the top power") {
    const CommandResult gens = run_cli({"symdiff", "--a", "1/2,0", "--m", "2"});
    CHECK(gens.payload.size() == 3);
    CHECK(gens.payload[0] == Json::parse(R"({"N":[2,0],"denominator_exponents":[1,0]})"));
    const CommandResult top = run_cli({"symdiff", "--a", "2/3,1/2", "--m", "6", "--top"});
    CHECK(top.payload == Json::parse("[4,3]"));
}

TEST_CASE("rnc-solve runs end to end from files") {
    const TempFile arr("arr.json", R"({
      "n": 2,
      "hyperplanes": [["1","0","0"],["0","1","0"],["0","0","1"],["1","1","1"]],
      "mults": [2, 3, 7, 41]
    })");
    const CommandResult r = run_cli({"rnc-solve", "--arrangement", arr.path, "--point",
                                     "1:1:1", "--seed", "5"});
    CHECK(r.exit_code == 0);
    CHECK(r.payload.at("verification").at("pass") == true);
}

TEST_CASE("domain errors surface as structured payloads with exit 1") {
    const CommandResult r = run_cli({"uniruled", "--n", "2", "--type", "2,3,7,inf"});
    CHECK(r.exit_code == 1);
    CHECK(r.payload.at("status") == "error");
    CHECK(r.payload.at("code") == "UnsupportedMultiplicity");

    const CommandResult bad_file = run_cli({"rnc-solve", "--arrangement",
                                            "/nonexistent.json", "--point", "1:1:1"});
    CHECK(bad_file.exit_code == 1);
    CHECK(bad_file.payload.at("code") == "IoError");

    const CommandResult deficit = run_cli({"sylvester", "--start", "2,2", "--steps", "1"});
    CHECK(deficit.exit_code == 1);
    CHECK(deficit.payload.at("code") == "NotDeficitForm");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"no-such-command"}).exit_code == 2);
    CHECK(run_cli({"classify"}).exit_code == 2);  // missing --n
    CHECK(run_cli({}).exit_code == 2);
}

TEST_CASE("paper-tables is byte-identical across runs with the same seed") {
    const CommandResult a = run_cli({"paper-tables", "--seed", "42"});
    const CommandResult b = run_cli({"paper-tables", "--seed", "42"});
    REQUIRE(a.exit_code == 0);
    CHECK(render_payload(a.payload, false) == render_payload(b.payload, false));
    CHECK(a.payload.at("census_p3").at("sporadic_count").get<int>() > 0);
    CHECK(a.payload.at("rnc_instances").at("n2").at("verification").at("pass") == true);
    CHECK(a.payload.at("rnc_instances").at("n3").at("verification").at("pass") == true);
    bool has_157 = false;
    for (const auto& seq : a.payload.at("sylvester_sequences"))
        has_157 = has_157 || seq == Json::parse("[3,3,4,13,157]");
    CHECK(has_157);
    CHECK(a.payload.at("tangent_conic_2_3_7_41").at("degree") == "-1/861");
}

TEST_CASE("tsv projection is line-oriented") {
    const std::string tsv = render_payload(Json::parse("[[2,3],[4,5]]"), true);
    CHECK(tsv == "2\t3\n4\t5\n");
    const std::string obj = render_payload(Json::parse(R"({"a": 1, "b": "x"})"), true);
    CHECK(obj == "a\t1\nb\tx\n");
}

TEST_CASE("out flag is captured for the driver") {
    const CommandResult r = run_cli({"--out", "/tmp/orbcalc_out.json", "bound-bn", "--n", "1"});
    CHECK(r.out_file == "/tmp/orbcalc_out.json");
    CHECK(r.payload == Json("1/2"));
}
