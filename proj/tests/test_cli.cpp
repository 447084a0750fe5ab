#include <doctest.h>

#include "jradii/certificate.hpp"
#include "jradii/cli.hpp"
#include "jradii/gsb.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jradii;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "jradii_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("radii subcommand prints exact forms") {
    CliResult r = cli({"radii", "--shape", "simplex", "--j", "3", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "sqrt(3/4)"));
    CHECK(contains(r.out, "[Exact]"));
    CHECK(contains(r.out, "0.866025403784"));

    CliResult cross = cli({"radii", "--shape", "cross", "--j", "2", "--d", "5"});
    CHECK(cross.code == 0);
    CHECK(contains(cross.out, "sqrt(2/5)"));
    CHECK(contains(cross.out, "[Exact]"));

    CliResult bound = cli({"radii", "--shape", "simplex", "--j", "5", "--d", "10"});
    CHECK(bound.code == 0);
    CHECK(contains(bound.out, ">= sqrt(5/11)"));
    CHECK(contains(bound.out, "LowerBoundOnly"));

    // exact rational semi-axes: R_2(X_(1/3,1/4,1/5)) = 1/5
    CliResult rx = cli({"radii", "--shape", "cross", "--j", "2", "--a", "1/3,1/4,1/5"});
    CHECK(rx.code == 0);
    CHECK(contains(rx.out, "sqrt(1/25)"));
    CHECK(contains(rx.out, "0.200000000000"));
}

TEST_CASE("radii usage errors exit 2") {
    CHECK(cli({"radii", "--shape", "pyramid", "--j", "1", "--d", "2"}).code == 2);
    CHECK(cli({"radii", "--shape", "simplex", "--j", "4", "--d", "3"}).code == 2);
    CHECK(cli({"radii", "--shape", "simplex", "--j", "1"}).code == 2);
    CHECK(cli({"radii", "--shape", "simplex", "--j", "1", "--d", "3", "--a", "1,2"}).code == 2);
    CHECK(cli({"radii", "--shape", "box", "--j", "1", "--a", "1,oops"}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
}

TEST_CASE("table matches the golden rendering at max-d 16") {
    CliResult r = cli({"table", "--max-d", "16"});
    CHECK(r.code == 0);
    const std::string golden = slurp(fs::path(JRADII_TEST_DATA_DIR) / "table_d16.txt");
    REQUIRE(!golden.empty());
    CHECK(r.out == golden);
}

TEST_CASE("table small grids") {
    CliResult r4 = cli({"table", "--max-d", "4"});
    CHECK(r4.code == 0);
    CHECK(contains(r4.out, "   1 |   +   -   +   -"));

    CliResult r2 = cli({"table", "--max-d", "2"});
    CHECK(r2.code == 0);
    CHECK(contains(r2.out, "   1 |   +   -"));
    CHECK(contains(r2.out, "   2 |       +"));

    CHECK(cli({"table", "--max-d", "1"}).code == 2);
    CHECK(cli({"table", "--max-d", "201"}).code == 2);
}

TEST_CASE("gsb writes a verifiable certificate") {
    fs::path cert = temp_file("gsb_2_5.json");
    CliResult r = cli({"gsb", "--j", "2", "--d", "5", "--out", cert.string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "recipe:"));
    CHECK(contains(r.out, "projected circumradius"));

    CliResult v = cli({"verify", cert.string()});
    CHECK(v.code == 0);
    CHECK(contains(v.out, "PASS"));
}

TEST_CASE("gsb existence-negative verdicts exit 1") {
    fs::path cert = temp_file("never.json");
    CliResult even = cli({"gsb", "--j", "1", "--d", "4", "--out", cert.string()});
    CHECK(even.code == 1);
    CHECK(contains(even.out, "NotExists"));

    CliResult open = cli({"gsb", "--j", "6", "--d", "12", "--out", cert.string()});
    CHECK(open.code == 1);
    CHECK(contains(open.out, "Unknown"));

    CliResult conj = cli({"gsb", "--j", "5", "--d", "10", "--out", cert.string()});
    CHECK(conj.code == 1);
    CHECK(contains(conj.out, "ConjecturedNo"));
}

TEST_CASE("gsb write failure exits 3") {
    CliResult r = cli({"gsb", "--j", "2", "--d", "5", "--out", "/nonexistent-dir/x.json"});
    CHECK(r.code == 3);
}

TEST_CASE("verify flags a perturbed certificate") {
    fs::path cert = temp_file("gsb_3_5.json");
    REQUIRE(cli({"gsb", "--j", "3", "--d", "5", "--out", cert.string()}).code == 0);
    Certificate c = load_certificate(cert.string());
    c.basis(0, 0) += 1e-3;
    fs::path bad = temp_file("gsb_3_5_bad.json");
    save_certificate(c, bad.string());
    CliResult r = cli({"verify", bad.string()});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "column square-sum"));
    CHECK(contains(r.out, "FAIL"));
}

TEST_CASE("verify rejects malformed certificates with exit 2") {
    fs::path junk = temp_file("junk.json");
    std::ofstream(junk) << "{ this is not json";
    CHECK(cli({"verify", junk.string()}).code == 2);

    fs::path missing = temp_file("missing.json");
    std::ofstream(missing) << "{\"schema_version\":1,\"j\":2,\"d\":5}";
    CHECK(cli({"verify", missing.string()}).code == 2);

    CHECK(cli({"verify", "/no/such/file.json"}).code == 3);
}

TEST_CASE("a hand-written alternating certificate verifies") {
    fs::path cert = temp_file("hand.json");
    std::ofstream(cert) << R"({
      "schema_version": 1,
      "j": 1,
      "d": 3,
      "basis": [[0.5, -0.5, 0.5, -0.5]],
      "recipe": [{"rule": "dim1", "args": [3]}],
      "residuals": {"orthonormality": 0.0, "row_sum": 0.0, "column_square_sum": 0.0}
    })";
    CliResult r = cli({"verify", cert.string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "PASS"));
}

TEST_CASE("certificate round trip across the existence sweep (d <= 20)") {
    for (int d = 1; d <= 20; ++d) {
        for (int j = 1; j <= d; ++j) {
            if (exists_gsb(j, d).verdict != Verdict::Exists) continue;
            fs::path cert = temp_file("sweep.json");
            CAPTURE(j);
            CAPTURE(d);
            REQUIRE(cli({"gsb", "--j", std::to_string(j), "--d", std::to_string(d), "--out",
                         cert.string()})
                        .code == 0);
            REQUIRE(cli({"verify", cert.string()}).code == 0);
        }
    }
}

TEST_CASE("recipes in certificates replay to the same span") {
    fs::path cert = temp_file("replay.json");
    REQUIRE(cli({"gsb", "--j", "4", "--d", "9", "--out", cert.string()}).code == 0);
    Certificate c = load_certificate(cert.string());
    SubsetBasis replayed = replay_recipe(c.recipe);
    Mat pa = replayed.projection_matrix();
    Mat pb = c.basis.transpose() * c.basis;
    CHECK((pa - pb).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("search reports radius, reference and bound") {
    CliResult r = cli({"search", "--shape", "box", "--j", "1", "--a", "1,2,3", "--restarts",
                       "8", "--iterations", "600", "--seed", "0"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "best radius = 1.000"));
    CHECK(contains(r.out, "reference"));

    // deterministic under a fixed seed
    CliResult again = cli({"search", "--shape", "box", "--j", "1", "--a", "1,2,3", "--restarts",
                           "8", "--iterations", "600", "--seed", "0"});
    CHECK(again.out == r.out);

    CliResult oversize = cli({"search", "--shape", "simplex", "--j", "2", "--d", "40"});
    CHECK(oversize.code == 2);

    CliResult bad_out = cli({"search", "--shape", "box", "--j", "1", "--a", "1,2", "--out",
                             temp_file("nope.json").string()});
    CHECK(bad_out.code == 2);
}

TEST_CASE("search can record its best simplex frame as a certificate") {
    fs::path cert = temp_file("search_1_2.json");
    CliResult r = cli({"search", "--shape", "simplex", "--j", "1", "--d", "2", "--restarts", "6",
                       "--iterations", "400", "--seed", "3", "--out", cert.string()});
    CHECK(r.code == 0);
    Certificate c = load_certificate(cert.string());
    REQUIRE(c.recipe.size() == 1);
    CHECK(c.recipe[0].rule == "search");
    SubsetBasis replayed = replay_recipe(c.recipe);
    Mat pa = replayed.projection_matrix();
    Mat pb = c.basis.transpose() * c.basis;
    CHECK((pa - pb).cwiseAbs().maxCoeff() <= 1e-9);
    // an optimal-width frame for the triangle is not a gsb, so verification
    // honestly fails
    CHECK(cli({"verify", cert.string()}).code == 1);
}

TEST_SUITE_END();
