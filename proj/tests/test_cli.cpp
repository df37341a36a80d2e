#include "catch2/catch_amalgamated.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "hilmet/cli/app.hpp"

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hilmet");
    std::vector<const char*> argv;
    for (const std::string& s : args) argv.push_back(s.c_str());
    std::ostringstream out, err;
    const int code =
        hilmet::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

double field(const std::string& text, const std::string& key) {
    const std::string tag = key + ": ";
    const std::size_t pos = text.find(tag);
    REQUIRE(pos != std::string::npos);
    return std::strtod(text.c_str() + pos + tag.size(), nullptr);
}

}  // namespace

TEST_CASE("dist on the disk prints the four coincident metrics") {
    const CliResult r = run_cli({"dist", "--ball", "2", "-a", "0,0", "-b", "0.5,0"});
    REQUIRE(r.code == 0);
    for (const char* key : {"h", "rho", "alpha", "delta"})
        CHECK(field(r.out, key) == Catch::Approx(std::log(3.0)).margin(1e-9));
    CHECK(field(r.out, "margin_rho_minus_h") == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("dist on a polygon file") {
    const std::string path = "cli_square_tmp.txt";
    {
        std::ofstream f(path);
        f << "1 1\n-1 1\n-1 -1\n1 -1\n";
    }
    const CliResult r = run_cli({"dist", "--polygon", path, "-a", "0,0", "-b", "0.5,0"});
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "h") == Catch::Approx(std::log(3.0)).margin(1e-9));
    CHECK(field(r.out, "alpha") <= field(r.out, "delta") + 1e-6);
    std::remove(path.c_str());
}

TEST_CASE("dist with identical points returns zero metrics") {
    const CliResult r = run_cli({"dist", "--preset", "square", "-a", "0.25,0.25", "-b", "0.25,0.25"});
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "h") == 0.0);
    CHECK(field(r.out, "alpha") == 0.0);
    CHECK(field(r.out, "delta") == 0.0);
}

TEST_CASE("dist json output carries the same values") {
    const CliResult r = run_cli(
        {"dist", "--ball", "2", "-a", "0,0", "-b", "0.5,0", "--format", "json"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["h"].get<double>() == Catch::Approx(std::log(3.0)).margin(1e-9));
    CHECK(j["rho"].get<double>() == Catch::Approx(std::log(3.0)).margin(1e-9));
    CHECK(j["a"] == nlohmann::json::array({0.0, 0.0}));
}

TEST_CASE("usage and domain errors map to exit codes 2 and 3") {
    CHECK(run_cli({"dist", "--ball", "2", "-a", "zebra", "-b", "0,0"}).code == 2);
    CHECK(run_cli({"dist", "--ball", "2", "-a", "0,0"}).code == 2);             // missing -b
    CHECK(run_cli({"dist", "--ball", "2", "--preset", "square", "-a", "0,0", "-b", "0.1,0"}).code ==
          2);                                                                    // two domains
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"dist", "--ball", "2", "-a", "0,0", "-b", "2,0"}).code == 3);
    CHECK(run_cli({"dist", "--preset", "square", "-a", "0,0", "-b", "1.5,0"}).code == 3);
    const CliResult near = run_cli({"dist", "--ball", "2", "-a", "0,0", "-b", "0.9999999999,0"});
    CHECK(near.code == 3);
    CHECK(near.err.find("b") != std::string::npos);  // message names the offending input
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"dist", "--help"}).code == 0);
}

TEST_CASE("single decimal point syntax is a real axis point") {
    const CliResult r = run_cli({"dist", "--ball", "2", "-a", "0", "-b", "0.5"});
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "h") == Catch::Approx(std::log(3.0)).margin(1e-9));
    // Dimension mismatch is a usage error.
    CHECK(run_cli({"dist", "--ball", "3", "-a", "0,0", "-b", "0.5,0"}).code == 2);
    CHECK(run_cli({"dist", "--ball", "3", "-a", "0", "-b", "0.5"}).code == 0);
}

TEST_CASE("ball subcommand emits csv by default") {
    // Radius log 3 = 2 arth(1/2): the centered Hilbert ball has radius 1/2.
    const CliResult r = run_cli(
        {"ball", "--ball", "2", "-a", "0,0", "-t", "1.0986122886681098", "--ndirs", "16"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "theta,x,y");
    int rows = 0;
    std::string row;
    while (std::getline(lines, row)) {
        double th, x, y;
        REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf", &th, &x, &y) == 3);
        CHECK(std::hypot(x, y) == Catch::Approx(0.5).margin(1e-9));
        ++rows;
    }
    CHECK(rows == 16);
    CHECK(run_cli({"ball", "--ball", "2", "-t", "1", "--ndirs", "4"}).code == 2);
    CHECK(run_cli({"ball", "--ball", "2", "-a", "1.4,0", "-t", "1"}).code == 3);
}

TEST_CASE("ball svg output overlays domain, curve, and guides") {
    const CliResult r = run_cli({"ball", "--preset", "triangle", "-a", "0.05,-0.1", "-t", "0.8",
                                 "--ndirs", "32", "--format", "svg"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("<svg") != std::string::npos);
    CHECK(r.out.find("stroke=\"black\"") != std::string::npos);     // domain
    CHECK(r.out.find("stroke=\"#1f77b4\"") != std::string::npos);   // Hilbert circle
    CHECK(r.out.find("stroke-dasharray") != std::string::npos);     // vertex-center guides
    CHECK(r.err.find("sector_fit_residual") != std::string::npos);
    // Ball domains draw a circle outline instead.
    const CliResult rb =
        run_cli({"ball", "--ball", "2", "-t", "1", "--ndirs", "32", "--format", "svg"});
    REQUIRE(rb.code == 0);
    CHECK(rb.out.find("<circle") != std::string::npos);
}

TEST_CASE("sphere subcommand pinned example") {
    const CliResult r = run_cli({"sphere", "--ball", "2", "-a", "0.5,0", "-R", "1.0986122886681098"});
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "a_min") == Catch::Approx(0.4).margin(1e-9));
    CHECK(field(r.out, "a_max") == Catch::Approx(std::sqrt(0.2)).margin(1e-9));
    CHECK(field(r.out, "surface_distance_residual") < 1e-9);
    CHECK(field(r.out, "sphere_identity_residual") < 1e-10);
    // Centered case in dimension 3.
    const CliResult rc = run_cli({"sphere", "--ball", "3", "-a", "0,0,0", "-R", "2"});
    REQUIRE(rc.code == 0);
    CHECK(field(rc.out, "a_min") == Catch::Approx(std::tanh(1.0)).margin(1e-12));
    CHECK(field(rc.out, "a_max") == Catch::Approx(std::tanh(1.0)).margin(1e-12));
    CHECK(run_cli({"sphere", "--ball", "2", "-a", "1.5,0", "-R", "1"}).code == 3);
    CHECK(run_cli({"sphere", "--preset", "square", "-a", "0,0", "-R", "1"}).code == 2);
}

TEST_CASE("holder subcommand chain and map verification") {
    const CliResult r1 = run_cli({"holder", "-K", "1"});
    REQUIRE(r1.code == 0);
    CHECK(field(r1.out, "c_K") == Catch::Approx(1.0).margin(1e-12));
    CHECK(field(r1.out, "chain_linear_upper") == Catch::Approx(1.0).margin(1e-12));

    const CliResult r2 = run_cli({"holder", "-K", "2"});
    REQUIRE(r2.code == 0);
    const double c2 = field(r2.out, "c_K");
    CHECK(c2 >= 2.6232);
    CHECK(c2 <= 3.3507);

    const CliResult r3 =
        run_cli({"holder", "-K", "2", "--map", "radial-stretch", "--pairs", "2000"});
    REQUIRE(r3.code == 0);
    CHECK(field(r3.out, "min_margin") >= 0.0);
    CHECK(field(r3.out, "pairs") == 2000.0);

    CHECK(run_cli({"holder", "-K", "0.5"}).code == 2);
    CHECK(run_cli({"holder", "-K", "2", "--map", "escher"}).code == 2);
    CHECK(run_cli({"holder", "-K", "1", "--map", "radial-stretch:", "--pairs", "10"}).code == 0);

    const CliResult r4 = run_cli({"holder", "-K", "2", "-a", "0.1,0.2", "-b", "0.3,-0.1"});
    REQUIRE(r4.code == 0);
    CHECK(field(r4.out, "rhs") > 0.0);
}

TEST_CASE("verify subcommand runs suites and is byte deterministic") {
    const CliResult r = run_cli({"verify", "--suite", "special-functions", "--seed", "7"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("suite special-functions: PASS") != std::string::npos);
    CHECK(r.out.find("overall: PASS") != std::string::npos);
    const CliResult r2 = run_cli({"verify", "--suite", "special-functions", "--seed", "7"});
    CHECK(r.out == r2.out);

    const CliResult rj = run_cli(
        {"verify", "--suite", "special-functions", "--seed", "7", "--format", "json"});
    REQUIRE(rj.code == 0);
    const nlohmann::json j = nlohmann::json::parse(rj.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["pass"].get<bool>());
    CHECK(j[0]["suite"] == "special-functions");

    CHECK(run_cli({"verify", "--suite", "no-such-suite"}).code == 2);
}

TEST_CASE("fast randomized suites pass with reduced samples") {
    const CliResult r = run_cli({"verify", "--suite", "functional-identity", "--samples", "2000"});
    REQUIRE(r.code == 0);
    const CliResult r2 = run_cli({"verify", "--suite", "midpoints", "--samples", "500"});
    REQUIRE(r2.code == 0);
}

TEST_CASE("output redirection writes the same bytes to a file") {
    const std::string path = "cli_out_tmp.csv";
    const CliResult direct = run_cli({"ball", "--ball", "2", "-t", "1", "--ndirs", "12"});
    const CliResult redirected =
        run_cli({"ball", "--ball", "2", "-t", "1", "--ndirs", "12", "-o", path});
    REQUIRE(redirected.code == 0);
    CHECK(redirected.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == direct.out);
    std::remove(path.c_str());
    CHECK(run_cli({"ball", "--ball", "2", "-t", "1", "-o", "/nonexistent/dir/x.csv"}).code == 2);
}

TEST_CASE("format validation per subcommand") {
    CHECK(run_cli({"dist", "--ball", "2", "-a", "0,0", "-b", "0.1,0", "--format", "svg"}).code == 2);
    CHECK(run_cli({"ball", "--ball", "2", "-t", "1", "--format", "text"}).code == 2);
    CHECK(run_cli({"holder", "-K", "2", "--format", "csv"}).code == 2);
}
