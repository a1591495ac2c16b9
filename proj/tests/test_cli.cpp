#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qconcept/config.hpp"
#include "run_cli.hpp"

using namespace qconcept;
using namespace qconcept::testing;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// Parses a CSV body into a column-name -> values map.
std::pair<std::vector<std::string>, std::vector<std::vector<double>>> parse_csv(
    const std::string& body) {
    std::istringstream in(body);
    std::string line;
    REQUIRE(std::getline(in, line));
    std::vector<std::string> headers;
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) headers.push_back(cell);
    std::vector<std::vector<double>> columns(headers.size());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::size_t i = 0;
        while (std::getline(ls, cell, ',')) columns.at(i++).push_back(std::stod(cell));
    }
    return {headers, columns};
}

}  // namespace

TEST_CASE("classify reproduces the worked example") {
    const auto r = run_cli("classify --config " + paper_config_path());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "boat"));
    CHECK(contains(r.output, "0.536256    0.500000"));
    CHECK(contains(r.output, "winner: TIE{boat,car}"));
}

TEST_CASE("classify json output re-parses under the config validator") {
    const auto r = run_cli("classify --config " + paper_config_path() + " --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    // Round-trip: the embedded config must validate against the schema.
    const concept_config cfg = validate_config(doc.at("config"));
    CHECK(cfg.concepts.size() == 2);
    CHECK(doc.at("result").at("tie").get<bool>());
    for (const auto& e : doc.at("result").at("entries"))
        CHECK(e.at("probability").get<double>() == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("classify with an object equal to the concept") {
    const auto path = write_temp_config(
        "single", R"({"concepts":[{"name":"car","mu":5,"sigma":1}]})");
    const auto r = run_cli("classify --config " + path + " --mu 5 --sigma 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "1.000000"));
    CHECK(contains(r.output, "winner: car"));
}

TEST_CASE("invalid sigma is a validation failure naming the entry") {
    const auto path = write_temp_config(
        "bad_sigma", R"({"concepts":[{"name":"car","mu":5,"sigma":-1}]})");
    const auto r = run_cli("classify --config " + path);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "car"));
    CHECK(contains(r.output, "sigma"));
}

TEST_CASE("unknown config keys are rejected") {
    const auto path = write_temp_config(
        "unknown", R"({"concepts":[{"name":"car","mu":5,"sigma":1}],"sigmas":2})");
    const auto r = run_cli("classify --config " + path);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "unknown key"));
}

TEST_CASE("missing config file and missing subcommand fail as usage errors") {
    CHECK(run_cli("classify --config /nonexistent.json").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("emit-figure densities writes consistent CSV data") {
    const std::string out_path = "/tmp/qconcept_test_densities.csv";
    const auto r = run_cli("emit-figure --which densities --config " + paper_config_path() +
                           " --output " + out_path);
    REQUIRE(r.exit_code == 0);
    const auto [headers, columns] = parse_csv(read_file(out_path));
    REQUIRE(headers ==
            std::vector<std::string>{"x", "car", "boat", "object", "overlap_car",
                                     "overlap_boat"});

    const auto& x = columns[0];
    const double dx = x[1] - x[0];
    // Each density column integrates to 1 (Simpson over the grid).
    for (std::size_t col = 1; col <= 3; ++col) {
        std::vector<cdouble> samples(columns[col].begin(), columns[col].end());
        CHECK(integrate(samples, dx).real() == Catch::Approx(1.0).margin(1e-9));
    }
    // Peaks sit at the configured centers with 1/sqrt(pi sigma^2) heights.
    const auto peak = [&](std::size_t col) {
        std::size_t best = 0;
        for (std::size_t i = 0; i < columns[col].size(); ++i)
            if (columns[col][i] > columns[col][best]) best = i;
        return std::pair{x[best], columns[col][best]};
    };
    const auto [car_x, car_h] = peak(1);
    CHECK(car_x == Catch::Approx(5.0).margin(dx));
    CHECK(car_h == Catch::Approx(1.0 / std::sqrt(std::numbers::pi)).margin(1e-6));
    const auto [obj_x, obj_h] = peak(3);
    CHECK(obj_x == Catch::Approx(3.0).margin(dx));
    CHECK(obj_h == Catch::Approx(1.0 / (2.0 * std::sqrt(std::numbers::pi))).margin(1e-6));
    // Overlap columns are the pointwise wavefunction products.
    CHECK(columns[4].size() == columns[1].size());
}

TEST_CASE("emit-figure wavefunctions mode") {
    const std::string out_path = "/tmp/qconcept_test_waves.csv";
    const auto r = run_cli("emit-figure --which wavefunctions --config " +
                           paper_config_path() + " --output " + out_path);
    REQUIRE(r.exit_code == 0);
    const auto [headers, columns] = parse_csv(read_file(out_path));
    REQUIRE(headers == std::vector<std::string>{"x", "car", "boat", "object"});
    // Wavefunction columns square to densities, so their quadrature
    // of squares is 1.
    std::vector<cdouble> sq(columns[1].size());
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = columns[1][i] * columns[1][i];
    CHECK(integrate(sq, columns[0][1] - columns[0][0]).real() ==
          Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("metric-check passes and honors validation") {
    const auto pass = run_cli("metric-check --trials 1000 --seed 42");
    CHECK(pass.exit_code == 0);
    CHECK(contains(pass.output, "PASS metric symmetry"));
    CHECK(contains(pass.output, "PASS KM4 fuzzy triangle inequality"));
    CHECK(contains(pass.output, "all axioms passed"));
    CHECK(!contains(pass.output, "FAIL"));

    CHECK(run_cli("metric-check --trials 0").exit_code == 2);

    const auto fault = run_cli("metric-check --trials 100 --inject-fault");
    CHECK(fault.exit_code == 1);
    CHECK(contains(fault.output, "FAIL metric symmetry"));
    CHECK(contains(fault.output, "counterexample"));
}

TEST_CASE("compare-fuzzy agrees at the ambiguous point") {
    const auto r = run_cli("compare-fuzzy --x 3 --config " + paper_config_path());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "quantum winner: TIE{boat,car}"));
    CHECK(contains(r.output, "fuzzy winner:   TIE{boat,car}"));
    CHECK(contains(r.output, "decisions agree: yes"));
    CHECK(contains(r.output, "0.536256"));
    CHECK(contains(r.output, "0.500000"));
}

TEST_CASE("compare-fuzzy flags vanishing narrow memberships") {
    const auto path = write_temp_config("narrow", R"({
      "concepts": [{"name":"car","mu":5,"sigma":1},{"name":"boat","mu":1,"sigma":1}],
      "memberships": [{"name":"car","center":5,"half_width":2},
                      {"name":"boat","center":1,"half_width":2}]})");
    const auto r = run_cli("compare-fuzzy --x 3 --config " + path);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "0.000000"));
    CHECK(contains(r.output, "every membership vanishes"));
}

TEST_CASE("compare-fuzzy at x=5 splits the decisions") {
    const auto r = run_cli("compare-fuzzy --x 5 --config " + paper_config_path());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "fuzzy winner:   car"));
}

TEST_CASE("compare-fuzzy requires memberships") {
    const auto path = write_temp_config(
        "nomem", R"({"concepts":[{"name":"car","mu":5,"sigma":1}]})");
    CHECK(run_cli("compare-fuzzy --x 3 --config " + path).exit_code == 2);
}

TEST_CASE("kernel-matrix emits the labeled Gram matrix") {
    const auto r = run_cli("kernel-matrix --config " + paper_config_path());
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "name,car,boat,object");
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string cell;
        std::getline(ls, cell, ',');  // row label
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    REQUIRE(rows.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(rows[i][i] == 1.0);
        for (int j = 0; j < 3; ++j) CHECK(rows[i][j] == rows[j][i]);
    }
    CHECK(rows[0][2] == Catch::Approx(0.536256).margin(1e-6));
    CHECK(rows[0][1] == Catch::Approx(std::exp(-4.0)).margin(1e-9));
}

TEST_CASE("interference command") {
    const auto at_pi = run_cli("interference --config " + paper_config_path());
    CHECK(at_pi.exit_code == 0);  // default phase is pi
    CHECK(contains(at_pi.output, "dephased (phase=3.141593): 0.000000"));
    CHECK(contains(at_pi.output, "constructive (phase=0):"));
    CHECK(contains(at_pi.output, "0.944"));

    const auto at_zero = run_cli("interference --phase 0 --config " + paper_config_path());
    CHECK(contains(at_zero.output, "dephased (phase=0.000000): 0.944"));

    const auto path = write_temp_config(
        "one_concept", R"({"concepts":[{"name":"car","mu":5,"sigma":1}]})");
    CHECK(run_cli("interference --config " + path).exit_code == 2);
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (const std::string args :
         {std::string("classify --config ") + paper_config_path(),
          std::string("classify --format json --config ") + paper_config_path(),
          std::string("metric-check --trials 200 --seed 7"),
          std::string("compare-fuzzy --x 3 --config ") + paper_config_path(),
          std::string("interference --config ") + paper_config_path()}) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}
