#include <doctest.h>

#include "qwb/errors.hpp"
#include "qwb/json_io.hpp"

using namespace qwb;

TEST_SUITE("json") {
  TEST_CASE("quartic round trip") {
    QuarticData d = bundled_quartic();
    json j = to_json(d);
    QuarticData back = quartic_from_json(j);
    CHECK(back.q2 == d.q2);
    CHECK(back.q3 == d.q3);
    CHECK(back.q4 == d.q4);
    QuarticData file = quartic_from_json(read_json_file(QWB_DATA_DIR "/bundled_quartic.json"));
    CHECK(file.q4 == d.q4);
  }

  TEST_CASE("coefficients") {
    CHECK(coefficient_from_json("3/4") == GaussianRational(Rational(3, 4)));
    CHECK(coefficient_from_json(-2) == GaussianRational(-2));
    CHECK(coefficient_from_json(json{{"re", "1"}, {"im", "-1/2"}}) == GaussianRational(1, Rational(-1, 2)));
    CHECK_THROWS_AS(coefficient_from_json(json::array()), InputError);
    CHECK_THROWS_AS(coefficient_from_json(0.1), InputError);
  }

  TEST_CASE("config") {
    WorkbenchConfig c = config_from_json(read_json_file(QWB_DATA_DIR "/default_config.json"));
    CHECK(c.seed == 7);
    CHECK(c.bound("s1_max") == 120);
    WorkbenchConfig back = config_from_json(to_json(c));
    CHECK(to_json(back) == to_json(c));
    CHECK_THROWS_AS(config_from_json(json{{"tolerance", 1e-5}, {"separation", 1e-6}}), InputError);
    CHECK_THROWS_AS(config_from_json(json{{"tolerance", -1.0}}), InputError);
    CHECK_THROWS_AS(config_from_json(json{{"colour", "red"}}), InputError);
    CHECK_THROWS_AS(config_from_json(json{{"arithmetic_track", "fast"}}), InputError);
    CHECK_THROWS_AS(c.bound("missing"), InputError);
  }

  TEST_CASE("graph and pipeline input round trip") {
    json j = read_json_file(QWB_DATA_DIR "/sample_graph.json");
    PipelineInput in = pipeline_input_from_json(j);
    CHECK(in.graph.K() == 5);
    CHECK(in.graph.L() == 3);
    CHECK(in.mult.nu[2] == 4);
    CHECK(in.cycle.beta == Rational(10));
    PipelineInput back = pipeline_input_from_json(to_json(in));
    CHECK(back.graph == in.graph);
    CHECK(to_json(back) == to_json(in));
    CHECK(graph_from_json(to_json(in.graph)) == in.graph);

    json bad = j;
    bad["arrows"] = json::array({json::array({2, 1})});
    CHECK_THROWS_AS(graph_from_json(bad), InputError);
    bad = j;
    bad.erase("cycle");
    CHECK_THROWS_AS(pipeline_input_from_json(bad), InputError);
    CHECK_THROWS_AS(read_json_file(QWB_DATA_DIR "/no_such_file.json"), InputError);
  }

  TEST_CASE("points") {
    ExactPoint p = exact_point_from_text("1,-1/2,0,3");
    CHECK(p[1] == GaussianRational(Rational(-1, 2)));
    ComplexPoint z = complex_point_from_text("1,0.5+2i,0,-1");
    CHECK(z[1] == Complex(0.5, 2));
    CHECK_THROWS_AS(exact_point_from_text("1,2,3"), InputError);
  }

  TEST_CASE("report envelope") {
    json r = make_report("scan", json{{"form", "a"}}, WorkbenchConfig{}, "check", json::object(), true, 0.5);
    std::vector<std::string> keys;
    for (const auto& [k, v] : r.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "arguments", "config", "check", "passed", "results", "timing"});
  }
}
