#include "doctest.h"

#include "ultragrowth/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ultragrowth;

namespace {

std::string temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("ultragrowth_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("sequence json round trip") {
  const auto g = make_gevrey(0.5, 64);
  const auto back = sequence_from_json(to_json(g), "mem", 0);
  CHECK(back == g);

  const auto t = matrix_of_weight(WeightFn::trunc_log(), {1.0}, 16).at(1.0);
  REQUIRE(t.is_exotic());
  const Json j = to_json(t);
  CHECK(j["log_values"][5] == "inf");
  CHECK(sequence_from_json(parse_json(j.dump(), "mem"), "mem", 0) == t);

  const auto closed = sequence_from_json(Json{{"kind", "gevrey"}, {"s", 2}, {"truncation", 32}},
                                         "mem", 0);
  CHECK(closed == make_gevrey(2.0, 32));
}

TEST_CASE("malformed inputs name the position") {
  const auto path = temp_file("bad.json", "{\"kind\": \"explicit\", \"log_values\": [0, 1,, 2]}");
  try {
    load_sequence(path);
    FAIL("no throw");
  } catch (const FormatError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("byte 42") != std::string::npos);
    CHECK(msg.find(path) != std::string::npos);
  }
  try {
    sequence_from_json(parse_json(R"({"kind":"explicit","log_values":[0,0,"x"]})", "mem"), "mem", 0);
    FAIL("no throw");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("mem/log_values/2") != std::string::npos);
  }
  CHECK_THROWS_AS(sequence_from_json(parse_json(R"({"kind":"weird","log_values":[0]})", "m"), "m", 0),
                  FormatError);
  // invariant violations surface as format errors too
  CHECK_THROWS_AS(sequence_from_json(parse_json(R"({"kind":"explicit","log_values":[0,1]})", "m"), "m", 0),
                  FormatError);
  CHECK_THROWS_AS(load_sequence("/nonexistent/file.json"), FormatError);
}

TEST_CASE("matrix and coefficient files") {
  const auto M = matrix_of_weight(WeightFn::power(2.0), {0.5, 1.0, 2.0}, 32);
  const auto back = matrix_from_json(parse_json(to_json(M).dump(), "mem"), "mem");
  CHECK(back.lambdas() == M.lambdas());
  for (double l : M.lambdas()) CHECK(back.at(l) == M.at(l));
  CHECK(back.name() == M.name());

  for (const auto& c : {CoefficientFamily::kronecker(7),
                        CoefficientFamily::explicit_values({1.0, 0.0, -0.25}),
                        CoefficientFamily::weight_witness(WeightFn::power(1.5), 5000)}) {
    const auto r = coefficients_from_json(to_json(c), "mem");
    CHECK(to_json(r) == to_json(c));
  }
  CHECK_THROWS_AS(coefficients_from_json(Json{{"kind", "kronecker"}}, "mem"), FormatError);
}

TEST_CASE("weight specs round trip") {
  const auto seq = temp_file("seq.json", to_json(make_gevrey(1.0, 128)).dump());
  for (std::string s : {"t^2", "t^1.5", "raw:t^0.5", "log1p", "logtrunc", "gevrey:0.5"}) {
    const WeightFn w = parse_weight_spec(s);
    CHECK(w.spec() == s);
    CHECK(parse_weight_spec(w.spec()).spec() == s);
  }
  const WeightFn a = parse_weight_spec("assoc:" + seq);
  CHECK(a.spec() == "assoc:" + seq);
  CHECK(a(10.0) == doctest::Approx(parse_weight_spec("gevrey:1")(10.0)).epsilon(1e-9));
  for (std::string bad : {"t^", "t^-1", "t^x", "raw:log1p", "cosh", "gevrey:0", "gevrey:-1"})
    CHECK_THROWS_AS(parse_weight_spec(bad), FormatError);
  CHECK(parse_sequence_spec("gevrey:0.5")->log_mu(BigIndex(4)) == doctest::Approx(std::log(2.0)));
  CHECK(materialize_sequence_spec(seq, 0) == make_gevrey(1.0, 128));
}

TEST_CASE("curve tsv is lossless for sampled weights") {
  std::vector<double> t, v;
  for (int i = 0; i <= 200; ++i) {
    t.push_back(std::pow(10.0, -1.0 + i / 50.0));
    v.push_back(std::pow(t.back(), 1.7) / 3.0);
  }
  const WeightFn w = WeightFn::sampled(t, v);
  std::stringstream ss;
  write_curve_tsv(ss, w, t);
  const WeightFn back = read_curve_tsv(ss, "mem");
  CHECK(back.sample_t() == t);
  CHECK(back.sample_values() == v);

  std::stringstream bad("1\t2\n3 4\n");
  CHECK_THROWS_WITH_AS(read_curve_tsv(bad, "curve"), doctest::Contains("curve:2"), FormatError);
}

TEST_CASE("verdict json") {
  const auto v = Verdict::make_holds({{"C", INFINITY}, {"A", 2.0}}, 1.0, 512.0, "note");
  const Json j = to_json(v);
  CHECK(j["status"] == "holds");
  CHECK(j["witness"]["C"] == "inf");
  CHECK(j["witness"]["A"] == 2.0);
  CHECK(j.dump() == to_json(v).dump());
  CHECK(number_from_json(Json("-inf"), "x") == -INFINITY);
}
