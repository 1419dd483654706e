#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "scs/scan.hpp"

using namespace scs;
using namespace scs::scan;

namespace {

ScanConfig small_config(Mode mode) {
  ScanConfig c;
  c.mode = mode;
  c.steps = 7;
  return c;
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("ScanConfig") {
  ScanConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.grid_value(0) == 0.0);
  CHECK(c.grid_value(50) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.grid_value(150) == 3.0);

  ScanConfig bad = c;
  bad.steps = 1;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = c;
  bad.zmax = -1;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = c;
  bad.zmin = -0.5;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = c;
  bad.p1 = 1.5;
  CHECK_THROWS_AS(bad.validate(), UsageError);
}

TEST_CASE("presets") {
  CHECK(preset_names().size() == 9);
  ScanConfig c;
  apply_preset("fig2b", c);
  CHECK(c.mode == Mode::Pure);
  CHECK(c.j1 == SpinJ(1));
  CHECK(c.j2 == SpinJ(8));

  ScanConfig m;
  m.j1 = SpinJ(3);
  m.p1 = 0.9;
  apply_preset("fig4", m);
  CHECK(m.mode == Mode::Mixed);
  CHECK(m.j1 == SpinJ(3));
  CHECK(m.p1 == 0.5);
  CHECK(m.z1b == Complex(4.0));

  CHECK_THROWS_AS(apply_preset("fig9", c), UsageError);
}

TEST_CASE("pure scan") {
  ScanConfig c;
  apply_preset("fig1a", c);
  const auto rows = run_scan(c, 4);
  REQUIRE(rows.size() == 151u * 151u);
  const auto peak = std::max_element(rows.begin(), rows.end(), [](auto& a, auto& b) {
    return a.concurrence < b.concurrence;
  });
  // The maximum is attained on a whole curve (P1 = -P2); z1 = z2 = 1 is on it.
  const ScanRow& bell = rows[50 * 151 + 50];
  CHECK(bell.z1 == doctest::Approx(1.0));
  CHECK(bell.z2 == doctest::Approx(1.0));
  CHECK(bell.concurrence == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(peak->concurrence - bell.concurrence < 1e-12);
  for (const auto& r : rows) {
    CHECK_FALSE(r.degenerate);
    CHECK(r.concurrence >= 0.0);
    CHECK(r.concurrence <= 1.0);
  }
  CHECK(rows[1].z1 == 0.0);
  CHECK(rows[1].z2 == doctest::Approx(0.02));
}

TEST_CASE("scan output does not depend on thread count") {
  const ScanConfig c = small_config(Mode::Mixed);
  const std::string one = render_csv(run_scan(c, 1), Mode::Mixed);
  const std::string many = render_csv(run_scan(c, 5), Mode::Mixed);
  CHECK(one == many);
}

TEST_CASE("degenerate grid points") {
  ScanConfig c = small_config(Mode::Pure);
  c.phi = std::numbers::pi;
  const auto rows = run_scan(c, 2);
  CHECK(count_degenerate(rows) == 1);
  CHECK(rows.front().degenerate);
  const std::string csv = render_csv(rows, Mode::Pure);
  CHECK(csv.find("\n0,0,\n") != std::string::npos);
}

TEST_CASE("render_csv") {
  const ScanConfig pure = small_config(Mode::Pure);
  const std::string p = render_csv(run_scan(pure, 1), Mode::Pure);
  CHECK(p.rfind("z1,z2,concurrence\n", 0) == 0);
  CHECK(count_lines(p) == 50);

  const ScanConfig mixed = small_config(Mode::Mixed);
  const std::string m = render_csv(run_scan(mixed, 1), Mode::Mixed);
  CHECK(m.rfind("z1,z2,concurrence,wootters,simplified,lower,upper,case_label\n", 0) == 0);
  CHECK(count_lines(m) == 50);

  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333");
}

TEST_CASE("csv_to_pgm") {
  const std::string csv =
      "z1,z2,concurrence\n"
      "0,0,0\n0,1,0.5\n0,2,1\n"
      "1,0,1\n1,1,1\n1,2,1\n"
      "2,0,\n2,1,0.2\n2,2,0.1\n";
  const std::string pgm = csv_to_pgm(csv);
  const std::string header = "P5\n3 3\n255\n";
  REQUIRE(pgm.size() == header.size() + 9);
  CHECK(pgm.substr(0, header.size()) == header);
  const auto px = [&](int i) {
    return static_cast<unsigned char>(pgm[header.size() + i]);
  };
  CHECK(px(0) == 0);
  CHECK(px(1) == 128);
  CHECK(px(2) == 255);
  CHECK(px(6) == 0);
  CHECK(px(7) == 51);

  std::ostringstream ones;
  ones << "z1,z2,concurrence\n";
  for (int i = 0; i < 16; ++i) ones << "0,0,1\n";
  const std::string all = csv_to_pgm(ones.str());
  CHECK(std::all_of(all.end() - 16, all.end(),
                    [](char ch) { return static_cast<unsigned char>(ch) == 255; }));

  CHECK_THROWS_AS(csv_to_pgm("z1,z2,concurrence\n0,0,,\n"), UsageError);
  CHECK_THROWS_AS(csv_to_pgm(""), UsageError);
  CHECK_THROWS_AS(csv_to_pgm("z1,z2,c\n0,0,1\n"), UsageError);
  CHECK_THROWS_AS(csv_to_pgm("z1,z2,concurrence\n0,0,1\n0,1,1\n"), UsageError);
  CHECK_THROWS_AS(csv_to_pgm("z1,z2,concurrence\n0,0,abc\n"), UsageError);
  CHECK_THROWS_AS(csv_to_pgm("z1,z2,concurrence\n0,0,1.5\n"), UsageError);
}

TEST_CASE("fig1a heatmap peaks at the Bell point") {
  ScanConfig c;
  apply_preset("fig1a", c);
  const std::string pgm = csv_to_pgm(render_csv(run_scan(c, 4), Mode::Pure));
  const std::string header = "P5\n151 151\n255\n";
  REQUIRE(pgm.substr(0, header.size()) == header);
  // z = 1 is grid index 50 on both axes.
  CHECK(static_cast<unsigned char>(pgm[header.size() + 50 * 151 + 50]) == 255);
}

TEST_CASE("parse_complex") {
  CHECK(parse_complex("1.5") == Complex(1.5, 0));
  CHECK(parse_complex("-2") == Complex(-2, 0));
  CHECK(parse_complex("0.3+0.4i") == Complex(0.3, 0.4));
  CHECK(parse_complex("0.3-0.4i") == Complex(0.3, -0.4));
  CHECK(parse_complex("2i") == Complex(0, 2));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("1e-3+2e1i") == Complex(1e-3, 20));
  CHECK_FALSE(parse_complex("").has_value());
  CHECK_FALSE(parse_complex("abc").has_value());
  CHECK_FALSE(parse_complex("1+2").has_value());
  CHECK_FALSE(parse_complex("1+2j").has_value());
}

TEST_CASE("point_report") {
  PointRequest bell;
  bell.comp1 = {SpinJ(1), SpinJ(1), 1.0, 1.0, 0.0};
  const auto b = point_report(bell);
  CHECK(b["mode"] == "pure");
  CHECK(b["concurrence"].get<double>() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(b["is_bell"] == true);

  PointRequest half;
  half.comp1 = {SpinJ(1), SpinJ(1), 0.5, 0.5, 0.0};
  const auto h = point_report(half);
  CHECK(h["concurrence"].get<double>() == doctest::Approx(0.4706).epsilon(1e-4));
  CHECK(h["oracle_concurrence"].get<double>() ==
        doctest::Approx(h["concurrence"].get<double>()).epsilon(1e-12));

  PointRequest zero;
  zero.comp1 = {SpinJ(2), SpinJ(1), 0.0, 0.8, 0.0};
  CHECK(point_report(zero)["concurrence"].get<double>() == 0.0);

  PointRequest mixed;
  mixed.mode = Mode::Mixed;
  mixed.comp1 = {SpinJ(1), SpinJ(1), 0.5, 0.5, 0.0};
  mixed.comp2 = {SpinJ(1), SpinJ(1), 1.0, 1.0, 0.0};
  const auto m = point_report(mixed);
  CHECK(m["mode"] == "mixed");
  CHECK(m["wootters"].get<double>() ==
        doctest::Approx(0.7352941176470588).epsilon(1e-10));
  CHECK(m.contains("case_label"));
  CHECK(m["components"].size() == 2);

  PointRequest degenerate;
  degenerate.comp1 = {SpinJ(1), SpinJ(1), 0.0, 0.0, std::numbers::pi};
  CHECK_THROWS_AS(point_report(degenerate), DegenerateState);
}
