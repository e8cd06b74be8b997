#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncmetric/commands.hpp"
#include "ncmetric/commutative.hpp"
#include "ncmetric/document.hpp"

using namespace ncmetric;

namespace {

std::string data(const std::string& name) { return std::string(NCMETRIC_TEST_DATA) + "/" + name; }

struct Captured {
  int code = 0;
  std::string out, err;
};

template <class F>
Captured run(F&& f) {
  std::ostringstream out, err;
  Captured r;
  r.code = f(out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Captured distance(const std::string& file, const std::string& a, const std::string& b, CommandFlags flags = {}) {
  return run([&](std::ostream& o, std::ostream& e) { return cmd_distance(data(file), a, b, flags, o, e); });
}

double value_of(const std::string& out) {
  std::istringstream in(out);
  std::string key, v;
  in >> key >> v;
  return v == "inf" ? std::numeric_limits<double>::infinity() : std::stod(v);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ncmetric_test_" + name)).string();
}

}  // namespace

TEST(FormatValue, Shapes) {
  EXPECT_EQ(format_value(1.0), "1.0");
  EXPECT_EQ(format_value(0.5), "0.5");
  EXPECT_EQ(format_value(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_value(1e-20), "1e-20");
}

TEST(CmdDistance, TwoPoint) {
  const Captured r = distance("two_point.json", "p", "q");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "distance 1.0\nmethod closed-form:two-point\n");
}

TEST(CmdDistance, SameState) {
  EXPECT_EQ(distance("two_point.json", "p", "p").out, "distance 0.0\nmethod identical\n");
}

TEST(CmdDistance, KernelTest) {
  EXPECT_EQ(distance("sphere.json", "north", "east").out, "distance inf\nmethod kernel-test\n");
}

TEST(CmdDistance, Errors) {
  EXPECT_EQ(distance("two_point.json", "p", "nowhere").code, kExitState);
  EXPECT_EQ(distance("broken.json", "1", "2").code, kExitParse);
  EXPECT_EQ(distance("missing.json", "1", "2").code, kExitParse);
  CommandFlags f;
  f.method = Method::ClosedForm;
  EXPECT_EQ(distance("counterexample.json", "1", "2", f).code, kExitFailure);
  CommandFlags cap;
  cap.dim_cap = 1;
  EXPECT_EQ(distance("two_point.json", "p", "q", cap).code, kExitFailure);
}

TEST(CmdDistance, OracleAndClosedFormAgree) {
  const std::vector<std::tuple<std::string, std::string, std::string>> cases = {
      {"two_point.json", "p", "q"},   {"regular4.json", "1", "3"}, {"cycle4_skew.json", "1", "3"},
      {"cycle4_skew.json", "2", "4"}, {"sphere.json", "east", "west"}, {"m2_plus_c.json", "c", "e1"},
  };
  for (const auto& [file, a, b] : cases) {
    CommandFlags cf, orc;
    cf.method = Method::ClosedForm;
    orc.method = Method::Oracle;
    const Captured x = distance(file, a, b, cf), y = distance(file, a, b, orc);
    ASSERT_EQ(x.code, 0) << x.err;
    ASSERT_EQ(y.code, 0) << y.err;
    EXPECT_NE(x.out.find("closed-form:"), std::string::npos) << file;
    EXPECT_NEAR(value_of(x.out), value_of(y.out), 1e-4) << file << " " << a << " " << b;
  }
}

TEST(CmdDistance, WitnessPrinted) {
  CommandFlags f;
  f.witness = true;
  const Captured r = distance("two_point.json", "p", "q", f);
  EXPECT_NE(r.out.find("witness[0]"), std::string::npos);
  EXPECT_NE(r.out.find("witness[1]"), std::string::npos);
}

TEST(CmdDistance, Reproducible) {
  CommandFlags f;
  f.method = Method::Oracle;
  f.seed = 9;
  f.witness = true;
  EXPECT_EQ(distance("counterexample.json", "1", "2", f).out, distance("counterexample.json", "1", "2", f).out);
}

TEST(CmdMatrix, RegularTable) {
  const Captured r = run([](std::ostream& o, std::ostream& e) { return cmd_matrix(data("regular4.json"), {}, o, e); });
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0.707106781187"), std::string::npos);
  EXPECT_NE(r.out.find("methods closed-form:regular=6"), std::string::npos);
}

TEST(CmdMatrix, CycleMatchesSpecialValues) {
  CommandFlags f;
  f.format = "csv";
  const Captured r = run([&](std::ostream& o, std::ostream& e) { return cmd_matrix(data("cycle4.json"), f, o, e); });
  ASSERT_EQ(r.code, 0) << r.err;
  const FourPointSpecial s = four_point_special(1.0, 1.0, 1.0, 1.0);
  std::istringstream in(r.out);
  std::string header, row1;
  std::getline(in, header);
  std::getline(in, row1);
  EXPECT_EQ(row1, "1,0.0," + format_value(s.d12) + "," + format_value(s.d13) + "," + format_value(s.d12));
}

TEST(CmdMatrix, CsvMaskAndParallel) {
  CommandFlags f;
  f.format = "csv";
  f.parallel = 3;
  f.out = temp_path("m2c.csv");
  const Captured r = run([&](std::ostream& o, std::ostream& e) { return cmd_matrix(data("m2_plus_c.json"), f, o, e); });
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = read_file(f.out), mask = read_file(f.out + ".mask");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "state,c,e1,e2,mix");
  EXPECT_NE(csv.find("c,0.0,0.5,,\n"), std::string::npos);
  EXPECT_EQ(mask.substr(0, mask.find('\n')), "0,0,1,1");
  std::remove(f.out.c_str());
  std::remove((f.out + ".mask").c_str());
}

TEST(CmdMatrix, EmptyStates) {
  const Captured r = run([](std::ostream& o, std::ostream& e) { return cmd_matrix(data("empty_states.json"), {}, o, e); });
  EXPECT_EQ(r.code, kExitState);
}

TEST(CmdInvert3, Cases) {
  Captured r = run([](std::ostream& o, std::ostream& e) { return cmd_invert3(1, 1, 1, o, e); });
  EXPECT_EQ(r.out, "D12 0.816496580928\nD13 0.816496580928\nD23 0.816496580928\n");
  r = run([](std::ostream& o, std::ostream& e) { return cmd_invert3(1, 1, 3, o, e); });
  EXPECT_EQ(r.code, kExitConstraint);
  EXPECT_NE(r.err.find("d(2,3)^2"), std::string::npos);
  r = run([](std::ostream& o, std::ostream& e) { return cmd_invert3(3, 4, 5, o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("D23 0.0 (deleted-link)"), std::string::npos);
}

TEST(CmdRealize, RoundTrip) {
  for (const auto& [csv, expect] : {std::pair<std::string, double>{"metric2.csv", 2.0}, {"metric3.csv", 1.0}}) {
    CommandFlags f;
    f.out = temp_path("realized.json");
    const Captured r = run([&](std::ostream& o, std::ostream& e) { return cmd_realize(data(csv), f, o, e); });
    ASSERT_EQ(r.code, 0) << r.err;
    const Captured d = run([&](std::ostream& o, std::ostream& e) { return cmd_distance(f.out, "1", "2", {}, o, e); });
    EXPECT_NEAR(value_of(d.out), expect, 1e-3);
    std::remove(f.out.c_str());
  }
  const Captured bad = run([](std::ostream& o, std::ostream& e) { return cmd_realize(data("metric_bad.csv"), {}, o, e); });
  EXPECT_EQ(bad.code, kExitConstraint);
}

TEST(CmdSm, Examples) {
  Captured r = run([](std::ostream& o, std::ostream& e) { return cmd_sm(data("masses_unit.json"), {}, false, o, e); });
  EXPECT_EQ(r.out, "gtt 1.0\ndistance 1.0\n");
  r = run([](std::ostream& o, std::ostream& e) {
    return cmd_sm(data("masses_unit.json"), {Complex(-1.0), Complex(0.0)}, false, o, e);
  });
  EXPECT_NE(r.out.find("distance inf"), std::string::npos);
  r = run([](std::ostream& o, std::ostream& e) {
    return cmd_sm(data("masses_ordered.json"), {Complex(0.3, 0.1), Complex(-0.2, 0.4)}, true, o, e);
  });
  ASSERT_EQ(r.code, 0) << r.err;
  const auto pos = r.out.find("residual ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_LE(std::stod(r.out.substr(pos + 9)), 1e-10);
}

TEST(CmdGraph, Cycle) {
  const Captured r = run([](std::ostream& o, std::ostream& e) { return cmd_graph(data("cycle4.json"), o, e); });
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("edge 1 2 1.0"), std::string::npos);
  EXPECT_NE(r.out.find("bound 1 3 2.0"), std::string::npos);
  const Captured s = run([](std::ostream& o, std::ostream& e) { return cmd_graph(data("sphere.json"), o, e); });
  EXPECT_EQ(s.code, kExitFailure);
}

TEST(Dispatch, ClosedFormNames) {
  const TripleDocument d = load_document(data("cycle4_skew.json"));
  const DistanceOracle o(d.triple);
  EXPECT_EQ(dispatch_distance(o, d.states[1], d.states[3], Method::Auto).method, "closed-form:four-point-special");
  EXPECT_EQ(dispatch_distance(o, d.states[1], d.states[3], Method::Oracle).method, "oracle");
  const TripleDocument c = load_document(data("counterexample.json"));
  const DistanceOracle oc(c.triple);
  EXPECT_EQ(dispatch_distance(oc, c.states[0], c.states[1], Method::Auto).method, "oracle");
  EXPECT_THROW(dispatch_distance(oc, c.states[0], c.states[1], Method::ClosedForm), DomainError);
  EXPECT_THROW(parse_method("fast"), DomainError);
}

TEST(Dispatch, NegativeCycleFallsBackToOracle) {
  RealMatrix m = four_point_dirac(FourPointCoeffs::cycle(1.0, 1.3, 0.8, 2.0)).matrix().real();
  m(2, 3) = m(3, 2) = -m(2, 3);
  const SpectralTriple t = commutative_triple(HermitianMatrix(m));
  EXPECT_FALSE(closed_form_distance(t, PureState::canonical(0), PureState::canonical(2)).has_value());
}
