#include <gtest/gtest.h>

#include "hensel/codec.hpp"
#include "hensel/suite.hpp"

using namespace hensel;

namespace {

std::string parse_error_of(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Codec, SAdicDigits) {
  const auto x = SAdic::from_integer(-7, 3, 5);
  EXPECT_EQ(sadic_from_json(to_json(x), 3), x);
  EXPECT_EQ(to_json(SAdic::from_integer(12, 3, 3)), json::parse("[0,1,1]"));
  EXPECT_THROW(sadic_from_json(json::parse("[0,3]"), 3), ParseError);
}

TEST(Codec, HomRoundTrip) {
  const HomT phi(2, {{3, 2}, {5, -1}});
  const auto j = to_json(phi);
  EXPECT_EQ(hom_from_json(j), phi);
  EXPECT_EQ(hom_from_json(json::parse(j.dump())), phi);
}

TEST(Codec, HomRejectsIndexOutsideT) {
  const auto msg = parse_error_of([] { hom_from_json(json::parse(R"({"s":2,"coeffs":[{"y":4,"phi":1}]})")); });
  EXPECT_NE(msg.find("'y'"), std::string::npos);
  EXPECT_NE(parse_error_of([] { hom_from_json(json::parse(R"({"s":2})")); }).find("'coeffs'"), std::string::npos);
  EXPECT_NE(parse_error_of([] { hom_from_json(json::parse(R"({"s":2,"coeffs":[{"y":3,"phi":"x"}]})")); })
                .find("'phi'"),
            std::string::npos);
}

TEST(Codec, CylinderRoundTrip) {
  CaseRng rng(401);
  const auto f = random_units_rational(rng, 3, 2);
  const auto j = to_json(f);
  EXPECT_EQ(j["ring"], "rat");
  const auto back = rat_cylinder_from_json(json::parse(j.dump()));
  EXPECT_EQ(back, f);
  EXPECT_EQ(back.domain(), Domain::units);
  EXPECT_EQ(back.level(), 2);

  const auto g = indicator(2, 3, 2);
  EXPECT_EQ(int_cylinder_from_json(to_json(g)), g);

  const ComplexCylinder h(2, 1, Domain::full, {Complex(0.1, -2.5), Complex(1e-17, 3.0)});
  const auto any = cylinder_from_json(json::parse(to_json(h).dump()));
  ASSERT_TRUE(std::holds_alternative<ComplexCylinder>(any));
  const auto& hb = std::get<ComplexCylinder>(any);
  EXPECT_EQ(hb.values()[0], h.values()[0]);
  EXPECT_EQ(hb.values()[1], h.values()[1]);
}

TEST(Codec, CylinderErrors) {
  EXPECT_NE(parse_error_of([] {
              cylinder_from_json(json::parse(R"({"s":2,"level":1,"domain":"units","ring":"int","values":["1","1"]})"));
            }).find("'values'"),
            std::string::npos);
  EXPECT_NE(parse_error_of([] {
              cylinder_from_json(json::parse(R"({"s":2,"level":1,"domain":"all","ring":"int","values":["1","1"]})"));
            }).find("'domain'"),
            std::string::npos);
  EXPECT_NE(parse_error_of([] {
              cylinder_from_json(json::parse(R"({"s":2,"level":2,"domain":"full","ring":"int","values":["1","1"]})"));
            }).find("'values'"),
            std::string::npos);
  EXPECT_NE(parse_error_of([] {
              cylinder_from_json(json::parse(R"({"s":2,"level":1,"domain":"full","ring":"real","values":["1","1"]})"));
            }).find("'ring'"),
            std::string::npos);
  EXPECT_THROW(int_cylinder_from_json(json::parse(R"({"s":2,"level":1,"domain":"full","ring":"rat","values":["1/2","1"]})")),
               ParseError);
}

TEST(Codec, SymbolRoundTrip) {
  const ToeplitzSymbol<Rational> phi{{-2, Rational(3, 4)}, {1, Rational(-5)}};
  EXPECT_EQ(rat_symbol_from_json(json::parse(to_json(phi).dump())), phi);
  const ToeplitzSymbol<Complex> psi{{0, Complex(0.25, -1.0)}, {3, Complex(2.0, 0.0)}};
  EXPECT_EQ(complex_symbol_from_json(json::parse(to_json(psi).dump())), psi);
}

TEST(Codec, OperatorRoundTrip) {
  const Window w(12);
  const auto sh = build_shift(3, w);
  const auto op = sh.v.compose(build_mult(indicator(1, 2, 3), w)).plus(sh.v_star.scaled(Rational(-2, 3)));
  const auto back = rat_op_from_json(json::parse(to_json(op).dump()));
  EXPECT_EQ(back.matrix, op.matrix);
  EXPECT_EQ(back.safe_cols, op.safe_cols);
  EXPECT_EQ(back.window.half_width(), 12);

  const auto cop = Gauge(3, w).conjugate(Rational(1, 5), sh.v);
  const auto cback = complex_op_from_json(json::parse(to_json(cop).dump()));
  EXPECT_EQ(cback.matrix, cop.matrix);

  auto bad = to_json(op);
  bad["rows"].push_back(99);
  bad["cols"].push_back(0);
  bad["vals"].push_back("1");
  EXPECT_NE(parse_error_of([&] { rat_op_from_json(bad); }).find("'rows'"), std::string::npos);
}
