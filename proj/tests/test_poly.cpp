#include <doctest.h>

#include "higgs/matrix.hpp"
#include "test_util.hpp"

using namespace higgs;
using testing::P;
using testing::M;
using testing::error_kind;

TEST_CASE("rational canonical form") {
  Rational q = parse_rational("-6/4");
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("0/5").get_den() == 1);
  CHECK(error_kind([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_rational("1.5"); }) == ErrorKind::ParseError);
  CHECK(rational_gcd(Rational(6), Rational(4)) == 2);
  CHECK(rational_gcd(Rational(1, 2), Rational(1, 3)) == Rational(1, 6));
  CHECK(is_rational_square(Rational(9, 4)));
  CHECK_FALSE(is_rational_square(Rational(-4)));
}

TEST_CASE("arithmetic and exact division") {
  CHECK(P("(x+1)*(x-1)") == P("x^2 - 1"));
  CHECK(exact_div(P("x^2*y"), P("x")) == P("x*y"));
  CHECK(error_kind([] { exact_div(P("x^2+1"), P("x")); }) == ErrorKind::DivisionFailure);
  try {
    exact_div(P("x^2+1"), P("x"));
  } catch (const Error& e) {
    CHECK(e.witness().find("remainder 1") != std::string::npos);
  }
  CHECK(P("x^2*y - 3/2*y + 1").to_string() == "x1^2*x2 - 3/2*x2 + 1");
  CHECK(P("0").is_zero());
  CHECK(P("x - x").is_zero());
}

TEST_CASE("graded lex leading term") {
  Poly p = P("y^3 + x^2 + x*y^2");
  CHECK(p.to_string() == "x1*x2^2 + x2^3 + x1^2");
  CHECK(p.leading_coefficient() == 1);
}

TEST_CASE("gcd") {
  CHECK(gcd(P("x^2-1"), P("x^2-2*x+1")) == P("x-1"));
  CHECK(gcd(P("6*x"), P("4*x^2")) == P("2*x"));
  CHECK(gcd(P("0"), P("0")).is_zero());
  CHECK(gcd(P("0"), P("-3*x")) == P("3*x"));
  CHECK(gcd(P("x*y^2 + y^2"), P("x^2*y - y")) == P("x*y + y"));
  CHECK(gcd(P("x"), P("y")) == P("1"));
}

TEST_CASE("squarefree decomposition") {
  auto d = squarefree_decompose(P("x^2*y^3"));
  CHECK(d.content == 1);
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[0] == SquarefreeFactor{P("x"), 2});
  CHECK(d.factors[1] == SquarefreeFactor{P("y"), 3});

  d = squarefree_decompose(P("x^2-1"));
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0] == SquarefreeFactor{P("x^2-1"), 1});

  d = squarefree_decompose(P("4*(x+1)^2"));
  CHECK(d.content == 4);
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0] == SquarefreeFactor{P("x+1"), 2});

  d = squarefree_decompose(P("-2*x^3*(x+y)^2*(y+1)", 2));
  CHECK(d.expand(2) == P("-2*x^3*(x+y)^2*(y+1)"));
  CHECK(d.content == -2);

  d = squarefree_decompose(P("7"));
  CHECK(d.content == 7);
  CHECK(d.factors.empty());

  CHECK(error_kind([] { squarefree_decompose(P("0")); }) == ErrorKind::ZeroPolynomial);
  CHECK(is_squarefree(P("x*y")));
  CHECK_FALSE(is_squarefree(P("x^2*y")));
  CHECK(is_squarefree(P("1")));
}

TEST_CASE("caps") {
  CHECK(error_kind([] { Poly(5); }) == ErrorKind::CapExceeded);
  CHECK(error_kind([] { check_input_caps(P("x^13"), "test"); }) == ErrorKind::CapExceeded);
  CHECK(error_kind([] { PolyMatrix(6, 1); }) == ErrorKind::CapExceeded);
}

TEST_CASE("matrix operations") {
  CHECK(det(M({{"0", "-x"}, {"1", "0"}})) == P("x"));
  CHECK(commutator(M({{"x", "0"}, {"0", "y"}}), M({{"x+1", "0"}, {"0", "3"}})).is_zero());
  auto cp = charpoly(M({{"0", "x"}, {"1", "0"}}));
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == P("-x"));
  CHECK(cp[1].is_zero());
  CHECK(cp[2] == P("1"));
  CHECK(trace(M({{"x", "1"}, {"2", "y"}})) == P("x+y"));
  RationalMatrix r{{1, 2}, {2, 4}};
  CHECK(rank(r) == 1);
}

TEST_CASE("text and tree serialization round trip") {
  Poly p = P("3/2*x^2*y - y + 1");
  CHECK(parse_poly(p.to_string(), 2) == p);
  CHECK(poly_from_json(to_json(p), 2, "p") == p);
  CHECK(to_json(poly_from_json(to_json(p), 2, "p")).dump() == to_json(p).dump());
  CHECK(error_kind([] { parse_poly("x3", 2); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { parse_poly("x +", 2); }) == ErrorKind::ParseError);
  Json bad = Json::parse(R"({"nvars":2,"terms":[{"exps":[1,0],"num":"1","den":"0"}]})");
  CHECK(error_kind([&] { poly_from_json(bad, 2, "p"); }) == ErrorKind::ParseError);
  Json extra = Json::parse(R"({"nvars":2,"terms":[],"x":1})");
  CHECK(error_kind([&] { poly_from_json(extra, 2, "p"); }) == ErrorKind::SchemaError);
}
