#include <doctest.h>

#include "gen.hpp"
#include "persist/errors.hpp"
#include "persist/polynomial.hpp"
#include "persist/series.hpp"

using namespace persist;

namespace {

Rational q(const char* s) { return parse_rational(s); }

std::vector<Rational> rs(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (auto x : xs) v.push_back(q(x));
  return v;
}

Series<Rational> sr(std::initializer_list<const char*> xs) { return Series<Rational>(rs(xs)); }

const Polynomial theta = Polynomial::x();

}  // namespace

TEST_CASE("parse_rational reads fractions, integers and decimals exactly") {
  CHECK(q("3/6") == Rational(1, 2));
  CHECK(q("-1/4") == Rational(-1, 4));
  CHECK(q("7") == 7);
  CHECK(q("0.25") == Rational(1, 4));
  CHECK(q("-0.1") == Rational(-1, 10));
  CHECK(q("1.5e-3") == Rational(3, 2000));
  CHECK(q("2E2") == 200);
  CHECK(q("+3") == 3);
  CHECK_THROWS_AS(q("1/0"), Error);
  CHECK_THROWS_AS(q("abc"), Error);
  CHECK_THROWS_AS(q(""), Error);
  CHECK_THROWS_AS(q("1/2/3"), Error);
  try {
    q("x");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Parse);
  }
}

TEST_CASE("to_string is canonical") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(factorial(5) == 120);
  CHECK(ratio(6, -4) == Rational(-3, 2));
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p = 1 - theta / Rational(2);
  CHECK(p.to_string() == "1 - 1/2*theta");
  CHECK((theta * theta - 1).divide_exact(theta - 1) == theta + 1);
  CHECK_THROWS_AS((theta * theta + 1).divide_exact(theta - 1), Error);
  CHECK(Polynomial().degree() == -1);
  CHECK(pow(theta + 1, 3).coeffs() == rs({"1", "3", "3", "1"}));
  CHECK(gcd(theta * theta - 1, theta * theta + Polynomial(2) * theta + 1) == theta + 1);
  CHECK((theta * theta).rescale(3)(1) == 9);
  const auto [quo, rem] = (theta * theta * theta + 2).divmod(theta * theta);
  CHECK(quo == theta);
  CHECK(rem == Polynomial(2));
  CHECK((-1 + theta - theta * theta * theta / Rational(6)).to_string() == "-1 + theta - 1/6*theta^3");
}

TEST_CASE("polynomial ring laws on random input") {
  gen::Source g(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = g.polynomial(), b = g.polynomial(), c = g.polynomial();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    const Rational x = g.rational();
    CHECK((a * b)(x) == a(x) * b(x));
    if (!b.is_zero()) {
      const auto [quo, rem] = a.divmod(b);
      CHECK(quo * b + rem == a);
      CHECK(rem.degree() < b.degree());
    }
  }
}

TEST_CASE("deformed exponential coefficients") {
  CHECK(deformed_exp_series(Rational(0), Rational(1), 3) == sr({"1", "1", "0", "0"}));
  CHECK(deformed_exp_series(Rational(1), Rational(1), 3) == sr({"1", "1", "1/2", "1/6"}));
  CHECK(deformed_exp_series(q("1/2"), Rational(-1), 3) == sr({"1", "-1", "1/4", "-1/48"}));
}

TEST_CASE("mul") {
  CHECK(sr({"1", "1", "0"}) * sr({"1", "-1", "0"}) == sr({"1", "0", "-1"}));
  gen::Source g(3);
  const auto s = g.series(5);
  CHECK(s * Series<Rational>::constant(1, 5) == s);
  const auto e = deformed_exp_series(theta, Polynomial(1), 6);
  CHECK(e * reciprocal(e) == Series<Polynomial>::constant(1, 6));
  CHECK((sr({"1", "2", "3"}) * sr({"1", "1"})).order() == 1);
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(sr({"1", "1", "0", "0"})) == sr({"1", "-1", "1", "-1"}));
  const auto e = deformed_exp_series(theta, Polynomial(1), 3);
  const auto r = reciprocal(e);
  CHECK(r[0] == Polynomial(1));
  CHECK(r[1] == Polynomial(-1));
  CHECK(r[2] == 1 - theta / Rational(2));
  CHECK(r[3] == -1 + theta - theta * theta * theta / Rational(6));
  CHECK(reciprocal(deformed_exp_series(Rational(1), Rational(1), 4)) == sr({"1", "-1", "1/2", "-1/6", "1/24"}));
  try {
    reciprocal(sr({"0", "1"}));
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NonInvertibleConstantTerm);
  }
  CHECK_THROWS_AS(reciprocal(Series<Polynomial>(std::vector<Polynomial>{theta, 1})), Error);
}

TEST_CASE("shift_down") {
  CHECK(shift_down(sr({"0", "1", "-1/12"})) == sr({"1", "-1/12"}));
  try {
    shift_down(sr({"1", "2"}));
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NonzeroConstantTerm);
  }
}

TEST_CASE("log_series") {
  CHECK(log_series(sr({"1", "1", "0", "0"})) == sr({"0", "1", "-1/2", "1/3"}));
  const auto l = log_series(deformed_exp_series(theta, Polynomial(1), 2));
  CHECK(l[0].is_zero());
  CHECK(l[1] == Polynomial(1));
  CHECK(l[2] == (theta - 1) / Rational(2));
  CHECK(log_series(deformed_exp_series(Rational(1), Rational(1), 4)) == sr({"0", "1", "0", "0", "0"}));
  try {
    log_series(sr({"2", "1"}));
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::ConstantTermNotOne);
  }
}

TEST_CASE("series ring laws and reciprocal involution on random input") {
  gen::Source g(2024);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(0, 7));
    const auto a = g.series(n), b = g.series(n), c = g.series(n);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b - b == a);
    const auto u = g.series(n, true);
    CHECK(reciprocal(reciprocal(u)) == u);
    CHECK(u * reciprocal(u) == Series<Rational>::constant(1, n));
    CHECK(u.negate_variable().negate_variable() == u);
  }
  for (int i = 0; i < 30; ++i) {
    const auto u = g.poly_series(5, true);
    CHECK(reciprocal(reciprocal(u)) == u);
  }
}

TEST_CASE("symbolic and numeric coefficients agree") {
  gen::Source g(7);
  for (int i = 0; i < 25; ++i) {
    const Rational t = g.rational(4);
    const Rational s = g.nonzero_rational(4);
    const auto sym = reciprocal(deformed_exp_series(theta, Polynomial(s), 7));
    const auto num = reciprocal(deformed_exp_series(t, s, 7));
    CHECK(evaluate_at(sym, t) == num);
    const auto lsym = log_series(deformed_exp_series(theta, Polynomial(s), 6));
    CHECK(evaluate_at(lsym, t) == log_series(deformed_exp_series(t, s, 6)));
  }
}

TEST_CASE("series shape errors") {
  CHECK_THROWS_AS(Series<Rational>(std::vector<Rational>{}), Error);
  CHECK(Series<Rational>::variable(0) == Series<Rational>::constant(0, 0));
  CHECK(sr({"1", "2", "3"}).shift_up() == sr({"0", "1", "2"}));
  CHECK(sr({"1", "2", "3"}).truncate(1) == sr({"1", "2"}));
}
