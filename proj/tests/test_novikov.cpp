#include <doctest.h>

#include <map>
#include <random>

#include "floerkit/error.hpp"
#include "floerkit/novikov.hpp"

using namespace floerkit;

namespace {

// Reference arithmetic: exponent -> coefficient, no cutoffs.
using Dense = std::map<Rational, Rational>;

Dense dense(const Series& s) {
  Dense d;
  for (const auto& t : s.terms()) d[t.exponent.value()] = t.coefficient;
  return d;
}

Dense dense_add(const Dense& a, const Dense& b) {
  Dense out = a;
  for (const auto& [e, c] : b) out[e] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Series random_series(std::mt19937& rng, int max_terms = 8) {
  std::uniform_int_distribution<int> count(0, max_terms), num(-6, 12), den(1, 4), coeff(-5, 5);
  std::vector<Term> terms;
  for (int k = count(rng); k > 0; --k) {
    Rational e(num(rng), den(rng));
    e.canonicalize();
    terms.push_back({Exponent(e), Rational(coeff(rng))});
  }
  return Series::from_terms(std::move(terms));
}

Series unit_series(std::mt19937& rng) {
  Series s = random_series(rng, 5);
  std::uniform_int_distribution<int> shift(-3, 3);
  std::bernoulli_distribution neg(0.5);
  Series lead = Series::monomial(Rational(neg(rng) ? -1 : 1), Exponent(shift(rng)));
  // keep the added monomial leading
  Series tail;
  for (const auto& t : s.terms())
    if (lead.valuation()->value() < t.exponent.value()) tail += Series::monomial(t.coefficient, t.exponent);
  return lead + tail;
}

}  // namespace

TEST_CASE("addition merges like terms") {
  CHECK((Series::parse("t^0") + Series::parse("-t^0")).is_zero());
  CHECK(Series::parse("2t^1/2 + t^3") + Series::parse("t^1/2") == Series::parse("3t^1/2 + t^3"));
  CHECK(Series::parse("1 - t") + Series::parse("t") == Series(1));
}

TEST_CASE("multiplication") {
  CHECK(Series::parse("t^1/2") * Series::parse("t^3/2") == Series::parse("t^2"));
  CHECK(Series::parse("1 - t") * Series::parse("1 + t") == Series::parse("1 - t^2"));
}

TEST_CASE("valuation") {
  CHECK(!Series().valuation());
  CHECK(Series::parse("3t^-2 + t^5").valuation()->value() == -2);
  CHECK(Series::monomial(1, Exponent(Rational(7, 3))).valuation()->value() == Rational(7, 3));
}

TEST_CASE("cutoffs propagate") {
  Series a = Series::parse("1 + t + O(t^3)");
  Series b = Series::parse("t^1/2");
  Series s = a + b;
  REQUIRE(s.cutoff());
  CHECK(s.cutoff()->value() == 3);
  Series p = a * Series::parse("t + O(t^2)");
  REQUIRE(p.cutoff());
  // a known mod t^3, times something of valuation 1: known mod t^4 from a,
  // while the O(t^2) of the other factor times val(a) = 0 bounds it at t^2
  CHECK(p.cutoff()->value() == 2);
  CHECK(p == Series::parse("t + O(t^2)"));
}

TEST_CASE("invert") {
  Series inv = invert(Series::parse("1 - t"), Exponent(4));
  CHECK(inv == Series::parse("1 + t + t^2 + t^3 + O(t^4)"));
  CHECK(invert(Series(1), Exponent(5)).terms() == Series(1).terms());
  CHECK_THROWS_AS(invert(Series::parse("2 + t"), Exponent(3)), Error);
  try {
    invert(Series::parse("2 + t"), Exponent(3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAUnit);
  }
  Series q = invert(Series::parse("2 + t"), Exponent(3), CoefficientRing::Rational);
  CHECK((Series::parse("2 + t") * q).congruent(Series(1), Exponent(3)));
}

TEST_CASE("parser and printer") {
  Series s = Series::parse("3t^1/2 - 2t^0 + t^7/3");
  CHECK(s.to_string() == "-2t^0 + 3t^1/2 + t^7/3");
  CHECK(Series::parse(s.to_string()) == s);
  CHECK(Series::parse("  3 t ^ 1/2\t- 2") == Series::parse("3t^1/2-2"));
  CHECK(Series::parse("(3/2)t^-1/2 \xE2\x88\x92 t").to_string() == "(3/2)t^-1/2 - t^1");
  CHECK(Series().to_string() == "0");
  CHECK(Series::parse("0") == Series());
  try {
    Series::parse("3t^^2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(Series::parse("3x"), ParseError);
  CHECK_THROWS_AS(Series::parse(""), ParseError);
}

TEST_CASE("ring axioms on random series against the reference arithmetic") {
  std::mt19937 rng(20261019);
  for (int it = 0; it < 1000; ++it) {
    Series a = random_series(rng), b = random_series(rng), c = random_series(rng);
    CHECK(dense(a + b) == dense_add(dense(a), dense(b)));
    CHECK(dense(a * b) == dense_mul(dense(a), dense(b)));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).valuation()->value() == a.valuation()->value() + b.valuation()->value());
    CHECK(Series::parse(a.to_string()) == a);
  }
}

TEST_CASE("unit inversion verified by multiplication") {
  std::mt19937 rng(7);
  for (int it = 0; it < 1000; ++it) {
    Series a = unit_series(rng);
    REQUIRE(is_unit(a, CoefficientRing::Integer));
    Exponent cutoff(std::uniform_int_distribution<int>(1, 6)(rng));
    Series b = invert(a, cutoff);
    CHECK(b.is_integral());
    // a*b = 1 below the precision the result carries
    Series prod = a * b;
    REQUIRE(b.cutoff());
    CHECK(prod.congruent(Series(1), *b.cutoff() + *a.valuation()));
    CHECK(!(*b.cutoff() + *a.valuation() < cutoff));
  }
}

TEST_CASE("rank one local coefficients") {
  RankOneModule m("lambda");
  CHECK(m.flip().flip() == m);
  LocalValue plus = coefficient_value(m, Exponent(0), true);
  CHECK(plus.value == Series(1));
  CHECK(plus.generator == "lambda");
  CHECK(coefficient_value(m.flip(), Exponent(0), true).value == Series(-1));
  Exponent a(Rational(5, 2));
  CHECK(coefficient_value(m.flip(), a, true).value == -coefficient_value(m, a, true).value);
  CHECK(coefficient_value(m, a, false).value == -coefficient_value(m, a, true).value);
  CHECK(coefficient_value(m, a, true).value.valuation()->value() == Rational(5, 2));
}

TEST_CASE("monomial division") {
  CHECK(divide_by_monomial(Series::parse("2t + 4t^3"), Series::parse("2t")) == Series::parse("1 + 2t^2"));
  CHECK_THROWS(divide_by_monomial(Series(1), Series::parse("1 + t")));
}
