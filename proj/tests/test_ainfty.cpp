#include <doctest.h>

#include <functional>
#include <random>

#include "floerkit/ainfty.hpp"
#include "floerkit/error.hpp"
#include "floerkit/morse.hpp"

using namespace floerkit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;  // nothing thrown
}

Series coeff(const Vector& v, const Word& w) {
  auto it = v.find(w);
  return it == v.end() ? Series() : it->second;
}

// a in CF(0,1) and b in CF(1,2) with m1 and m2 written in by hand.
AInftyDatum small_datum(int mu_a) {
  AInftyDatum d;
  d.l = 2;
  d.generators = {{"a", 0, 1, mu_a}, {"a'", 0, 1, mu_a + 1}, {"b", 1, 2, 0}, {"b'", 1, 2, 1}, {"c", 0, 2, mu_a}};
  d.m.add({0}, 1, Series(3));
  d.m.add({2}, 3, Series(5));
  d.m.add({0, 2}, 4, Series(7));
  return d;
}

}  // namespace

TEST_CASE("differential signs on hand examples") {
  for (int mu_a : {0, 1}) {
    AInftyDatum d = small_datum(mu_a);
    // one factor: -m1
    CHECK(coeff(differential(d, {0}), {1}) == Series(-3));
    // two factors: m1 on the left +, on the right (-1)^mu(a), m2 enters with -
    Vector v = differential(d, {0, 2});
    CHECK(coeff(v, {1, 2}) == Series(3));
    CHECK(coeff(v, {0, 3}) == Series(mu_a % 2 == 0 ? 5 : -5));
    CHECK(coeff(v, {4}) == Series(-7));
    CHECK(v.size() == 3);
  }
}

TEST_CASE("strings and restriction") {
  AInftyDatum s = sphere_fixture(2, 2);
  // pairs 01, 12, 02 carry two generators each; strings of length two chain 01 with 12
  const auto all = s.strings();
  CHECK(all.size() == 6 + 4);
  CHECK(std::is_sorted(all.begin(), all.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }));
  AInftyDatum r = s.restricted({0, 2});
  CHECK(r.l == 1);
  CHECK(r.generators.size() == 2);
  CHECK(check_a_infinity(r).ok());
}

TEST_CASE("sphere fixtures satisfy the relations") {
  for (int n = 2; n <= 4; ++n)
    for (int l = 1; l <= 3; ++l) {
      AInftyDatum s = sphere_fixture(n, l);
      CHECK(check_a_infinity(s).ok());
      CHECK(validate_axioms_A(assemble_differential(s)).ok());
    }
}

TEST_CASE("a sign flip is caught once there are three labels") {
  AInftyDatum s = sphere_fixture(2, 3);
  const int a = s.index_of("max@01"), b = s.index_of("max@12"), out = s.index_of("max@02");
  Tensor flipped;
  for (const auto& [w, row] : s.m.entries())
    for (const auto& [g, c] : row) flipped.add(w, g, w == Word{a, b} && g == out ? -c : c);
  s.m = flipped;
  CHECK(!check_a_infinity(s).ok());
}

TEST_CASE("transfer fixtures and sign mutants") {
  for (int l : {3, 4}) {
    CAPTURE(l);
    TransferFixture f = transfer_fixture(l, 1);
    CHECK(f.target.m.count_arity(3) > 0);
    CHECK(check_a_infinity(f.source).ok());
    CHECK(check_a_infinity(f.target).ok());
    CHECK(check_chain_map(f.source, f.target, f.h).ok());
    CHECK(validate_axioms_A(assemble_differential(f.target)).ok());
    CHECK(validate_axioms_B(f.source, f.target, f.h).ok());
    DeltaSigns s;
    s.q_l2 = false;
    CHECK(!check_a_infinity(f.target, s).ok());
    s = {};
    s.position = false;
    CHECK(!check_a_infinity(f.target, s).ok());
    s = {};
    s.koszul = false;
    CHECK(!check_a_infinity(f.target, s).ok());
    MapSigns ms;
    ms.block_sign = false;
    CHECK(!check_chain_map(f.source, f.target, f.h, ms).ok());
  }
}

TEST_CASE("symbolic expansion of delta squared") {
  for (int q = 1; q <= 8; ++q) {
    const auto r = symbolic_delta_squared(q);
    CHECK(r.ok());
    CHECK(r.q_reading_equivalent);
  }
  const auto r8 = symbolic_delta_squared(8);
  CHECK(r8.disjoint_pairs > 0);
  CHECK(r8.nested_terms > 0);
  for (int mutant = 0; mutant < 3; ++mutant) {
    SymbolicSigns s;
    if (mutant == 0) s.q_l2 = false;
    if (mutant == 1) s.position = false;
    if (mutant == 2) s.commutation = false;
    CHECK(!symbolic_delta_squared(8, s).ok());
  }
}

TEST_CASE("consistency lemmas") {
  for (const auto& rep : {consistency_lemma_morphisms(6), consistency_lemma_homotopies(6)}) {
    CAPTURE(rep.name);
    CHECK(rep.ok());
    CHECK(!rep.terms.empty());
  }
}

TEST_CASE("GF(2) polynomials") {
  Gf2Poly a = Gf2Poly::variable(0), b = Gf2Poly::variable(1), one = Gf2Poly::constant(true);
  CHECK(a * a == a);
  CHECK(a + a == Gf2Poly());
  CHECK((a + one) * a == Gf2Poly());
  for (std::uint32_t x = 0; x < 4; ++x) CHECK(((a + b) * b).evaluate(x) == (((x & 1) ^ (x >> 1 & 1)) & (x >> 1 & 1)));
}

TEST_CASE("identity morphism") {
  TransferFixture f = transfer_fixture(3, 2);
  MapDatum id = identity_map(f.target);
  CHECK(check_chain_map(f.target, f.target, id).ok());
  for (const auto& w : f.target.strings()) {
    Vector v = continuation(f.target, id, w);
    REQUIRE(v.size() == 1);
    CHECK(coeff(v, w) == Series(1));
  }
}

TEST_CASE("homotopies") {
  for (int l : {2, 3}) {
    HomotopyFixture f = homotopy_fixture(l, 5);
    CHECK(check_chain_map(f.base.source, f.base.target, f.h1).ok());
    CHECK(check_homotopy(f.base.source, f.base.target, f.base.h, f.h1, f.k).ok());
    HomotopySigns s;
    s.cardinality = false;
    CHECK(!check_homotopy(f.base.source, f.base.target, f.base.h, f.h1, f.k, s).ok());
  }
}

TEST_CASE("composition") {
  TransferFixture f = transfer_fixture(3, 7);
  std::mt19937 rng(5);
  MapDatum outer{random_tensor(f.source, 1, 1, 0.5, rng), {}};
  MapDatum inner{random_tensor(f.source, 1, 1, 0.5, rng), {}};
  CHECK(check_composition(f.source, f.source, outer, inner).ok());
  MapDatum id = identity_map(f.source);
  CHECK(compose_maps(f.source, id, inner).h == inner.h);
  CHECK(compose_maps(f.source, outer, id).h == outer.h);
}

TEST_CASE("augmentations") {
  AInftyDatum s = sphere_fixture(2, 2);
  Augmentation a;
  a.values[s.index_of("max@01")] = Series(1);
  a.values[s.index_of("max@02")] = Series(1);
  CHECK(check_augmentation(s, a).ok());
  Augmentation all;
  for (const char* id : {"max@01", "max@12", "max@02"}) all.values[s.index_of(id)] = Series(1);
  CHECK(!check_augmentation(s, all).closed.ok());
  // two factors: e(ab) = (-1)^mu(a) e(a) e(b)
  AInftyDatum d = small_datum(1);
  Augmentation e;
  e.values[0] = Series(2);
  e.values[2] = Series(3);
  CHECK(augmentation_value(d, e, {0, 2}) == Series(-6));
  e.values[0] = Series(2);
  CHECK(augmentation_value(small_datum(0), e, {0, 2}) == Series(6));
  CHECK(check_pushforward(s, s, identity_map(s), a).ok());
  Augmentation pushed = pushforward(s, identity_map(s), a);
  CHECK(pushed.values == a.values);
}

TEST_CASE("cohomology") {
  AInftyDatum circle;
  circle.l = 1;
  circle.generators = {{"x", 0, 1, 0}, {"y", 0, 1, 1}};
  FloerComplex c = assemble_differential(circle, 2);
  auto h = cohomology(c);
  CHECK(h.rank == 2);
  CHECK(euler_characteristic(c) == 0);
  circle.m.add({0}, 1, Series::parse("t^1/2"));
  FloerComplex acyclic = assemble_differential(circle, 2);
  CHECK(cohomology(acyclic).rank == 0);
  CHECK(cohomology(acyclic, CoefficientRing::Integer).rank == 0);
  // 2 is not a unit over Z
  AInftyDatum two = circle;
  two.m = Tensor();
  two.m.add({0}, 1, Series(2));
  CHECK(kind_of([&] { cohomology(assemble_differential(two), CoefficientRing::Integer); }) == ErrorKind::NonUnitPivot);
  CHECK(cohomology(assemble_differential(two)).rank == 0);
  CHECK(kind_of([&] { euler_characteristic(assemble_differential(circle)); }) == ErrorKind::RequiresModTwoGrading);
}

TEST_CASE("cohomology is unchanged by a unit triangular change of basis") {
  // x -> x + t y' on a complex with two copies of the circle
  AInftyDatum d;
  d.l = 1;
  d.generators = {{"x", 0, 1, 0}, {"y", 0, 1, 1}, {"u", 0, 1, 0}, {"v", 0, 1, 1}};
  d.m.add({0}, 1, Series(1));
  AInftyDatum e = d;
  e.m = Tensor();
  e.m.add({0}, 1, Series(1));
  e.m.add({0}, 3, Series::parse("t"));
  e.m.add({2}, 1, Series::parse("-t^2"));
  e.m.add({2}, 3, Series::parse("-t^3"));
  CHECK(check_a_infinity(e).ok());
  CHECK(cohomology(assemble_differential(d)).rank == cohomology(assemble_differential(e)).rank);
  CHECK(cohomology(assemble_differential(e)).rank == 2);
}

TEST_CASE("degree violations") {
  AInftyDatum d;
  d.l = 1;
  d.generators = {{"x", 0, 1, 0}, {"y", 0, 1, 0}};
  d.m.add({0}, 1, Series(1));
  CHECK(kind_of([&] { check_a_infinity(d); }) == ErrorKind::DegreeViolation);
}
