#include <doctest.h>

#include <functional>
#include <numeric>

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

std::optional<std::pair<int, Series>> product(const AInftyDatum& d, const std::string& a, const std::string& b) {
  const Tensor::Row* row = d.m.find({d.index_of(a), d.index_of(b)});
  if (row == nullptr || row->empty()) return std::nullopt;
  REQUIRE(row->size() == 1);
  return *row->begin();
}

MorseDatum torus() {
  MorseDatum t;
  t.n = 2;
  t.points = {{"a", 0, Rational(0)}, {"b", 1, Rational(1)}, {"c", 1, Rational(1)}, {"d", 2, Rational(2)}};
  t.flows = {{"b", "a", 1}, {"b", "a", -1}, {"c", "a", 1}, {"c", "a", -1},
             {"d", "b", 1}, {"d", "b", -1}, {"d", "c", 1}, {"d", "c", -1}};
  return t;
}

}  // namespace

TEST_CASE("sphere: unit and product table") {
  for (int n = 2; n <= 6; ++n) {
    AInftyDatum s = sphere_fixture(n, 2);
    CHECK(check_a_infinity(s).ok());
    for (const char* out : {"max@02", "min@02"}) {
      // max@01 is a two-sided unit
      const std::string right = std::string(out).substr(0, 3) + "@12";
      auto p = product(s, "max@01", right);
      REQUIRE(p);
      CHECK(s.generators[static_cast<std::size_t>(p->first)].id == out);
      CHECK(p->second == Series(1));
    }
    auto q = product(s, "min@01", "max@12");
    REQUIRE(q);
    CHECK(s.generators[static_cast<std::size_t>(q->first)].id == "min@02");
    CHECK(!product(s, "min@01", "min@12"));
    CHECK(s.intersection_number == 1 + (n % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("sphere: associativity on three labels") {
  for (int n = 2; n <= 5; ++n) {
    AInftyDatum s = sphere_fixture(n, 3);
    CHECK(check_a_infinity(s).ok());
    for (const char* x : {"max", "min"})
      for (const char* y : {"max", "min"})
        for (const char* z : {"max", "min"}) {
          auto xy = product(s, std::string(x) + "@01", std::string(y) + "@12");
          auto yz = product(s, std::string(y) + "@12", std::string(z) + "@23");
          std::optional<int> left, right;
          if (xy)
            if (auto r = product(s, s.generators[static_cast<std::size_t>(xy->first)].id, std::string(z) + "@23"))
              left = r->first;
          if (yz)
            if (auto r = product(s, std::string(x) + "@01", s.generators[static_cast<std::size_t>(yz->first)].id))
              right = r->first;
          CHECK(left == right);
        }
  }
}

TEST_CASE("sphere: cohomology and Euler characteristic") {
  for (int n = 2; n <= 6; ++n) {
    AInftyDatum s = sphere_fixture(n, 1);
    auto h = cohomology(assemble_differential(s));
    CHECK(h.rank == 2);
    CHECK(h.ranks == std::map<int, std::size_t>{{0, 1}, {n, 1}});
    const long chi = euler_characteristic(assemble_differential(s, 2));
    CHECK(chi == -*s.intersection_number);
  }
}

TEST_CASE("Morse complexes") {
  MorseDatum point;
  point.n = 1;
  point.points = {{"p", 0, Rational(0)}};
  auto pd = build_floer_complex(point);
  CHECK(pd.generators.size() == 1);
  CHECK(pd.generators[0].mu == 1);
  CHECK(cohomology(assemble_differential(pd)).rank == 1);

  auto td = build_floer_complex(torus());
  CHECK(cohomology(assemble_differential(td)).rank == 4);
  CHECK(euler_characteristic(assemble_differential(td, 2)) == 0);

  MorseDatum z;
  z.n = 1;
  z.points = {{"p", 1, Rational(3)}, {"q", 0, Rational(1)}};
  z.flows = {{"p", "q", 1}};
  auto zd = build_floer_complex(z);
  REQUIRE(zd.m.find({0}));
  // least action normalised to zero
  CHECK(zd.m.find({0})->begin()->second == Series(1));
  CHECK(cohomology(assemble_differential(zd, 2)).rank == 0);
}

TEST_CASE("energies are relative to the least flow") {
  MorseDatum m;
  m.n = 1;
  m.points = {{"p", 1, Rational(5)}, {"q", 0, Rational(1)}, {"r", 1, Rational(7, 2)}};
  m.flows = {{"p", "q", 1}, {"r", "q", 2}};
  auto d = build_floer_complex(m);
  CHECK(d.m.find({0})->begin()->second == Series::parse("t^3/2"));
  CHECK(d.m.find({2})->begin()->second == Series(2));
}

TEST_CASE("triples give a product") {
  MorseDatum m;
  m.n = 2;
  m.points = {{"x", 2, Rational(0)}};
  m.triples = {{"x", "x", "x", 1, Rational(1, 2)}};
  auto d = build_floer_complex(m);
  CHECK(d.l == 2);
  CHECK(d.generators.size() == 3);
  auto row = d.m.find({d.index_of("x@01"), d.index_of("x@12")});
  REQUIRE(row);
  CHECK(row->begin()->first == d.index_of("x@02"));
}

TEST_CASE("invalid Morse data") {
  MorseDatum bad;
  bad.n = 2;
  bad.points = {{"a", 2, Rational(2)}, {"b", 1, Rational(1)}, {"c", 0, Rational(0)}};
  bad.flows = {{"a", "b", 1}, {"b", "c", 1}};
  CHECK(kind_of([&] { build_floer_complex(bad); }) == ErrorKind::NotAComplex);
  MorseDatum skip = bad;
  skip.flows = {{"a", "c", 1}};
  CHECK(kind_of([&] { build_floer_complex(skip); }) == ErrorKind::InvalidInput);
  MorseDatum unknown = bad;
  unknown.flows = {{"a", "zz", 1}};
  CHECK(kind_of([&] { build_floer_complex(unknown); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { sphere_fixture(1); }) == ErrorKind::InvalidInput);
}

TEST_CASE("SFT index bound examples") {
  auto a = sft_index_bound({3, 0, 1, {1}});
  CHECK(a.mu_max == -4);
  CHECK(a.bound == -2);
  CHECK(a.satisfies);
  auto b = sft_index_bound({2, 0, 2, {1, 1}});
  CHECK(b.majorant == -2);
  CHECK(b.satisfies);
  CHECK(kind_of([] { sft_index_bound({2, 1, 1, {1}}); }) == ErrorKind::HypothesisViolated);
  CHECK(kind_of([] { sft_index_bound({3, 0, 2, {1}}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { sft_index_bound({3, 0, 1, {0}}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { sft_index_bound({1, 0, 1, {1}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("SFT index bound sweep") {
  std::size_t cases = 0;
  for (int n = 2; n <= 6; ++n)
    for (int g = 0; g <= (n == 2 ? 0 : 3); ++g)
      for (int v = 1; v <= 5; ++v) {
        std::vector<int> m(static_cast<std::size_t>(v), 1);
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
          if (k == m.size()) {
            const auto r = sft_index_bound({n, g, v, m});
            const long total = std::accumulate(m.begin(), m.end(), 0L);
            // by hand: each puncture gives 2 - 2(n-1)m_i, the surface (n-3)(2-2g)
            long expect = (n - 3) * (2 - 2L * g);
            for (int mi : m) expect += 2 - 2L * (n - 1) * mi;
            CHECK(r.bound == expect);
            CHECK(r.mu_max == -2L * (n - 1) * total);
            CHECK(r.bound <= r.majorant);
            CHECK((r.bound == r.majorant) == (total == v));
            CHECK(r.bound <= -2);
            CHECK(r.satisfies);
            ++cases;
            return;
          }
          for (int x = 1; x <= 3; ++x) {
            m[k] = x;
            rec(k + 1);
          }
        };
        rec(0);
      }
  CHECK(cases > 1000);
}

TEST_CASE("SFT index bound is monotone") {
  for (int n = 4; n <= 6; ++n)
    for (int g = 0; g <= 3; ++g) {
      std::vector<int> m{1, 2};
      long prev = sft_index_bound({n, g, 2, m}).bound;
      for (int step = 0; step < 4; ++step) {
        ++m[0];
        const long next = sft_index_bound({n, g, 2, m}).bound;
        CHECK(next < prev);
        prev = next;
      }
      std::vector<int> w{1};
      prev = sft_index_bound({n, g, 1, w}).bound;
      for (int v = 2; v <= 5; ++v) {
        w.push_back(1);
        const long next = sft_index_bound({n, g, v, w}).bound;
        CHECK(next < prev);
        prev = next;
      }
    }
}
