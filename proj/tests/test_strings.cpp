#include <doctest.h>

#include <random>

#include "floerkit/error.hpp"
#include "floerkit/strings.hpp"

using namespace floerkit;

namespace {

OpenString random_string(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), mu(-3, 5), shift(-4, 4);
  std::vector<ElementaryString> f;
  const int q = len(rng);
  for (int k = 0; k < q; ++k)
    f.push_back({"g" + std::to_string(k), "L" + std::to_string(k), "L" + std::to_string(k + 1), mu(rng)});
  return OpenString(std::move(f), shift(rng));
}

}  // namespace

TEST_CASE("empty string") {
  OpenString e = OpenString::empty();
  CHECK(e.cardinality() == 0);
  CHECK(e.index() == 0);
  CHECK(dual(e, 3).index() == 3);
  CHECK(dual(dual(e, 3), 3) == e);
}

TEST_CASE("dual of elementary strings") {
  ElementaryString a{"a", "L0", "L1", 1};
  ElementaryString d = dual(a, 2);
  CHECK(d.mu == 1);
  CHECK(d.source == "L1");
  CHECK(d.target == "L0");
  CHECK(dual(d, 2) == a);
}

TEST_CASE("dual reverses factors") {
  ElementaryString a{"a", "L0", "L1", 1}, b{"b", "L1", "L2", 4};
  OpenString s({a, b});
  OpenString d = dual(s, 3);
  REQUIRE(d.cardinality() == 2);
  CHECK(d.factors()[0] == dual(b, 3));
  CHECK(d.factors()[1] == dual(a, 3));
}

TEST_CASE("tensor") {
  ElementaryString a{"a", "L0", "L1", 1}, b{"b", "L1", "L2", 4};
  OpenString sa({a}), sb({b});
  CHECK(tensor(OpenString::empty(), sa) == sa);
  CHECK(tensor(sa, OpenString::empty()) == sa);
  CHECK(tensor(sa, sb).index() == 5);
  CHECK(tensor(shift(sa, 1), shift(sb, -1)) == tensor(sa, sb));
}

TEST_CASE("random properties") {
  std::mt19937 rng(3);
  for (int it = 0; it < 500; ++it) {
    OpenString a = random_string(rng, 4), b = random_string(rng, 4), c = random_string(rng, 4);
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    if (a.cardinality() > 0) {
      CHECK(dual(dual(a, n), n) == a);
      CHECK(a.index() + dual(a, n).index() == n * a.cardinality());
    }
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    CHECK(tensor(a, b).cardinality() == a.cardinality() + b.cardinality());
    CHECK(tensor(a, b).index() == a.index() + b.index());
    CHECK(shift(shift(a, 2), -5) == shift(a, -3));
    CHECK(tensor(shift(a, 2), b) == shift(tensor(a, b), 2));
    for (int modulus : {0, 1, 2, 3, 5}) {
      const int e = std::uniform_int_distribution<int>(-7, 7)(rng);
      const int g = grading(shift(a, e), modulus);
      if (modulus == 0) CHECK(g == a.index() + a.cardinality() + e);
      else CHECK(g == ((a.index() + a.cardinality() + e) % modulus + modulus) % modulus);
    }
  }
}

TEST_CASE("shift classes") {
  OpenString s({{"x", "L0", "L1", 2}});
  CHECK(equivalent(shift(s, 0), s, 0));
  CHECK(!equivalent(shift(s, 1), s, 0));
  for (int e = -5; e <= 5; ++e) CHECK(equivalent(shift(s, e), s, 1));
  CHECK(equivalent(shift(s, 4), s, 2));
  CHECK(!equivalent(shift(s, 3), s, 2));
  CHECK_THROWS_AS(grading(s, -1), Error);
}
