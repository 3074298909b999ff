#include "floerkit/morse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "floerkit/error.hpp"

namespace floerkit {

int MorseDatum::index_of(const std::string& id) const {
  for (std::size_t k = 0; k < points.size(); ++k)
    if (points[k].id == id) return static_cast<int>(k);
  throw Error(ErrorKind::InvalidInput, "unknown critical point '" + id + "'");
}

void check_morse(const MorseDatum& m) {
  if (m.n < 1) throw Error(ErrorKind::InvalidInput, "manifold dimension must be positive");
  for (std::size_t k = 0; k < m.points.size(); ++k) {
    const auto& p = m.points[k];
    if (p.index < 0 || p.index > m.n)
      throw Error(ErrorKind::InvalidInput, "critical point '" + p.id + "' has index outside 0..n");
    for (std::size_t j = 0; j < k; ++j)
      if (m.points[j].id == p.id) throw Error(ErrorKind::InvalidInput, "duplicate critical point '" + p.id + "'");
  }
  std::map<std::pair<int, int>, long> d;
  for (const auto& f : m.flows) {
    const int a = m.index_of(f.from), b = m.index_of(f.to);
    if (m.points[static_cast<std::size_t>(a)].index != m.points[static_cast<std::size_t>(b)].index + 1)
      throw Error(ErrorKind::InvalidInput, "flow " + f.from + " -> " + f.to + " does not drop the index by one");
    d[{a, b}] += f.count;
  }
  for (const auto& t : m.triples) {
    m.index_of(t.a);
    m.index_of(t.b);
    m.index_of(t.out);
    if (sgn(t.action) < 0) throw Error(ErrorKind::InvalidInput, "negative action on triple " + t.a + " " + t.b);
  }
  const int size = static_cast<int>(m.points.size());
  for (int a = 0; a < size; ++a)
    for (int c = 0; c < size; ++c) {
      long s = 0;
      for (int b = 0; b < size; ++b) {
        auto ab = d.find({a, b}), bc = d.find({b, c});
        if (ab != d.end() && bc != d.end()) s += ab->second * bc->second;
      }
      if (s != 0)
        throw Error(ErrorKind::NotAComplex, "Morse differential squares to " + std::to_string(s) + " on " +
                                                m.points[static_cast<std::size_t>(a)].id + " -> " +
                                                m.points[static_cast<std::size_t>(c)].id);
    }
}

AInftyDatum build_floer_complex(const MorseDatum& m) {
  check_morse(m);
  AInftyDatum d;
  d.intersection_number = m.intersection_number;
  const bool products = !m.triples.empty();
  d.l = products ? 2 : 1;
  std::vector<std::pair<int, int>> pairs{{0, 1}};
  if (products) pairs = {{0, 1}, {0, 2}, {1, 2}};
  // generator of point k over pair p
  std::map<std::pair<int, int>, int> slot;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t k = 0; k < m.points.size(); ++k) {
      const auto& cp = m.points[k];
      std::string id = cp.id;
      if (products) id += "@" + std::to_string(pairs[p].first) + std::to_string(pairs[p].second);
      slot[{static_cast<int>(p), static_cast<int>(k)}] = static_cast<int>(d.generators.size());
      d.generators.push_back({id, pairs[p].first, pairs[p].second, m.n - cp.index});
    }

  std::optional<Rational> least;
  for (const auto& f : m.flows) {
    Rational e = m.points[static_cast<std::size_t>(m.index_of(f.from))].value -
                 m.points[static_cast<std::size_t>(m.index_of(f.to))].value;
    if (!least || e < *least) least = e;
  }
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (const auto& f : m.flows) {
      if (f.count == 0) continue;
      const int a = m.index_of(f.from), b = m.index_of(f.to);
      Rational e = m.points[static_cast<std::size_t>(a)].value - m.points[static_cast<std::size_t>(b)].value - *least;
      d.m.add({slot[{static_cast<int>(p), a}]}, slot[{static_cast<int>(p), b}],
              Series::monomial(Rational(f.count), Exponent(e)));
    }
  for (const auto& t : m.triples) {
    if (t.count == 0) continue;
    d.m.add({slot[{0, m.index_of(t.a)}], slot[{2, m.index_of(t.b)}]}, slot[{1, m.index_of(t.out)}],
            Series::monomial(Rational(t.count), Exponent(t.action)));
  }
  check_degrees(d, d.m, 2, "m");
  return d;
}

AInftyDatum sphere_fixture(int n, int l) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "sphere fixture needs n >= 2");
  if (l < 1) throw Error(ErrorKind::InvalidInput, "sphere fixture needs l >= 1");
  AInftyDatum d;
  d.l = l;
  d.intersection_number = 1 + (n % 2 == 0 ? 1 : -1);
  std::map<std::pair<int, int>, int> top, bottom;
  for (int i = 0; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) {
      const std::string tag = std::to_string(i) + std::to_string(j);
      top[{i, j}] = static_cast<int>(d.generators.size());
      d.generators.push_back({"max" + (l > 1 ? "@" + tag : std::string()), i, j, 0});
      bottom[{i, j}] = static_cast<int>(d.generators.size());
      d.generators.push_back({"min" + (l > 1 ? "@" + tag : std::string()), i, j, n});
    }
  const Series one(1);
  for (int i = 0; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j)
      for (int k = j + 1; k <= l; ++k) {
        d.m.add({top[{i, j}], top[{j, k}]}, top[{i, k}], one);
        d.m.add({top[{i, j}], bottom[{j, k}]}, bottom[{i, k}], one);
        d.m.add({bottom[{i, j}], top[{j, k}]}, bottom[{i, k}], one);
      }
  check_degrees(d, d.m, 2, "m");
  return d;
}

SftIndexBound sft_index_bound(const SftIndexQuery& q) {
  if (q.n < 2) throw Error(ErrorKind::InvalidInput, "n must be at least 2");
  if (q.g < 0) throw Error(ErrorKind::InvalidInput, "genus must be nonnegative");
  if (q.v < 1) throw Error(ErrorKind::InvalidInput, "at least one puncture is required");
  if (q.m.size() != static_cast<std::size_t>(q.v))
    throw Error(ErrorKind::InvalidInput, "expected one multiplicity per puncture");
  if (std::any_of(q.m.begin(), q.m.end(), [](int x) { return x < 1; }))
    throw Error(ErrorKind::InvalidInput, "multiplicities must be positive");
  if (q.n == 2 && q.g > 0) throw Error(ErrorKind::HypothesisViolated, "n = 2 requires genus 0");
  const long total = std::accumulate(q.m.begin(), q.m.end(), 0L);
  SftIndexBound out;
  out.mu_max = -2L * (q.n - 1) * total;
  out.bound = out.mu_max + static_cast<long>(q.n - 3) * (2 - 2L * q.g) + 2L * q.v;
  out.majorant = static_cast<long>(q.n - 3) * (2 - 2L * q.g - 2L * q.v) - 2L * q.v;
  out.satisfies = out.bound <= -2;
  return out;
}

}  // namespace floerkit
