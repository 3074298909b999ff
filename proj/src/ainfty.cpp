#include "floerkit/ainfty.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "floerkit/error.hpp"
#include "floerkit/polytopes.hpp"

namespace floerkit {

namespace {

constexpr std::size_t kMaxMessages = 8;

bool odd(long v) { return v % 2 != 0; }

void accumulate(Vector& v, const Word& w, const Series& c) {
  if (c.is_zero() && c.is_exact()) return;
  auto [it, inserted] = v.try_emplace(w, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero() && it->second.is_exact()) v.erase(it);
}

void accumulate(Vector& v, const Vector& other, const Series& c) {
  for (const auto& [w, x] : other) accumulate(v, w, x * c);
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& e) { return e.second.is_zero(); });
}

Vector difference(const Vector& a, const Vector& b) {
  Vector d = a;
  accumulate(d, b, Series(-1));
  return d;
}

std::string vector_text(const AInftyDatum& d, const Vector& v) {
  std::string out;
  for (const auto& [w, c] : v) {
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")" + d.describe(w);
  }
  return out.empty() ? "0" : out;
}

int prefix_mu(const AInftyDatum& d, const Word& w, std::size_t end) {
  int s = 0;
  for (std::size_t p = 0; p < end; ++p) s += d.generators[static_cast<std::size_t>(w[p])].mu;
  return s;
}

Word slice(const Word& w, std::size_t begin, std::size_t len) {
  return Word(w.begin() + static_cast<long>(begin), w.begin() + static_cast<long>(begin + len));
}

// One block of a tensor product of maps: identity when op is null.
struct Block {
  const Tensor* op;
  int length;
  int parity;  // degree of the map mod 2, for Koszul signs
};

// Apply op_1 x ... x op_b to w with Koszul signs and add c times the result to out.
void apply_blocks(const AInftyDatum& src, const std::vector<Block>& blocks, const Word& w, const Series& c,
                  bool koszul, Vector& out) {
  std::vector<std::pair<Word, Series>> partial{{Word{}, c}};
  std::size_t pos = 0;
  int mu_before = 0;
  for (const auto& b : blocks) {
    const auto len = static_cast<std::size_t>(b.length);
    bool flip = koszul && odd(static_cast<long>(b.parity) * mu_before);
    if (b.op == nullptr) {
      for (auto& [word, coeff] : partial) {
        word.push_back(w[pos]);
        if (flip) coeff = -coeff;
      }
    } else {
      const Tensor::Row* row = b.op->find(slice(w, pos, len));
      if (row == nullptr) return;
      std::vector<std::pair<Word, Series>> next;
      next.reserve(partial.size() * row->size());
      for (const auto& [word, coeff] : partial) {
        for (const auto& [g, x] : *row) {
          Word nw = word;
          nw.push_back(g);
          Series nc = coeff * x;
          next.emplace_back(std::move(nw), flip ? -nc : nc);
        }
      }
      partial = std::move(next);
    }
    mu_before += prefix_mu(src, w, pos + len) - prefix_mu(src, w, pos);
    pos += len;
  }
  for (const auto& [word, coeff] : partial) accumulate(out, word, coeff);
}

int block_parity_exponent(const std::vector<int>& parts) {
  const int q = static_cast<int>(parts.size());
  int e = 0;
  for (int j = 1; j <= q; ++j) e += (q - j) * (parts[static_cast<std::size_t>(j - 1)] - 1);
  return e;
}

// Parts of a composition whose every block has an entry in t, so that
// compositions that would vanish are skipped early.
void for_each_live_composition(const Word& w, const std::function<bool(std::size_t, int)>& live,
                               const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts;
  const int n = static_cast<int>(w.size());
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      fn(parts);
      return;
    }
    for (int f = 1; pos + f <= n; ++f) {
      if (!live(static_cast<std::size_t>(pos), f)) continue;
      parts.push_back(f);
      rec(pos + f);
      parts.pop_back();
    }
  };
  rec(0);
}

Vector card_one(const Vector& v) {
  Vector out;
  for (const auto& [w, c] : v)
    if (w.size() == 1) out.emplace(w, c);
  return out;
}

}  // namespace

void Tensor::add(const Word& inputs, int output, const Series& c) {
  if (c.is_zero() && c.is_exact()) return;
  auto& row = entries_[inputs];
  auto [it, inserted] = row.try_emplace(output, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero() && it->second.is_exact()) row.erase(it);
  if (row.empty()) entries_.erase(inputs);
}

const Tensor::Row* Tensor::find(const Word& inputs) const {
  auto it = entries_.find(inputs);
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t Tensor::size() const {
  std::size_t n = 0;
  for (const auto& [w, row] : entries_) n += row.size();
  return n;
}

std::size_t Tensor::count_arity(int arity) const {
  std::size_t n = 0;
  for (const auto& [w, row] : entries_)
    if (static_cast<int>(w.size()) == arity) n += row.size();
  return n;
}

void CheckReport::fail(std::string message) {
  ++failures;
  if (messages.size() < kMaxMessages) messages.push_back(std::move(message));
}

int AInftyDatum::index_of(const std::string& id) const {
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (generators[k].id == id) return static_cast<int>(k);
  throw Error(ErrorKind::InvalidInput, "unknown generator '" + id + "'");
}

int AInftyDatum::mu(const Word& w) const { return prefix_mu(*this, w, w.size()); }

bool AInftyDatum::composable(const Word& w) const {
  if (w.empty()) return false;
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (generators[static_cast<std::size_t>(w[p])].j != generators[static_cast<std::size_t>(w[p + 1])].i) return false;
  return true;
}

std::vector<Word> AInftyDatum::strings() const {
  std::vector<std::vector<int>> by_source(static_cast<std::size_t>(l + 1));
  for (std::size_t k = 0; k < generators.size(); ++k)
    by_source[static_cast<std::size_t>(generators[k].i)].push_back(static_cast<int>(k));
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int label) {
    if (!cur.empty()) out.push_back(cur);
    if (label > l) return;
    for (int g : by_source[static_cast<std::size_t>(label)]) {
      cur.push_back(g);
      rec(generators[static_cast<std::size_t>(g)].j);
      cur.pop_back();
    }
  };
  for (int i = 0; i <= l; ++i) rec(i);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

AInftyDatum AInftyDatum::restricted(const std::vector<int>& positions) const {
  std::map<int, int> relabel;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k] < 0 || positions[k] > l) throw Error(ErrorKind::OutOfRange, "label outside 0..l");
    if (k > 0 && positions[k] <= positions[k - 1]) throw Error(ErrorKind::InvalidInput, "positions must increase");
    relabel[positions[k]] = static_cast<int>(k);
  }
  AInftyDatum out;
  out.l = static_cast<int>(positions.size()) - 1;
  out.intersection_number = intersection_number;
  std::map<int, int> keep;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& g = generators[k];
    if (!relabel.contains(g.i) || !relabel.contains(g.j)) continue;
    keep[static_cast<int>(k)] = static_cast<int>(out.generators.size());
    out.generators.push_back({g.id, relabel[g.i], relabel[g.j], g.mu});
  }
  for (const auto& [w, row] : m.entries()) {
    Word nw;
    bool ok = true;
    for (int x : w) {
      auto it = keep.find(x);
      if (it == keep.end()) {
        ok = false;
        break;
      }
      nw.push_back(it->second);
    }
    if (!ok || !out.composable(nw)) continue;
    for (const auto& [g, c] : row) {
      auto it = keep.find(g);
      if (it != keep.end()) out.m.add(nw, it->second, c);
    }
  }
  return out;
}

std::string AInftyDatum::describe(const Word& w) const {
  std::string out = "[";
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p) out += ",";
    out += generators[static_cast<std::size_t>(w[p])].id;
  }
  return out + "]";
}

namespace {

void check_tensor_degrees(const AInftyDatum& src, const AInftyDatum& dst, const Tensor& t, int shift_constant,
                          const std::string& what) {
  for (const auto& [w, row] : t.entries()) {
    for (int x : w)
      if (x < 0 || static_cast<std::size_t>(x) >= src.generators.size())
        throw Error(ErrorKind::InvalidInput, what + ": input index out of range");
    if (!src.composable(w)) throw Error(ErrorKind::DegreeViolation, what + ": inputs " + src.describe(w) + " do not chain");
    const int expected = src.mu(w) + shift_constant - static_cast<int>(w.size());
    const int i0 = src.generators[static_cast<std::size_t>(w.front())].i;
    const int iq = src.generators[static_cast<std::size_t>(w.back())].j;
    for (const auto& [g, c] : row) {
      if (g < 0 || static_cast<std::size_t>(g) >= dst.generators.size())
        throw Error(ErrorKind::InvalidInput, what + ": output index out of range");
      const auto& out = dst.generators[static_cast<std::size_t>(g)];
      if (out.i != i0 || out.j != iq)
        throw Error(ErrorKind::DegreeViolation, what + ": output " + out.id + " has the wrong endpoints");
      if (out.mu != expected)
        throw Error(ErrorKind::DegreeViolation, what + ": entry " + src.describe(w) + " -> " + out.id +
                                                    " has index " + std::to_string(out.mu) + ", expected " +
                                                    std::to_string(expected));
      if (auto v = c.valuation(); v && *v < Exponent(0))
        throw Error(ErrorKind::InvalidInput, what + ": coefficient with negative valuation");
    }
  }
}

}  // namespace

void check_degrees(const AInftyDatum& d, const Tensor& t, int shift_constant, const std::string& what) {
  check_tensor_degrees(d, d, t, shift_constant, what);
}

void check_map_degrees(const AInftyDatum& source, const AInftyDatum& target, const MapDatum& h) {
  if (source.l != target.l) throw Error(ErrorKind::Mismatch, "source and target have different label counts");
  check_tensor_degrees(source, target, h.h, 1, "H");
  check_tensor_degrees(source, target, h.k, 0, "K");
}

Vector differential(const AInftyDatum& d, const Word& w, const DeltaSigns& signs) {
  Vector out;
  const int q = static_cast<int>(w.size());
  for (int l2 = 1; l2 <= q; ++l2) {
    const int q1 = q - l2 + 1;
    for (int i = 1; i <= q1; ++i) {
      const auto start = static_cast<std::size_t>(i - 1);
      const Tensor::Row* row = d.m.find(slice(w, start, static_cast<std::size_t>(l2)));
      if (row == nullptr) continue;
      long e = 0;
      if (signs.q_l2) e += static_cast<long>(q) * l2;
      if (signs.position) e += static_cast<long>(i) * (l2 - 1);
      if (signs.koszul) e += static_cast<long>(l2) * prefix_mu(d, w, start);
      Word prefix = slice(w, 0, start);
      Word suffix(w.begin() + static_cast<long>(start) + l2, w.end());
      for (const auto& [g, c] : *row) {
        Word nw = prefix;
        nw.push_back(g);
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        accumulate(out, nw, odd(e) ? -c : c);
      }
    }
  }
  return out;
}

int FloerComplex::degree(const Word& w) const {
  int v = datum.mu(w) + static_cast<int>(w.size()) - 1;
  if (modulus == 0) return v;
  int r = v % modulus;
  return r < 0 ? r + modulus : r;
}

FloerComplex assemble_differential(const AInftyDatum& d, int modulus, const DeltaSigns& signs) {
  if (modulus < 0) throw Error(ErrorKind::OutOfRange, "negative grading modulus");
  check_degrees(d, d.m, 2, "m");
  FloerComplex c;
  c.datum = d;
  c.modulus = modulus;
  c.basis = d.strings();
  for (const auto& w : c.basis) c.matrix[w] = differential(d, w, signs);
  return c;
}

Vector apply(const FloerComplex& c, const Vector& v) {
  Vector out;
  for (const auto& [w, x] : v) {
    auto it = c.matrix.find(w);
    if (it == c.matrix.end()) throw Error(ErrorKind::InvalidInput, "string outside the complex");
    accumulate(out, it->second, x);
  }
  return out;
}

CheckReport check_a_infinity(const AInftyDatum& d, const DeltaSigns& signs) {
  check_degrees(d, d.m, 2, "m");
  CheckReport r{"a-infinity"};
  for (const auto& w : d.strings()) {
    ++r.checked;
    Vector once = differential(d, w, signs);
    Vector twice;
    for (const auto& [u, c] : once) accumulate(twice, differential(d, u, signs), c);
    if (!is_zero(twice)) r.fail("delta^2 " + d.describe(w) + " = " + vector_text(d, twice));
  }
  return r;
}

AxiomReport validate_axioms_A(const FloerComplex& c) {
  const AInftyDatum& d = c.datum;
  AxiomReport rep{{"A1"}, {"A2"}, {"A3"}};
  std::set<Word> basis(c.basis.begin(), c.basis.end());
  for (const auto& w : c.basis) {
    ++rep.a1.checked;
    for (int g : w)
      if (!basis.contains(Word{g})) rep.a1.fail("factor " + d.generators[static_cast<std::size_t>(g)].id + " of " +
                                                d.describe(w) + " is missing");
  }
  for (const auto& [w, col] : c.matrix) {
    for (const auto& [u, x] : col) {
      if (x.is_zero()) continue;
      ++rep.a2.checked;
      const int drop = static_cast<int>(w.size()) - static_cast<int>(u.size());
      if (d.mu(u) - d.mu(w) != 1 - drop)
        rep.a2.fail(d.describe(w) + " -> " + d.describe(u) + " changes the index by " +
                    std::to_string(d.mu(u) - d.mu(w)) + " with filtration drop " + std::to_string(drop));
    }
  }
  // Dual strings are the reversed words. The expansion replaces the dual factor at
  // position i by the dual of the cardinality-one part delta_k.
  std::map<int, std::vector<std::pair<Word, Series>>> delta_one;  // output generator -> (input word, coefficient)
  for (const auto& [w, col] : c.matrix)
    for (const auto& [u, x] : col)
      if (u.size() == 1 && !x.is_zero()) delta_one[u[0]].emplace_back(w, x);
  std::map<std::pair<Word, Word>, Series> transpose;  // (dual output, dual input) -> coefficient
  for (const auto& [w, col] : c.matrix)
    for (const auto& [u, x] : col)
      if (!x.is_zero()) transpose[{u, w}] += x;
  std::map<std::pair<Word, Word>, Series> expansion;
  for (const auto& y : c.basis) {
    const int Q = static_cast<int>(y.size());
    for (int i = 1; i <= Q; ++i) {
      const auto orig = static_cast<std::size_t>(Q - i);  // original position of dual factor i
      auto it = delta_one.find(y[orig]);
      if (it == delta_one.end()) continue;
      const int mu_right = prefix_mu(d, y, orig);
      for (const auto& [x, coeff] : it->second) {
        const int k = static_cast<int>(x.size()) - 1;
        long e = static_cast<long>(i - 1) * (k + 1) + (Q - i) + static_cast<long>(k + 1) * mu_right;
        Word w = slice(y, 0, orig);
        w.insert(w.end(), x.begin(), x.end());
        w.insert(w.end(), y.begin() + static_cast<long>(orig) + 1, y.end());
        expansion[{y, w}] += odd(e) ? -coeff : coeff;
      }
    }
  }
  std::set<std::pair<Word, Word>> keys;
  for (const auto& [key, x] : transpose)
    if (!x.is_zero()) keys.insert(key);
  for (const auto& [key, x] : expansion)
    if (!x.is_zero()) keys.insert(key);
  for (const auto& key : keys) {
    ++rep.a3.checked;
    Series a = transpose.contains(key) ? transpose[key] : Series();
    Series b = expansion.contains(key) ? expansion[key] : Series();
    if (!(a - b).is_zero())
      rep.a3.fail("dual of " + d.describe(key.first) + " on " + d.describe(key.second) + ": transpose " +
                  a.to_string() + ", expansion " + b.to_string());
  }
  return rep;
}

Vector continuation(const AInftyDatum& source, const MapDatum& h, const Word& w, const MapSigns& signs) {
  Vector out;
  auto live = [&](std::size_t pos, int len) { return h.h.find(slice(w, pos, static_cast<std::size_t>(len))) != nullptr; };
  for_each_live_composition(w, live, [&](const std::vector<int>& parts) {
    std::vector<Block> blocks;
    for (int p : parts) blocks.push_back({&h.h, p, (p + 1) % 2});
    const bool flip = signs.block_sign && odd(block_parity_exponent(parts));
    apply_blocks(source, blocks, w, Series(flip ? -1 : 1), signs.koszul, out);
  });
  return out;
}

MapDatum identity_map(const AInftyDatum& d) {
  MapDatum id;
  for (std::size_t g = 0; g < d.generators.size(); ++g) id.h.add({static_cast<int>(g)}, static_cast<int>(g), Series(1));
  return id;
}

CheckReport check_chain_map(const AInftyDatum& source, const AInftyDatum& target, const MapDatum& h,
                            const MapSigns& signs) {
  check_map_degrees(source, target, h);
  CheckReport r{"chain-map"};
  for (const auto& w : source.strings()) {
    ++r.checked;
    Vector lhs;
    for (const auto& [u, c] : continuation(source, h, w, signs)) accumulate(lhs, differential(target, u), c);
    Vector rhs;
    for (const auto& [u, c] : differential(source, w)) accumulate(rhs, continuation(source, h, u, signs), c);
    Vector diff = difference(lhs, rhs);
    if (!is_zero(diff)) r.fail("delta F - F delta' on " + source.describe(w) + " = " + vector_text(target, diff));
  }
  return r;
}

CheckReport validate_axioms_B(const AInftyDatum& source, const AInftyDatum& target, const MapDatum& h) {
  check_map_degrees(source, target, h);
  CheckReport r{"B2"};
  std::map<std::pair<Word, Word>, Series> transpose;
  for (const auto& w : source.strings())
    for (const auto& [u, c] : continuation(source, h, w)) transpose[{u, w}] += c;
  // Expansion over dual strings: the dual output string y* is y reversed; each dual
  // factor is replaced by the dual of an H block, with sign sum i * l_{i+1} where
  // l_i is the cardinality index (inputs - 1) of the i-th dual block.
  std::map<int, std::vector<std::pair<Word, Series>>> h_dual;
  for (const auto& [w, row] : h.h.entries())
    for (const auto& [g, c] : row) h_dual[g].emplace_back(w, c);
  std::map<std::pair<Word, Word>, Series> expansion;
  std::set<Word> targets;
  for (const auto& [key, c] : transpose) targets.insert(key.first);
  for (const auto& y : targets) {
    const int q = static_cast<int>(y.size());
    // choose an H block for every factor, walking the dual string left to right
    std::vector<std::pair<Word, Series>> chosen(static_cast<std::size_t>(q));
    std::function<void(int)> rec = [&](int i) {
      if (i == q) {
        long e = 0;
        for (int a = 1; a < q; ++a) e += static_cast<long>(a) * (static_cast<long>(chosen[static_cast<std::size_t>(a)].first.size()) - 1);
        // Koszul: each block against the source factors that precede it in the original order,
        // i.e. follow it in the dual string.
        Word w;
        Series c(odd(e) ? -1 : 1);
        for (int a = q - 1; a >= 0; --a) {
          const auto& [x, coeff] = chosen[static_cast<std::size_t>(a)];
          long par = static_cast<long>(x.size() + 1) % 2;
          if (odd(par * source.mu(w))) c = -c;
          w.insert(w.end(), x.begin(), x.end());
          c *= coeff;
        }
        expansion[{y, w}] += c;
        return;
      }
      const int g = y[static_cast<std::size_t>(q - 1 - i)];
      auto it = h_dual.find(g);
      if (it == h_dual.end()) return;
      for (const auto& option : it->second) {
        chosen[static_cast<std::size_t>(i)] = option;
        rec(i + 1);
      }
    };
    rec(0);
  }
  std::set<std::pair<Word, Word>> keys;
  for (const auto& [key, x] : transpose)
    if (!x.is_zero()) keys.insert(key);
  for (const auto& [key, x] : expansion)
    if (!x.is_zero() && source.composable(key.second)) keys.insert(key);
  for (const auto& key : keys) {
    ++r.checked;
    Series a = transpose.contains(key) ? transpose[key] : Series();
    Series b = expansion.contains(key) ? expansion[key] : Series();
    if (!(a - b).is_zero())
      r.fail("dual of " + target.describe(key.first) + " on " + source.describe(key.second) + ": transpose " +
             a.to_string() + ", expansion " + b.to_string());
  }
  return r;
}

Vector homotopy_map(const AInftyDatum& source, const MapDatum& h0, const MapDatum& h1, const Tensor& k,
                    const Word& w, const HomotopySigns& signs) {
  Vector out;
  const int n = static_cast<int>(w.size());
  std::vector<int> parts;
  // state: whether the K block has been placed
  std::function<void(int, int)> rec = [&](int pos, int k_index) {
    if (pos == n) {
      if (k_index < 0) return;
      const int q = static_cast<int>(parts.size());
      long e = 0;
      if (signs.cardinality) e += q;
      if (signs.block_sign) e += block_parity_exponent(parts);
      if (signs.prefix)
        for (int j = 0; j < k_index; ++j) e += parts[static_cast<std::size_t>(j)] - 1;
      std::vector<Block> blocks;
      for (int j = 0; j < q; ++j) {
        const int len = parts[static_cast<std::size_t>(j)];
        if (j < k_index) blocks.push_back({&h0.h, len, (len + 1) % 2});
        else if (j == k_index) blocks.push_back({&k, len, len % 2});
        else blocks.push_back({&h1.h, len, (len + 1) % 2});
      }
      apply_blocks(source, blocks, w, Series(odd(e) ? -1 : 1), true, out);
      return;
    }
    for (int f = 1; pos + f <= n; ++f) {
      Word seg = slice(w, static_cast<std::size_t>(pos), static_cast<std::size_t>(f));
      const int here = static_cast<int>(parts.size());
      parts.push_back(f);
      if (k_index < 0) {
        if (h0.h.find(seg)) rec(pos + f, -1);
        if (k.find(seg)) rec(pos + f, here);
      } else if (h1.h.find(seg)) {
        rec(pos + f, k_index);
      }
      parts.pop_back();
    }
  };
  rec(0, -1);
  return out;
}

CheckReport check_homotopy(const AInftyDatum& source, const AInftyDatum& target, const MapDatum& h0,
                           const MapDatum& h1, const Tensor& k, const HomotopySigns& signs) {
  check_map_degrees(source, target, h0);
  check_map_degrees(source, target, h1);
  check_map_degrees(source, target, MapDatum{{}, k});
  CheckReport r{"homotopy"};
  for (const auto& w : source.strings()) {
    ++r.checked;
    Vector lhs = difference(continuation(source, h0, w), continuation(source, h1, w));
    Vector rhs;
    for (const auto& [u, c] : homotopy_map(source, h0, h1, k, w, signs)) accumulate(rhs, differential(target, u), c);
    for (const auto& [u, c] : differential(source, w)) accumulate(rhs, homotopy_map(source, h0, h1, k, u, signs), c);
    Vector diff = difference(lhs, rhs);
    if (!is_zero(diff))
      r.fail("F(H0) - F(H1) - (delta K + K delta') on " + source.describe(w) + " = " + vector_text(target, diff));
  }
  return r;
}

MapDatum compose_maps(const AInftyDatum& source, const MapDatum& outer, const MapDatum& inner) {
  MapDatum c;
  for (const auto& w : source.strings()) {
    auto live = [&](std::size_t pos, int len) {
      return inner.h.find(slice(w, pos, static_cast<std::size_t>(len))) != nullptr;
    };
    for_each_live_composition(w, live, [&](const std::vector<int>& parts) {
      std::vector<Block> blocks;
      for (int p : parts) blocks.push_back({&inner.h, p, (p + 1) % 2});
      Vector mid;
      apply_blocks(source, blocks, w, Series(odd(block_parity_exponent(parts)) ? -1 : 1), true, mid);
      for (const auto& [u, x] : mid) {
        const Tensor::Row* row = outer.h.find(u);
        if (row == nullptr) continue;
        for (const auto& [g, y] : *row) c.h.add(w, g, x * y);
      }
    });
  }
  return c;
}

CheckReport check_composition(const AInftyDatum& source, const AInftyDatum& middle, const MapDatum& outer,
                              const MapDatum& inner) {
  MapDatum c = compose_maps(source, outer, inner);
  CheckReport r{"composition"};
  for (const auto& w : source.strings()) {
    ++r.checked;
    Vector two;
    for (const auto& [u, x] : continuation(source, inner, w)) accumulate(two, continuation(middle, outer, u), x);
    Vector one = continuation(source, c, w);
    Vector diff = difference(one, two);
    if (!is_zero(diff)) r.fail("F(C) - F(outer) F(inner) on " + source.describe(w) + " = " + vector_text(middle, diff));
    Vector explicit_part;
    if (const Tensor::Row* row = c.h.find(w))
      for (const auto& [g, y] : *row) accumulate(explicit_part, Word{g}, y);
    Vector proj = difference(explicit_part, card_one(two));
    if (!is_zero(proj)) r.fail("composite tensor on " + source.describe(w) + " differs from the projection");
  }
  return r;
}

Series augmentation_value(const AInftyDatum& d, const Augmentation& a, const Word& w) {
  const int q = static_cast<int>(w.size());
  Series v(1);
  long e = 0;
  for (int i = 1; i <= q; ++i) {
    const int g = w[static_cast<std::size_t>(i - 1)];
    auto it = a.values.find(g);
    if (it == a.values.end()) return Series();
    v *= it->second;
    e += static_cast<long>(q - i) * d.generators[static_cast<std::size_t>(g)].mu;
  }
  return odd(e) ? -v : v;
}

Vector augmentation_vector(const AInftyDatum& d, const Augmentation& a) {
  Vector v;
  for (const auto& w : d.strings()) accumulate(v, w, augmentation_value(d, a, w));
  return v;
}

namespace {

AugmentationReport check_augmentation_vector(const AInftyDatum& d, const Vector& e) {
  AugmentationReport rep{{"closed"}, {"factorizes"}};
  Augmentation gens;
  for (const auto& [w, c] : e)
    if (w.size() == 1 && !c.is_zero()) gens.values[w[0]] = c;
  for (const auto& w : d.strings()) {
    if (w.size() < 2) continue;
    ++rep.factorizes.checked;
    Series have = e.contains(w) ? e.at(w) : Series();
    Series want = augmentation_value(d, gens, w);
    if (!(have - want).is_zero())
      rep.factorizes.fail(d.describe(w) + ": value " + have.to_string() + ", product rule gives " + want.to_string());
  }
  Vector de;
  for (const auto& [w, c] : e) accumulate(de, differential(d, w), c);
  ++rep.closed.checked;
  if (!is_zero(de)) rep.closed.fail("delta of the augmentation = " + vector_text(d, de));
  return rep;
}

}  // namespace

AugmentationReport check_augmentation(const AInftyDatum& d, const Augmentation& a) {
  check_degrees(d, d.m, 2, "m");
  return check_augmentation_vector(d, augmentation_vector(d, a));
}

Augmentation pushforward(const AInftyDatum& source, const MapDatum& h, const Augmentation& a) {
  Vector image;
  for (const auto& [w, c] : augmentation_vector(source, a)) accumulate(image, continuation(source, h, w), c);
  Augmentation out;
  for (const auto& [w, c] : image)
    if (w.size() == 1 && !c.is_zero()) out.values[w[0]] = c;
  return out;
}

AugmentationReport check_pushforward(const AInftyDatum& source, const AInftyDatum& target, const MapDatum& h,
                                     const Augmentation& a) {
  check_map_degrees(source, target, h);
  Vector image;
  for (const auto& [w, c] : augmentation_vector(source, a)) accumulate(image, continuation(source, h, w), c);
  return check_augmentation_vector(target, image);
}

long euler_characteristic(const FloerComplex& c) {
  if (c.modulus != 2) throw Error(ErrorKind::RequiresModTwoGrading, "Euler characteristic needs grading mod 2");
  if (c.datum.l != 1) throw Error(ErrorKind::InvalidInput, "Euler characteristic is defined for a pair of Lagrangians");
  long chi = 0;
  for (const auto& w : c.basis) chi += odd(c.datum.mu(w) + static_cast<int>(w.size())) ? -1 : 1;
  return chi;
}

namespace {

// Rank of a matrix of series by fraction-free elimination with the pivot of
// least valuation; ties go to the first column, then the first row.
std::size_t series_rank(std::vector<std::vector<Series>> a, CoefficientRing ring) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<bool> row_done(rows, false), col_done(cols, false);
  while (true) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::optional<Exponent> best_val;
    for (std::size_t c = 0; c < cols; ++c) {
      if (col_done[c]) continue;
      for (std::size_t r = 0; r < rows; ++r) {
        if (row_done[r] || a[r][c].is_zero()) continue;
        auto v = *a[r][c].valuation();
        if (!best || v < *best_val) {
          best = {r, c};
          best_val = v;
        }
      }
    }
    if (!best) break;
    auto [pr, pc] = *best;
    const Series pivot = a[pr][pc];
    if (ring == CoefficientRing::Integer && !is_unit(pivot, ring))
      throw Error(ErrorKind::NonUnitPivot, "pivot " + pivot.to_string() + " is not a unit over Z; use rational coefficients");
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || row_done[r] || a[r][pc].is_zero()) continue;
      const Series f = a[r][pc];
      for (std::size_t c = 0; c < cols; ++c) {
        if (col_done[c]) continue;
        a[r][c] = pivot * a[r][c] - f * a[pr][c];
      }
    }
    row_done[pr] = true;
    col_done[pc] = true;
    ++rank;
  }
  return rank;
}

}  // namespace

CohomologyReport cohomology(const FloerComplex& c, CoefficientRing ring) {
  CohomologyReport rep;
  rep.modulus = c.modulus;
  std::map<int, std::vector<Word>> by_degree;
  for (const auto& w : c.basis) by_degree[c.degree(w)].push_back(w);
  auto shift_degree = [&](int d, int by) {
    int v = d + by;
    if (c.modulus == 0) return v;
    int r = v % c.modulus;
    return r < 0 ? r + c.modulus : r;
  };
  for (const auto& [w, col] : c.matrix)
    for (const auto& [u, x] : col)
      if (!x.is_zero() && c.degree(u) != shift_degree(c.degree(w), 1))
        throw Error(ErrorKind::DegreeViolation, "differential is not of degree one for this grading modulus; use N = 2");
  std::map<int, std::size_t> rank_from;  // rank of delta on degree d
  for (const auto& [deg, cols] : by_degree) {
    auto it = by_degree.find(shift_degree(deg, 1));
    if (it == by_degree.end()) {
      rank_from[deg] = 0;
      continue;
    }
    const auto& rows = it->second;
    std::map<Word, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
    std::vector<std::vector<Series>> m(rows.size(), std::vector<Series>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k)
      for (const auto& [u, x] : c.matrix.at(cols[k]))
        if (auto ri = row_index.find(u); ri != row_index.end()) m[ri->second][k] = x;
    rank_from[deg] = series_rank(std::move(m), ring);
    rep.differential_rank += rank_from[deg];
  }
  for (const auto& [deg, cols] : by_degree) {
    std::size_t incoming = 0;
    auto prev = rank_from.find(shift_degree(deg, -1));
    if (prev != rank_from.end()) incoming = prev->second;
    const std::size_t h = cols.size() - rank_from[deg] - incoming;
    if (h > 0) rep.ranks[deg] = h;
    rep.rank += h;
  }
  return rep;
}

SymbolicReport symbolic_delta_squared(int q_max, const SymbolicSigns& signs) {
  if (q_max < 1) throw Error(ErrorKind::OutOfRange, "q_max must be positive");
  SymbolicReport rep;
  rep.q_max = q_max;
  // disjoint composites: key (q, pa, a, pb, b) in original positions, value = signed count
  std::map<std::array<int, 5>, int> disjoint;
  // nested composites grouped by (q, outer position, Q): parity of sign + facet parity
  std::map<std::array<int, 3>, std::set<int>> nested;
  std::map<int, std::map<std::array<int, 3>, int>> facet_sign;  // Q -> (l1, l2, i) -> sign
  for (int q = 1; q <= q_max; ++q) {
    for (int l2 = 1; l2 <= q; ++l2) {
      const int q1 = q - l2 + 1;
      for (int i = 1; i <= q1; ++i) {
        long s_in = (signs.q_l2 ? static_cast<long>(q) * l2 : 0) + (signs.position ? static_cast<long>(i) * (l2 - 1) : 0);
        if (static_cast<long>(q) * l2 % 2 != static_cast<long>(q1) * l2 % 2) rep.q_reading_equivalent = false;
        for (int l1 = 1; l1 <= q1; ++l1) {
          const int q2 = q1 - l1 + 1;
          for (int j = 1; j <= q2; ++j) {
            long s = s_in + (signs.q_l2 ? static_cast<long>(q1) * l1 : 0) +
                     (signs.position ? static_cast<long>(j) * (l1 - 1) : 0);
            if (j > i) {
              // outer block lies right of the inner output
              if (signs.commutation) s += static_cast<long>(l1) * l2;
              const int pb = j + l2 - 1;  // original position of the outer block
              disjoint[{q, i, l2, pb, l1}] += odd(s) ? -1 : 1;
            } else if (j + l1 - 1 < i) {
              disjoint[{q, j, l1, i, l2}] += odd(s) ? -1 : 1;
            } else {
              ++rep.nested_terms;
              const int Q = l1 + l2 - 1;
              const int k = i - j + 1;
              int fs;
              if (l1 >= 2 && l2 >= 2) {
                auto& table = facet_sign[Q];
                if (table.empty())
                  for (const auto& f : facets_with_signs(PolytopeKind::Associahedron, Q))
                    table[{f.l1, f.l2, f.position}] = f.sign;
                fs = table.at({l1, l2, k});
              } else {
                fs = assoc_facet_sign(l1, l2, k);
              }
              const int parity = static_cast<int>((s + (fs < 0 ? 1 : 0)) % 2);
              nested[{q, j, Q}].insert(parity);
            }
          }
        }
      }
    }
  }
  for (const auto& [key, count] : disjoint) {
    ++rep.disjoint_pairs;
    if (count != 0) ++rep.disjoint_uncancelled;
  }
  for (const auto& [key, parities] : nested)
    if (parities.size() > 1) ++rep.nested_mismatches;
  return rep;
}

Gf2Poly Gf2Poly::constant(bool one) {
  Gf2Poly p;
  if (one) p.monomials_.push_back(0);
  return p;
}

Gf2Poly Gf2Poly::variable(int index) {
  Gf2Poly p;
  p.monomials_.push_back(1u << index);
  return p;
}

namespace {

std::vector<std::uint32_t> xor_normalize(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < v.size();) {
    std::size_t e = k;
    while (e < v.size() && v[e] == v[k]) ++e;
    if ((e - k) % 2 == 1) out.push_back(v[k]);
    k = e;
  }
  return out;
}

}  // namespace

Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly r;
  r.monomials_ = a.monomials_;
  r.monomials_.insert(r.monomials_.end(), b.monomials_.begin(), b.monomials_.end());
  r.monomials_ = xor_normalize(std::move(r.monomials_));
  return r;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly r;
  for (auto x : a.monomials_)
    for (auto y : b.monomials_) r.monomials_.push_back(x | y);
  r.monomials_ = xor_normalize(std::move(r.monomials_));
  return r;
}

bool Gf2Poly::evaluate(std::uint32_t assignment) const {
  bool v = false;
  for (auto m : monomials_)
    if ((m & assignment) == m) v = !v;
  return v;
}

std::string Gf2Poly::to_string(const std::vector<std::string>& names) const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (auto m : monomials_) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += "1";
      continue;
    }
    std::string mono;
    for (std::size_t k = 0; k < names.size(); ++k)
      if (m & (1u << k)) mono += (mono.empty() ? "" : "*") + names[k];
    out += mono;
  }
  return out;
}

namespace {

// Variables of the lemma expansions.
enum LemmaVar { kA, kB, kQ, kL1, kL2, kVarCount };

Gf2Poly v(LemmaVar x) { return Gf2Poly::variable(x); }
Gf2Poly one() { return Gf2Poly::constant(true); }

// Dual operators with their Koszul degree and the cardinality they add.
struct DualOp {
  char kind;  // 'd' delta_q, 'H' H_l, 'K' K_l, 'i' identity
  int which;  // 1 or 2: which of l1, l2 for H/K
  Gf2Poly degree() const {
    switch (kind) {
      case 'd': return v(kQ) + one();
      case 'H': return which == 1 ? v(kL1) : v(kL2);
      case 'K': return (which == 1 ? v(kL1) : v(kL2)) + one();
      default: return Gf2Poly();
    }
  }
  Gf2Poly added() const {
    switch (kind) {
      case 'd': return v(kQ);
      case 'H':
      case 'K': return which == 1 ? v(kL1) : v(kL2);
      default: return Gf2Poly();
    }
  }
};

// Two-factor term: sign parity, first-factor composite, second-factor composite.
// Each composite lists operators applied in order (first applied first).
struct TwoFactor {
  Gf2Poly sign;
  std::vector<DualOp> left;
  std::vector<DualOp> right;
  Gf2Poly card_left;
  Gf2Poly card_right;
};

Gf2Poly degree_of(const std::vector<DualOp>& ops) {
  Gf2Poly d;
  for (const auto& o : ops) d = d + o.degree();
  return d;
}

// Apply (f x g) after the current term with Koszul sign deg(g) * deg(left so far).
TwoFactor then_apply(const TwoFactor& t, const DualOp& f, const DualOp& g, const Gf2Poly& extra) {
  TwoFactor r = t;
  r.sign = r.sign + extra + g.degree() * degree_of(t.left);
  if (f.kind != 'i') r.left.push_back(f);
  if (g.kind != 'i') r.right.push_back(g);
  r.card_left = r.card_left + f.added();
  r.card_right = r.card_right + g.added();
  return r;
}

// Leibniz rule A3 on two factors.
std::vector<TwoFactor> leibniz(const TwoFactor& t) {
  DualOp d{'d', 0}, id{'i', 0};
  return {then_apply(t, d, id, t.card_right), then_apply(t, id, d, t.card_left * (v(kQ) + one()))};
}

// Product rule B2 on two factors.
std::vector<TwoFactor> product(const TwoFactor& t) {
  DualOp h1{'H', 1}, h2{'H', 2};
  return {then_apply(t, h1, h2, t.card_left * v(kL2))};
}

// Rule C2 on two factors.
std::vector<TwoFactor> homotopy_rule(const TwoFactor& t) {
  DualOp k1{'K', 1}, h2{'H', 2}, h1{'H', 1}, k2{'K', 2};
  return {then_apply(t, k1, h2, t.card_right + (t.card_left + one()) * v(kL2)),
          then_apply(t, h1, k2, t.card_left * (v(kL2) + one()))};
}

std::string ops_name(const std::vector<DualOp>& ops) {
  std::string out;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (!out.empty()) out += "o";
    out += it->kind == 'd' ? "d" : std::string(1, it->kind) + std::to_string(it->which);
  }
  return out;
}

std::string term_name(const TwoFactor& t) { return "(" + ops_name(t.left) + ")x(" + ops_name(t.right) + ")"; }

std::vector<TwoFactor> expand(const std::vector<std::function<std::vector<TwoFactor>(const TwoFactor&)>>& rules) {
  TwoFactor start{Gf2Poly(), {}, {}, v(kA), v(kB)};
  std::vector<TwoFactor> terms{start};
  for (const auto& rule : rules) {
    std::vector<TwoFactor> next;
    for (const auto& t : terms)
      for (auto& u : rule(t)) next.push_back(std::move(u));
    terms = std::move(next);
  }
  return terms;
}

void compare(LemmaReport& rep, const std::string& prefix, const std::vector<TwoFactor>& derived,
             const std::map<std::string, Gf2Poly>& displayed, int max_value) {
  for (const auto& t : derived) {
    const std::string name = prefix + term_name(t);
    auto it = displayed.find(term_name(t));
    if (it == displayed.end()) {
      ++rep.identity_failures;
      rep.terms.push_back({name, t.sign, Gf2Poly()});
      continue;
    }
    rep.terms.push_back({name, t.sign, it->second});
    if (!(t.sign == it->second)) ++rep.identity_failures;
    for (int a = 0; a <= max_value; ++a)
      for (int b = 0; b <= max_value; ++b)
        for (int q = 0; q <= max_value; ++q)
          for (int l1 = 0; l1 <= max_value; ++l1)
            for (int l2 = 0; l2 <= max_value; ++l2) {
              std::uint32_t bits = (a & 1u) | (b & 1u) << 1 | (q & 1u) << 2 | (l1 & 1u) << 3 | (l2 & 1u) << 4;
              if (t.sign.evaluate(bits) != it->second.evaluate(bits)) ++rep.evaluation_failures;
            }
  }
}

const Gf2Poly* find_term(const LemmaReport& rep, const std::string& name) {
  for (const auto& t : rep.terms)
    if (t.name == name) return &t.derived;
  return nullptr;
}

void expect_pair(LemmaReport& rep, const std::string& x, const std::string& y, bool opposite) {
  const Gf2Poly* a = find_term(rep, x);
  const Gf2Poly* b = find_term(rep, y);
  if (a == nullptr || b == nullptr || !(*a + *b == Gf2Poly::constant(opposite))) ++rep.pairing_failures;
}

}  // namespace

LemmaReport consistency_lemma_morphisms(int max_value) {
  LemmaReport rep;
  rep.name = "A and B";
  const Gf2Poly a = v(kA), b = v(kB), q = v(kQ), l2 = v(kL2), I = one();
  // delta* o H*
  compare(rep, "dH:", expand({product, leibniz}),
          {{"(doH1)x(H2)", a * l2 + b + l2}, {"(H1)x(doH2)", a * l2 + a * (q + I)}}, max_value);
  // H* o delta*
  compare(rep, "Hd:", expand({leibniz, product}),
          {{"(H1od)x(H2)", b + (a + I) * l2}, {"(H1)x(H2od)", a * (q + I + l2)}}, max_value);
  expect_pair(rep, "dH:(doH1)x(H2)", "Hd:(H1od)x(H2)", false);
  expect_pair(rep, "dH:(H1)x(doH2)", "Hd:(H1)x(H2od)", false);
  return rep;
}

LemmaReport consistency_lemma_homotopies(int max_value) {
  LemmaReport rep;
  rep.name = "C with A and B";
  const Gf2Poly a = v(kA), b = v(kB), q = v(kQ), l2 = v(kL2), I = one();
  const Gf2Poly kh = b + (a + I) * l2;
  const Gf2Poly hk = a * (l2 + I);
  compare(rep, "dK:", expand({homotopy_rule, leibniz}),
          {{"(doK1)x(H2)", kh + b + l2},
           {"(K1)x(doH2)", kh + (a + I) * (q + I)},
           {"(doH1)x(K2)", hk + b + l2},
           {"(H1)x(doK2)", hk + a * (q + I)}},
          max_value);
  compare(rep, "Kd:", expand({leibniz, homotopy_rule}),
          {{"(K1od)x(H2)", b + b + a * l2},
           {"(H1od)x(K2)", b + (a + I) * (l2 + I)},
           {"(K1)x(H2od)", a * (q + I) + b + q + (a + I) * l2},
           {"(H1)x(K2od)", a * (q + I) + a * (l2 + I)}},
          max_value);
  expect_pair(rep, "dK:(doK1)x(H2)", "Kd:(K1od)x(H2)", false);
  expect_pair(rep, "dK:(H1)x(doK2)", "Kd:(H1)x(K2od)", false);
  expect_pair(rep, "dK:(K1)x(doH2)", "Kd:(K1)x(H2od)", true);
  expect_pair(rep, "dK:(doH1)x(K2)", "Kd:(H1od)x(K2)", true);
  return rep;
}

AInftyDatum path_algebra(int l, std::mt19937& rng) {
  std::uniform_int_distribution<int> phi_dist(-3, 3), b_dist(-2, 2);
  std::vector<int> phi(static_cast<std::size_t>(l + 1));
  for (auto& p : phi) p = phi_dist(rng);
  AInftyDatum d;
  d.l = l;
  auto gen = [&](const std::string& id, int i, int j, int mu) {
    d.generators.push_back({id, i, j, mu});
    return static_cast<int>(d.generators.size()) - 1;
  };
  constexpr int kTop = 2;
  std::map<std::array<int, 3>, int> e;
  for (int i = 0; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) {
      const std::string ij = std::to_string(i) + std::to_string(j);
      for (int s = 0; s <= kTop; ++s)
        e[{i, j, s}] = gen("e" + ij + "_" + std::to_string(s), i, j,
                           phi[static_cast<std::size_t>(j)] - phi[static_cast<std::size_t>(i)] + s);
      const int b = b_dist(rng);
      const int x = gen("x" + ij, i, j, b);
      const int y = gen("y" + ij, i, j, b + 1);
      d.m.add({x}, y, Series(1));
    }
  for (int i = 0; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j)
      for (int k = j + 1; k <= l; ++k)
        for (int s = 0; s <= kTop; ++s)
          for (int t = 0; s + t <= kTop; ++t) d.m.add({e[{i, j, s}], e[{j, k, t}]}, e[{i, k, s + t}], Series(1));
  return d;
}

Tensor random_tensor(const AInftyDatum& d, int shift_constant, int min_arity, double density, std::mt19937& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::array<long, 4> coeffs{-2, -1, 1, 2};
  const std::array<Rational, 3> energies{Rational(0), Rational(1, 2), Rational(1)};
  std::uniform_int_distribution<std::size_t> pick_c(0, coeffs.size() - 1), pick_e(0, energies.size() - 1);
  Tensor t;
  for (const auto& w : d.strings()) {
    const int q = static_cast<int>(w.size());
    if (q < min_arity) continue;
    const int i0 = d.generators[static_cast<std::size_t>(w.front())].i;
    const int iq = d.generators[static_cast<std::size_t>(w.back())].j;
    const int mu = d.mu(w) + shift_constant - q;
    for (std::size_t g = 0; g < d.generators.size(); ++g) {
      const auto& out = d.generators[g];
      if (out.i != i0 || out.j != iq || out.mu != mu) continue;
      if (coin(rng) >= density) continue;
      const Rational& e = energies[pick_e(rng)];
      t.add(w, static_cast<int>(g), Series::monomial(Rational(coeffs[pick_c(rng)]), Exponent(e)));
    }
  }
  return t;
}

namespace {

// Structure on the target so that the cardinality-one part of delta F(H) = F(H) delta' holds.
Tensor solve_target(const AInftyDatum& source, const MapDatum& h) {
  AInftyDatum target = source;
  target.m = Tensor();
  for (const auto& w : source.strings()) {
    Vector acc;
    for (const auto& [u, c] : continuation(source, h, w)) {
      if (u.size() >= w.size()) continue;
      if (const Tensor::Row* row = target.m.find(u))
        for (const auto& [g, x] : *row) accumulate(acc, Word{g}, x * c);
    }
    for (const auto& [u, c] : differential(source, w))
      if (const Tensor::Row* row = h.h.find(u))
        for (const auto& [g, x] : *row) accumulate(acc, Word{g}, x * c);
    for (const auto& [u, c] : acc) target.m.add(w, u[0], -c);
  }
  return target.m;
}

}  // namespace

TransferFixture transfer_fixture(int l, std::uint32_t seed) {
  std::mt19937 rng(seed);
  TransferFixture f;
  f.source = path_algebra(l, rng);
  f.h.h = random_tensor(f.source, 1, 2, 0.5, rng);
  for (std::size_t g = 0; g < f.source.generators.size(); ++g)
    f.h.h.add({static_cast<int>(g)}, static_cast<int>(g), Series(1));
  f.target = f.source;
  f.target.m = solve_target(f.source, f.h);
  return f;
}

HomotopyFixture homotopy_fixture(int l, std::uint32_t seed) {
  HomotopyFixture f;
  f.base = transfer_fixture(l, seed);
  std::mt19937 rng(seed ^ 0x9e3779b9u);
  const AInftyDatum& src = f.base.source;
  const AInftyDatum& dst = f.base.target;
  f.k = random_tensor(src, 0, 1, 0.3, rng);
  const MapDatum& h0 = f.base.h;
  // H1 = H0 + m(K) - (K delta')_1, solved by increasing cardinality.
  for (const auto& w : src.strings()) {
    Vector acc;
    if (const Tensor::Row* row = h0.h.find(w))
      for (const auto& [g, x] : *row) accumulate(acc, Word{g}, x);
    for (const auto& [u, c] : homotopy_map(src, h0, f.h1, f.k, w))
      if (const Tensor::Row* row = dst.m.find(u))
        for (const auto& [g, x] : *row) accumulate(acc, Word{g}, x * c);
    for (const auto& [u, c] : differential(src, w))
      for (const auto& [s, x] : homotopy_map(src, h0, f.h1, f.k, u))
        if (s.size() == 1) accumulate(acc, s, -(x * c));
    for (const auto& [u, c] : acc) f.h1.h.add(w, u[0], c);
  }
  return f;
}

}  // namespace floerkit
