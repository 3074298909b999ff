#include "floerkit/polytopes.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include "floerkit/error.hpp"

namespace floerkit {

namespace {

char kind_letter(VertexKind k) {
  switch (k) {
    case VertexKind::Leaf: return 'L';
    case VertexKind::Plain: return 'k';
    case VertexKind::Front: return 'f';
    case VertexKind::Painted: return 'p';
    case VertexKind::IntervalEnd: return 'e';
    case VertexKind::Interval: return 'I';
  }
  return '?';
}

std::size_t subtree_end(const std::vector<Token>& t, std::size_t p) {
  std::size_t pending = 1;
  while (pending > 0) {
    if (t[p].kind != VertexKind::Leaf && t[p].kind != VertexKind::IntervalEnd && t[p].kind != VertexKind::Interval)
      pending += static_cast<std::size_t>(t[p].arity);
    --pending;
    ++p;
  }
  return p;
}

bool is_vertex(const Token& t) { return t.kind == VertexKind::Plain || t.kind == VertexKind::Front || t.kind == VertexKind::Painted; }

}  // namespace

int vertex_dimension(const Token& t) {
  switch (t.kind) {
    case VertexKind::Plain:
    case VertexKind::Painted: return t.arity - 2;
    case VertexKind::Front: return t.arity - 1;
    case VertexKind::Interval: return 1;
    default: return 0;
  }
}

std::string token_text(const Token& t) {
  if (t.kind == VertexKind::Leaf) return "L";
  if (t.kind == VertexKind::Interval) return "I";
  return std::string(1, kind_letter(t.kind)) + std::to_string(t.arity);
}

Tree::Tree(std::vector<Token> preorder) : tokens_(std::move(preorder)) {}

int Tree::leaves() const {
  if (tokens_.size() == 1 && tokens_[0].kind == VertexKind::IntervalEnd) return 1;
  if (tokens_.size() == 1 && tokens_[0].kind == VertexKind::Interval) return 1;
  return static_cast<int>(std::count_if(tokens_.begin(), tokens_.end(),
                                        [](const Token& t) { return t.kind == VertexKind::Leaf; }));
}

int Tree::dimension() const {
  int d = 0;
  for (const auto& t : tokens_) d += vertex_dimension(t);
  return d;
}

bool Tree::painted() const {
  return std::any_of(tokens_.begin(), tokens_.end(), [](const Token& t) {
    return t.kind == VertexKind::Front || t.kind == VertexKind::Painted || t.kind == VertexKind::Interval ||
           t.kind == VertexKind::IntervalEnd;
  });
}

std::vector<std::string> Tree::serialize() const {
  std::vector<std::string> out;
  out.reserve(tokens_.size());
  for (const auto& t : tokens_) out.push_back(token_text(t));
  return out;
}

std::string Tree::nested() const {
  std::string out;
  std::function<std::size_t(std::size_t)> walk = [&](std::size_t p) -> std::size_t {
    const Token& t = tokens_[p];
    out += token_text(t);
    if (!is_vertex(t)) return p + 1;
    out += '(';
    std::size_t q = p + 1;
    for (int c = 0; c < t.arity; ++c) {
      if (c) out += ',';
      q = walk(q);
    }
    out += ')';
    return q;
  };
  if (!tokens_.empty()) walk(0);
  return out;
}

Tree Tree::deserialize(const std::vector<std::string>& tokens) {
  std::vector<Token> out;
  for (const auto& s : tokens) {
    if (s == "L") {
      out.push_back({VertexKind::Leaf, 0});
      continue;
    }
    if (s == "I") {
      out.push_back({VertexKind::Interval, 0});
      continue;
    }
    if (s.size() < 2) throw Error(ErrorKind::InvalidInput, "bad tree token '" + s + "'");
    VertexKind k;
    switch (s[0]) {
      case 'k': k = VertexKind::Plain; break;
      case 'f': k = VertexKind::Front; break;
      case 'p': k = VertexKind::Painted; break;
      case 'e': k = VertexKind::IntervalEnd; break;
      default: throw Error(ErrorKind::InvalidInput, "bad tree token '" + s + "'");
    }
    out.push_back({k, std::stoi(s.substr(1))});
  }
  Tree t(std::move(out));
  if (t.tokens_.empty() || subtree_end(t.tokens_, 0) != t.tokens_.size())
    throw Error(ErrorKind::InvalidInput, "token list is not a tree");
  return t;
}

std::size_t default_face_budget() {
  if (const char* env = std::getenv("FLOERKIT_MAX_FACES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

int polytope_dimension(PolytopeKind kind, int l) {
  if (kind == PolytopeKind::Associahedron) return std::max(l - 2, 0);
  return l <= 1 ? 1 : l - 1;
}

namespace {

// Ordered compositions of n into k positive parts.
void for_each_composition(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts(k);
  std::function<void(int, int)> rec = [&](int idx, int rest) {
    if (idx == k - 1) {
      parts[idx] = rest;
      fn(parts);
      return;
    }
    for (int p = 1; p <= rest - (k - 1 - idx); ++p) {
      parts[idx] = p;
      rec(idx + 1, rest - p);
    }
  };
  if (k >= 1 && n >= k) rec(0, n);
}

using Poly = std::vector<std::size_t>;  // coefficient of x^d counts faces of dim d

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void poly_add_shifted(Poly& acc, const Poly& p, int shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

class Counter {
 public:
  const Poly& plain(int n) {
    if (auto it = plain_.find(n); it != plain_.end()) return it->second;
    Poly acc;
    if (n == 1) {
      acc = {1};
    } else {
      for (int k = 2; k <= n; ++k)
        for_each_composition(n, k, [&](const std::vector<int>& parts) {
          Poly prod{1};
          for (int p : parts) prod = poly_mul(prod, plain(p));
          poly_add_shifted(acc, prod, k - 2);
        });
    }
    return plain_[n] = acc;
  }
  const Poly& painted(int n) {
    if (auto it = painted_.find(n); it != painted_.end()) return it->second;
    Poly acc;
    for (int k = 1; k <= n; ++k)
      for_each_composition(n, k, [&](const std::vector<int>& parts) {
        Poly prod{1};
        for (int p : parts) prod = poly_mul(prod, plain(p));
        poly_add_shifted(acc, prod, k - 1);
      });
    for (int k = 2; k <= n; ++k)
      for_each_composition(n, k, [&](const std::vector<int>& parts) {
        Poly prod{1};
        for (int p : parts) prod = poly_mul(prod, painted(p));
        poly_add_shifted(acc, prod, k - 2);
      });
    return painted_[n] = acc;
  }

 private:
  std::map<int, Poly> plain_;
  std::map<int, Poly> painted_;
};

class Generator {
 public:
  const std::vector<std::vector<Token>>& plain(int n) {
    if (auto it = plain_.find(n); it != plain_.end()) return it->second;
    std::vector<std::vector<Token>> out;
    if (n == 1) {
      out.push_back({{VertexKind::Leaf, 0}});
    } else {
      for (int k = 2; k <= n; ++k) emit(out, VertexKind::Plain, n, k, [this](int p) -> const auto& { return plain(p); });
    }
    return plain_[n] = std::move(out);
  }
  const std::vector<std::vector<Token>>& painted(int n) {
    if (auto it = painted_.find(n); it != painted_.end()) return it->second;
    std::vector<std::vector<Token>> out;
    for (int k = 1; k <= n; ++k) emit(out, VertexKind::Front, n, k, [this](int p) -> const auto& { return plain(p); });
    for (int k = 2; k <= n; ++k) emit(out, VertexKind::Painted, n, k, [this](int p) -> const auto& { return painted(p); });
    return painted_[n] = std::move(out);
  }

 private:
  template <class Children>
  void emit(std::vector<std::vector<Token>>& out, VertexKind kind, int n, int k, Children children) {
    for_each_composition(n, k, [&](const std::vector<int>& parts) {
      std::vector<const std::vector<std::vector<Token>>*> pools;
      for (int p : parts) pools.push_back(&children(p));
      std::vector<Token> prefix{{kind, k}};
      std::function<void(std::size_t, std::vector<Token>&)> rec = [&](std::size_t idx, std::vector<Token>& cur) {
        if (idx == pools.size()) {
          out.push_back(cur);
          return;
        }
        for (const auto& sub : *pools[idx]) {
          std::size_t mark = cur.size();
          cur.insert(cur.end(), sub.begin(), sub.end());
          rec(idx + 1, cur);
          cur.resize(mark);
        }
      };
      rec(0, prefix);
    });
  }

  std::map<int, std::vector<std::vector<Token>>> plain_;
  std::map<int, std::vector<std::vector<Token>>> painted_;
};

std::vector<Tree> interval_faces() {
  return {Tree({{VertexKind::Interval, 0}}), Tree({{VertexKind::IntervalEnd, 0}}),
          Tree({{VertexKind::IntervalEnd, 1}})};
}

}  // namespace

std::vector<std::size_t> face_counts(PolytopeKind kind, int l) {
  if (l < 0) throw Error(ErrorKind::OutOfRange, "negative number of inputs");
  if (kind == PolytopeKind::Associahedron) {
    if (l <= 1) return {1};
    Counter c;
    return c.plain(l);
  }
  if (l <= 1) return {2, 1};
  Counter c;
  return c.painted(l);
}

std::vector<Tree> enumerate_faces(PolytopeKind kind, int l, std::optional<int> dim, std::size_t budget) {
  auto counts = face_counts(kind, l);
  std::size_t total = 0;
  for (auto c : counts) total += c;
  if (total > budget)
    throw Error(ErrorKind::UnsupportedL, std::to_string(total) + " faces exceed the enumeration budget of " +
                                             std::to_string(budget));
  std::vector<Tree> faces;
  if (kind == PolytopeKind::Multiplihedron && l <= 1) {
    faces = interval_faces();
  } else if (kind == PolytopeKind::Associahedron && l <= 1) {
    faces.emplace_back(std::vector<Token>{{VertexKind::Leaf, 0}});
  } else {
    Generator g;
    const auto& raw = kind == PolytopeKind::Associahedron ? g.plain(l) : g.painted(l);
    faces.reserve(raw.size());
    for (const auto& t : raw) faces.emplace_back(t);
  }
  if (dim) std::erase_if(faces, [&](const Tree& t) { return t.dimension() != *dim; });
  std::sort(faces.begin(), faces.end());
  return faces;
}

std::vector<std::size_t> f_vector(PolytopeKind kind, int l, std::size_t budget) {
  auto faces = enumerate_faces(kind, l, std::nullopt, budget);
  int d = polytope_dimension(kind, l);
  std::vector<std::size_t> f(static_cast<std::size_t>(d), 0);
  for (const auto& t : faces)
    if (t.dimension() < d) ++f[static_cast<std::size_t>(t.dimension())];
  return f;
}

int assoc_facet_sign(int l1, int l2, int i) { return (l1 * l2 + i * (l2 - 1)) % 2 != 0 ? 1 : -1; }

int multi_lower_facet_sign(int l1, int l2, int i) { return (l1 * l2 + i * (l2 - 1)) % 2 == 0 ? 1 : -1; }

int multi_upper_facet_sign(const std::vector<int>& blocks) {
  const int q = static_cast<int>(blocks.size());
  int e = 0;
  for (int j = 1; j <= q; ++j) e += (q - j) * (blocks[j - 1] - 1);
  return e % 2 == 0 ? 1 : -1;
}

int FacetSignRules::assoc(int l1, int l2, int i) const {
  int e = (assoc_product_term ? l1 * l2 : 0) + (assoc_position_term ? i * (l2 - 1) : 0);
  return e % 2 != 0 ? 1 : -1;
}

int FacetSignRules::lower(int l1, int l2, int i) const {
  int e = (lower_product_term ? l1 * l2 : 0) + (lower_position_term ? i * (l2 - 1) : 0);
  return e % 2 == 0 ? 1 : -1;
}

int FacetSignRules::upper(const std::vector<int>& blocks) const {
  if (!upper_reversed) return multi_upper_facet_sign(blocks);
  int e = 0;
  for (std::size_t j = 1; j <= blocks.size(); ++j) e += static_cast<int>(j) * (blocks[j - 1] - 1);
  return e % 2 == 0 ? 1 : -1;
}

std::string FacetFactorization::describe() const {
  std::ostringstream os;
  switch (type) {
    case FacetType::Assoc: os << "K" << l1 << " x K" << l2 << " at " << position; break;
    case FacetType::MultiLower: os << "J" << l1 << " x K" << l2 << " at " << position; break;
    case FacetType::MultiUpper:
      os << "K" << l1;
      for (int b : blocks) os << " x J" << b;
      break;
    case FacetType::MultiEnd: os << "endpoint " << position; break;
  }
  return os.str();
}

std::vector<FacetFactorization> facets_with_signs(PolytopeKind kind, int l) {
  std::vector<FacetFactorization> out;
  if (kind == PolytopeKind::Associahedron) {
    for (int l2 = 2; l2 < l; ++l2) {
      int l1 = l + 1 - l2;
      for (int i = 1; i <= l1; ++i) out.push_back({FacetType::Assoc, l1, l2, i, {}, assoc_facet_sign(l1, l2, i)});
    }
    return out;
  }
  if (l <= 1) {
    out.push_back({FacetType::MultiEnd, 0, 0, 0, {}, -1});
    out.push_back({FacetType::MultiEnd, 0, 0, 1, {}, 1});
    return out;
  }
  for (int l2 = 2; l2 <= l; ++l2) {
    int l1 = l + 1 - l2;
    for (int i = 1; i <= l1; ++i)
      out.push_back({FacetType::MultiLower, l1, l2, i, {}, multi_lower_facet_sign(l1, l2, i)});
  }
  for (int q = 2; q <= l; ++q)
    for_each_composition(l, q, [&](const std::vector<int>& parts) {
      out.push_back({FacetType::MultiUpper, q, 0, 0, parts, multi_upper_facet_sign(parts)});
    });
  return out;
}

namespace {

// A facet of one vertex: the replacement token run together with, for each
// new vertex, its offset in the run; offsets are listed in product order.
struct VertexFacet {
  int sign;
  std::vector<Token> run;
  std::vector<std::size_t> new_vertex_offsets;
  std::vector<bool> run_is_new;  // per token in run
};

int koszul_sign(std::vector<std::pair<std::size_t, int>> seq) {
  // Bubble sort on position; swapping two odd-dimensional factors costs a sign.
  int s = 1;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = 0; b + 1 < seq.size() - a; ++b)
      if (seq[b].first > seq[b + 1].first) {
        if ((seq[b].second & 1) && (seq[b + 1].second & 1)) s = -s;
        std::swap(seq[b], seq[b + 1]);
      }
  return s;
}

}  // namespace

Chain boundary(const Tree& face, const FacetSignRules& rules) {
  const auto& t = face.tokens();
  Chain out;
  if (t.size() == 1 && t[0].kind == VertexKind::Interval) {
    out[Tree({{VertexKind::IntervalEnd, 1}})] += 1;
    out[Tree({{VertexKind::IntervalEnd, 0}})] -= 1;
    return out;
  }
  int before = 0;
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (!is_vertex(t[p])) continue;
    const Token v = t[p];
    const int a = v.arity;
    std::vector<std::size_t> child_start;
    std::size_t q = p + 1;
    for (int c = 0; c < a; ++c) {
      child_start.push_back(q);
      q = subtree_end(t, q);
    }
    child_start.push_back(q);
    const std::size_t end = q;
    auto span = [&](int from, int to) {  // children [from, to), 0-based
      return std::pair<std::size_t, std::size_t>{child_start[from], child_start[to]};
    };

    std::vector<VertexFacet> facets;
    auto split = [&](VertexKind outer_kind, VertexKind inner_kind, int l1, int l2, int i, int sign) {
      VertexFacet f{sign, {}, {}, {}};
      f.run.push_back({outer_kind, l1});
      f.run_is_new.push_back(true);
      auto [s0, s1] = span(0, i - 1);
      for (auto k = s0; k < s1; ++k) f.run.push_back(t[k]), f.run_is_new.push_back(false);
      std::size_t inner_at = f.run.size();
      f.run.push_back({inner_kind, l2});
      f.run_is_new.push_back(true);
      auto [m0, m1] = span(i - 1, i - 1 + l2);
      for (auto k = m0; k < m1; ++k) f.run.push_back(t[k]), f.run_is_new.push_back(false);
      auto [r0, r1] = span(i - 1 + l2, a);
      for (auto k = r0; k < r1; ++k) f.run.push_back(t[k]), f.run_is_new.push_back(false);
      f.new_vertex_offsets = {0, inner_at};
      facets.push_back(std::move(f));
    };
    if (v.kind == VertexKind::Plain || v.kind == VertexKind::Painted) {
      for (int l2 = 2; l2 < a; ++l2) {
        int l1 = a + 1 - l2;
        for (int i = 1; i <= l1; ++i)
          split(v.kind, v.kind, l1, l2, i, rules.assoc(l1, l2, i));
      }
    } else {
      for (int l2 = 2; l2 <= a; ++l2) {
        int l1 = a + 1 - l2;
        for (int i = 1; i <= l1; ++i)
          split(VertexKind::Front, VertexKind::Plain, l1, l2, i,
                rules.lower(l1, l2, i));
      }
      for (int qq = 2; qq <= a; ++qq)
        for_each_composition(a, qq, [&](const std::vector<int>& parts) {
          VertexFacet f{rules.upper(parts), {}, {}, {}};
          f.run.push_back({VertexKind::Painted, qq});
          f.run_is_new.push_back(true);
          f.new_vertex_offsets.push_back(0);
          int used = 0;
          for (int b : parts) {
            f.new_vertex_offsets.push_back(f.run.size());
            f.run.push_back({VertexKind::Front, b});
            f.run_is_new.push_back(true);
            auto [s0, s1] = span(used, used + b);
            for (auto k = s0; k < s1; ++k) f.run.push_back(t[k]), f.run_is_new.push_back(false);
            used += b;
          }
          facets.push_back(std::move(f));
        });
    }

    for (const auto& f : facets) {
      std::vector<Token> nt(t.begin(), t.begin() + static_cast<long>(p));
      nt.insert(nt.end(), f.run.begin(), f.run.end());
      nt.insert(nt.end(), t.begin() + static_cast<long>(end), t.end());
      // Product order: old vertices before p, new factors, old vertices after.
      // Each entry is (position in the new preorder, dimension).
      std::vector<std::pair<std::size_t, int>> seq;
      for (std::size_t k = 0; k < p; ++k)
        if (is_vertex(t[k])) seq.push_back({k, vertex_dimension(t[k])});
      for (auto off : f.new_vertex_offsets) seq.push_back({p + off, vertex_dimension(f.run[off])});
      for (std::size_t k = 0; k < f.run.size(); ++k)
        if (!f.run_is_new[k] && is_vertex(f.run[k])) seq.push_back({p + k, vertex_dimension(f.run[k])});
      for (std::size_t k = end; k < t.size(); ++k)
        if (is_vertex(t[k])) seq.push_back({k - end + p + f.run.size(), vertex_dimension(t[k])});
      int s = f.sign * koszul_sign(std::move(seq)) * ((before & 1) ? -1 : 1);
      out[Tree(std::move(nt))] += s;
    }
    before += vertex_dimension(v);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BoundaryReport boundary_map_consistency(PolytopeKind kind, int l, const FacetSignRules& rules, std::size_t budget) {
  BoundaryReport report{kind, l, 0, 0, std::nullopt};
  auto faces = enumerate_faces(kind, l, std::nullopt, budget);
  std::map<Tree, Chain> cache;
  auto bd = [&](const Tree& f) -> const Chain& {
    auto it = cache.find(f);
    if (it == cache.end()) it = cache.emplace(f, boundary(f, rules)).first;
    return it->second;
  };
  for (const auto& f : faces) {
    Chain acc;
    for (const auto& [g, c] : bd(f))
      for (const auto& [h, c2] : bd(g)) acc[h] += c * c2;
    ++report.faces_checked;
    bool zero = std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
    if (!zero) {
      ++report.nonzero_faces;
      if (!report.first_failure) report.first_failure = f;
    }
  }
  return report;
}

}  // namespace floerkit
