#include "floerkit/maslov.hpp"

#include <algorithm>
#include <functional>

#include "floerkit/error.hpp"

namespace floerkit {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

Polynomial Polynomial::monomial(Rational c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  for (auto& x : c_) x.canonicalize();
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> v = c_;
  const Rational lead = leading();
  for (auto& x : v) x /= lead;
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x = -x;
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw Error(ErrorKind::InvalidInput, "polynomial division by zero");
  std::vector<Rational> r = c_;
  const int dd = d.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - dd + 1));
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational f = r[static_cast<std::size_t>(k + dd)] / d.leading();
    q[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  Polynomial x(std::vector<Rational>{b, a});
  Polynomial v;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + Polynomial(std::vector<Rational>{*it});
  return v;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += sgn(c_[k]) < 0 ? " - " : " + ";
    else if (sgn(c_[k]) < 0) out += "-";
    Rational m = abs(c_[k]);
    if (k == 0 || m != 1) out += m.get_str();
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return p.divmod(gcd(p, p.derivative())).first.monic();
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> s{p, p.derivative()};
  while (!s.back().is_zero()) {
    Polynomial r = s[s.size() - 2].divmod(s.back()).second;
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  if (s.back().is_zero()) s.pop_back();
  return s;
}

namespace {

int sign_variations(const std::vector<Polynomial>& s, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : s) {
    int v = sgn(p(x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

}  // namespace

int count_roots(const std::vector<Polynomial>& sturm, const Rational& a, const Rational& b) {
  return sign_variations(sturm, a) - sign_variations(sturm, b);
}

std::vector<RealRoot> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidInput, "zero polynomial has no isolated roots");
  std::vector<RealRoot> out;
  Polynomial q = squarefree_part(p);
  const bool at_a = q(a) == 0, at_b = q(b) == 0;
  if (at_a) q = q.divmod(Polynomial(std::vector<Rational>{-a, Rational(1)})).first;
  if (at_b && b != a) q = q.divmod(Polynomial(std::vector<Rational>{-b, Rational(1)})).first;
  if (at_a) out.push_back({a, a});
  if (q.degree() >= 1 && a < b) {
    const auto sturm = sturm_sequence(q);
    std::function<void(const Rational&, const Rational&, int)> rec = [&](const Rational& lo, const Rational& hi,
                                                                         int count) {
      if (count == 0) return;
      if (count == 1 && !(at_a && lo == a) && !(at_b && hi == b)) {
        out.push_back({lo, hi});
        return;
      }
      Rational mid = (lo + hi) / 2;
      for (int k = 3; q(mid) == 0; ++k) mid = lo + (hi - lo) / k;
      rec(lo, mid, count_roots(sturm, lo, mid));
      rec(mid, hi, count_roots(sturm, mid, hi));
    };
    rec(a, b, count_roots(sturm, a, b));
  }
  if (at_b && b != a) out.push_back({b, b});
  return out;
}

bool vanishes_at(const Polynomial& f, const Polynomial& p, const RealRoot& r) {
  if (r.exact()) return f(r.lo) == 0;
  if (f.is_zero()) return true;
  Polynomial g = gcd(p, f);
  if (g.degree() < 1) return false;
  // Sturm counts cover (lo, hi]
  return count_roots(sturm_sequence(g), r.lo, r.hi) - (g(r.hi) == 0 ? 1 : 0) > 0;
}

namespace {

// Characteristic polynomial det(x I - m) by Faddeev-LeVerrier.
Polynomial characteristic_polynomial(const RationalMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix mk(n, std::vector<Rational>(n));
  RationalMatrix prev(n, std::vector<Rational>(n));  // M_{k-1}, starts at 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t l = 0; l < n; ++l) s += m[i][l] * prev[l][j];
        if (i == j) s += c[n - k + 1];
        mk[i][j] = s;
      }
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += m[i][l] * mk[l][i];
    c[n - k] = -tr / static_cast<long>(k);
    prev = mk;
  }
  return Polynomial(std::move(c));
}

int coefficient_sign_changes(const std::vector<Rational>& c) {
  int changes = 0, last = 0;
  for (const auto& x : c) {
    int v = sgn(x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

void require_square(const RationalMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error(ErrorKind::InvalidInput, "matrix is not square");
}

}  // namespace

int signature(const RationalMatrix& m) {
  require_square(m);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) throw Error(ErrorKind::InvalidInput, "matrix is not symmetric");
  // All eigenvalues are real, so Descartes' rule counts them exactly.
  Polynomial p = characteristic_polynomial(m);
  std::vector<Rational> c = p.coefficients();
  const int positive = coefficient_sign_changes(c);
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  const int negative = coefficient_sign_changes(c);
  return positive - negative;
}

int nullity(const RationalMatrix& m0) {
  require_square(m0);
  RationalMatrix m = m0;
  const std::size_t n = m.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(n - rank);
}

Polynomial determinant(const PolynomialMatrix& m0) {
  // Bareiss elimination over Q[t].
  PolynomialMatrix m = m0;
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  int sign = 1;
  Polynomial prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divmod(prev).first;
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

RationalMatrix evaluate(const PolynomialMatrix& m, const Rational& t) {
  RationalMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& p : m[i]) out[i].push_back(p(t));
  return out;
}

LagrangianPath::LagrangianPath(int n, std::vector<PathPiece> pieces) : n_(n), pieces_(std::move(pieces)) {
  if (n_ < 1) throw Error(ErrorKind::InvalidInput, "dimension must be positive");
  if (pieces_.empty()) throw Error(ErrorKind::InvalidInput, "path has no pieces");
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const auto& p = pieces_[k];
    if (!(p.t0 < p.t1)) throw Error(ErrorKind::InvalidInput, "piece with empty parameter interval");
    if (p.a.size() != static_cast<std::size_t>(n_)) throw Error(ErrorKind::ChartMismatch, "piece has the wrong size");
    for (std::size_t i = 0; i < p.a.size(); ++i) {
      if (p.a[i].size() != static_cast<std::size_t>(n_))
        throw Error(ErrorKind::ChartMismatch, "piece has the wrong size");
      for (std::size_t j = 0; j < i; ++j)
        if (!(p.a[i][j] == p.a[j][i])) throw Error(ErrorKind::InvalidInput, "piece matrix is not symmetric");
    }
    if (k > 0) {
      const auto& q = pieces_[k - 1];
      if (q.t1 != p.t0) throw Error(ErrorKind::InvalidInput, "pieces are not contiguous");
      if (evaluate(q.a, q.t1) != evaluate(p.a, p.t0))
        throw Error(ErrorKind::InvalidInput, "path is discontinuous at t = " + q.t1.get_str());
    }
  }
}

LagrangianPath LagrangianPath::constant(const RationalMatrix& a, const Rational& t0, const Rational& t1) {
  PolynomialMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& x : a[i]) m[i].push_back(Polynomial(std::vector<Rational>{x}));
  return LagrangianPath(static_cast<int>(a.size()), {{t0, t1, m}});
}

RationalMatrix LagrangianPath::at(const Rational& t) const {
  for (const auto& p : pieces_)
    if (p.t0 <= t && t <= p.t1) return evaluate(p.a, t);
  throw Error(ErrorKind::OutOfRange, "parameter outside the path");
}

LagrangianPath LagrangianPath::reversed() const {
  std::vector<PathPiece> out;
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
    PathPiece p{-it->t1, -it->t0, it->a};
    for (auto& row : p.a)
      for (auto& x : row) x = x.compose_affine(Rational(-1), Rational(0));
    out.push_back(std::move(p));
  }
  return LagrangianPath(n_, std::move(out));
}

std::pair<LagrangianPath, LagrangianPath> LagrangianPath::split(const Rational& t) const {
  if (!(start() < t && t < end())) throw Error(ErrorKind::OutOfRange, "split point must be interior");
  std::vector<PathPiece> left, right;
  for (const auto& p : pieces_) {
    if (p.t1 <= t) left.push_back(p);
    else if (p.t0 >= t) right.push_back(p);
    else {
      left.push_back({p.t0, t, p.a});
      right.push_back({t, p.t1, p.a});
    }
  }
  return {LagrangianPath(n_, std::move(left)), LagrangianPath(n_, std::move(right))};
}

LagrangianPath concatenate(const LagrangianPath& a, const LagrangianPath& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::ChartMismatch, "paths have different dimensions");
  std::vector<PathPiece> p = a.pieces_;
  p.insert(p.end(), b.pieces_.begin(), b.pieces_.end());
  return LagrangianPath(a.n_, std::move(p));
}

namespace {

// All s x s minors vanish at the root.
bool minors_vanish(const PolynomialMatrix& m, int s, const Polynomial& p, const RealRoot& r) {
  const int n = static_cast<int>(m.size());
  std::vector<int> rows, cols;
  std::function<bool(int, std::vector<int>&, const std::function<bool()>&)> choose =
      [&](int from, std::vector<int>& pick, const std::function<bool()>& inner) -> bool {
    if (static_cast<int>(pick.size()) == s) return inner();
    for (int k = from; k < n; ++k) {
      pick.push_back(k);
      bool ok = choose(k + 1, pick, inner);
      pick.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return choose(0, rows, [&]() {
    return choose(0, cols, [&]() {
      PolynomialMatrix sub(static_cast<std::size_t>(s));
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) sub[static_cast<std::size_t>(i)].push_back(m[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])][static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])]);
      return vanishes_at(determinant(sub), p, r);
    });
  });
}

// Rational point on one side of a root with no other root in between.
Rational beside(const Polynomial& p, const RealRoot& r, bool after, const Rational& limit) {
  if (!r.exact()) return after ? r.hi : r.lo;
  const Polynomial q =
      squarefree_part(p).divmod(Polynomial(std::vector<Rational>{-r.lo, Rational(1)})).first;
  const auto sturm = q.degree() >= 1 ? sturm_sequence(q) : std::vector<Polynomial>{};
  Rational step = (limit - r.lo) / 2;
  while (true) {
    const Rational x = r.lo + step;
    if (q(x) != 0) {
      if (q.degree() < 1) return x;
      const Rational lo = std::min(x, r.lo), hi = std::max(x, r.lo);
      if (count_roots(sturm, lo, hi) == 0) return x;
    }
    step /= 2;
  }
}

}  // namespace

CrossingReport crossings(const RationalMatrix& reference, const LagrangianPath& path) {
  const int n = path.n();
  if (reference.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::ChartMismatch, "reference has a different dimension");
  for (const auto& row : reference)
    if (row.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::ChartMismatch, "reference is not square");
  CrossingReport rep;
  rep.index = 0;
  Rational total(0);
  for (const auto& piece : path.pieces()) {
    PolynomialMatrix m = piece.a;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
            Polynomial(std::vector<Rational>{reference[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
    const Polynomial det = determinant(m);
    if (det.is_zero())
      throw Error(ErrorKind::DegenerateCrossing, "path meets the reference along the whole piece starting at t = " +
                                                     piece.t0.get_str());
    const Polynomial p = squarefree_part(det);
    for (const auto& root : isolate_roots(det, piece.t0, piece.t1)) {
      int mult = 0;
      for (Polynomial d = det; vanishes_at(d, p, root); d = d.derivative()) ++mult;
      int kernel;
      if (root.exact()) {
        kernel = nullity(evaluate(m, root.lo));
      } else {
        const int s = n - mult + 1;
        kernel = (s >= 1 && minors_vanish(m, s, p, root)) ? mult : mult - 1;
      }
      if (kernel != mult)
        throw Error(ErrorKind::DegenerateCrossing, "crossing form is degenerate near t in [" + root.lo.get_str() + ", " +
                                                       root.hi.get_str() + "]");
      Crossing c;
      c.time = root;
      c.kernel_dimension = kernel;
      const bool at_start = root.exact() && root.lo == piece.t0;
      const bool at_end = root.exact() && root.lo == piece.t1;
      if (at_start) {
        c.form_signature = signature(evaluate(m, beside(det, root, true, piece.t1))) - signature(evaluate(m, root.lo));
        c.weight = Rational(1, 2);
      } else if (at_end) {
        c.form_signature = signature(evaluate(m, root.lo)) - signature(evaluate(m, beside(det, root, false, piece.t0)));
        c.weight = Rational(1, 2);
      } else {
        const Rational lo = root.exact() ? beside(det, root, false, piece.t0) : root.lo;
        const Rational hi = root.exact() ? beside(det, root, true, piece.t1) : root.hi;
        c.form_signature = (signature(evaluate(m, hi)) - signature(evaluate(m, lo))) / 2;
        c.weight = 1;
      }
      total += c.weight * c.form_signature;
      rep.crossings.push_back(std::move(c));
    }
  }
  rep.index = -total;
  return rep;
}

Rational rs_index(const RationalMatrix& reference, const LagrangianPath& path) {
  return crossings(reference, path).index;
}

Rational rs_index(const LagrangianPath& reference, const LagrangianPath& path) {
  const RationalMatrix r = reference.at(reference.start());
  for (const auto& p : reference.pieces())
    for (const auto& row : p.a)
      for (const auto& x : row)
        if (x.degree() > 0) throw Error(ErrorKind::ChartMismatch, "reference path is not constant");
  return rs_index(r, path);
}

int string_index(const LagrangianPath& path) {
  RationalMatrix diff = path.at(path.end());
  const RationalMatrix first = path.at(path.start());
  for (std::size_t i = 0; i < diff.size(); ++i)
    for (std::size_t j = 0; j < diff.size(); ++j) diff[i][j] -= first[i][j];
  if (nullity(diff) != 0) throw Error(ErrorKind::NonTransverseEndpoints, "path(end) meets path(start)");
  Rational mu = Rational(path.n(), 2) - rs_index(first, path);
  mu.canonicalize();
  if (!is_integer(mu)) throw Error(ErrorKind::InvalidInput, "string index is not an integer");
  return static_cast<int>(mu.get_num().get_si());
}

}  // namespace floerkit
