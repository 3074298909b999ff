#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floerkit/rational.hpp"

namespace floerkit {

// Dense polynomial over Q; coefficient k multiplies t^k, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(long constant);  // NOLINT
  static Polynomial monomial(Rational c, int degree);

  const std::vector<Rational>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Euclidean division; returns {quotient, remainder}.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial compose_affine(const Rational& a, const Rational& b) const;  // p(a t + b)

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial gcd(Polynomial a, Polynomial b);  // monic
Polynomial squarefree_part(const Polynomial& p);

// Sturm chain of a squarefree polynomial.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);
// Number of distinct roots in the open interval (a, b); a, b must not be roots.
int count_roots(const std::vector<Polynomial>& sturm, const Rational& a, const Rational& b);

// Real root given exactly (lo == hi) or by an isolating open interval (lo, hi)
// of a squarefree polynomial with no root at lo or hi.
struct RealRoot {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

// Roots of p in the closed interval [a, b], increasing.
std::vector<RealRoot> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b);
// Whether f vanishes at the root of the squarefree polynomial p isolated by r.
bool vanishes_at(const Polynomial& f, const Polynomial& p, const RealRoot& r);

using RationalMatrix = std::vector<std::vector<Rational>>;
using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

int signature(const RationalMatrix& m);
int nullity(const RationalMatrix& m);
Polynomial determinant(const PolynomialMatrix& m);
RationalMatrix evaluate(const PolynomialMatrix& m, const Rational& t);

struct PathPiece {
  Rational t0;
  Rational t1;
  PolynomialMatrix a;  // symmetric n x n
};

// Path of Lagrangian subspaces: graphs of the symmetric families over a
// fixed splitting, piecewise polynomial in t and continuous at the knots.
class LagrangianPath {
 public:
  LagrangianPath(int n, std::vector<PathPiece> pieces);
  static LagrangianPath constant(const RationalMatrix& a, const Rational& t0 = -1, const Rational& t1 = 1);

  int n() const { return n_; }
  const std::vector<PathPiece>& pieces() const { return pieces_; }
  const Rational& start() const { return pieces_.front().t0; }
  const Rational& end() const { return pieces_.back().t1; }
  RationalMatrix at(const Rational& t) const;

  // Same path traversed backwards over the mirrored interval: A*(t) = A(-t).
  LagrangianPath reversed() const;
  std::pair<LagrangianPath, LagrangianPath> split(const Rational& t) const;
  friend LagrangianPath concatenate(const LagrangianPath& a, const LagrangianPath& b);

 private:
  int n_;
  std::vector<PathPiece> pieces_;
};

struct Crossing {
  RealRoot time;
  int kernel_dimension = 0;
  int form_signature = 0;  // signature of the crossing form on the kernel
  Rational weight;         // 1, or 1/2 at the ends of the path
};

struct CrossingReport {
  std::vector<Crossing> crossings;
  Rational index;  // relative index of the path against the reference
};

// Crossing-form index; Example-calibrated convention: a single positive end
// crossing counts -1/2.
CrossingReport crossings(const RationalMatrix& reference, const LagrangianPath& path);
Rational rs_index(const RationalMatrix& reference, const LagrangianPath& path);
// Reference given as a constant path.
Rational rs_index(const LagrangianPath& reference, const LagrangianPath& path);

// n/2 - rs_index(path(start), path).
int string_index(const LagrangianPath& path);

}  // namespace floerkit
