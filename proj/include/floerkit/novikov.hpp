#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "floerkit/rational.hpp"

namespace floerkit {

// Energy exponent of t. Real exponents are modelled by exact rationals.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(Rational value) : value_(std::move(value)) { value_.canonicalize(); }
  Exponent(long n) : value_(n) {}  // NOLINT: integer exponents read naturally

  const Rational& value() const { return value_; }

  friend Exponent operator+(const Exponent& a, const Exponent& b) { return Exponent(a.value_ + b.value_); }
  friend Exponent operator-(const Exponent& a, const Exponent& b) { return Exponent(a.value_ - b.value_); }
  Exponent operator-() const { return Exponent(-value_); }
  friend bool operator==(const Exponent& a, const Exponent& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string to_string() const;

 private:
  Rational value_;
};

enum class CoefficientRing { Integer, Rational };

struct Term {
  Exponent exponent;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

// Finite prefix of a Novikov series. Terms are sorted by strictly increasing
// exponent with nonzero coefficients. When a cutoff C is present the series is
// only known modulo t^C and no stored exponent reaches C.
class Series {
 public:
  Series() = default;
  Series(long constant);  // NOLINT
  static Series monomial(Rational coefficient, Exponent exponent);
  static Series from_terms(std::vector<Term> terms, std::optional<Exponent> cutoff = std::nullopt);

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<Exponent>& cutoff() const { return cutoff_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_exact() const { return !cutoff_.has_value(); }
  bool is_integral() const;

  // Least exponent with nonzero coefficient; nullopt stands for +infinity.
  std::optional<Exponent> valuation() const;
  const Rational& leading_coefficient() const;
  Rational coefficient_at(const Exponent& e) const;

  Series truncated(const Exponent& cutoff) const;
  Series with_cutoff(std::optional<Exponent> cutoff) const;
  Series scaled(const Rational& c) const;
  Series shifted(const Exponent& e) const;  // multiply by t^e

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator-=(const Series& b) { return *this = *this - b; }
  Series& operator*=(const Series& b) { return *this = *this * b; }
  friend bool operator==(const Series& a, const Series& b) = default;

  // Equality of the known parts: compares terms below the smaller cutoff.
  bool congruent(const Series& other, const Exponent& below) const;

  std::string to_string() const;
  static Series parse(std::string_view text);

 private:
  void normalize();

  std::vector<Term> terms_;
  std::optional<Exponent> cutoff_;
};

bool is_unit(const Series& a, CoefficientRing ring);

// Returns b with a*b = 1 modulo t^C where C >= max(cutoff, cutoff - val(a)).
// The result carries the cutoff up to which it is determined.
Series invert(const Series& a, const Exponent& cutoff, CoefficientRing ring = CoefficientRing::Integer);

// Exact quotient a/b when b is a monomial.
Series divide_by_monomial(const Series& a, const Series& b);

// Rank-one local coefficient module with its two generators g and its negative.
class RankOneModule {
 public:
  explicit RankOneModule(std::string label, bool flipped = false) : label_(std::move(label)), flipped_(flipped) {}
  const std::string& label() const { return label_; }
  bool flipped() const { return flipped_; }
  RankOneModule flip() const { return RankOneModule(label_, !flipped_); }
  friend bool operator==(const RankOneModule&, const RankOneModule&) = default;

 private:
  std::string label_;
  bool flipped_;
};

struct LocalValue {
  Series value;           // coefficient in front of the reference generator
  std::string generator;  // label of the reference generator
  friend bool operator==(const LocalValue&, const LocalValue&) = default;
};

// +-t^energy written in the reference generator of m; flipping m negates it.
LocalValue coefficient_value(const RankOneModule& m, const Exponent& energy, bool positive);

}  // namespace floerkit
