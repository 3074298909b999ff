#include "floerkit/novikov.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "floerkit/error.hpp"

namespace floerkit {

std::string Exponent::to_string() const { return value_.get_str(); }

Series::Series(long constant) {
  if (constant != 0) terms_.push_back({Exponent(0), Rational(constant)});
}

Series Series::monomial(Rational coefficient, Exponent exponent) {
  Series s;
  coefficient.canonicalize();
  if (coefficient != 0) s.terms_.push_back({std::move(exponent), std::move(coefficient)});
  return s;
}

Series Series::from_terms(std::vector<Term> terms, std::optional<Exponent> cutoff) {
  Series s;
  s.terms_ = std::move(terms);
  s.cutoff_ = std::move(cutoff);
  s.normalize();
  return s;
}

void Series::normalize() {
  std::map<Exponent, Rational> merged;
  for (auto& t : terms_) merged[t.exponent] += t.coefficient;
  terms_.clear();
  for (auto& [e, c] : merged) {
    if (c == 0) continue;
    if (cutoff_ && !(e < *cutoff_)) continue;
    c.canonicalize();
    terms_.push_back({e, c});
  }
}

bool Series::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return is_integer(t.coefficient); });
}

std::optional<Exponent> Series::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

const Rational& Series::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "leading coefficient of the zero series");
  return terms_.front().coefficient;
}

Rational Series::coefficient_at(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coefficient;
  return Rational(0);
}

Series Series::truncated(const Exponent& cutoff) const {
  std::optional<Exponent> c = cutoff;
  if (cutoff_ && *cutoff_ < cutoff) c = cutoff_;
  return from_terms(terms_, c);
}

Series Series::with_cutoff(std::optional<Exponent> cutoff) const { return from_terms(terms_, std::move(cutoff)); }

Series Series::scaled(const Rational& c) const {
  Series r = *this;
  for (auto& t : r.terms_) t.coefficient *= c;
  r.normalize();
  return r;
}

Series Series::shifted(const Exponent& e) const {
  Series r = *this;
  for (auto& t : r.terms_) t.exponent = t.exponent + e;
  if (r.cutoff_) r.cutoff_ = *r.cutoff_ + e;
  return r;
}

Series Series::operator-() const { return scaled(Rational(-1)); }

namespace {

std::optional<Exponent> min_cutoff(const std::optional<Exponent>& a, const std::optional<Exponent>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Lower bound for the valuation of the represented element; nullopt = +infinity.
std::optional<Exponent> order_bound(const Series& s) {
  auto v = s.valuation();
  if (v) return v;
  return s.cutoff();
}

std::optional<Exponent> sum_or_infinity(const std::optional<Exponent>& a, const std::optional<Exponent>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace

Series operator+(const Series& a, const Series& b) {
  std::vector<Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Series::from_terms(std::move(terms), min_cutoff(a.cutoff_, b.cutoff_));
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  auto cut = min_cutoff(sum_or_infinity(a.cutoff_, order_bound(b)), sum_or_infinity(b.cutoff_, order_bound(a)));
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Exponent e = x.exponent + y.exponent;
      if (cut && !(e < *cut)) break;
      terms.push_back({e, x.coefficient * y.coefficient});
    }
  }
  return Series::from_terms(std::move(terms), cut);
}

bool Series::congruent(const Series& other, const Exponent& below) const {
  Exponent c = below;
  if (cutoff_ && *cutoff_ < c) c = *cutoff_;
  if (other.cutoff_ && *other.cutoff_ < c) c = *other.cutoff_;
  return truncated(c).terms_ == other.truncated(c).terms_;
}

namespace {

std::string coefficient_text(const Rational& magnitude) {
  if (is_integer(magnitude)) return magnitude == 1 ? "" : magnitude.get_str();
  return "(" + magnitude.get_str() + ")";
}

}  // namespace

std::string Series::to_string() const {
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coefficient_text(abs(t.coefficient));
    out += "t^" + t.exponent.to_string();
    first = false;
  }
  if (cutoff_) {
    if (!first) out += " + ";
    out += "O(t^" + cutoff_->to_string() + ")";
    first = false;
  }
  return first ? "0" : out;
}

namespace {

// Scanner over the literal with whitespace removed; keeps original columns.
class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view text) {
    int column = 1;
    for (std::size_t i = 0; i < text.size();) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
          static_cast<unsigned char>(text[i + 2]) == 0x92) {
        chars_.push_back('-');
        columns_.push_back(column);
        i += 3;
      } else {
        if (!std::isspace(c)) {
          chars_.push_back(static_cast<char>(c));
          columns_.push_back(column);
        }
        // Continuation bytes of multi-byte characters do not advance the column.
        i += 1;
        if ((c & 0xC0) == 0x80) continue;
      }
      ++column;
    }
    end_column_ = column;
  }

  bool done() const { return pos_ >= chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[pos_]; }
  char get() { return chars_[pos_++]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::string digits() {
    std::string d;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return d;
  }
  [[noreturn]] void fail(const std::string& message) const {
    int col = pos_ < columns_.size() ? columns_[pos_] : end_column_;
    throw ParseError(message, 1, col);
  }

 private:
  std::vector<char> chars_;
  std::vector<int> columns_;
  int end_column_ = 1;
  std::size_t pos_ = 0;
};

Rational parenthesized_rational(LiteralScanner& sc) {
  std::string body;
  if (sc.accept('-')) body += '-';
  std::string num = sc.digits();
  if (num.empty()) sc.fail("expected digits");
  body += num;
  if (sc.accept('/')) {
    std::string den = sc.digits();
    if (den.empty()) sc.fail("expected denominator");
    if (den.find_first_not_of('0') == std::string::npos) sc.fail("zero denominator");
    body += "/" + den;
  }
  sc.expect(')', "')'");
  return parse_rational(body);
}

Exponent parse_exponent(LiteralScanner& sc) {
  if (sc.accept('(')) return Exponent(parenthesized_rational(sc));
  std::string body;
  if (sc.accept('-')) body += '-';
  std::string num = sc.digits();
  if (num.empty()) sc.fail("expected exponent digits");
  body += num;
  if (sc.accept('/')) {
    std::string den = sc.digits();
    if (den.empty()) sc.fail("expected exponent denominator");
    if (den.find_first_not_of('0') == std::string::npos) sc.fail("zero denominator");
    body += "/" + den;
  }
  return Exponent(parse_rational(body));
}

}  // namespace

Series Series::parse(std::string_view text) {
  LiteralScanner sc(text);
  if (sc.done()) sc.fail("empty series literal");
  std::vector<Term> terms;
  std::optional<Exponent> cutoff;
  bool first = true;
  while (!sc.done()) {
    bool negative = false;
    if (sc.accept('+')) {
    } else if (sc.accept('-')) {
      negative = true;
    } else if (!first) {
      sc.fail("expected '+' or '-'");
    }
    if (sc.peek() == 'O') {
      if (negative) sc.fail("precision term must be added");
      sc.get();
      sc.expect('(', "'('");
      sc.expect('t', "'t'");
      sc.expect('^', "'^'");
      cutoff = parse_exponent(sc);
      sc.expect(')', "')'");
      if (!sc.done()) sc.fail("trailing input after precision term");
      break;
    }
    Rational coefficient(1);
    bool has_coefficient = false;
    if (sc.accept('(')) {
      coefficient = parenthesized_rational(sc);
      has_coefficient = true;
    } else if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coefficient = Rational(Integer(sc.digits(), 10));
      has_coefficient = true;
    }
    Exponent exponent(0);
    if (sc.accept('t')) {
      exponent = sc.accept('^') ? parse_exponent(sc) : Exponent(1);
    } else if (!has_coefficient) {
      sc.fail("expected a term");
    }
    if (negative) coefficient = -coefficient;
    terms.push_back({exponent, coefficient});
    first = false;
  }
  return from_terms(std::move(terms), cutoff);
}

bool is_unit(const Series& a, CoefficientRing ring) {
  if (a.is_zero()) return false;
  const Rational& lead = a.leading_coefficient();
  if (ring == CoefficientRing::Rational) return true;
  return is_integer(lead) && abs(lead) == 1 && a.is_integral();
}

Series invert(const Series& a, const Exponent& cutoff, CoefficientRing ring) {
  if (!is_unit(a, ring))
    throw Error(ErrorKind::NotAUnit, "series " + a.to_string() + " has no inverse in the chosen coefficient ring");
  const Exponent v = *a.valuation();
  const Rational lead = a.leading_coefficient();
  const Exponent target = std::max(cutoff, cutoff - v);
  // a = lead t^v (1 + u) with val(u) > 0.
  Series normalized = a.shifted(-v).scaled(Rational(1) / lead);
  Series u = normalized - Series(1);
  Series minus_u = -u;
  Series w(1);
  Series power(1);
  while (true) {
    power = (power * minus_u).truncated(target);
    auto pv = order_bound(power);
    if (!pv || !(*pv < target)) break;
    w += power;
  }
  w = w.truncated(target);
  return w.shifted(-v).scaled(Rational(1) / lead);
}

Series divide_by_monomial(const Series& a, const Series& b) {
  if (b.terms().size() != 1) throw Error(ErrorKind::InvalidInput, "divisor is not a monomial");
  const Term& m = b.terms().front();
  return a.shifted(-m.exponent).scaled(Rational(1) / m.coefficient);
}

LocalValue coefficient_value(const RankOneModule& m, const Exponent& energy, bool positive) {
  bool negate = positive == m.flipped();
  Rational c = negate ? Rational(-1) : Rational(1);
  return {Series::monomial(c, energy), m.label()};
}

}  // namespace floerkit
