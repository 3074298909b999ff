#pragma once

#include <string>
#include <vector>

namespace floerkit {

struct ElementaryString {
  std::string id;
  std::string source;  // Lagrangian label at the start
  std::string target;
  int mu = 0;
  friend bool operator==(const ElementaryString&, const ElementaryString&) = default;
};

// Formal tensor of elementary strings. Only the total shift is stored, so
// a^{+e1} (x) b^{+e2} and a^{+e1+e2} (x) b are the same value.
class OpenString {
 public:
  OpenString() = default;
  explicit OpenString(std::vector<ElementaryString> factors, int shift = 0)
      : factors_(std::move(factors)), shift_(shift) {}

  static OpenString empty() { return OpenString(); }

  const std::vector<ElementaryString>& factors() const { return factors_; }
  int shift() const { return shift_; }
  int cardinality() const { return static_cast<int>(factors_.size()); }
  int index() const;

  friend bool operator==(const OpenString&, const OpenString&) = default;

 private:
  std::vector<ElementaryString> factors_;
  int shift_ = 0;
};

// Factor order reversed, each factor gets index n - mu. The empty string goes
// to the string with index n.
ElementaryString dual(const ElementaryString& s, int n);
OpenString dual(const OpenString& s, int n);

OpenString tensor(const OpenString& a, const OpenString& b);
OpenString shift(const OpenString& s, int e);

// Equality in OS_N: same factors and shifts congruent mod N (N = 0: exact).
bool equivalent(const OpenString& a, const OpenString& b, int modulus);

// (mu + q) mod N in [0, N), or mu + q when N = 0.
int grading(const OpenString& s, int modulus);

}  // namespace floerkit
