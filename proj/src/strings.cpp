#include "floerkit/strings.hpp"

#include <algorithm>

#include "floerkit/error.hpp"

namespace floerkit {

namespace {

int reduce(int v, int modulus) {
  if (modulus == 0) return v;
  int r = v % modulus;
  return r < 0 ? r + modulus : r;
}

std::string dual_id(const std::string& id) {
  if (id.size() > 1 && id.back() == '*') return id.substr(0, id.size() - 1);
  return id + "*";
}

}  // namespace

int OpenString::index() const {
  int mu = shift_;
  for (const auto& f : factors_) mu += f.mu;
  return mu;
}

ElementaryString dual(const ElementaryString& s, int n) { return {dual_id(s.id), s.target, s.source, n - s.mu}; }

OpenString dual(const OpenString& s, int n) {
  if (s.factors().empty()) return OpenString({}, n - s.shift());
  std::vector<ElementaryString> out;
  out.reserve(s.factors().size());
  for (auto it = s.factors().rbegin(); it != s.factors().rend(); ++it) out.push_back(dual(*it, n));
  return OpenString(std::move(out), -s.shift());
}

OpenString tensor(const OpenString& a, const OpenString& b) {
  std::vector<ElementaryString> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return OpenString(std::move(f), a.shift() + b.shift());
}

OpenString shift(const OpenString& s, int e) { return OpenString(s.factors(), s.shift() + e); }

bool equivalent(const OpenString& a, const OpenString& b, int modulus) {
  if (modulus < 0) throw Error(ErrorKind::OutOfRange, "negative grading modulus");
  return a.factors() == b.factors() && reduce(a.shift() - b.shift(), modulus) == 0;
}

int grading(const OpenString& s, int modulus) {
  if (modulus < 0) throw Error(ErrorKind::OutOfRange, "negative grading modulus");
  return reduce(s.index() + s.cardinality(), modulus);
}

}  // namespace floerkit
