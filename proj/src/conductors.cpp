#include "floerkit/conductors.hpp"

#include <algorithm>

#include "floerkit/error.hpp"

namespace floerkit {

namespace {

void require_increasing(const std::vector<int>& v, int size, const std::string& what) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0 || v[k] >= size) throw Error(ErrorKind::OutOfRange, what + " position " + std::to_string(v[k]) + " out of range");
    if (k > 0 && v[k - 1] >= v[k]) throw Error(ErrorKind::OutOfRange, what + " positions are not strictly increasing");
  }
}

}  // namespace

Conductor::Conductor(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorKind::InvalidInput, "conductor needs at least one label");
}

std::string Conductor::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < labels_.size(); ++k) out += (k ? ", " : "") + labels_[k];
  return out + ")";
}

Conductor subconductor(const Conductor& c, const std::vector<int>& positions) {
  require_increasing(positions, c.size(), "subconductor");
  std::vector<std::string> out;
  for (int p : positions) out.push_back(c.labels()[static_cast<std::size_t>(p)]);
  return Conductor(std::move(out));
}

std::pair<Conductor, Conductor> refinement_split(const Conductor& c, int q) {
  if (q < 0 || q >= c.l()) throw Error(ErrorKind::OutOfRange, "split point must satisfy 0 <= q < l");
  const auto& v = c.labels();
  return {Conductor({v.begin(), v.begin() + q + 1}), Conductor({v.begin() + q + 1, v.end()})};
}

bool is_refinement(const Conductor& whole, const Conductor& prefix, const Conductor& suffix) {
  if (prefix.size() + suffix.size() != whole.size()) return false;
  return refinement_split(whole, prefix.size() - 1) == std::pair{prefix, suffix};
}

Continuation::Continuation(Conductor source, Conductor target, std::vector<int> domain, std::vector<int> phi)
    : source_(std::move(source)), target_(std::move(target)), domain_(std::move(domain)), phi_(std::move(phi)) {
  if (domain_.size() != phi_.size()) throw Error(ErrorKind::InvalidInput, "domain and phi differ in length");
  require_increasing(domain_, source_.size(), "domain");
  require_increasing(phi_, target_.size(), "phi");
}

Continuation Continuation::identity(const Conductor& c) {
  std::vector<int> all(static_cast<std::size_t>(c.size()));
  for (int k = 0; k < c.size(); ++k) all[static_cast<std::size_t>(k)] = k;
  return Continuation(c, c, all, all);
}

Conductor Continuation::image() const { return subconductor(target_, phi_); }
Conductor Continuation::cokernel() const { return subconductor(source_, domain_); }

Continuation compose(const Continuation& h, const Continuation& k) {
  if (!(h.target() == k.source())) throw Error(ErrorKind::Mismatch, "target of the first continuation is not the source of the second");
  std::vector<int> domain, phi;
  for (std::size_t a = 0; a < h.domain().size(); ++a) {
    const auto& kd = k.domain();
    auto it = std::find(kd.begin(), kd.end(), h.phi()[a]);
    if (it == kd.end()) continue;
    domain.push_back(h.domain()[a]);
    phi.push_back(k.phi()[static_cast<std::size_t>(it - kd.begin())]);
  }
  return Continuation(h.source(), k.target(), std::move(domain), std::move(phi));
}

bool is_exact(const Continuation& h, const Continuation& k) {
  if (!(h.target() == k.source())) throw Error(ErrorKind::Mismatch, "continuations are not composable");
  std::size_t overlap = 0;
  for (int p : h.phi())
    if (std::find(k.domain().begin(), k.domain().end(), p) != k.domain().end()) ++overlap;
  return overlap <= 1;
}

}  // namespace floerkit
