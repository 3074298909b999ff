#pragma once

#include <string>
#include <utility>
#include <vector>

namespace floerkit {

// Ordered tuple of elementary-conductor tokens L_0 .. L_l.
class Conductor {
 public:
  Conductor() = default;
  explicit Conductor(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int l() const { return size() - 1; }
  friend bool operator==(const Conductor&, const Conductor&) = default;
  std::string to_string() const;

 private:
  std::vector<std::string> labels_;
};

// positions must be strictly increasing and inside 0..l; raises OutOfRange.
Conductor subconductor(const Conductor& c, const std::vector<int>& positions);

// (L_0..L_q, L_{q+1}..L_l); raises OutOfRange unless 0 <= q < l.
std::pair<Conductor, Conductor> refinement_split(const Conductor& c, int q);
// Whether whole is the refinement of prefix by suffix.
bool is_refinement(const Conductor& whole, const Conductor& prefix, const Conductor& suffix);

// Increasing partial injection from source positions to target positions.
class Continuation {
 public:
  Continuation(Conductor source, Conductor target, std::vector<int> domain, std::vector<int> phi);
  static Continuation identity(const Conductor& c);

  const Conductor& source() const { return source_; }
  const Conductor& target() const { return target_; }
  const std::vector<int>& domain() const { return domain_; }
  const std::vector<int>& phi() const { return phi_; }  // phi()[k] is the image of domain()[k]
  std::vector<int> image_positions() const { return phi_; }

  Conductor image() const;     // target restricted to phi(I_H)
  Conductor cokernel() const;  // source restricted to I_H
  friend bool operator==(const Continuation&, const Continuation&) = default;

 private:
  Conductor source_;
  Conductor target_;
  std::vector<int> domain_;
  std::vector<int> phi_;
};

// h then k; raises Mismatch unless target(h) == source(k).
Continuation compose(const Continuation& h, const Continuation& k);

// #(phi_H(I_H) intersect I_K) <= 1.
bool is_exact(const Continuation& h, const Continuation& k);

}  // namespace floerkit
