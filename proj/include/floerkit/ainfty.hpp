#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "floerkit/novikov.hpp"

namespace floerkit {

// Intersection generator of CF(L_i, L_j), i < j.
struct Generator {
  std::string id;
  int i = 0;
  int j = 0;
  int mu = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

// A string is a word of generator indices whose labels chain: i_0 < i_1 < ... < i_q.
using Word = std::vector<int>;
// Linear combination of strings.
using Vector = std::map<Word, Series>;

// Sparse multilinear map: input word -> combination of single output generators.
class Tensor {
 public:
  using Row = std::map<int, Series>;

  void add(const Word& inputs, int output, const Series& c);
  const Row* find(const Word& inputs) const;
  const std::map<Word, Row>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const;
  // Entries whose input word has the given length.
  std::size_t count_arity(int arity) const;
  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::map<Word, Row> entries_;
};

struct AInftyDatum {
  int l = 1;  // labels 0..l
  std::vector<Generator> generators;
  Tensor m;
  std::optional<long> intersection_number;  // signed count L_0 . L_1, carried as metadata

  int index_of(const std::string& id) const;
  int mu(const Word& w) const;
  bool composable(const Word& w) const;
  // All composable strings ordered by cardinality, then lexicographically.
  std::vector<Word> strings() const;
  // Restriction to the Lagrangians at the given increasing positions.
  AInftyDatum restricted(const std::vector<int>& positions) const;
  std::string describe(const Word& w) const;
};

// Raises DegreeViolation on entries that break the index or label rules.
// Shift is the change of mu for an entry with l inputs: 2 - l for m.
void check_degrees(const AInftyDatum& d, const Tensor& t, int shift_constant, const std::string& what);

// Which factors of the differential sign are used. Everything on is the
// actual rule; the others are mutants.
struct DeltaSigns {
  bool q_l2 = true;      // (-1)^{q l2}
  bool position = true;  // (-1)^{i (l2-1)}
  bool koszul = true;    // (-1)^{l2 * mu(prefix)}, the source of the l1 l2 commutation sign
};

Vector differential(const AInftyDatum& d, const Word& w, const DeltaSigns& signs = {});

struct FloerComplex {
  AInftyDatum datum;
  int modulus = 0;  // N; 0 means integer grading
  std::vector<Word> basis;
  std::map<Word, Vector> matrix;  // column of each basis string

  int degree(const Word& w) const;  // (mu + q - 1) mod N
};

FloerComplex assemble_differential(const AInftyDatum& d, int modulus = 0, const DeltaSigns& signs = {});

Vector apply(const FloerComplex& c, const Vector& v);

struct CheckReport {
  CheckReport() = default;
  CheckReport(std::string n) : name(std::move(n)) {}  // NOLINT
  CheckReport(const char* n) : name(n) {}              // NOLINT

  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures
  bool ok() const { return failures == 0; }
  void fail(std::string message);
};

CheckReport check_a_infinity(const AInftyDatum& d, const DeltaSigns& signs = {});

struct AxiomReport {
  CheckReport a1;
  CheckReport a2;
  CheckReport a3;
  bool ok() const { return a1.ok() && a2.ok() && a3.ok(); }
};

AxiomReport validate_axioms_A(const FloerComplex& c);

// Tensors of a morphism from a source datum to a target datum. H entries with
// l inputs shift mu by 1 - l, K entries by -l.
struct MapDatum {
  Tensor h;
  Tensor k;
};

void check_map_degrees(const AInftyDatum& source, const AInftyDatum& target, const MapDatum& h);

struct MapSigns {
  bool block_sign = true;  // (-1)^{sum (q1-j)(l_j-1)}
  bool koszul = true;
};

Vector continuation(const AInftyDatum& source, const MapDatum& h, const Word& w, const MapSigns& signs = {});

// Identity morphism: H_1 = id, nothing else.
MapDatum identity_map(const AInftyDatum& d);

CheckReport check_chain_map(const AInftyDatum& source, const AInftyDatum& target, const MapDatum& h,
                            const MapSigns& signs = {});

// Transpose of F(H) compared with the expansion over dual strings.
CheckReport validate_axioms_B(const AInftyDatum& source, const AInftyDatum& target, const MapDatum& h);

// K(h0, h1, k): H0 on factors left of the K factor and H1 on factors right of it.
struct HomotopySigns {
  bool cardinality = true;  // (-1)^q
  bool block_sign = true;   // (-1)^{sum (q-j)(l_j-1)}
  bool prefix = true;       // (-1)^{sum_{j<i} (l_j-1)}
};

Vector homotopy_map(const AInftyDatum& source, const MapDatum& h0, const MapDatum& h1, const Tensor& k,
                    const Word& w, const HomotopySigns& signs = {});

// F(H0) - F(H1) = delta K + K delta' on every source string.
CheckReport check_homotopy(const AInftyDatum& source, const AInftyDatum& target, const MapDatum& h0,
                           const MapDatum& h1, const Tensor& k, const HomotopySigns& signs = {});

// Composite tensors of outer after inner: C = sum (-1)^{sum (q0-j)(l_j-1)} outer o (inner x ... x inner).
MapDatum compose_maps(const AInftyDatum& source, const MapDatum& outer, const MapDatum& inner);

// F(outer o inner) = F(outer) o F(inner) on every source string, plus the
// explicit composite against the cardinality-one part of F(outer) o F(inner).
CheckReport check_composition(const AInftyDatum& source, const AInftyDatum& middle, const MapDatum& outer,
                              const MapDatum& inner);

// Values on generators; extended to strings by the factorization sign rule.
struct Augmentation {
  std::map<int, Series> values;
};

Series augmentation_value(const AInftyDatum& d, const Augmentation& a, const Word& w);
Vector augmentation_vector(const AInftyDatum& d, const Augmentation& a);

struct AugmentationReport {
  CheckReport closed;      // delta applied to the augmentation vanishes
  CheckReport factorizes;  // values on strings follow the sign rule
  bool ok() const { return closed.ok() && factorizes.ok(); }
};

AugmentationReport check_augmentation(const AInftyDatum& d, const Augmentation& a);

// Pushforward along a morphism: the cardinality-one part of F(H) applied to the
// augmentation vector. The report checks the result is again an augmentation.
Augmentation pushforward(const AInftyDatum& source, const MapDatum& h, const Augmentation& a);
AugmentationReport check_pushforward(const AInftyDatum& source, const AInftyDatum& target, const MapDatum& h,
                                     const Augmentation& a);

long euler_characteristic(const FloerComplex& c);

struct CohomologyReport {
  int modulus = 0;
  std::size_t rank = 0;
  std::map<int, std::size_t> ranks;  // degree -> free rank
  std::size_t differential_rank = 0;
};

CohomologyReport cohomology(const FloerComplex& c, CoefficientRing ring = CoefficientRing::Rational);

// Formal expansion of delta o delta with symbols m_l.
struct SymbolicReport {
  int q_max = 0;
  std::size_t disjoint_pairs = 0;
  std::size_t disjoint_uncancelled = 0;
  std::size_t nested_terms = 0;
  std::size_t nested_mismatches = 0;  // terms whose sign disagrees with the facet sign of K_Q
  bool q_reading_equivalent = true;   // (-1)^{q l2} = (-1)^{q1 l2} for all terms
  bool ok() const { return disjoint_uncancelled == 0 && nested_mismatches == 0; }
};

struct SymbolicSigns {
  bool q_l2 = true;
  bool position = true;
  bool commutation = true;  // (-1)^{l1 l2} when two operators pass each other
};

SymbolicReport symbolic_delta_squared(int q_max, const SymbolicSigns& signs = {});

// Polynomial over GF(2) in boolean variables; x^2 = x since exponents only
// ever see integer values mod 2.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  static Gf2Poly constant(bool one);
  static Gf2Poly variable(int index);

  friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b);
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;
  bool evaluate(std::uint32_t assignment) const;  // bit k = parity of variable k
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<std::uint32_t> monomials_;  // sorted, each a set of variables
};

struct LemmaTerm {
  std::string name;
  Gf2Poly derived;
  Gf2Poly displayed;
};

struct LemmaReport {
  std::string name;
  std::vector<LemmaTerm> terms;
  std::size_t identity_failures = 0;   // derived != displayed as polynomials
  std::size_t evaluation_failures = 0;  // exhaustive integer evaluation
  std::size_t pairing_failures = 0;     // pairs that should match or cancel
  bool ok() const { return identity_failures == 0 && evaluation_failures == 0 && pairing_failures == 0; }
};

// Both consistency lemmas: expansions of delta* o H*, H* o delta*, delta* o K*,
// K* o delta* derived from the Leibniz and product rules, compared with the
// displayed signs and evaluated for all values up to max_value.
LemmaReport consistency_lemma_morphisms(int max_value);
LemmaReport consistency_lemma_homotopies(int max_value);

// Fixtures built by transfer: a source algebra plus random H with H_1 = id,
// and the target structure solved so that F(H) is a chain map.
struct TransferFixture {
  AInftyDatum source;
  AInftyDatum target;
  MapDatum h;
};

AInftyDatum path_algebra(int l, std::mt19937& rng);
Tensor random_tensor(const AInftyDatum& d, int shift_constant, int min_arity, double density, std::mt19937& rng);
TransferFixture transfer_fixture(int l, std::uint32_t seed);

// Second morphism H1 together with a homotopy K from H0 = fixture.h.
struct HomotopyFixture {
  TransferFixture base;
  MapDatum h1;
  Tensor k;
};

HomotopyFixture homotopy_fixture(int l, std::uint32_t seed);

}  // namespace floerkit
