#pragma once

#include <string>
#include <vector>

#include "floerkit/ainfty.hpp"

namespace floerkit {

struct CriticalPoint {
  std::string id;
  int index = 0;  // Morse index i_M
  Rational value;  // f(x)
};

// Signed count of gradient lines from a point of index k+1 to one of index k.
struct Flow {
  std::string from;
  std::string to;
  long count = 0;
};

// Signed gradient-tree count: m_2(a, b) contributes count * t^action * out.
struct Triple {
  std::string a;
  std::string b;
  std::string out;
  long count = 0;
  Rational action;
};

struct MorseDatum {
  int n = 0;
  std::vector<CriticalPoint> points;
  std::vector<Flow> flows;
  std::vector<Triple> triples;
  std::optional<long> intersection_number;

  int index_of(const std::string& id) const;
};

// Raises InvalidInput on malformed data and NotAComplex if the Morse
// differential does not square to zero.
void check_morse(const MorseDatum& m);

// Generators get mu = n - i_M. Without triples the result has l = 1; with
// triples it has l = 2 and one copy of every point per label pair.
AInftyDatum build_floer_complex(const MorseDatum& m);

// Height function on S^n: generators max (mu 0) and min (mu n) for every
// label pair 0 <= i < j <= l, with max as unit and min . min = 0.
AInftyDatum sphere_fixture(int n, int l = 2);

struct SftIndexQuery {
  int n = 2;
  int g = 0;
  int v = 1;
  std::vector<int> m;  // one multiplicity per puncture
};

struct SftIndexBound {
  long mu_max = 0;
  long bound = 0;
  long majorant = 0;
  bool satisfies = false;  // bound <= -2
};

SftIndexBound sft_index_bound(const SftIndexQuery& q);

}  // namespace floerkit
