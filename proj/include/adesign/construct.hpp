#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adesign/core.hpp"
#include "adesign/sidon.hpp"

namespace adesign {

// desired pointwise frequencies f(1) < ... < f(v) realized by b blocks of size k
struct FrequencyPrescription {
  std::vector<uint64_t> values;
  uint64_t b = 0;
  int k = 0;
};

// least achievable maximum point frequency, closed form
uint64_t mu1(int v, int k);

// family of b size-k blocks whose point frequencies are pairwise distinct with
// maximum exactly mu1(v,k)
BlockFamily construct_t1(int v, int k);

// round-robin slot filling: block i gets point x for each q in 0..k-1 with
// prefix(x-1) < b*q + i <= prefix(x)
BlockFamily fill_blocks(const FrequencyPrescription& pres, int v);

enum class SidonGen { greedy, bose_chowla };

struct CosingletonResult {
  BlockFamily family;   // blocks V \ {x} with Sidon multiplicities
  SidonSet sidon;
  uint64_t max_frequency = 0;
};

CosingletonResult construct_cosingleton(int v, int t, SidonGen gen = SidonGen::greedy);

// every k-subset K with multiplicity sum of Sidon values outside K
BlockFamily base_family(const SidonSet& sidon, int k);

double thinning_probability(int v, int k, int t);

BlockFamily thin(const BlockFamily& base, double p, uint64_t seed);

struct ConcentrationRow {
  std::vector<int> tset;
  uint64_t observed = 0;   // frequency in the thinned family
  double expected = 0.0;   // p * base frequency
  double sigma = 0.0;      // 2 sqrt(p f ln C(v,t))
  bool holds = false;
};

struct ConcentrationReport {
  std::vector<ConcentrationRow> rows;
  uint64_t violations = 0;
  bool base_degenerate = false;  // all base frequencies equal: distinctness unreachable
};

ConcentrationReport concentration_report(const BlockFamily& base, const BlockFamily& thinned,
                                         double p, int t);

struct RandomizedResult {
  BlockFamily family;
  uint64_t attempts = 0;
  double p = 0.0;
  uint64_t max_frequency = 0;
  uint64_t seed = 0;
  SidonSet points;  // the B_t values backing the ground set
};

RandomizedResult randomized_adesign(int v, int k, int t, std::optional<double> p_override,
                                    uint64_t seed, uint64_t max_retries);

}  // namespace adesign
