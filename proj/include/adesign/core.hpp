#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adesign/errors.hpp"

namespace adesign {

// a block is an ascending list of point labels from {1..v}
using Block = std::vector<int>;

struct BlockFamily {
  int v = 0;
  int k = 0;
  std::map<Block, uint64_t> entries;  // block type -> multiplicity, zeros omitted

  BlockFamily() = default;
  BlockFamily(int v_, int k_) : v(v_), k(k_) {}

  // validates the block and merges multiplicities (checked add); mult 0 is a no-op
  void add(const Block& block, uint64_t mult);
  uint64_t total_blocks() const;
};

struct FrequencyTable {
  int v = 0;
  int t = 0;
  std::map<std::vector<int>, uint64_t> freqs;  // one entry per t-subset, map order = lex
};

struct AdesignVerdict {
  bool adesign = false;
  uint64_t max_frequency = 0;
  // when not an adesign: lexicographically least colliding pair of t-subsets
  std::vector<int> first, second;
  uint64_t shared = 0;
};

struct MuUpper {
  std::string source;
  double value = 0.0;
  bool exact = false;
  uint64_t exact_value = 0;
};

struct MuBounds {
  int t = 0, k = 0, v = 0;
  uint64_t lower = 0;
  bool lower_is_exact = false;  // true for t=1 where the closed form is known
  std::vector<MuUpper> uppers;
};

FrequencyTable frequencies(const BlockFamily& family, int t);
AdesignVerdict is_adesign(const BlockFamily& family, int t);
std::optional<uint64_t> is_design(const BlockFamily& family, int t);
BlockFamily powers_of_two_family(int v, int k);
BlockFamily complete_family(int v, int k);  // every k-subset once
MuBounds mu_bounds(int t, int k, int v);

}  // namespace adesign
