#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adesign/errors.hpp"

namespace adesign {

// B_r set: all r-wise sums with repetition are pairwise distinct
struct SidonSet {
  std::vector<uint64_t> elements;  // strictly increasing, >= 1
  int r = 2;
  std::optional<uint64_t> modulus;  // distinctness holds mod this value when present
};

struct BseqVerdict {
  bool ok = false;
  // least colliding pair of r-multisets (ascending within each)
  std::vector<uint64_t> first, second;
  uint64_t sum = 0;
};

BseqVerdict is_bsequence(const std::vector<uint64_t>& elements, int r,
                         std::optional<uint64_t> modulus = std::nullopt);
SidonSet greedy_bsequence(int r, int count);
SidonSet bose_chowla(int q, int r);

struct MaxBresult {
  int size = 0;
  std::vector<uint64_t> witness;
};

// largest B_r subset of {1..n}, exhaustive
MaxBresult max_bsequence_size_exact(int n, int r);

}  // namespace adesign
