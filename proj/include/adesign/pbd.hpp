#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "adesign/core.hpp"

namespace adesign {

// every pair of distinct points lies in exactly one block
struct PBDInstance {
  int v = 0;
  std::vector<std::vector<int>> blocks;
};

struct PBDVerdict {
  bool valid = false;
  std::pair<int, int> pair{0, 0};  // least offending pair when invalid
  uint64_t count = 0;
};

PBDVerdict verify_pbd(const PBDInstance& inst);

PBDInstance projective_plane(int q);  // q^2+q+1 points, lines of size q+1
PBDInstance affine_plane(int q);      // q^2 points, lines of size q
PBDInstance single_block(int v);

// index of the complete k-uniform design on u points: C(u-2, k-2)
uint64_t lambda_complete(int u, int k);

struct ComposeRecord {
  int u = 0;
  uint64_t lambda = 0;  // design index placed on this block
  uint64_t mu = 0;      // max frequency of the adesign placed on this block
  uint64_t M = 0;       // lambda + mu + 1
};

struct ComposeTrace {
  std::vector<ComposeRecord> records;
  uint64_t final_M = 0;
};

// adesign on u points with block size k
using AdesignSupplier = std::function<BlockFamily(int)>;
// (lambda_unit, one copy of an S_{lambda_unit}(2,k,u))
using DesignSupplier = std::function<std::pair<uint64_t, BlockFamily>(int)>;

AdesignSupplier default_adesign_supplier(int k);
DesignSupplier default_design_supplier(int k);

// PBD composition: each block gets enough design copies to lift its adesign
// frequencies above everything placed before it
std::pair<BlockFamily, ComposeTrace> compose(const PBDInstance& pbd, int k,
                                             const AdesignSupplier& adesigns,
                                             const DesignSupplier& designs);

}  // namespace adesign
