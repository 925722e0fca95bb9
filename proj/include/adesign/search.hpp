#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adesign/core.hpp"

namespace adesign {

struct MuCertificate {
  int t = 0, k = 0, v = 0;
  uint64_t mu = 0;
  BlockFamily family;  // witness attaining max frequency mu
  bool optimal = false;
  uint64_t nodes = 0;
};

// thrown when the node budget runs out; carries the proven lower bound and a
// constructive upper bound when one is available
struct BudgetExhausted : std::runtime_error {
  uint64_t lower_bound = 0;
  uint64_t best_known = 0;
  bool has_witness = false;
  BlockFamily witness;
  uint64_t nodes = 0;
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// exact mu(t,k,v) by iterative deepening on the target maximum
MuCertificate mu_exact(int t, int k, int v, uint64_t budget = 50000000ULL);

// exact-cover style search for an S_lambda(2,k,v); nullopt if none exists
std::optional<BlockFamily> find_design(int v, int k, uint64_t lambda,
                                       uint64_t budget = 100000000ULL);

enum class CubeMode { exact, heuristic };

struct CubeAssignment {
  int n = 0;
  std::vector<uint64_t> cells;  // cells[i + n*j + n*n*k]
  uint64_t max_line_sum = 0;
  std::vector<uint64_t> line_sums() const;  // 3n^2 sums, axis by axis
};

// fill [n]^3 with nonnegative integers so all 3n^2 axis line sums differ
CubeAssignment antimagic_cube(int n, CubeMode mode);

}  // namespace adesign
