#include "adesign/core.hpp"

#include <algorithm>
#include <cmath>

#include "adesign/construct.hpp"
#include "adesign/util.hpp"

namespace adesign {

static void check_block(const Block& b, int v, int k) {
  if ((int)b.size() != k) throw ParameterError("block size mismatch");
  int prev = 0;
  for (int x : b) {
    if (x <= prev || x > v) throw ParameterError("block labels must be ascending in [1,v]");
    prev = x;
  }
}

void BlockFamily::add(const Block& block, uint64_t mult) {
  check_block(block, v, k);
  if (mult == 0) return;
  auto it = entries.find(block);
  if (it == entries.end())
    entries.emplace(block, mult);
  else
    it->second = checked_add(it->second, mult);
}

uint64_t BlockFamily::total_blocks() const {
  uint64_t b = 0;
  for (auto& [_, m] : entries) b = checked_add(b, m);
  return b;
}

FrequencyTable frequencies(const BlockFamily& family, int t) {
  if (t < 0 || t > family.k) throw ParameterError("need 0 <= t <= k");
  if (family.k > family.v) throw ParameterError("need k <= v");
  FrequencyTable table;
  table.v = family.v;
  table.t = t;
  for (auto& T : all_ksubsets(family.v, t)) table.freqs.emplace(T, 0);
  for (auto& [block, mult] : family.entries) {
    for (auto& idx : all_ksubsets(family.k, t)) {
      std::vector<int> T(t);
      for (int i = 0; i < t; ++i) T[i] = block[idx[i] - 1];
      uint64_t& f = table.freqs[T];
      f = checked_add(f, mult);
    }
  }
  return table;
}

AdesignVerdict is_adesign(const BlockFamily& family, int t) {
  FrequencyTable table = frequencies(family, t);
  AdesignVerdict verdict;
  std::map<uint64_t, const std::vector<int>*> seen;
  for (auto& [T, f] : table.freqs) {
    verdict.max_frequency = std::max(verdict.max_frequency, f);
    auto [it, fresh] = seen.emplace(f, &T);
    if (!fresh && verdict.first.empty()) {
      verdict.first = *it->second;  // earliest t-subset with this frequency
      verdict.second = T;
      verdict.shared = f;
    }
  }
  verdict.adesign = verdict.first.empty();
  return verdict;
}

std::optional<uint64_t> is_design(const BlockFamily& family, int t) {
  FrequencyTable table = frequencies(family, t);
  uint64_t lambda = table.freqs.begin()->second;
  for (auto& [_, f] : table.freqs)
    if (f != lambda) return std::nullopt;
  return lambda;
}

BlockFamily powers_of_two_family(int v, int k) {
  if (v <= k || k < 1) throw ParameterError("need v > k >= 1");
  uint64_t count = binom(v, k);
  if (count > 63) throw ParameterError("C(v,k) > 63: powers of two exceed 64-bit frequencies");
  BlockFamily fam(v, k);
  uint64_t mult = 1;
  for (auto& block : all_ksubsets(v, k)) {
    fam.add(block, mult);
    mult <<= 1;
  }
  return fam;
}

BlockFamily complete_family(int v, int k) {
  if (v < k || k < 0) throw ParameterError("need v >= k >= 0");
  BlockFamily fam(v, k);
  for (auto& block : all_ksubsets(v, k)) fam.add(block, 1);
  return fam;
}

MuBounds mu_bounds(int t, int k, int v) {
  if (!(v > k && k >= t && t >= 1)) throw ParameterError("need v > k >= t >= 1");
  MuBounds out;
  out.t = t;
  out.k = k;
  out.v = v;
  out.lower = binom(v, t) - 1;
  if (t == 1) {
    out.lower = mu1(v, k);  // closed form is exact, replacing the generic bound
    out.lower_is_exact = true;
    out.uppers.push_back({"exact t=1 construction", (double)out.lower, true, out.lower});
  }
  uint64_t cvk;
  if (binom_u64(v, k, cvk) && cvk <= 63) {
    uint64_t val = 1ULL << cvk;
    out.uppers.push_back({"powers-of-two multiplicities", (double)val, true, val});
  }
  if (t >= 2 && k > 2 * t + 2) {
    double bound = 16.0 * t * std::pow((double)v, 2 * t + 2) * std::log((double)v);
    out.uppers.push_back({"randomized thinning", bound, false, 0});
  }
  return out;
}

}  // namespace adesign
