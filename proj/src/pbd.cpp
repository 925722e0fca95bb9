#include "adesign/pbd.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "adesign/construct.hpp"
#include "adesign/field.hpp"
#include "adesign/search.hpp"
#include "adesign/util.hpp"

namespace adesign {

PBDVerdict verify_pbd(const PBDInstance& inst) {
  if (inst.v < 2) throw ParameterError("need at least 2 points");
  for (auto& block : inst.blocks) {
    if (block.size() < 2) throw ParameterError("pbd blocks need at least 2 points");
    int prev = 0;
    for (int x : block) {
      if (x <= prev || x > inst.v) throw ParameterError("block labels must be ascending in [1,v]");
      prev = x;
    }
  }
  std::vector<uint64_t> cover((size_t)inst.v * inst.v, 0);
  for (auto& block : inst.blocks)
    for (size_t i = 0; i < block.size(); ++i)
      for (size_t j = i + 1; j < block.size(); ++j)
        ++cover[(size_t)(block[i] - 1) * inst.v + (block[j] - 1)];
  PBDVerdict verdict;
  for (int a = 1; a <= inst.v; ++a) {
    for (int b = a + 1; b <= inst.v; ++b) {
      uint64_t c = cover[(size_t)(a - 1) * inst.v + (b - 1)];
      if (c != 1) {
        verdict.pair = {a, b};
        verdict.count = c;
        return verdict;
      }
    }
  }
  verdict.valid = true;
  return verdict;
}

namespace {

// arithmetic tables for GF(q), elements coded 0..q-1 by coefficient digits
struct SmallField {
  int q;
  std::vector<int> add, mul;
  int at_add(int a, int b) const { return add[a * q + b]; }
  int at_mul(int a, int b) const { return mul[a * q + b]; }
};

SmallField small_field(int q) {
  int p, m;
  if (!is_prime_power(q, p, m)) throw NotPrimePower(q);
  FieldSpec f = build_field(p, m);
  auto decode = [&](int code) {
    FieldElement x(f.m, 0);
    for (int i = 0; i < f.m; ++i) {
      x[i] = code % p;
      code /= p;
    }
    return x;
  };
  auto encode = [&](const FieldElement& x) {
    int code = 0;
    for (int i = f.m - 1; i >= 0; --i) code = code * p + x[i];
    return code;
  };
  SmallField sf;
  sf.q = q;
  sf.add.resize(q * q);
  sf.mul.resize(q * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      sf.add[a * q + b] = encode(fe_add(f, decode(a), decode(b)));
      sf.mul[a * q + b] = encode(fe_mul(f, decode(a), decode(b)));
    }
  return sf;
}

}  // namespace

PBDInstance projective_plane(int q) {
  if (q > 16) throw ParameterError("plane order limited to 16");
  SmallField f = small_field(q);
  // normalized homogeneous triples: (1,a,b), (0,1,b), (0,0,1)
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
  for (int b = 0; b < q; ++b) reps.push_back({0, 1, b});
  reps.push_back({0, 0, 1});

  PBDInstance inst;
  inst.v = q * q + q + 1;
  for (auto& line : reps) {
    std::vector<int> block;
    for (size_t pi = 0; pi < reps.size(); ++pi) {
      auto& pt = reps[pi];
      int s = 0;
      for (int c = 0; c < 3; ++c) s = f.at_add(s, f.at_mul(line[c], pt[c]));
      if (s == 0) block.push_back((int)pi + 1);
    }
    std::sort(block.begin(), block.end());
    inst.blocks.push_back(block);
  }
  return inst;
}

PBDInstance affine_plane(int q) {
  if (q > 16) throw ParameterError("plane order limited to 16");
  SmallField f = small_field(q);
  PBDInstance inst;
  inst.v = q * q;
  auto label = [&](int x, int y) { return 1 + x * q + y; };
  for (int m = 0; m < q; ++m) {
    for (int c = 0; c < q; ++c) {
      std::vector<int> block;
      for (int x = 0; x < q; ++x) block.push_back(label(x, f.at_add(f.at_mul(m, x), c)));
      std::sort(block.begin(), block.end());
      inst.blocks.push_back(block);
    }
  }
  for (int c = 0; c < q; ++c) {
    std::vector<int> block;
    for (int y = 0; y < q; ++y) block.push_back(label(c, y));
    std::sort(block.begin(), block.end());
    inst.blocks.push_back(block);
  }
  return inst;
}

PBDInstance single_block(int v) {
  if (v < 2) throw ParameterError("need v >= 2");
  PBDInstance inst;
  inst.v = v;
  std::vector<int> block(v);
  for (int i = 0; i < v; ++i) block[i] = i + 1;
  inst.blocks.push_back(block);
  return inst;
}

uint64_t lambda_complete(int u, int k) {
  if (!(u > k && k >= 2)) throw ParameterError("need u > k >= 2");
  return binom(u - 2, k - 2);
}

AdesignSupplier default_adesign_supplier(int k) {
  return [k](int u) -> BlockFamily {
    if (u == k + 1) return construct_cosingleton(u, 2, SidonGen::greedy).family;
    if (u <= k + 4) return mu_exact(2, k, u).family;
    throw ParameterError("no default adesign supplier beyond u = k+4");
  };
}

DesignSupplier default_design_supplier(int k) {
  return [k](int u) { return std::make_pair(lambda_complete(u, k), complete_family(u, k)); };
}

std::pair<BlockFamily, ComposeTrace> compose(const PBDInstance& pbd, int k,
                                             const AdesignSupplier& adesigns,
                                             const DesignSupplier& designs) {
  PBDVerdict pv = verify_pbd(pbd);
  if (!pv.valid) throw ParameterError("input is not a pairwise balanced design");
  for (auto& block : pbd.blocks)
    if ((int)block.size() <= k) throw BlockTooSmall((int)block.size());

  struct Placed {
    BlockFamily adesign;
    uint64_t mu;
    uint64_t lambda_unit;
    BlockFamily design;
  };
  std::map<int, Placed> cache;
  auto supply = [&](int u) -> Placed& {
    auto it = cache.find(u);
    if (it != cache.end()) return it->second;
    Placed pl;
    pl.adesign = adesigns(u);
    if (pl.adesign.v != u || pl.adesign.k != k)
      throw ParameterError("adesign supplier returned wrong dimensions");
    AdesignVerdict verdict = is_adesign(pl.adesign, 2);
    if (!verdict.adesign) throw ParameterError("adesign supplier output failed verification");
    pl.mu = verdict.max_frequency;
    auto [unit, design] = designs(u);
    if (unit == 0 || design.v != u || design.k != k)
      throw ParameterError("design supplier returned wrong dimensions");
    if (is_design(design, 2) != std::optional<uint64_t>(unit))
      throw ParameterError("design supplier output has the wrong index");
    pl.lambda_unit = unit;
    pl.design = std::move(design);
    return cache.emplace(u, std::move(pl)).first->second;
  };

  BlockFamily out(pbd.v, k);
  ComposeTrace trace;
  uint64_t M = 0;
  for (auto& pblock : pbd.blocks) {
    int u = (int)pblock.size();
    Placed& pl = supply(u);
    uint64_t lambda = 0;
    if (M > 0) lambda = checked_mul((M + pl.lambda_unit - 1) / pl.lambda_unit, pl.lambda_unit);
    uint64_t copies = lambda / pl.lambda_unit;
    auto relabel = [&](const Block& key) {
      Block mapped(key.size());
      for (size_t i = 0; i < key.size(); ++i) mapped[i] = pblock[key[i] - 1];
      return mapped;  // pblock ascending, key ascending => mapped ascending
    };
    if (copies > 0)
      for (auto& [key, mult] : pl.design.entries)
        out.add(relabel(key), checked_mul(copies, mult));
    for (auto& [key, mult] : pl.adesign.entries) out.add(relabel(key), mult);
    M = checked_add(lambda, checked_add(pl.mu, 1));
    trace.records.push_back({u, lambda, pl.mu, M});
  }
  trace.final_M = M;

  AdesignVerdict verdict = is_adesign(out, 2);
  if (!verdict.adesign) throw InternalError("composition failed verification");
  return {std::move(out), std::move(trace)};
}

}  // namespace adesign
