#include "adesign/search.hpp"

#include <algorithm>
#include <map>

#include "adesign/util.hpp"

namespace adesign {

namespace {

struct BudgetStop {};  // internal unwind, converted to BudgetExhausted by callers

// feasibility of "multiplicities on all k-subsets with distinct t-subset
// frequencies, all <= M" at one deepening level
struct LevelSearch {
  int nB = 0, nT = 0;
  uint64_t M = 0, g = 0, C = 0;
  uint64_t smin_all = 0, bhi = 0;
  std::vector<uint64_t> fullmask;               // per t-set: which blocks contain it
  const std::vector<std::vector<int>>* block_tsets = nullptr;
  std::vector<uint64_t> freq, mult;
  uint64_t* nodes_left = nullptr;

  bool root_counts() {
    // some total block count b must satisfy
    //   smin <= g*b <= C*min(M,b) - smin_all  with smin = smin_all at the root
    for (uint64_t b = 0; b <= bhi; ++b) {
      uint64_t cap = C * std::min(M, b);
      if (g * b >= smin_all && cap >= smin_all && g * b <= cap - smin_all) return true;
    }
    return false;
  }

  bool pruned(int i, uint64_t bcur) {
    // equal futures: same remaining support and same current frequency never separate
    for (int a = 0; a < nT; ++a)
      for (int b = a + 1; b < nT; ++b)
        if (freq[a] == freq[b] && (fullmask[a] >> i) == (fullmask[b] >> i)) return true;
    std::vector<uint64_t> lbs = freq;
    std::sort(lbs.begin(), lbs.end());
    for (int idx = 0; idx < nT; ++idx)  // descending fit under M, M-1, ...
      if (lbs[nT - 1 - idx] > M - idx) return true;
    uint64_t smin = 0, prev = 0;
    bool first = true;
    for (uint64_t lb : lbs) {
      uint64_t val = first ? lb : std::max(lb, prev + 1);
      smin += val;
      prev = val;
      first = false;
    }
    for (uint64_t b = bcur; b <= bhi; ++b) {
      uint64_t cap = C * std::min(M, b);
      if (g * b >= smin && cap >= smin_all && g * b <= cap - smin_all) return false;
    }
    return true;
  }

  bool dfs(int i, uint64_t bcur) {
    if (*nodes_left == 0) throw BudgetStop{};
    --*nodes_left;
    if (pruned(i, bcur)) return false;
    if (i == nB) return true;  // distinctness enforced by the equal-futures prune
    uint64_t fmax = 0;
    for (int j : (*block_tsets)[i]) fmax = std::max(fmax, freq[j]);
    uint64_t cap = std::min(M - fmax, bhi - bcur);
    for (uint64_t m = 0; m <= cap; ++m) {
      mult[i] = m;
      if (m > 0)
        for (int j : (*block_tsets)[i]) ++freq[j];
      if (dfs(i + 1, bcur + m)) return true;
    }
    for (int j : (*block_tsets)[i]) freq[j] -= cap;
    mult[i] = 0;
    return false;
  }
};

}  // namespace

MuCertificate mu_exact(int t, int k, int v, uint64_t budget) {
  if (!(v > k && k >= t && t >= 1)) throw ParameterError("need v > k >= t >= 1");
  uint64_t nblocks, ntsets;
  if (!binom_u64(v, k, nblocks) || nblocks > 40) throw ParameterError("C(v,k) > 40");
  if (!binom_u64(v, t, ntsets) || ntsets > 21) throw ParameterError("C(v,t) > 21");

  auto blocks = all_ksubsets(v, k);
  auto tsets = all_ksubsets(v, t);
  std::map<std::vector<int>, int> trank;
  for (size_t j = 0; j < tsets.size(); ++j) trank[tsets[j]] = (int)j;
  std::vector<std::vector<int>> block_tsets(blocks.size());
  std::vector<uint64_t> fullmask(tsets.size(), 0);
  auto sub = all_ksubsets(k, t);
  for (size_t i = 0; i < blocks.size(); ++i) {
    for (auto& idx : sub) {
      std::vector<int> T(t);
      for (int a = 0; a < t; ++a) T[a] = blocks[i][idx[a] - 1];
      int j = trank[T];
      block_tsets[i].push_back(j);
      fullmask[j] |= 1ULL << i;
    }
  }

  // a guaranteed-feasible ceiling for the deepening loop
  BlockFamily fallback = powers_of_two_family(v, k);
  uint64_t ceiling = is_adesign(fallback, t).max_frequency;

  uint64_t nodes_left = budget;
  for (uint64_t M = binom(v, t) - 1; M <= ceiling; ++M) {
    LevelSearch ls;
    ls.nB = (int)blocks.size();
    ls.nT = (int)tsets.size();
    ls.M = M;
    ls.g = binom(k, t);
    ls.C = ntsets;
    ls.smin_all = ntsets * (ntsets - 1) / 2;
    ls.bhi = ls.C * M >= ls.smin_all ? (ls.C * M - ls.smin_all) / ls.g : 0;
    ls.fullmask = fullmask;
    ls.block_tsets = &block_tsets;
    ls.freq.assign(tsets.size(), 0);
    ls.mult.assign(blocks.size(), 0);
    ls.nodes_left = &nodes_left;
    bool ok;
    try {
      ok = ls.root_counts() && ls.dfs(0, 0);
    } catch (const BudgetStop&) {
      BudgetExhausted err("node budget exhausted at target " + std::to_string(M));
      err.lower_bound = M;  // every smaller target was refuted
      err.best_known = ceiling;
      err.witness = fallback;
      err.has_witness = true;
      err.nodes = budget;
      throw err;
    }
    if (ok) {
      MuCertificate cert;
      cert.t = t;
      cert.k = k;
      cert.v = v;
      cert.mu = M;
      cert.optimal = true;
      cert.nodes = budget - nodes_left;
      cert.family.v = v;
      cert.family.k = k;
      for (size_t i = 0; i < blocks.size(); ++i)
        if (ls.mult[i] > 0) cert.family.add(blocks[i], ls.mult[i]);
      AdesignVerdict verdict = is_adesign(cert.family, t);
      if (!verdict.adesign || verdict.max_frequency != M)
        throw InternalError("search witness failed verification");
      return cert;
    }
  }
  throw InternalError("deepening passed the constructive ceiling");
}

std::optional<BlockFamily> find_design(int v, int k, uint64_t lambda, uint64_t budget) {
  if (!(v > k && k >= 2)) throw ParameterError("need v > k >= 2");
  uint64_t nblocks;
  if (!binom_u64(v, k, nblocks) || nblocks > 40) throw ParameterError("C(v,k) > 40");
  if (lambda == 0) return BlockFamily(v, k);

  // replication and block-count divisibility are necessary
  if (lambda * (v - 1) % (k - 1) != 0) return std::nullopt;
  if (lambda * binom(v, 2) % binom(k, 2) != 0) return std::nullopt;

  auto blocks = all_ksubsets(v, k);
  int npairs = v * (v - 1) / 2;
  auto pair_rank = [v](int a, int b) { return (a - 1) * (2 * v - a) / 2 + (b - a - 1); };
  std::vector<std::vector<int>> block_pairs(blocks.size());
  std::vector<std::vector<int>> pair_blocks(npairs);
  for (size_t i = 0; i < blocks.size(); ++i) {
    for (size_t a = 0; a < blocks[i].size(); ++a)
      for (size_t b = a + 1; b < blocks[i].size(); ++b) {
        int pr = pair_rank(blocks[i][a], blocks[i][b]);
        block_pairs[i].push_back(pr);
        pair_blocks[pr].push_back((int)i);
      }
  }

  std::vector<uint64_t> cover(npairs, 0);
  std::vector<uint64_t> mult(blocks.size(), 0);
  uint64_t nodes_left = budget;

  // branch on the least uncovered pair; block choices for one pair are
  // nondecreasing so each multiset of blocks is generated once
  auto rec = [&](auto&& self, int prev_pair, int prev_idx) -> bool {
    if (nodes_left == 0) throw BudgetStop{};
    --nodes_left;
    int p = -1;
    for (int pr = prev_pair < 0 ? 0 : prev_pair; pr < npairs; ++pr)
      if (cover[pr] < lambda) {
        p = pr;
        break;
      }
    if (p == -1) return true;
    int start = p == prev_pair ? prev_idx : 0;
    for (size_t ci = start; ci < pair_blocks[p].size(); ++ci) {
      int bi = pair_blocks[p][ci];
      bool fits = true;
      for (int pr : block_pairs[bi])
        if (cover[pr] + 1 > lambda) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (int pr : block_pairs[bi]) ++cover[pr];
      ++mult[bi];
      if (self(self, p, (int)ci)) return true;
      --mult[bi];
      for (int pr : block_pairs[bi]) --cover[pr];
    }
    return false;
  };

  bool found;
  try {
    found = rec(rec, -1, 0);
  } catch (const BudgetStop&) {
    BudgetExhausted err("node budget exhausted");
    err.nodes = budget;
    throw err;
  }
  if (!found) return std::nullopt;
  BlockFamily fam(v, k);
  for (size_t i = 0; i < blocks.size(); ++i)
    if (mult[i] > 0) fam.add(blocks[i], mult[i]);
  if (is_design(fam, 2) != std::optional<uint64_t>(lambda))
    throw InternalError("design witness failed verification");
  return fam;
}

std::vector<uint64_t> CubeAssignment::line_sums() const {
  std::vector<uint64_t> sums;
  auto at = [&](int i, int j, int k) { return cells[i + n * j + (size_t)n * n * k]; };
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      uint64_t s = 0;
      for (int i = 0; i < n; ++i) s += at(i, j, k);
      sums.push_back(s);
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      uint64_t s = 0;
      for (int j = 0; j < n; ++j) s += at(i, j, k);
      sums.push_back(s);
    }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      uint64_t s = 0;
      for (int k = 0; k < n; ++k) s += at(i, j, k);
      sums.push_back(s);
    }
  return sums;
}

namespace {

// minimal-maximum exact search: cells in index order, partial line sums capped
// at S, completed line sums kept distinct
struct CubeSearch {
  int n;
  uint64_t S;
  std::vector<std::vector<int>> cell_lines;  // 3 line ids per cell
  std::vector<int> line_size;
  std::vector<uint64_t> line_sum;
  std::vector<int> line_cnt;
  std::vector<char> used;
  std::vector<uint64_t> cells;
  uint64_t* nodes_left;

  bool dfs(size_t ci) {
    if (*nodes_left == 0) throw BudgetStop{};
    --*nodes_left;
    if (ci == cells.size()) return true;
    for (uint64_t val = 0; val <= S; ++val) {
      bool ok = true;
      int applied = 0;
      std::vector<int> completed;
      for (int L : cell_lines[ci]) {
        if (line_sum[L] + val > S) {
          ok = false;
          break;
        }
        line_sum[L] += val;
        ++line_cnt[L];
        ++applied;
        if (line_cnt[L] == n) {
          if (used[line_sum[L]]) {
            ok = false;
            break;
          }
          used[line_sum[L]] = 1;
          completed.push_back(L);
        }
      }
      if (ok) {
        cells[ci] = val;
        if (dfs(ci + 1)) return true;
      }
      for (int L : completed) used[line_sum[L]] = 0;
      for (int a = 0; a < applied; ++a) {
        int L = cell_lines[ci][a];
        line_sum[L] -= val;
        --line_cnt[L];
      }
    }
    return false;
  }
};

CubeAssignment cube_exact(int n, uint64_t budget) {
  // line ids match CubeAssignment::line_sums order
  std::vector<std::vector<int>> cell_lines((size_t)n * n * n);
  auto cell = [&](int i, int j, int k) { return i + n * j + n * n * k; };
  int nl = 0;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j, ++nl)
      for (int i = 0; i < n; ++i) cell_lines[cell(i, j, k)].push_back(nl);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i, ++nl)
      for (int j = 0; j < n; ++j) cell_lines[cell(i, j, k)].push_back(nl);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i, ++nl)
      for (int k = 0; k < n; ++k) cell_lines[cell(i, j, k)].push_back(nl);

  uint64_t nodes_left = budget;
  for (uint64_t S = 3ULL * n * n - 1;; ++S) {  // distinct nonnegative sums force max >= 3n^2-1
    CubeSearch cs;
    cs.n = n;
    cs.S = S;
    cs.cell_lines = cell_lines;
    cs.line_sum.assign(nl, 0);
    cs.line_cnt.assign(nl, 0);
    cs.used.assign(S + 1, 0);
    cs.cells.assign((size_t)n * n * n, 0);
    cs.nodes_left = &nodes_left;
    try {
      if (cs.dfs(0)) {
        CubeAssignment out;
        out.n = n;
        out.cells = cs.cells;
        out.max_line_sum = S;
        return out;
      }
    } catch (const BudgetStop&) {
      BudgetExhausted err("cube search budget exhausted at max sum " + std::to_string(S));
      err.lower_bound = S;
      err.nodes = budget;
      throw err;
    }
  }
}

CubeAssignment cube_heuristic(int n) {
  // cell (i,j,k) = 2^(i + n j + n^2 k); line sums factor as an odd part that
  // identifies the axis times a power of two that identifies the line
  CubeAssignment out;
  out.n = n;
  out.cells.resize((size_t)n * n * n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        out.cells[i + n * j + (size_t)n * n * k] = 1ULL << (i + n * j + n * n * k);
  auto sums = out.line_sums();
  out.max_line_sum = *std::max_element(sums.begin(), sums.end());
  std::sort(sums.begin(), sums.end());
  for (size_t i = 1; i < sums.size(); ++i)
    if (sums[i] == sums[i - 1]) throw InternalError("heuristic cube has colliding sums");
  return out;
}

}  // namespace

CubeAssignment antimagic_cube(int n, CubeMode mode) {
  if (mode == CubeMode::exact) {
    if (n != 2) throw ParameterError("exact mode supports n = 2");
    return cube_exact(n, 100000000ULL);
  }
  if (n < 2 || n > 3) throw ParameterError("heuristic mode supports n in {2,3}");
  return cube_heuristic(n);
}

}  // namespace adesign
