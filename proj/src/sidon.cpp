#include "adesign/sidon.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "adesign/field.hpp"
#include "adesign/util.hpp"

namespace adesign {

BseqVerdict is_bsequence(const std::vector<uint64_t>& elements, int r,
                         std::optional<uint64_t> modulus) {
  if (r < 2) throw ParameterError("order r must be >= 2");
  std::vector<uint64_t> a = elements;
  std::sort(a.begin(), a.end());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || (i > 0 && a[i] == a[i - 1]))
      throw ParameterError("elements must be distinct positive integers");
  }
  uint64_t count;
  if (!binom_u64(a.size() + r - 1, r, count) || count > 10000000ULL)
    throw TooLarge("too many r-multisets to verify");

  BseqVerdict verdict;
  verdict.ok = true;
  if (a.empty()) return verdict;

  // index tuples i1 <= ... <= ir in lex order; element lex order matches
  std::vector<int> idx(r, 0);
  std::unordered_map<uint64_t, std::vector<int>> seen;
  seen.reserve(count * 2);
  int n = (int)a.size();
  while (true) {
    uint64_t s = 0;
    for (int i : idx) s = checked_add(s, a[i]);
    if (modulus) s %= *modulus;
    auto [it, fresh] = seen.emplace(s, idx);
    if (!fresh) {
      verdict.ok = false;
      verdict.sum = s;
      for (int i : it->second) verdict.first.push_back(a[i]);
      for (int i : idx) verdict.second.push_back(a[i]);
      return verdict;
    }
    int pos = r - 1;
    while (pos >= 0 && idx[pos] == n - 1) --pos;
    if (pos < 0) break;
    int next = idx[pos] + 1;
    for (int j = pos; j < r; ++j) idx[j] = next;
  }
  return verdict;
}

namespace {

// incremental generator state: all s-multiset sums for s = 0..r-1 plus the
// full r-multiset sum set, so a candidate costs O(n^{r-1}) instead of a re-verify
struct SumState {
  int r;
  std::vector<std::vector<uint64_t>> partial;  // partial[s] = s-multiset sums
  std::unordered_set<uint64_t> full;

  explicit SumState(int r_) : r(r_), partial(r_) { partial[0] = {0}; }

  bool admits(uint64_t c, std::vector<uint64_t>& scratch) const {
    scratch.clear();
    for (int j = 1; j <= r; ++j) {
      uint64_t base = 0;
      for (int i = 0; i < j; ++i) base = checked_add(base, c);
      for (uint64_t x : partial[r - j]) {
        uint64_t s = checked_add(base, x);
        if (full.count(s)) return false;
        scratch.push_back(s);
      }
    }
    std::sort(scratch.begin(), scratch.end());
    for (size_t i = 1; i < scratch.size(); ++i)
      if (scratch[i] == scratch[i - 1]) return false;
    return true;
  }

  void push(uint64_t c, const std::vector<uint64_t>& new_full) {
    for (uint64_t s : new_full) full.insert(s);
    for (int s = r - 1; s >= 1; --s) {
      uint64_t base = 0;
      for (int j = 1; j <= s; ++j) {
        base += c;
        for (uint64_t x : partial[s - j]) partial[s].push_back(base + x);
      }
    }
  }
};

}  // namespace

SidonSet greedy_bsequence(int r, int count) {
  if (r < 2 || count < 1) throw ParameterError("need r >= 2 and count >= 1");
  SidonSet out;
  out.r = r;
  SumState state(r);
  std::vector<uint64_t> scratch;
  uint64_t c = 1;
  while ((int)out.elements.size() < count) {
    while (!state.admits(c, scratch)) {
      ++c;
      if (c > 100000000ULL) throw TooLarge("greedy scan budget exceeded");
    }
    state.push(c, scratch);
    out.elements.push_back(c);
    ++c;
  }
  BseqVerdict check = is_bsequence(out.elements, r);
  if (!check.ok) throw InternalError("greedy produced a non-B_r set");
  return out;
}

SidonSet bose_chowla(int q, int r) {
  int p, m;
  if (!is_prime_power(q, p, m)) throw NotPrimePower(q);
  if (r < 2) throw ParameterError("order r must be >= 2");
  long long qr = 1;
  for (int i = 0; i < r; ++i) {
    qr *= q;
    if (qr > (1 << 20)) throw SizeExceeded("q^r > 2^20");
  }
  FieldSpec f = build_field(p, m * r);

  SidonSet out;
  out.r = r;
  out.modulus = (uint64_t)(qr - 1);
  auto table = power_table(f);
  for (int a = 1; a <= f.q - 1; ++a) {
    FieldElement d = fe_sub(f, table[a - 1], f.theta);
    if (in_subfield(f, d, q)) out.elements.push_back((uint64_t)a);
  }
  if ((int)out.elements.size() != q) throw InternalError("expected q elements");
  BseqVerdict check = is_bsequence(out.elements, r, out.modulus);
  if (!check.ok) throw InternalError("construction is not B_r modulo q^r - 1");
  return out;
}

namespace {

// oracle for r = 2: distinct pair sums with repetition == distinct differences,
// so a difference bitmask (n <= 60 -> diffs < 64) makes the search cheap
struct DiffSearch {
  int n;
  int best = 0;
  std::vector<int> cur, best_set;

  void run() {
    cur.clear();
    rec(1);
  }
  void rec(int c0) {
    for (int c = c0; c <= n; ++c) {
      if ((int)cur.size() + (n - c + 1) <= best) return;
      uint64_t add = 0;
      bool ok = true;
      for (int a : cur) {
        uint64_t bit = 1ULL << (c - a);
        if ((diffs | add) & bit) {
          ok = false;
          break;
        }
        add |= bit;
      }
      if (!ok) continue;
      cur.push_back(c);
      diffs |= add;
      if ((int)cur.size() > best) {
        best = (int)cur.size();
        best_set = cur;
      }
      rec(c + 1);
      diffs &= ~add;
      cur.pop_back();
    }
  }
  uint64_t diffs = 0;
};

struct SumSearch {  // general r, used for r = 3
  int n, r;
  int best = 0;
  std::vector<uint64_t> cur, best_set;
  SumState state;
  std::vector<uint64_t> scratch;

  SumSearch(int n_, int r_) : n(n_), r(r_), state(r_) {}

  void rec(uint64_t c0) {
    for (uint64_t c = c0; c <= (uint64_t)n; ++c) {
      if ((int)cur.size() + (int)((uint64_t)n - c + 1) <= best) return;
      if (!state.admits(c, scratch)) continue;
      SumState saved = state;  // sets are tiny at n <= 30
      state.push(c, scratch);
      cur.push_back(c);
      if ((int)cur.size() > best) {
        best = (int)cur.size();
        best_set = cur;
      }
      rec(c + 1);
      cur.pop_back();
      state = std::move(saved);
    }
  }
};

}  // namespace

MaxBresult max_bsequence_size_exact(int n, int r) {
  if (n < 1) throw ParameterError("need n >= 1");
  if (!((r == 2 && n <= 60) || (r == 3 && n <= 30)))
    throw TooLarge("supported ranges: r=2 with n <= 60, r=3 with n <= 30");
  MaxBresult out;
  if (r == 2) {
    DiffSearch s;
    s.n = n;
    // translation invariance: a maximum set may be shifted to start at 1
    s.cur = {1};
    s.best = 1;
    s.best_set = {1};
    s.rec(2);
    out.size = s.best;
    out.witness.assign(s.best_set.begin(), s.best_set.end());
  } else {
    SumSearch s(n, r);
    s.state.admits(1, s.scratch);  // trivially true for the first element
    s.state.push(1, s.scratch);
    s.cur = {1};
    s.best = 1;
    s.best_set = {1};
    s.rec(2);
    out.size = s.best;
    out.witness = s.best_set;
  }
  return out;
}

}  // namespace adesign
