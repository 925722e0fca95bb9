#include "adesign/util.hpp"

#include <cmath>

#include "adesign/errors.hpp"

namespace adesign {

uint64_t checked_add(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit addition overflow");
  return r;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit multiplication overflow");
  return r;
}

bool binom_u64(uint64_t n, uint64_t r, uint64_t& out) {
  if (r > n) {
    out = 0;
    return true;
  }
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;  // exact: running value is C(n-r+i, i)
    if (acc > (unsigned __int128)UINT64_MAX) return false;
  }
  out = (uint64_t)acc;
  return true;
}

uint64_t binom(uint64_t n, uint64_t r) {
  uint64_t out;
  if (!binom_u64(n, r, out)) throw OverflowError("binomial coefficient exceeds 64 bits");
  return out;
}

double binom_d(double n, double r) {
  if (r < 0 || r > n) return 0.0;
  return std::exp(std::lgamma(n + 1) - std::lgamma(r + 1) - std::lgamma(n - r + 1));
}

std::vector<std::vector<int>> all_ksubsets(int v, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > v) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  while (true) {
    out.push_back(c);
    if (k == 0) break;
    int i = k - 1;
    while (i >= 0 && c[i] == v - (k - 1 - i)) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

uint64_t mix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t master, uint64_t attempt) {
  return mix64(master + attempt * 0x9E3779B97F4A7C15ULL);
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; (long long)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(int n, int& p, int& m) {
  if (n < 2) return false;
  int base = n;
  for (int d = 2; (long long)d * d <= n; ++d) {
    if (n % d == 0) {
      base = d;
      break;
    }
  }
  int e = 0;
  int x = n;
  while (x % base == 0) {
    x /= base;
    ++e;
  }
  if (x != 1) return false;
  p = base;
  m = e;
  return true;
}

int next_prime_power(int n) {
  int p, m;
  int q = n < 2 ? 2 : n;
  while (!is_prime_power(q, p, m)) ++q;
  return q;
}

}  // namespace adesign
