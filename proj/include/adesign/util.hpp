#pragma once

#include <cstdint>
#include <vector>

namespace adesign {

// checked 64-bit arithmetic; throws OverflowError on wraparound
uint64_t checked_add(uint64_t a, uint64_t b);
uint64_t checked_mul(uint64_t a, uint64_t b);

// C(n, r) in uint64; returns false on overflow instead of throwing
bool binom_u64(uint64_t n, uint64_t r, uint64_t& out);
// throwing variant
uint64_t binom(uint64_t n, uint64_t r);
// floating-point C(n, r) via lgamma, for ranges past 64-bit
double binom_d(double n, double r);

// k-subsets of {1..v} in lexicographic order
std::vector<std::vector<int>> all_ksubsets(int v, int k);

// 64-bit seed stream: attempt i of master seed s
uint64_t mix64(uint64_t z);
uint64_t derive_seed(uint64_t master, uint64_t attempt);

bool is_prime(int n);
// if n = p^m with p prime, returns true and fills p, m
bool is_prime_power(int n, int& p, int& m);
int next_prime_power(int n);  // least prime power >= n

}  // namespace adesign
