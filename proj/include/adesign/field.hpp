#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adesign/errors.hpp"

namespace adesign {

// element of GF(p^m): coefficient vector of length m, constant term first
using FieldElement = std::vector<int>;

struct FieldSpec {
  int p = 0;
  int m = 1;
  int q = 0;                // p^m
  std::vector<int> modulus; // monic irreducible of degree m, constant term first, length m+1
  FieldElement theta;       // designated primitive element
};

// lexicographically least irreducible modulus and primitive element
FieldSpec build_field(int p, int m);

FieldElement fe_zero(const FieldSpec& f);
FieldElement fe_one(const FieldSpec& f);
FieldElement fe_add(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement fe_sub(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement fe_mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement fe_pow(const FieldSpec& f, const FieldElement& a, uint64_t e);

// theta^a for a = 1 .. q-1 (last entry is 1)
std::vector<FieldElement> power_table(const FieldSpec& f);

// membership in the subfield GF(q_sub): x^{q_sub} == x
bool in_subfield(const FieldSpec& f, const FieldElement& x, int q_sub);

// "GF(p^m) mod c0 c1 ... cm"
std::string field_to_string(const FieldSpec& f);

}  // namespace adesign
