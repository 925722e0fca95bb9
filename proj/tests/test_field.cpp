#include <algorithm>
#include <set>

#include "adesign/field.hpp"
#include "doctest.h"

using namespace adesign;

// all q elements of the field, lex by coefficient vector (constant term first)
static std::vector<FieldElement> all_elements(const FieldSpec& f) {
  std::vector<FieldElement> out;
  FieldElement cur(f.m, 0);
  while (true) {
    out.push_back(cur);
    int i = 0;
    while (i < f.m && ++cur[i] == f.p) cur[i++] = 0;
    if (i == f.m) break;
  }
  return out;
}

TEST_CASE("modulus and primitive element selection") {
  auto gf4 = build_field(2, 2);
  CHECK(gf4.q == 4);
  CHECK(gf4.modulus == std::vector<int>{1, 1, 1});  // x^2+x+1
  CHECK(gf4.theta == FieldElement{0, 1});           // x

  auto gf9 = build_field(3, 2);
  CHECK(gf9.modulus == std::vector<int>{1, 0, 1});  // x^2+1
  CHECK(gf9.theta == FieldElement{1, 1});           // 1+x
  CHECK(field_to_string(gf9) == "GF(3^2) mod 1 0 1");

  auto gf2 = build_field(2, 1);
  CHECK(gf2.modulus == std::vector<int>{0, 1});  // x
  CHECK(gf2.theta == FieldElement{1});

  auto gf7 = build_field(7, 1);
  CHECK(gf7.theta == FieldElement{3});  // least primitive root mod 7

  CHECK_THROWS_AS(build_field(4, 1), NotPrime);
  CHECK_THROWS_AS(build_field(6, 2), NotPrime);
  CHECK_THROWS_AS(build_field(2, 21), SizeExceeded);  // 2^21 > 2^20
  try {
    build_field(4, 1);
  } catch (const NotPrime& e) {
    CHECK(e.value == 4);
  }
}

TEST_CASE("power table enumerates the nonzero elements") {
  auto gf2 = build_field(2, 1);
  auto t2 = power_table(gf2);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0] == fe_one(gf2));

  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 4}, {5, 1}, {13, 1}, {3, 3}}) {
    auto f = build_field(p, m);
    auto table = power_table(f);
    REQUIRE((int)table.size() == f.q - 1);
    CHECK(table.back() == fe_one(f));
    std::set<FieldElement> seen(table.begin(), table.end());
    CHECK((int)seen.size() == f.q - 1);
    CHECK(seen.count(fe_zero(f)) == 0);
  }
}

TEST_CASE("subfield membership") {
  auto gf9 = build_field(3, 2);
  CHECK(in_subfield(gf9, fe_zero(gf9), 3));
  CHECK(in_subfield(gf9, fe_one(gf9), 3));
  int count = 0;
  for (auto& x : all_elements(gf9))
    if (in_subfield(gf9, x, 3)) ++count;
  CHECK(count == 3);

  auto gf8 = build_field(2, 3);
  CHECK_THROWS_AS(in_subfield(gf8, fe_one(gf8), 4), ParameterError);  // 2 does not divide 3
  CHECK_THROWS_AS(in_subfield(gf8, fe_one(gf8), 3), ParameterError);  // not a power of p

  auto gf16 = build_field(2, 4);
  int c4 = 0;
  for (auto& x : all_elements(gf16))
    if (in_subfield(gf16, x, 4)) ++c4;
  CHECK(c4 == 4);
}

TEST_CASE("field axioms, Frobenius, subfield size") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 2}, {61, 1}}) {
    auto f = build_field(p, m);
    auto elems = all_elements(f);
    REQUIRE((int)elems.size() == f.q);

    for (auto& a : elems)
      for (auto& b : elems) {
        CHECK(fe_add(f, a, b) == fe_add(f, b, a));
        CHECK(fe_mul(f, a, b) == fe_mul(f, b, a));
        CHECK(fe_pow(f, fe_add(f, a, b), p) == fe_add(f, fe_pow(f, a, p), fe_pow(f, b, p)));
        CHECK(fe_sub(f, fe_add(f, a, b), b) == a);
      }

    // associativity and distributivity on a deterministic triple sample
    for (size_t i = 0; i < elems.size(); ++i) {
      auto& a = elems[i];
      auto& b = elems[(i * 7 + 3) % elems.size()];
      auto& c = elems[(i * 13 + 5) % elems.size()];
      CHECK(fe_add(f, fe_add(f, a, b), c) == fe_add(f, a, fe_add(f, b, c)));
      CHECK(fe_mul(f, fe_mul(f, a, b), c) == fe_mul(f, a, fe_mul(f, b, c)));
      CHECK(fe_mul(f, a, fe_add(f, b, c)) == fe_add(f, fe_mul(f, a, b), fe_mul(f, a, c)));
    }

    // multiplicative inverses via the power table
    auto table = power_table(f);
    for (auto& x : table) {
      bool inverted = false;
      for (auto& y : table)
        if (fe_mul(f, x, y) == fe_one(f)) inverted = true;
      CHECK(inverted);
    }

    // x^q = x for everything; x^p = x exactly p times
    int fixed = 0;
    for (auto& x : elems) {
      CHECK(fe_pow(f, x, f.q) == x);
      if (fe_pow(f, x, p) == x) ++fixed;
    }
    CHECK(fixed == p);
  }
}
