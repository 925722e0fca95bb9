#include <cmath>
#include <random>

#include "adesign/sidon.hpp"
#include "adesign/util.hpp"
#include "doctest.h"

using namespace adesign;

using VU = std::vector<uint64_t>;

TEST_CASE("bsequence verifier") {
  CHECK(is_bsequence({1, 2, 5, 11}, 2).ok);

  auto no = is_bsequence({1, 2, 3}, 2);
  CHECK(!no.ok);
  CHECK(no.first == VU{1, 3});
  CHECK(no.second == VU{2, 2});
  CHECK(no.sum == 4);

  CHECK(is_bsequence({7}, 5).ok);
  CHECK(is_bsequence({}, 2).ok);

  // modular collision that is fine over the integers
  CHECK(is_bsequence({1, 2, 5}, 2).ok);
  CHECK(!is_bsequence({1, 2, 5}, 2, 6).ok);  // 5+5=10=4, 1+... 2+2=4 mod 6

  CHECK_THROWS_AS(is_bsequence({1, 2}, 1), ParameterError);
  CHECK_THROWS_AS(is_bsequence({1, 2, 2}, 2), ParameterError);
  std::vector<uint64_t> big(4000);
  for (size_t i = 0; i < big.size(); ++i) big[i] = i + 1;
  CHECK_THROWS_AS(is_bsequence(big, 3), TooLarge);  // C(4002,3) > 10^7
}

TEST_CASE("greedy generator") {
  // after {1,2} the value 3 is rejected (1+3 = 2+2), so greedy continues 4, 8, 13, ...
  auto g = greedy_bsequence(2, 5);
  CHECK(g.elements == VU{1, 2, 4, 8, 13});
  CHECK(g.r == 2);
  CHECK(!g.modulus.has_value());

  CHECK(greedy_bsequence(7, 1).elements == VU{1});

  auto g3 = greedy_bsequence(3, 4);
  CHECK(g3.elements.size() == 4);
  CHECK(is_bsequence(g3.elements, 3).ok);

  // longer frozen prefixes
  auto g20 = greedy_bsequence(2, 20);
  CHECK(g20.elements ==
        VU{1, 2, 4, 8, 13, 21, 31, 45, 66, 81, 97, 123, 148, 182, 204, 252, 290, 361, 401, 475});
  uint64_t total = 0;
  for (auto x : g20.elements) total += x;
  CHECK(total == 2805);
  CHECK(greedy_bsequence(3, 6).elements == VU{1, 2, 5, 14, 33, 72});
  CHECK(greedy_bsequence(4, 4).elements == VU{1, 2, 6, 22});

  CHECK_THROWS_AS(greedy_bsequence(1, 3), ParameterError);
  CHECK_THROWS_AS(greedy_bsequence(2, 0), ParameterError);
}

TEST_CASE("bose-chowla construction") {
  auto bc32 = bose_chowla(3, 2);
  CHECK(bc32.elements == VU{1, 6, 7});  // theta^a - theta scalar in GF(9) mod x^2+1, theta=1+x
  CHECK(bc32.modulus == std::optional<uint64_t>(8));
  CHECK(is_bsequence(bc32.elements, 2, 8).ok);

  auto bc22 = bose_chowla(2, 2);
  CHECK(bc22.elements.size() == 2);
  CHECK(is_bsequence(bc22.elements, 2, 3).ok);

  CHECK_THROWS_AS(bose_chowla(6, 2), NotPrimePower);
  try {
    bose_chowla(6, 2);
  } catch (const NotPrimePower& e) {
    CHECK(e.value == 6);
  }
  CHECK_THROWS_AS(bose_chowla(64, 4), SizeExceeded);  // 64^4 = 2^24

  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16})
    for (int r : {2, 3}) {
      double qr = std::pow((double)q, r);
      if (qr > (double)(1 << 20)) continue;
      auto s = bose_chowla(q, r);
      CHECK((int)s.elements.size() == q);
      uint64_t n = 1;
      for (int i = 0; i < r; ++i) n *= q;
      CHECK(s.elements.back() <= n - 1);
      CHECK(s.elements.front() >= 1);
      CHECK(is_bsequence(s.elements, r, n - 1).ok);
      CHECK(is_bsequence(s.elements, r).ok);  // modular implies integral
    }
}

TEST_CASE("exact maximum bsequence sizes") {
  CHECK(max_bsequence_size_exact(1, 2).size == 1);

  auto f11 = max_bsequence_size_exact(11, 2);
  CHECK(f11.size == 4);  // {1,2,5,11} is best possible in [1,11]
  CHECK((int)f11.witness.size() == 4);
  CHECK(is_bsequence(f11.witness, 2).ok);
  for (auto x : f11.witness) CHECK(x <= 11);

  static const int f2[] = {1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5,
                           5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6};
  int prev = 0;
  for (int n = 1; n <= 25; ++n) {
    auto r = max_bsequence_size_exact(n, 2);
    CHECK(r.size == f2[n - 1]);
    CHECK(r.size >= prev);  // nondecreasing in n
    prev = r.size;
    CHECK(is_bsequence(r.witness, 2).ok);
  }

  static const int f3[] = {1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4};
  for (int n = 1; n <= 20; ++n) {
    auto r = max_bsequence_size_exact(n, 3);
    CHECK(r.size == f3[n - 1]);
    CHECK(is_bsequence(r.witness, 3).ok);
  }

  // weak growth floor: F_2(n) >= floor(sqrt(n)) - 1 on 10..60
  for (int n = 10; n <= 60; ++n) {
    auto r = max_bsequence_size_exact(n, 2);
    CHECK(r.size >= (int)std::sqrt((double)n) - 1);
  }

  CHECK_THROWS_AS(max_bsequence_size_exact(61, 2), TooLarge);
  CHECK_THROWS_AS(max_bsequence_size_exact(31, 3), TooLarge);
}

TEST_CASE("subsets of bsequences stay bsequences") {
  auto base = greedy_bsequence(2, 12);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    VU sub;
    for (auto x : base.elements)
      if (rng() & 1) sub.push_back(x);
    CHECK(is_bsequence(sub, 2).ok);
  }
  auto b3 = bose_chowla(8, 3);
  for (int trial = 0; trial < 40; ++trial) {
    VU sub;
    for (auto x : b3.elements)
      if (rng() & 1) sub.push_back(x);
    CHECK(is_bsequence(sub, 3, 511).ok);
  }
}
