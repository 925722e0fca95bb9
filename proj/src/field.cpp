#include "adesign/field.hpp"

#include <algorithm>

#include "adesign/util.hpp"

namespace adesign {

namespace {

// dense polynomials over Z_p, constant term first, no trailing-zero guarantee
using Poly = std::vector<int>;

int degree(const Poly& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

// remainder of a modulo monic divisor d
Poly poly_rem(Poly a, const Poly& d, int p) {
  int dd = degree(d);
  for (int i = degree(a); i >= dd; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) a[i - dd + j] = ((a[i - dd + j] - c * d[j]) % p + p) % p;
  }
  a.resize(std::max(dd, 1));
  for (auto& x : a) x = (x % p + p) % p;
  return a;
}

// trial division by all monic polynomials of degree 1..deg/2
bool irreducible(const Poly& f, int p) {
  int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int dd = 1; dd <= d / 2; ++dd) {
    long long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g(dd + 1, 0);
      long long c = code;
      for (int i = 0; i < dd; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[dd] = 1;
      if (degree(poly_rem(f, g, p)) < 0) return false;
    }
  }
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldElement fe_zero(const FieldSpec& f) { return FieldElement(f.m, 0); }

FieldElement fe_one(const FieldSpec& f) {
  FieldElement e(f.m, 0);
  e[0] = 1;
  return e;
}

FieldElement fe_add(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
  FieldElement c(f.m);
  for (int i = 0; i < f.m; ++i) c[i] = (a[i] + b[i]) % f.p;
  return c;
}

FieldElement fe_sub(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
  FieldElement c(f.m);
  for (int i = 0; i < f.m; ++i) c[i] = ((a[i] - b[i]) % f.p + f.p) % f.p;
  return c;
}

FieldElement fe_mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
  Poly c = poly_rem(poly_mul(a, b, f.p), f.modulus, f.p);
  c.resize(f.m, 0);
  return c;
}

FieldElement fe_pow(const FieldSpec& f, const FieldElement& a, uint64_t e) {
  FieldElement base = a, acc = fe_one(f);
  while (e) {
    if (e & 1) acc = fe_mul(f, acc, base);
    base = fe_mul(f, base, base);
    e >>= 1;
  }
  return acc;
}

static uint64_t element_order(const FieldSpec& f, const FieldElement& x) {
  // order divides q-1; start from q-1 and strip primes while the power stays 1
  uint64_t ord = f.q - 1;
  for (uint64_t pr : prime_factors(f.q - 1)) {
    while (ord % pr == 0 && fe_pow(f, x, ord / pr) == fe_one(f)) ord /= pr;
  }
  return ord;
}

FieldSpec build_field(int p, int m) {
  if (!is_prime(p)) throw NotPrime(p);
  if (m < 1) throw ParameterError("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > (1 << 20)) throw SizeExceeded("p^m > 2^20");
  }
  FieldSpec f;
  f.p = p;
  f.m = m;
  f.q = (int)q;

  // scan monic degree-m polynomials in lex order of (c0, c1, ..., c_{m-1})
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    Poly cand(m + 1, 0);
    long long c = code;
    for (int i = m - 1; i >= 0; --i) {  // c0 is the most significant digit
      cand[i] = c % p;
      c /= p;
    }
    cand[m] = 1;
    if (irreducible(cand, p)) {
      f.modulus = cand;
      break;
    }
  }
  if (f.modulus.empty()) throw InternalError("no irreducible polynomial found");

  // lex-least element of full multiplicative order
  for (long long code = 1; code < q; ++code) {
    FieldElement x(m, 0);
    long long c = code;
    for (int i = m - 1; i >= 0; --i) {
      x[i] = (int)(c % p);
      c /= p;
    }
    if (element_order(f, x) == (uint64_t)(f.q - 1)) {
      f.theta = x;
      break;
    }
  }
  if (f.theta.empty()) throw InternalError("no primitive element found");
  return f;
}

std::vector<FieldElement> power_table(const FieldSpec& f) {
  std::vector<FieldElement> table;
  table.reserve(f.q - 1);
  FieldElement x = f.theta;
  for (int a = 1; a <= f.q - 1; ++a) {
    table.push_back(x);
    x = fe_mul(f, x, f.theta);
  }
  return table;
}

bool in_subfield(const FieldSpec& f, const FieldElement& x, int q_sub) {
  int sp, sm;
  if (!is_prime_power(q_sub, sp, sm) || sp != f.p || f.m % sm != 0)
    throw ParameterError("subfield size must be p^d with d dividing m");
  return fe_pow(f, x, q_sub) == x;
}

std::string field_to_string(const FieldSpec& f) {
  std::string s = "GF(" + std::to_string(f.p) + "^" + std::to_string(f.m) + ") mod";
  for (int c : f.modulus) s += " " + std::to_string(c);
  return s;
}

}  // namespace adesign
