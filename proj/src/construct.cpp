#include "adesign/construct.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "adesign/util.hpp"

namespace adesign {

uint64_t mu1(int v, int k) {
  if (!(v > k && k >= 1)) throw ParameterError("need v > k >= 1");
  uint64_t pairs = (uint64_t)v * (v - 1) / 2;
  if (2 * k <= v) return pairs % k == 0 ? (uint64_t)(v - 1) : (uint64_t)v;
  uint64_t gap = (uint64_t)(v - k);
  return (pairs + gap - 1) / gap;
}

static FrequencyPrescription t1_prescription(int v, int k) {
  uint64_t pairs = (uint64_t)v * (v - 1) / 2;
  FrequencyPrescription pres;
  pres.k = k;
  if (2 * k <= v) {
    if (pairs % k == 0) {
      pres.b = pairs / k;
      for (int x = 0; x < v; ++x) pres.values.push_back(x);  // 0..v-1
    } else {
      pres.b = pairs / k + 1;
      uint64_t r = pres.b * k - pairs;
      for (uint64_t f = 0; f <= (uint64_t)v; ++f)
        if (f != (uint64_t)v - r) pres.values.push_back(f);  // 0..v minus v-r
    }
  } else {
    uint64_t mu = mu1(v, k);
    uint64_t r = (mu * v - pairs) % k;
    pres.b = (mu * v - pairs - r) / k;
    uint64_t lo = mu - v;
    for (uint64_t f = lo; f <= mu; ++f)
      if (f != lo + r) pres.values.push_back(f);  // mu-v..mu minus mu-v+r
  }
  return pres;
}

BlockFamily construct_t1(int v, int k) {
  if (!(v > k && k >= 1)) throw ParameterError("need v > k >= 1");
  FrequencyPrescription pres = t1_prescription(v, k);
  BlockFamily fam = fill_blocks(pres, v);
  AdesignVerdict verdict = is_adesign(fam, 1);
  if (!verdict.adesign || verdict.max_frequency != mu1(v, k))
    throw InternalError("t=1 construction failed self-check");
  return fam;
}

BlockFamily fill_blocks(const FrequencyPrescription& pres, int v) {
  if ((int)pres.values.size() != v) throw ParameterError("need one frequency per point");
  for (size_t i = 1; i < pres.values.size(); ++i)
    if (pres.values[i] <= pres.values[i - 1])
      throw ParameterError("frequencies must be strictly increasing");
  uint64_t total = 0;
  for (uint64_t f : pres.values) total = checked_add(total, f);
  if (total != checked_mul(pres.b, (uint64_t)pres.k))
    throw PrescriptionError("frequency sum must be b*k");
  if (!pres.values.empty() && pres.values.back() > pres.b)
    throw PrescriptionError("max frequency exceeds block count");
  if (pres.b == 0) return BlockFamily(v, pres.k);

  // walk slots 1..b*k in point order; slot s lands in block ((s-1) mod b) + 1
  std::vector<std::vector<int>> blocks(pres.b);
  uint64_t slot = 0;
  for (int x = 1; x <= v; ++x) {
    for (uint64_t c = 0; c < pres.values[x - 1]; ++c) {
      uint64_t i = slot % pres.b;
      if (!blocks[i].empty() && blocks[i].back() == x)
        throw InternalError("point placed twice in one block");
      blocks[i].push_back(x);
      ++slot;
    }
  }
  BlockFamily fam(v, pres.k);
  for (auto& block : blocks) {
    if ((int)block.size() != pres.k) throw InternalError("short block after filling");
    fam.add(block, 1);
  }
  return fam;
}

CosingletonResult construct_cosingleton(int v, int t, SidonGen gen) {
  if (!(v > t && t >= 2)) throw ParameterError("need v > t >= 2");
  CosingletonResult out;
  if (gen == SidonGen::greedy) {
    out.sidon = greedy_bsequence(t, v);
  } else {
    out.sidon = bose_chowla(next_prime_power(v), t);
    out.sidon.elements.resize(v);  // any subset of a B_t set is a B_t set
  }
  out.family.v = v;
  out.family.k = v - 1;
  for (int x = 1; x <= v; ++x) {
    Block block;
    for (int y = 1; y <= v; ++y)
      if (y != x) block.push_back(y);
    out.family.add(block, out.sidon.elements[x - 1]);
  }
  AdesignVerdict verdict = is_adesign(out.family, t);
  if (!verdict.adesign) throw InternalError("co-singleton family failed verification");
  out.max_frequency = verdict.max_frequency;
  return out;
}

BlockFamily base_family(const SidonSet& sidon, int k) {
  int v = (int)sidon.elements.size();
  if (!(v > k && k >= 1)) throw ParameterError("need |sidon| > k >= 1");
  uint64_t sum = 0;
  for (uint64_t m : sidon.elements)
    if (__builtin_add_overflow(sum, m, &sum)) throw SizeExceeded("point values sum past 64 bits");
  uint64_t types;
  if (!binom_u64(v, k, types)) throw SizeExceeded("C(v,k) exceeds 64 bits");
  uint64_t low = 0;
  for (int i = 0; i < k; ++i) low += sidon.elements[i];
  uint64_t maxmult = sum - low;  // largest complement sum
  uint64_t probe;
  if (__builtin_mul_overflow(types, maxmult, &probe))
    throw SizeExceeded("total block count exceeds 64 bits");

  BlockFamily fam(v, k);
  for (auto& block : all_ksubsets(v, k)) {
    uint64_t inside = 0;
    for (int x : block) inside += sidon.elements[x - 1];
    fam.add(block, sum - inside);
  }
  return fam;
}

double thinning_probability(int v, int k, int t) {
  if (!(v > k && k >= t && t >= 2)) throw ParameterError("need v > k >= t >= 2");
  double cvt;
  uint64_t tmp;
  cvt = binom_u64(v, t, tmp) ? (double)tmp : binom_d(v, t);
  double denom = binom_u64(v - t - 1, k - t, tmp) ? (double)tmp : binom_d(v - t - 1, k - t);
  double raw = 16.0 * std::pow((double)v, t + 1) * std::log(cvt) / denom;
  if (k <= 2 * t + 2 || raw >= 1.0) throw RegimeError(raw, k, t);
  return raw;
}

BlockFamily thin(const BlockFamily& base, double p, uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0)) throw ParameterError("need p in (0,1]");
  if (p == 1.0) return base;
  std::mt19937_64 rng(seed);
  BlockFamily out(base.v, base.k);
  for (auto& [block, mult] : base.entries) {
    std::binomial_distribution<uint64_t> dist(mult, p);
    uint64_t kept = dist(rng);
    if (kept > 0) out.add(block, kept);
  }
  return out;
}

ConcentrationReport concentration_report(const BlockFamily& base, const BlockFamily& thinned,
                                         double p, int t) {
  if (base.v != thinned.v || base.k != thinned.k)
    throw ParameterError("families disagree on v or k");
  for (auto& [block, mult] : thinned.entries) {
    auto it = base.entries.find(block);
    if (it == base.entries.end() || mult > it->second)
      throw ParameterError("thinned family is not a subfamily of the base");
  }
  FrequencyTable fb = frequencies(base, t);
  FrequencyTable ft = frequencies(thinned, t);
  double ln_count = std::log((double)fb.freqs.size());

  ConcentrationReport report;
  report.base_degenerate = true;
  uint64_t f0 = fb.freqs.begin()->second;
  auto ti = ft.freqs.begin();
  for (auto& [T, f] : fb.freqs) {
    if (f != f0) report.base_degenerate = false;
    ConcentrationRow row;
    row.tset = T;
    row.observed = ti->second;
    ++ti;
    row.expected = p * (double)f;
    row.sigma = 2.0 * std::sqrt(p * (double)f * ln_count);
    double margin = std::abs((double)row.observed - row.expected);
    // margin == 0 covers the p = 1 identity and zero-frequency rows, where the
    // strict inequality against sigma = 0 would misfire
    row.holds = margin < row.sigma || margin == 0.0;
    if (!row.holds) ++report.violations;
    report.rows.push_back(std::move(row));
  }
  return report;
}

RandomizedResult randomized_adesign(int v, int k, int t, std::optional<double> p_override,
                                    uint64_t seed, uint64_t max_retries) {
  if (!(v > k && k >= t && t >= 2)) throw ParameterError("need v > k >= t >= 2");
  RandomizedResult out;
  out.seed = seed;
  out.points = bose_chowla(next_prime_power(v), t);
  out.points.elements.resize(v);
  if (p_override && !(*p_override > 0.0 && *p_override <= 1.0))
    throw ParameterError("need p in (0,1]");
  out.p = p_override ? *p_override : thinning_probability(v, k, t);
  BlockFamily base = base_family(out.points, k);
  for (uint64_t attempt = 1; attempt <= max_retries; ++attempt) {
    BlockFamily cand = thin(base, out.p, derive_seed(seed, attempt));
    AdesignVerdict verdict = is_adesign(cand, t);
    if (verdict.adesign) {
      out.family = std::move(cand);
      out.attempts = attempt;
      out.max_frequency = verdict.max_frequency;
      return out;
    }
  }
  throw RetriesExhausted(max_retries);
}

}  // namespace adesign
