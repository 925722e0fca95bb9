// command-line front end: construct / verify / search / tabulate t-adesigns
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "adesign/construct.hpp"
#include "adesign/core.hpp"
#include "adesign/io.hpp"
#include "adesign/pbd.hpp"
#include "adesign/search.hpp"
#include "adesign/sidon.hpp"
#include "adesign/util.hpp"

using namespace adesign;

namespace {

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string join_u(const std::vector<uint64_t>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

// artifact goes to stdout when no --out; with --out the file gets the artifact
// and stdout gets the one-line summary instead
void emit(const std::string& out, const std::string& artifact, const std::string& summary) {
  if (out.empty()) {
    std::fputs(artifact.c_str(), stdout);
  } else {
    write_text_file(out, artifact);
    if (!summary.empty()) std::puts(summary.c_str());
  }
}

std::string family_text(const BlockFamily& fam) {
  std::ostringstream os;
  write_blockfamily(os, fam);
  return os.str();
}

SidonGen parse_gen(const std::string& s) {
  return s == "bosechowla" ? SidonGen::bose_chowla : SidonGen::greedy;
}

int run_verify(const std::string& file, int t, bool as_design, const std::string& freqs_out) {
  BlockFamily fam = read_blockfamily_file(file);
  if (!freqs_out.empty()) {
    std::ostringstream os;
    write_frequency_table(os, frequencies(fam, t));
    write_text_file(freqs_out, os.str());
  }
  if (as_design) {
    auto lambda = is_design(fam, t);
    if (lambda) {
      std::printf("design: t=%d v=%d k=%d lambda=%llu\n", t, fam.v, fam.k,
                  (unsigned long long)*lambda);
      return 0;
    }
    std::printf("not a design: t=%d frequencies differ\n", t);
    return 1;
  }
  auto verdict = is_adesign(fam, t);
  if (verdict.adesign) {
    std::printf("adesign: t=%d v=%d k=%d max_frequency=%llu\n", t, fam.v, fam.k,
                (unsigned long long)verdict.max_frequency);
    return 0;
  }
  std::printf("not an adesign: {%s} and {%s} share frequency %llu\n", join(verdict.first).c_str(),
              join(verdict.second).c_str(), (unsigned long long)verdict.shared);
  return 1;
}

int run_search_mu(int t, int k, int v, uint64_t budget, const std::string& out) {
  try {
    MuCertificate cert = mu_exact(t, k, v, budget);
    std::printf("mu=%llu optimal=%s\n", (unsigned long long)cert.mu,
                cert.optimal ? "true" : "false");
    if (!out.empty()) {
      std::ostringstream os;
      write_certificate(os, cert);
      write_text_file(out, os.str());
    }
    return 0;
  } catch (const BudgetExhausted& e) {
    std::printf("budget exhausted after %llu nodes: mu in [%llu, %llu]\n",
                (unsigned long long)e.nodes, (unsigned long long)e.lower_bound,
                (unsigned long long)e.best_known);
    if (!out.empty() && e.has_witness) {
      MuCertificate cert;
      cert.t = t;
      cert.k = k;
      cert.v = v;
      cert.mu = e.best_known;
      cert.family = e.witness;
      cert.optimal = false;
      cert.nodes = e.nodes;
      std::ostringstream os;
      write_certificate(os, cert);
      write_text_file(out, os.str());
    }
    return 3;
  }
}

std::string thinning_cell(int t, int k, int v) {
  if (t < 2 || k <= 2 * t + 2) return "-";
  double bound = 16.0 * t * std::pow((double)v, 2 * t + 2) * std::log((double)v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", bound);
  return buf;
}

std::string constructive_cell(int t, int k, int v) {
  uint64_t best = UINT64_MAX;
  if (t == 1) best = mu1(v, k);
  uint64_t cvk;
  if (t >= 1 && binom_u64(v, k, cvk) && cvk <= 63)
    best = std::min(best, is_adesign(powers_of_two_family(v, k), t).max_frequency);
  if (t >= 2 && k == v - 1) {
    try {
      best = std::min(best, construct_cosingleton(v, t).max_frequency);
    } catch (const ParameterError&) {
    }
  }
  if (t >= 2) {
    try {
      auto sid = greedy_bsequence(t, v);
      best = std::min(best, is_adesign(base_family(sid, k), t).max_frequency);
    } catch (const ParameterError&) {
    }
  }
  return best == UINT64_MAX ? "-" : std::to_string(best);
}

std::string exact_cell(int t, int k, int v, uint64_t budget) {
  if (t == 1) return std::to_string(mu1(v, k));
  try {
    return std::to_string(mu_exact(t, k, v, budget).mu);
  } catch (const ParameterError&) {
    return "-";
  } catch (const BudgetExhausted& e) {
    return ">=" + std::to_string(e.lower_bound);
  }
}

int run_bounds(int t, int k, int vfrom, int vto, uint64_t budget) {
  if (vfrom <= k) vfrom = k + 1;
  if (vto < vfrom) throw ParameterError("need --v-to >= --v-from > k");
  std::printf("%-5s %-10s %-8s %-12s %-13s %-8s\n", "v", "lower", "t1", "thinning",
              "constructive", "exact");
  for (int v = vfrom; v <= vto; ++v) {
    uint64_t lower = t == 1 ? mu1(v, k) : binom(v, t) - 1;
    std::string t1 = t == 1 ? std::to_string(mu1(v, k)) : "-";
    std::printf("%-5d %-10llu %-8s %-12s %-13s %-8s\n", v, (unsigned long long)lower, t1.c_str(),
                thinning_cell(t, k, v).c_str(), constructive_cell(t, k, v).c_str(),
                exact_cell(t, k, v, budget).c_str());
  }
  return 0;
}

int run_compose(const std::string& file, int k, const std::string& out,
                const std::string& trace_out) {
  PBDInstance pbd = read_pbd_file(file);
  auto [fam, trace] = compose(pbd, k, default_adesign_supplier(k), default_design_supplier(k));
  std::ostringstream ts;
  ts << "# block u lambda mu M\n";
  for (size_t i = 0; i < trace.records.size(); ++i) {
    auto& r = trace.records[i];
    ts << (i + 1) << ' ' << r.u << ' ' << r.lambda << ' ' << r.mu << ' ' << r.M << '\n';
  }
  if (!trace_out.empty())
    write_text_file(trace_out, ts.str());
  else
    std::fputs(ts.str().c_str(), stdout);
  auto verdict = is_adesign(fam, 2);
  std::printf("composed: v=%d blocks=%zu M=%llu max_frequency=%llu\n", fam.v, pbd.blocks.size(),
              (unsigned long long)trace.final_M, (unsigned long long)verdict.max_frequency);
  if (!out.empty()) write_text_file(out, family_text(fam));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"t-adesign construction, verification, and exact search"};
  app.require_subcommand(1);
  uint64_t seed = 0;
  int threads = 1;
  app.add_option("--seed", seed, "master seed for randomized constructions (default 0)");
  app.add_option("--threads", threads, "worker cap (current implementation is single-threaded)")
      ->check(CLI::PositiveNumber);

  int rc = 0;

  // ---- verify ----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "verify a block-family file");
  verify->fallthrough();
  static std::string verify_file, verify_freqs;
  static int verify_t = 1;
  static bool verify_design = false;
  verify->add_option("file", verify_file, "block-family file")->required();
  verify->add_option("--t", verify_t, "subset size to check")->required();
  verify->add_flag("--design", verify_design, "check for a t-design instead");
  verify->add_option("--freqs", verify_freqs, "also write the frequency table here");
  verify->callback([&] { rc = run_verify(verify_file, verify_t, verify_design, verify_freqs); });

  // ---- construct -------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "build adesign families");
  construct->require_subcommand(1);
  construct->fallthrough();

  auto* t1 = construct->add_subcommand("t1", "exact 1-adesign with least max frequency");
  t1->fallthrough();
  static int t1_v = 0, t1_k = 0;
  static std::string t1_out;
  t1->add_option("--v", t1_v)->required();
  t1->add_option("--k", t1_k)->required();
  t1->add_option("--out", t1_out, "write the family here");
  t1->callback([&] {
    auto fam = construct_t1(t1_v, t1_k);
    auto verdict = is_adesign(fam, 1);
    char buf[128];
    std::snprintf(buf, sizeof buf, "v=%d k=%d blocks=%llu max_frequency=%llu", t1_v, t1_k,
                  (unsigned long long)fam.total_blocks(),
                  (unsigned long long)verdict.max_frequency);
    emit(t1_out, family_text(fam), buf);
  });

  auto* cos = construct->add_subcommand("cosingleton", "Sidon weights on co-singleton blocks");
  cos->fallthrough();
  static int cos_v = 0, cos_t = 2;
  static std::string cos_gen = "greedy", cos_out;
  cos->add_option("--v", cos_v)->required();
  cos->add_option("--t", cos_t, "adesign strength (default 2)");
  cos->add_option("--gen", cos_gen, "sidon generator")
      ->check(CLI::IsMember({"greedy", "bosechowla"}));
  cos->add_option("--out", cos_out);
  cos->callback([&] {
    auto r = construct_cosingleton(cos_v, cos_t, parse_gen(cos_gen));
    char buf[160];
    std::snprintf(buf, sizeof buf, "v=%d t=%d gen=%s max_frequency=%llu", cos_v, cos_t,
                  cos_gen.c_str(), (unsigned long long)r.max_frequency);
    emit(cos_out, family_text(r.family), buf);
  });

  auto* base = construct->add_subcommand("base", "all k-subsets weighted by outside Sidon sums");
  base->fallthrough();
  static int base_v = 0, base_k = 0, base_t = 2;
  static std::string base_gen = "greedy", base_out;
  base->add_option("--v", base_v)->required();
  base->add_option("--k", base_k)->required();
  base->add_option("--t", base_t, "sidon order backing the weights (default 2)");
  base->add_option("--gen", base_gen)->check(CLI::IsMember({"greedy", "bosechowla"}));
  base->add_option("--out", base_out);
  base->callback([&] {
    SidonSet sid;
    if (parse_gen(base_gen) == SidonGen::greedy) {
      sid = greedy_bsequence(base_t, base_v);
    } else {
      sid = bose_chowla(next_prime_power(base_v), base_t);
      sid.elements.resize(base_v);
    }
    auto fam = base_family(sid, base_k);
    auto verdict = is_adesign(fam, base_t);
    char buf[160];
    std::snprintf(buf, sizeof buf, "v=%d k=%d t=%d types=%zu max_frequency=%llu", base_v, base_k,
                  base_t, fam.entries.size(), (unsigned long long)verdict.max_frequency);
    emit(base_out, family_text(fam), buf);
  });

  auto* rnd = construct->add_subcommand("randomized", "thinned base family, Las Vegas retries");
  rnd->fallthrough();
  static int rnd_v = 0, rnd_k = 0, rnd_t = 2;
  static double rnd_p = -1.0;
  static uint64_t rnd_retries = 50;
  static std::string rnd_out;
  rnd->add_option("--v", rnd_v)->required();
  rnd->add_option("--k", rnd_k)->required();
  rnd->add_option("--t", rnd_t, "adesign strength (default 2)");
  rnd->add_option("--p", rnd_p, "override the thinning probability");
  rnd->add_option("--retries", rnd_retries, "attempt cap (default 50)");
  rnd->add_option("--out", rnd_out);
  rnd->callback([&] {
    std::optional<double> po;
    if (rnd_p >= 0.0) po = rnd_p;
    auto r = randomized_adesign(rnd_v, rnd_k, rnd_t, po, seed, rnd_retries);
    std::puts(stats_line(r).c_str());
    if (!rnd_out.empty()) write_text_file(rnd_out, family_text(r.family));
  });

  // ---- search ----------------------------------------------------------
  auto* search = app.add_subcommand("search", "exact oracles");
  search->require_subcommand(1);
  search->fallthrough();

  auto* mu = search->add_subcommand("mu", "least max frequency, branch and bound");
  mu->fallthrough();
  static int mu_t = 2, mu_k = 0, mu_v = 0;
  static uint64_t mu_budget = 50000000ULL;
  static std::string mu_out;
  mu->add_option("--t", mu_t)->required();
  mu->add_option("--k", mu_k)->required();
  mu->add_option("--v", mu_v)->required();
  mu->add_option("--budget", mu_budget, "node budget (default 5e7)");
  mu->add_option("--out", mu_out, "write the certificate here");
  mu->callback([&] { rc = run_search_mu(mu_t, mu_k, mu_v, mu_budget, mu_out); });

  auto* des = search->add_subcommand("design", "find an S_lambda(2,k,v) or prove none exists");
  des->fallthrough();
  static int des_v = 0, des_k = 0;
  static uint64_t des_lambda = 1, des_budget = 100000000ULL;
  static std::string des_out;
  des->add_option("--v", des_v)->required();
  des->add_option("--k", des_k)->required();
  des->add_option("--lambda", des_lambda)->required();
  des->add_option("--budget", des_budget);
  des->add_option("--out", des_out);
  des->callback([&] {
    auto found = find_design(des_v, des_k, des_lambda, des_budget);
    if (!found) {
      std::printf("no S_%llu(2,%d,%d) exists\n", (unsigned long long)des_lambda, des_k, des_v);
      rc = 1;
      return;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "found: v=%d k=%d lambda=%llu blocks=%llu", des_v, des_k,
                  (unsigned long long)des_lambda, (unsigned long long)found->total_blocks());
    emit(des_out, family_text(*found), buf);
  });

  auto* cube = search->add_subcommand("cube", "anti-magic cube line sums");
  cube->fallthrough();
  static int cube_n = 2;
  static std::string cube_mode = "exact", cube_out;
  cube->add_option("--n", cube_n)->required();
  cube->add_option("--mode", cube_mode)->check(CLI::IsMember({"exact", "heuristic"}));
  cube->add_option("--out", cube_out);
  cube->callback([&] {
    auto c = antimagic_cube(cube_n, cube_mode == "exact" ? CubeMode::exact : CubeMode::heuristic);
    std::printf("max_line_sum=%llu\n", (unsigned long long)c.max_line_sum);
    std::ostringstream os;
    write_cube(os, c);
    if (!cube_out.empty())
      write_text_file(cube_out, os.str());
    else
      std::fputs(os.str().c_str(), stdout);
  });

  // ---- bounds ----------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "per-v table of known bounds");
  bounds->fallthrough();
  static int b_t = 1, b_k = 0, b_from = 0, b_to = 0;
  static uint64_t b_budget = 2000000ULL;
  bounds->add_option("--t", b_t)->required();
  bounds->add_option("--k", b_k)->required();
  bounds->add_option("--v-from", b_from)->required();
  bounds->add_option("--v-to", b_to)->required();
  bounds->add_option("--budget", b_budget, "node budget per exact cell");
  bounds->callback([&] { rc = run_bounds(b_t, b_k, b_from, b_to, b_budget); });

  // ---- sidon -----------------------------------------------------------
  auto* sidon = app.add_subcommand("sidon", "B_r sequence tools");
  sidon->require_subcommand(1);
  sidon->fallthrough();

  auto* sgreedy = sidon->add_subcommand("greedy", "least-next-element generator");
  sgreedy->fallthrough();
  static int sg_r = 2, sg_count = 0;
  static std::string sg_out;
  sgreedy->add_option("--r", sg_r)->required();
  sgreedy->add_option("--count", sg_count)->required();
  sgreedy->add_option("--out", sg_out);
  sgreedy->callback([&] {
    auto s = greedy_bsequence(sg_r, sg_count);
    std::ostringstream os;
    write_sidon(os, s);
    char buf[96];
    std::snprintf(buf, sizeof buf, "r=%d count=%d max=%llu", sg_r, sg_count,
                  (unsigned long long)s.elements.back());
    emit(sg_out, os.str(), buf);
  });

  auto* sbose = sidon->add_subcommand("bosechowla", "B_r set of size q modulo q^r-1");
  sbose->fallthrough();
  static int sb_q = 0, sb_r = 2;
  static std::string sb_out;
  sbose->add_option("--q", sb_q)->required();
  sbose->add_option("--r", sb_r)->required();
  sbose->add_option("--out", sb_out);
  sbose->callback([&] {
    auto s = bose_chowla(sb_q, sb_r);
    std::ostringstream os;
    write_sidon(os, s);
    char buf[96];
    std::snprintf(buf, sizeof buf, "q=%d r=%d size=%zu mod=%llu", sb_q, sb_r, s.elements.size(),
                  (unsigned long long)*s.modulus);
    emit(sb_out, os.str(), buf);
  });

  auto* sverify = sidon->add_subcommand("verify", "check a sidon file");
  sverify->fallthrough();
  static std::string sv_file;
  sverify->add_option("file", sv_file)->required();
  sverify->callback([&] {
    SidonSet s = read_sidon_file(sv_file);
    auto verdict = is_bsequence(s.elements, s.r, s.modulus);
    if (verdict.ok) {
      std::string tail = s.modulus ? " mod=" + std::to_string(*s.modulus) : std::string();
      std::printf("bsequence: r=%d size=%zu%s\n", s.r, s.elements.size(), tail.c_str());
      return;
    }
    std::printf("not a bsequence: {%s} and {%s} both sum to %llu\n", join_u(verdict.first).c_str(),
                join_u(verdict.second).c_str(), (unsigned long long)verdict.sum);
    rc = 1;
  });

  auto* smax = sidon->add_subcommand("max", "largest B_r subset of 1..n, exhaustive");
  smax->fallthrough();
  static int sm_n = 0, sm_r = 2;
  smax->add_option("--n", sm_n)->required();
  smax->add_option("--r", sm_r)->required();
  smax->callback([&] {
    auto r = max_bsequence_size_exact(sm_n, sm_r);
    std::printf("max=%d\n%s\n", r.size, join_u(r.witness).c_str());
  });

  // ---- pbd -------------------------------------------------------------
  auto* pbd = app.add_subcommand("pbd", "pairwise balanced designs");
  pbd->require_subcommand(1);
  pbd->fallthrough();

  auto* pproj = pbd->add_subcommand("projective", "projective plane of order q");
  pproj->fallthrough();
  static int pp_q = 2;
  static std::string pp_out;
  pproj->add_option("--q", pp_q)->required();
  pproj->add_option("--out", pp_out);
  pproj->callback([&] {
    auto inst = projective_plane(pp_q);
    std::ostringstream os;
    write_pbd(os, inst);
    char buf[96];
    std::snprintf(buf, sizeof buf, "v=%d blocks=%zu", inst.v, inst.blocks.size());
    emit(pp_out, os.str(), buf);
  });

  auto* paff = pbd->add_subcommand("affine", "affine plane of order q");
  paff->fallthrough();
  static int pa_q = 2;
  static std::string pa_out;
  paff->add_option("--q", pa_q)->required();
  paff->add_option("--out", pa_out);
  paff->callback([&] {
    auto inst = affine_plane(pa_q);
    std::ostringstream os;
    write_pbd(os, inst);
    char buf[96];
    std::snprintf(buf, sizeof buf, "v=%d blocks=%zu", inst.v, inst.blocks.size());
    emit(pa_out, os.str(), buf);
  });

  auto* pverify = pbd->add_subcommand("verify", "check a pbd file");
  pverify->fallthrough();
  static std::string pv_file;
  pverify->add_option("file", pv_file)->required();
  pverify->callback([&] {
    auto inst = read_pbd_file(pv_file);
    auto verdict = verify_pbd(inst);
    if (verdict.valid) {
      std::printf("pbd: v=%d blocks=%zu\n", inst.v, inst.blocks.size());
      return;
    }
    std::printf("not a pbd: pair %d %d covered %llu times\n", verdict.pair.first,
                verdict.pair.second, (unsigned long long)verdict.count);
    rc = 1;
  });

  auto* pcomp = pbd->add_subcommand("compose", "place designs plus adesigns on pbd blocks");
  pcomp->fallthrough();
  static std::string pc_file, pc_out, pc_trace;
  static int pc_k = 3;
  pcomp->add_option("file", pc_file)->required();
  pcomp->add_option("--k", pc_k)->required();
  pcomp->add_option("--out", pc_out, "write the composed family here");
  pcomp->add_option("--trace", pc_trace, "write the per-block trace here");
  pcomp->callback([&] { rc = run_compose(pc_file, pc_k, pc_out, pc_trace); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const RegimeError& e) {
    std::fprintf(stderr,
                 "regime error: raw p=%.6g at k=%d t=%d; needs k>2t+2 and p<1 "
                 "(override with --p to proceed anyway)\n",
                 e.raw_p, e.k, e.t);
    return 2;
  } catch (const RetriesExhausted& e) {
    std::fprintf(stderr, "no adesign found in %llu attempts; raise --retries or adjust --p\n",
                 (unsigned long long)e.attempts);
    return 3;
  } catch (const BudgetExhausted& e) {
    std::fprintf(stderr, "budget exhausted after %llu nodes\n", (unsigned long long)e.nodes);
    return 3;
  } catch (const ParameterError& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return 2;
  } catch (const OverflowError& e) {
    std::fprintf(stderr, "overflow: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 4;
  }
  return rc;
}
