#include "adesign/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace adesign {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_blockfamily(std::ostream& os, const BlockFamily& fam,
                       const std::vector<std::string>& trailer_comments) {
  os << "blockfamily v=" << fam.v << " k=" << fam.k << "\n";
  for (auto& [block, mult] : fam.entries) {
    os << mult << " :";
    for (int x : block) os << " " << x;
    os << "\n";
  }
  for (auto& line : trailer_comments) os << "# " << line << "\n";
}

static bool next_content_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

BlockFamily read_blockfamily(std::istream& is) {
  std::string line;
  if (!next_content_line(is, line)) throw ParameterError("empty block-family input");
  int v = 0, k = 0;
  if (std::sscanf(line.c_str(), "blockfamily v=%d k=%d", &v, &k) != 2)
    throw ParameterError("bad header: expected 'blockfamily v=<v> k=<k>'");
  BlockFamily fam(v, k);
  while (next_content_line(is, line)) {
    std::istringstream ls(line);
    uint64_t mult;
    std::string colon;
    if (!(ls >> mult >> colon) || colon != ":")
      throw ParameterError("bad block line: expected '<mult> : <points>'");
    Block block;
    int x;
    while (ls >> x) block.push_back(x);
    fam.add(block, mult);  // validates size/order/range
  }
  return fam;
}

void write_frequency_table(std::ostream& os, const FrequencyTable& table) {
  for (auto& [T, f] : table.freqs) {
    bool first = true;
    for (int x : T) {
      os << (first ? "" : " ") << x;
      first = false;
    }
    os << " : " << f << "\n";
  }
}

void write_sidon(std::ostream& os, const SidonSet& s) {
  os << "sidon r=" << s.r;
  if (s.modulus) os << " mod=" << *s.modulus;
  os << "\n";
  bool first = true;
  for (uint64_t e : s.elements) {
    os << (first ? "" : " ") << e;
    first = false;
  }
  os << "\n";
}

SidonSet read_sidon(std::istream& is) {
  std::string line;
  if (!next_content_line(is, line)) throw ParameterError("empty sidon input");
  SidonSet s;
  unsigned long long mod = 0;
  if (std::sscanf(line.c_str(), "sidon r=%d mod=%llu", &s.r, &mod) == 2)
    s.modulus = mod;
  else if (std::sscanf(line.c_str(), "sidon r=%d", &s.r) != 1)
    throw ParameterError("bad header: expected 'sidon r=<r> [mod=<n>]'");
  if (!next_content_line(is, line)) throw ParameterError("missing element line");
  std::istringstream ls(line);
  uint64_t e;
  while (ls >> e) s.elements.push_back(e);
  for (size_t i = 1; i < s.elements.size(); ++i)
    if (s.elements[i] <= s.elements[i - 1])
      throw ParameterError("elements must be strictly increasing");
  return s;
}

void write_pbd(std::ostream& os, const PBDInstance& inst) {
  os << "pbd v=" << inst.v << "\n";
  for (auto& block : inst.blocks) {
    bool first = true;
    for (int x : block) {
      os << (first ? "" : " ") << x;
      first = false;
    }
    os << "\n";
  }
}

PBDInstance read_pbd(std::istream& is) {
  std::string line;
  if (!next_content_line(is, line)) throw ParameterError("empty pbd input");
  PBDInstance inst;
  if (std::sscanf(line.c_str(), "pbd v=%d", &inst.v) != 1)
    throw ParameterError("bad header: expected 'pbd v=<v>'");
  while (next_content_line(is, line)) {
    std::istringstream ls(line);
    std::vector<int> block;
    int x;
    while (ls >> x) block.push_back(x);
    if (!block.empty()) inst.blocks.push_back(block);
  }
  return inst;
}

void write_certificate(std::ostream& os, const MuCertificate& cert) {
  std::string trailer = "mu=" + std::to_string(cert.mu) +
                        " optimal=" + (cert.optimal ? "true" : "false") +
                        " nodes=" + std::to_string(cert.nodes);
  write_blockfamily(os, cert.family, {trailer});
}

void write_cube(std::ostream& os, const CubeAssignment& cube) {
  int n = cube.n;
  for (int k = 0; k < n; ++k) {
    if (k > 0) os << "\n";
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) os << (i ? " " : "") << cube.cells[i + n * j + (size_t)n * n * k];
      os << "\n";
    }
  }
}

std::string stats_line(const RandomizedResult& result) {
  return "attempts=" + std::to_string(result.attempts) + " p=" + format_double(result.p) +
         " max_frequency=" + std::to_string(result.max_frequency) +
         " seed=" + std::to_string(result.seed);
}

static std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  return in;
}

BlockFamily read_blockfamily_file(const std::string& path) {
  auto in = open_input(path);
  return read_blockfamily(in);
}

SidonSet read_sidon_file(const std::string& path) {
  auto in = open_input(path);
  return read_sidon(in);
}

PBDInstance read_pbd_file(const std::string& path) {
  auto in = open_input(path);
  return read_pbd(in);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open " + path + " for writing");
  out << content;
}

}  // namespace adesign
