#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "adesign/construct.hpp"
#include "adesign/core.hpp"
#include "adesign/pbd.hpp"
#include "adesign/search.hpp"
#include "adesign/sidon.hpp"

namespace adesign {

// canonical block-family text: header line, one "<mult> : <points>" line per
// block type in lex order; optional trailing comment lines
void write_blockfamily(std::ostream& os, const BlockFamily& fam,
                       const std::vector<std::string>& trailer_comments = {});
BlockFamily read_blockfamily(std::istream& is);

void write_frequency_table(std::ostream& os, const FrequencyTable& table);

void write_sidon(std::ostream& os, const SidonSet& s);
SidonSet read_sidon(std::istream& is);

void write_pbd(std::ostream& os, const PBDInstance& inst);
PBDInstance read_pbd(std::istream& is);

// block family plus "# mu=<m> optimal=<bool> nodes=<count>" trailer
void write_certificate(std::ostream& os, const MuCertificate& cert);

void write_cube(std::ostream& os, const CubeAssignment& cube);

std::string stats_line(const RandomizedResult& result);
std::string format_double(double x);

BlockFamily read_blockfamily_file(const std::string& path);
SidonSet read_sidon_file(const std::string& path);
PBDInstance read_pbd_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace adesign
