#pragma once

#include "apcover/ap.hpp"
#include "apcover/below_guarantee.hpp"
#include "apcover/instance.hpp"
#include "apcover/zp.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace apcover {

// Instance files: decimal integers separated by whitespace, lines whose first
// non-space character is '#' are ignored, duplicates are a parse error.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);
void print_instance(std::ostream& out, const Instance& X);

// Z_p instance files: first non-comment line "p=<decimal>", then residues.
// p must be prime and residues distinct values in [0, p).
ZpInstance parse_zp_instance(std::istream& in);
ZpInstance parse_zp_instance_file(const std::string& path);
void print_zp_instance(std::ostream& out, const ZpInstance& inst);

// t-Uniform Set Cover files: header "n=<int> t=<int> k=<int>", then one
// explicit set per line as 0-based element indices.
struct TuscFile {
    TuscInstance instance;
    int k = 0;
};
TuscFile parse_tusc(std::istream& in);
TuscFile parse_tusc_file(const std::string& path);

// Solution files: one AP per line as "first diff len". Non-canonical triples
// (descending order, singleton with nonzero difference) are normalized.
// A JSON report produced by the solve command is accepted as well.
std::vector<Ap> parse_solution(std::istream& in);
std::vector<Ap> parse_solution_file(const std::string& path);
void print_solution(std::ostream& out, const std::vector<Ap>& aps);

}  // namespace apcover
