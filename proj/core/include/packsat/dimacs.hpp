#pragma once

// DIMACS CNF and iCNF serialization. Output is deterministic byte-for-byte
// for a given formula; the parser validates header counts against the body.

#include <iosfwd>
#include <string>

#include "packsat/cnf.hpp"
#include "packsat/splitter.hpp"

namespace packsat {

void write_dimacs(const Formula& f, std::ostream& os);
std::string write_dimacs(const Formula& f);

struct DimacsParseError : std::runtime_error {
    int line;
    DimacsParseError(int line_, const std::string& what);
};

Formula parse_dimacs(std::istream& is);
Formula parse_dimacs(const std::string& text);

// `p inccnf` header, clauses, then one `a <lits> 0` line per cube in
// generation order.
void write_icnf(const Formula& f, const std::vector<Cube>& cubes, std::ostream& os);
std::string write_icnf(const Formula& f, const std::vector<Cube>& cubes);

}  // namespace packsat
