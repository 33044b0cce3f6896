#pragma once

#include <iosfwd>
#include <string>

#include "latcov/covariogram.hpp"
#include "latcov/lattice.hpp"

namespace latcov {

// Points file:
//   [dim <d>]            optional, default 2
//   x_1 ... x_d          one point per line
// '#' starts a comment; blank lines are ignored; duplicates are rejected.
//
// Covariogram file:
//   dim <d>
//   u_1 ... u_d count    count > 0, sorted by vector, u and -u both present
//
// Diagnostics name the source and, where one applies, the line:
// "<name>:<line>: <message>".

LatticeSet read_points(std::istream& in, const std::string& name);
LatticeSet load_points(const std::string& path);
void write_points(std::ostream& out, const LatticeSet& k);
std::string format_points(const LatticeSet& k);

Covariogram read_covariogram(std::istream& in, const std::string& name);
Covariogram load_covariogram(const std::string& path);
void write_covariogram(std::ostream& out, const Covariogram& g);
/// The unique sorted serialization; read_covariogram inverts it exactly.
std::string format_covariogram(const Covariogram& g);

/// "x,y" (or more components) as used by CLI flags.
LatticeVector parse_vector_arg(const std::string& text, std::size_t dim);

}  // namespace latcov
