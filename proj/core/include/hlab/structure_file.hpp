#pragma once

#include "hlab/structures.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlab {

// Line-oriented text format for structure equations, so a file reads like the
// equations themselves:
//
//   # solvable example
//   dim 5
//   param r = 1
//   d e1 = r e15
//   d e5 = -2 e14 - 2 e23
//   structure eta = e5
//   structure om1 = e12 + e34
//
// Rules: `dim N` (1 <= N <= 9) comes first. `param NAME [= p/q]` declares a
// coefficient parameter; every identifier used in a coefficient must be
// declared (the square-root generators q2, q3 are always available). `d eK`
// gives the differential of a coframe element as a sum of 2-form terms;
// omitted coframe elements are closed. Each term is an optional coefficient
// in the scalar product grammar, written without spaces, followed by a basis
// token `e` + strictly increasing indices. `structure` lines name the forms
// eta, om1, om2, om3 (dim 5) or F, psip, psim (dim 6). `#` starts a comment.
// A lone `0` is an allowed empty term list.

struct StructureParseError : std::runtime_error {
  std::string file;
  int line = 0;
  int column = 0;
  StructureParseError(std::string file_, int line_, int col_, const std::string& msg);
};

struct StructureFile {
  std::string name; // source label used in diagnostics
  int dim = 0;
  std::vector<std::string> param_order;
  std::map<std::string, std::optional<Rational>> params;
  std::map<int, Form> d;                 // coframe index -> 2-form, absent = 0
  std::map<std::string, Form> structure; // eta/om1/om2/om3 or F/psip/psim
};

StructureFile parse_structure_text(const std::string& text, const std::string& name = "<input>");
StructureFile parse_structure_stream(std::istream& in, const std::string& name = "<input>");
StructureFile load_structure_file(const std::string& path);

// algebra with the declared parameter values (and overrides) substituted;
// overrides must name declared parameters
LieAlgebra algebra_of(const StructureFile& sf, const std::map<std::string, Rational>& overrides = {});

bool has_su2_structure(const StructureFile& sf);
bool has_su3_structure(const StructureFile& sf);
SU2Structure su2_of(const StructureFile& sf, const std::map<std::string, Rational>& overrides = {});
SU3Structure su3_of(const StructureFile& sf, const std::map<std::string, Rational>& overrides = {});

// canonical text that parses back to the same data, coefficient monomials
// emitted one per summand
std::string dump_structure_file(const StructureFile& sf);

// catalog entry as a StructureFile: symbolic when params is empty, fully
// bound otherwise; dim-5 entries carry the standard structure, the flat and
// nilmanifold models their SU(3) forms
StructureFile catalog_entry_file(const std::string& id,
                                 const std::map<std::string, Rational>& params = {});

} // namespace hlab
