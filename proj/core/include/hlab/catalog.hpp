#pragma once

#include "hlab/structures.hpp"

#include <map>
#include <string>
#include <vector>

namespace hlab {

struct FamilyInfo {
  std::string id;
  std::vector<std::string> params;
  std::string note;
};
std::vector<FamilyInfo> catalog_list();

// Coframe differentials of the six solvable families, all sharing
// de5 = -2e14 - 2e23. Missing parameters stay symbolic. F3 and F7 have
// coefficients that are rational functions of (a, r); their symbolic form is
// polynomial in r and w = a/r, so bind both parameters or neither.
LieAlgebra family(const std::string& id, const std::map<std::string, Rational>& params = {});

// family differentials with degenerate parameter values admitted, e.g.
// F2 at r = 0 (the nilpotent limit); F3 and F7 still need r != 0
LieAlgebra family_limit(const std::string& id, const std::map<std::string, Rational>& params);

std::vector<std::string> family_ids();
std::vector<std::string> family_parameter_names(const std::string& id);

// nilpotent normal forms h1..h5
LieAlgebra canonical(const std::string& id);

// the family shape with free coefficients A, B12, B13, B14, B34, C13, C14
// (missing ones symbolic); the remaining coefficients are the unique filling
// that satisfies the Jacobi identity
LieAlgebra general_equations(const std::map<std::string, Rational>& coeffs = {});

// any id known to the catalog (families, h1..h5, K, Ktilde, nilmanifold, flat)
LieAlgebra catalog_algebra(const std::string& id, const std::map<std::string, Rational>& params = {});

// exact coframe change onto the nilpotent normal form; throws when the
// square roots involved are not rational (or rational multiples of q2/q3)
struct CanonicalChange {
  std::string to;
  BasisChange B;
};
CanonicalChange basis_change_to_canonical(const std::string& id,
                                          const std::map<std::string, Rational>& params);

// eta = e5, om1 = e12 + e34, om2 = e13 - e24, om3 = e14 + e23
SU2Structure standard_structure();

/// rotation equivalences between families at exact parameter points:
// apply_basis_change(from, B) == to, and the pullback of the standard
// structure matches the source one after rotating (om1, om2) by (c, s)
struct RotationPair {
  std::string from_id, to_id;
  std::map<std::string, Rational> from_params, to_params;
  BasisChange B;
  Poly c, s;
};
RotationPair rotation_f3_to_f4(const Rational& a, const Rational& r);
RotationPair rotation_f7_to_f5(const Rational& a, const Rational& r);
std::vector<RotationPair> rotation_pairs();

// six-dimensional models
LieAlgebra nilmanifold_algebra(); // de5 = -2e14-2e23, de6 = -2e13+2e24
SU3Structure nilmanifold_structure();
LieAlgebra flat_algebra(); // abelian
SU3Structure flat_structure();

// scaled quotient structure of the flat model's Killing field x E_6
SU2Structure killing_structure(const Poly& x);

// rank-one extensions carrying the two evolution systems:
//   K      over F4(a, b) with de6 = a1 e12
//   Ktilde over F5(r)    with de6 = a2 e13
LieAlgebra g2_extension(const std::string& kind, const std::map<std::string, Rational>& params = {});

// the closed de6 pattern each family admits for the half-flat lift
Form extension_differential(const std::string& id, const std::map<std::string, Rational>& params = {});

} // namespace hlab
