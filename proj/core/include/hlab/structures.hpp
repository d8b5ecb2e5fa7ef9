#pragma once

#include "hlab/liealg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hlab {

// quadruplet (eta, omega_1, omega_2, omega_3) on a 5-dim coframe
struct SU2Structure {
  Form eta, om1, om2, om3;
};

// triple (F, Psi_+, Psi_-) on a 6-dim coframe
struct SU3Structure {
  Form F, psip, psim;
};

// algebraic compatibility: om_i ^ om_j = delta_ij v with v != 0, eta ^ v != 0
struct SU2CheckReport {
  bool pass = false;
  Form volume;                       // common 4-form om_i ^ om_i
  std::vector<std::string> failures; // which condition broke
};
SU2CheckReport check_su2(const SU2Structure& s);

// F ^ Psi_pm = 0, Psi_+ ^ Psi_- = (2/3) F^3 != 0
struct SU3CheckReport {
  bool pass = false;
  std::vector<std::string> failures;
};
SU3CheckReport check_su3(const SU3Structure& s);

// closure conditions on a Lie algebra:
//   hypo:    d om3 = 0, d(om1 ^ eta) = 0, d(om2 ^ eta) = 0
//   contact: d eta = -2 om3
struct StructureCheck {
  bool hypo = false;
  bool contact = false;
  bool hypo_contact = false;
  std::vector<std::pair<std::string, Form>> residuals; // nonzero ones only
};
StructureCheck check_hypo_contact(const LieAlgebra& g, const SU2Structure& s);

// d om1 = d om2 = 0 on g
bool check_closed_omega12(const LieAlgebra& g, const SU2Structure& s);

// Restriction of an SU(3)-structure to the hypersurface with basis-aligned
// unit normal U = sign(k) E_|k|. Generic keeps the tangential part of F as
// om3; HypoAdapted keeps it as om2, the choice that turns dF = 2 Psi_+ into
// a hypo-contact structure. The result lives on the coframe with index |k|
// removed and the remaining indices shifted down.
enum class RestrictionKind { Generic, HypoAdapted };
SU2Structure restrict_by_normal(const SU3Structure& m, int signed_normal, RestrictionKind kind);

// inverse of the Generic restriction: F = om3 + eta ^ e^t, etc., with the
// new index t appended as the last coframe slot
SU3Structure product_structure(const SU2Structure& s, int t_index);

// i_U (dF - 2 Psi_+) on g for U = sign(k) E_|k|; zero iff the restriction
// is contact
Form check_contraction_identity(const LieAlgebra& g, const SU3Structure& m, int signed_normal);

// quotient frame induced by the Killing field X = x E_6 of the flat model,
// with alpha = (1/x) e^6:
//   eta = -i_X F, om1 = x i_X(F ^ alpha), om2 = i_X Psi_-, om3 = -i_X Psi_+
struct KillingFrameReport {
  SU2Structure computed;
  SU2Structure expected; // x e^5, x(e12+e34), x(e13+e42), x(e14+e23)
  bool match = false;
};
KillingFrameReport check_killing_model_frame(const Poly& x);

// circle-bundle lift of (g5, s) by a closed 2-form de6 on the base:
//   F     = lam om1 + mu om2 + eta ^ e^6
//   Psi_+ = (-mu om1 + lam om2) ^ eta - om3 ^ e^6
//   Psi_- = (-mu om1 + lam om2) ^ e^6 + om3 ^ eta
// Reports d(F^F), d Psi_+ and the extension's own d(de6), plus the
// 4-form obstruction (lam om1 + mu om2) ^ de6 whose vanishing makes the
// lift half-flat.
struct LiftReport {
  LieAlgebra g6;
  SU3Structure s;
  Form d_FF;        // d(F ^ F)
  Form d_psip;      // d Psi_+
  Form d_de6;       // closure of the extension differential
  Form obstruction; // (lam om1 + mu om2) ^ de6 on the base
  bool half_flat = false;
};
LiftReport lift_extension(const LieAlgebra& g5, const SU2Structure& s, const Form& de6,
                          const Poly& lam, const Poly& mu);

// rotation in the (om1, om2)-plane by an exact angle pair (c, s) = (cos, sin)
SU2Structure rotate_structure(const SU2Structure& st, const Poly& c, const Poly& s);

// pullback along the coframe change f^i = sum_j B[i][j] e^j: a form written
// in the f-coframe is rewritten in the e-coframe
SU2Structure pullback_structure(const SU2Structure& st, const BasisChange& B);

// An equivalence of structures: B matches the algebras, and the pullback of
// the target structure agrees with the source one after rotating (om1, om2)
// by (c, s).
struct RotationCheck {
  bool algebra_match = false;
  bool eta_match = false;
  bool om3_match = false;
  bool rotation_match = false; // om1, om2 after rotation
  bool pass = false;
};
RotationCheck check_rotation_equivalence(const LieAlgebra& from, const SU2Structure& s_from,
                                         const LieAlgebra& to, const SU2Structure& s_to,
                                         const BasisChange& B, const Poly& c, const Poly& s);

} // namespace hlab
