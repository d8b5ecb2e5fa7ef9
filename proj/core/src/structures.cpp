#include "hlab/structures.hpp"

#include "hlab/catalog.hpp"

#include <stdexcept>

namespace hlab {

namespace {

// drop slot k from the coframe; every term must avoid index k
Form drop_index(const Form& f, int k) {
  Form::mask_t bk = Form::mask_t(1) << (k - 1);
  Form out(f.dim() - 1);
  for (const auto& [mask, c] : f.terms()) {
    if (mask & bk) throw std::logic_error("form has a component along the removed index");
    Form::mask_t low = mask & (bk - 1);
    Form::mask_t high = static_cast<Form::mask_t>(mask & ~((bk << 1) - 1));
    out.add(static_cast<Form::mask_t>(low | (high >> 1)), c);
  }
  return out;
}

Form tangential(const Form& f, int k) {
  Form::mask_t bk = Form::mask_t(1) << (k - 1);
  Form out(f.dim());
  for (const auto& [mask, c] : f.terms())
    if (!(mask & bk)) out.add(mask, c);
  return out;
}

} // namespace

SU2CheckReport check_su2(const SU2Structure& s) {
  SU2CheckReport rep;
  rep.volume = wedge(s.om1, s.om1);
  if (rep.volume.is_zero()) rep.failures.push_back("om1 ^ om1 = 0");
  const Form* om[3] = {&s.om1, &s.om2, &s.om3};
  const char* nm[3] = {"om1", "om2", "om3"};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Form w = wedge(*om[i], *om[j]);
      if (i == j) {
        if (!(w == rep.volume))
          rep.failures.push_back(std::string(nm[i]) + " ^ " + nm[j] + " differs from om1 ^ om1");
      } else if (!w.is_zero()) {
        rep.failures.push_back(std::string(nm[i]) + " ^ " + nm[j] + " != 0");
      }
    }
  if (wedge(s.eta, rep.volume).is_zero()) rep.failures.push_back("eta ^ volume = 0");
  rep.pass = rep.failures.empty();
  return rep;
}

SU3CheckReport check_su3(const SU3Structure& s) {
  SU3CheckReport rep;
  if (!wedge(s.F, s.psip).is_zero()) rep.failures.push_back("F ^ Psi+ != 0");
  if (!wedge(s.F, s.psim).is_zero()) rep.failures.push_back("F ^ Psi- != 0");
  Form f3 = wedge(s.F, wedge(s.F, s.F));
  if (f3.is_zero()) rep.failures.push_back("F^3 = 0");
  Form pp = wedge(s.psip, s.psim);
  if (!(pp == Poly(Rational(2, 3)) * f3))
    rep.failures.push_back("Psi+ ^ Psi- != 2/3 F^3");
  rep.pass = rep.failures.empty();
  return rep;
}

StructureCheck check_hypo_contact(const LieAlgebra& g, const SU2Structure& s) {
  StructureCheck out;
  Form r1 = d_form(g, s.om3);
  Form r2 = d_form(g, wedge(s.om1, s.eta));
  Form r3 = d_form(g, wedge(s.om2, s.eta));
  Form rc = d_form(g, s.eta) + Poly(2L) * s.om3;
  if (!r1.is_zero()) out.residuals.emplace_back("d om3", r1);
  if (!r2.is_zero()) out.residuals.emplace_back("d(om1 ^ eta)", r2);
  if (!r3.is_zero()) out.residuals.emplace_back("d(om2 ^ eta)", r3);
  if (!rc.is_zero()) out.residuals.emplace_back("d eta + 2 om3", rc);
  out.hypo = r1.is_zero() && r2.is_zero() && r3.is_zero();
  out.contact = rc.is_zero();
  out.hypo_contact = out.hypo && out.contact;
  return out;
}

bool check_closed_omega12(const LieAlgebra& g, const SU2Structure& s) {
  return d_form(g, s.om1).is_zero() && d_form(g, s.om2).is_zero();
}

SU2Structure restrict_by_normal(const SU3Structure& m, int signed_normal, RestrictionKind kind) {
  int k = signed_normal > 0 ? signed_normal : -signed_normal;
  if (k < 1 || k > m.F.dim()) throw std::invalid_argument("normal index out of range");
  Poly sgn(signed_normal > 0 ? 1L : -1L);

  auto iU = [&](const Form& f) { return sgn * contract_basis(k, f); };
  Form tF = drop_index(tangential(m.F, k), k);

  SU2Structure s;
  s.eta = drop_index(-iU(m.F), k);
  if (kind == RestrictionKind::Generic) {
    s.om1 = drop_index(iU(m.psim), k);
    s.om2 = drop_index(-iU(m.psip), k);
    s.om3 = tF;
  } else {
    s.om1 = drop_index(-iU(m.psim), k);
    s.om2 = tF;
    s.om3 = drop_index(-iU(m.psip), k);
  }
  return s;
}

SU3Structure product_structure(const SU2Structure& s, int t_index) {
  int n = s.eta.dim();
  if (t_index != n + 1)
    throw std::invalid_argument("the product direction must be the appended last index");
  Form et = Form::basis(n + 1, {t_index});
  Form eta = lift_form(s.eta, n + 1);
  Form om1 = lift_form(s.om1, n + 1);
  Form om2 = lift_form(s.om2, n + 1);
  Form om3 = lift_form(s.om3, n + 1);
  SU3Structure m;
  m.F = om3 + wedge(eta, et);
  m.psip = wedge(om1, eta) - wedge(om2, et);
  m.psim = wedge(om2, eta) + wedge(om1, et);
  return m;
}

Form check_contraction_identity(const LieAlgebra& g, const SU3Structure& m, int signed_normal) {
  int k = signed_normal > 0 ? signed_normal : -signed_normal;
  Poly sgn(signed_normal > 0 ? 1L : -1L);
  Form rest = d_form(g, m.F) - Poly(2L) * m.psip;
  return sgn * contract_basis(k, rest);
}

KillingFrameReport check_killing_model_frame(const Poly& x) {
  if (x.is_zero() || (x.is_constant() && x.constant_value() == 0))
    throw std::invalid_argument("Killing field has zero length");

  SU3Structure flat = flat_structure();
  auto c6 = [](const Form& f) { return contract_basis(6, f); };

  KillingFrameReport rep;
  // i_X = x i_{E_6}; in om1 = x i_X(F ^ alpha) the two x factors cancel
  // against alpha = (1/x) e^6, using i_X(F ^ alpha) = i_X F ^ alpha + F
  Form eta6 = -(x * c6(flat.F));
  Form om16 = x * (wedge(c6(flat.F), Form::basis(6, {6})) + flat.F);
  Form om26 = x * c6(flat.psim);
  Form om36 = -(x * c6(flat.psip));

  rep.computed.eta = drop_index(eta6, 6);
  rep.computed.om1 = drop_index(om16, 6);
  rep.computed.om2 = drop_index(om26, 6);
  rep.computed.om3 = drop_index(om36, 6);

  rep.expected.eta = x * Form::basis(5, {5});
  rep.expected.om1 = x * (Form::basis(5, {1, 2}) + Form::basis(5, {3, 4}));
  rep.expected.om2 = x * (Form::basis(5, {1, 3}) - Form::basis(5, {2, 4}));
  rep.expected.om3 = x * (Form::basis(5, {1, 4}) + Form::basis(5, {2, 3}));

  rep.match = rep.computed.eta == rep.expected.eta && rep.computed.om1 == rep.expected.om1 &&
              rep.computed.om2 == rep.expected.om2 && rep.computed.om3 == rep.expected.om3;
  return rep;
}

LiftReport lift_extension(const LieAlgebra& g5, const SU2Structure& s, const Form& de6,
                          const Poly& lam, const Poly& mu) {
  if (g5.dim != 5) throw std::invalid_argument("lift starts from a 5-dimensional algebra");
  LiftReport rep;
  rep.g6 = extend(g5, de6);

  Form e6 = Form::basis(6, {6});
  Form eta = lift_form(s.eta, 6), om1 = lift_form(s.om1, 6);
  Form om2 = lift_form(s.om2, 6), om3 = lift_form(s.om3, 6);

  rep.s.F = lam * om1 + mu * om2 + wedge(eta, e6);
  Form rot = -mu * om1 + lam * om2;
  rep.s.psip = wedge(rot, eta) - wedge(om3, e6);
  rep.s.psim = wedge(rot, e6) + wedge(om3, eta);

  rep.d_FF = d_form(rep.g6, wedge(rep.s.F, rep.s.F));
  rep.d_psip = d_form(rep.g6, rep.s.psip);
  rep.d_de6 = d_form(rep.g6, rep.g6.diff(6));
  rep.obstruction = wedge(lam * s.om1 + mu * s.om2, de6);
  rep.half_flat = rep.d_FF.is_zero() && rep.d_psip.is_zero();
  return rep;
}

SU2Structure rotate_structure(const SU2Structure& st, const Poly& c, const Poly& s) {
  SU2Structure out;
  out.eta = st.eta;
  out.om1 = c * st.om1 - s * st.om2;
  out.om2 = s * st.om1 + c * st.om2;
  out.om3 = st.om3;
  return out;
}

SU2Structure pullback_structure(const SU2Structure& st, const BasisChange& B) {
  int n = static_cast<int>(B.size());
  SU2Structure out;
  out.eta = substitute_coframe(st.eta, B, n);
  out.om1 = substitute_coframe(st.om1, B, n);
  out.om2 = substitute_coframe(st.om2, B, n);
  out.om3 = substitute_coframe(st.om3, B, n);
  return out;
}

RotationCheck check_rotation_equivalence(const LieAlgebra& from, const SU2Structure& s_from,
                                         const LieAlgebra& to, const SU2Structure& s_to,
                                         const BasisChange& B, const Poly& c, const Poly& s) {
  RotationCheck rc;
  LieAlgebra mapped = apply_basis_change(from, B);
  rc.algebra_match = mapped.dim == to.dim;
  if (rc.algebra_match)
    for (int i = 0; i < to.dim; ++i)
      if (!(mapped.d[static_cast<size_t>(i)] == to.d[static_cast<size_t>(i)])) {
        rc.algebra_match = false;
        break;
      }
  SU2Structure pb = pullback_structure(s_to, B);
  SU2Structure rot = rotate_structure(pb, c, s);
  rc.eta_match = s_from.eta == pb.eta;
  rc.om3_match = s_from.om3 == pb.om3;
  rc.rotation_match = s_from.om1 == rot.om1 && s_from.om2 == rot.om2;
  rc.pass = rc.algebra_match && rc.eta_match && rc.om3_match && rc.rotation_match;
  return rc;
}

} // namespace hlab
