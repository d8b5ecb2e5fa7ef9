#include "hlab/catalog.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace hlab {

namespace {

Form b5(std::initializer_list<int> idx) { return Form::basis(5, idx); }
Form b6(std::initializer_list<int> idx) { return Form::basis(6, idx); }

Form std_de5() { return Poly(-2L) * b5({1, 4}) + Poly(-2L) * b5({2, 3}); }

void check_keys(const std::map<std::string, Rational>& params,
                std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [k, v] : params) {
    bool ok = false;
    for (const char* a : allowed)
      if (k == a) { ok = true; break; }
    if (!ok) throw std::invalid_argument(where + ": unknown parameter '" + k + "'");
  }
}

Poly pvar(const std::map<std::string, Rational>& params, const char* name) {
  auto it = params.find(name);
  return it == params.end() ? Poly::var(name) : Poly(it->second);
}

void require_nonzero(const std::map<std::string, Rational>& params, const char* name,
                     const std::string& who) {
  auto it = params.find(name);
  if (it != params.end() && it->second == 0)
    throw std::domain_error(who + " requires " + name + " != 0");
}

// sqrt(v) as an exact scalar: rational, or a rational multiple of q2 or q3
std::optional<Poly> exact_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  if (auto s = rational_root(v, 2)) return Poly(*s);
  if (auto s = rational_root(v / 2, 2)) return (*s) * Poly::var("q2");
  if (auto s = rational_root(v / 3, 2)) return (*s) * Poly::var("q3");
  return std::nullopt;
}

LieAlgebra make5(Form d1, Form d2, Form d3, Form d4, Form d5) {
  LieAlgebra g;
  g.dim = 5;
  g.d = {std::move(d1), std::move(d2), std::move(d3), std::move(d4), std::move(d5)};
  return g;
}

BasisChange h5_change(const Poly& r) {
  Poly q2 = Poly::var("q2"), z;
  Poly half_r = Rational(-1, 2) * r;
  return {{z, z, z, Poly(1L), half_r},
          {z, -q2, z, z, z},
          {z, z, z, Poly(-1L), half_r},
          {z, z, q2 * r, z, z},
          {r, z, z, z, z}};
}

} // namespace

std::vector<std::string> family_ids() { return {"F1", "F2", "F3", "F4", "F5", "F7"}; }

std::vector<std::string> family_parameter_names(const std::string& id) {
  if (id == "F1" || id == "F2" || id == "F5") return {"r"};
  if (id == "F3" || id == "F7") return {"a", "r"};
  if (id == "F4") return {"a", "b"};
  throw std::invalid_argument("unknown family '" + id + "'");
}

LieAlgebra family(const std::string& id, const std::map<std::string, Rational>& params) {
  if (id == "F1") {
    check_keys(params, {"r"}, id);
    require_nonzero(params, "r", id);
    Poly r = pvar(params, "r");
    return make5(Form(5),
                 r * b5({1, 2}),
                 r * b5({1, 3}),
                 -r * b5({1, 4}) - Poly(3L) * r * r * b5({1, 5}) + Poly(2L) * r * b5({2, 3}),
                 std_de5());
  }
  if (id == "F2") {
    check_keys(params, {"r"}, id);
    require_nonzero(params, "r", id);
    Poly r = pvar(params, "r");
    Poly r2 = r * r;
    return make5(Form(5),
                 r * b5({1, 2}) + Poly(3L) * r * b5({3, 4}) + Poly(3L) * r2 * b5({3, 5}),
                 r * b5({1, 3}) - Poly(3L) * r * b5({2, 4}) - Poly(3L) * r2 * b5({2, 5}),
                 Poly(2L) * r * b5({1, 4}) + Poly(2L) * r * b5({2, 3}),
                 std_de5());
  }
  if (id == "F3") {
    check_keys(params, {"a", "r"}, id);
    require_nonzero(params, "r", id);
    bool has_a = params.count("a"), has_r = params.count("r");
    if (has_a != has_r) throw std::invalid_argument("F3: bind both a and r or neither");
    if (has_a) {
      Rational a = params.at("a"), r = params.at("r");
      Poly pa(a), pr(r);
      return make5(Form(5),
                   pr * b5({1, 4}) - pr * b5({2, 3}) - Poly(a * r) * b5({2, 5}) + Poly(r * r) * b5({3, 5}),
                   pa * b5({1, 4}) - pa * b5({2, 3}) - Poly(a * a) * b5({2, 5}) + Poly(a * r) * b5({3, 5}),
                   pr * b5({1, 2}) + pa * b5({1, 3}) - Poly(a * a + r * r) * b5({1, 5}) +
                       pa * b5({2, 4}) - pr * b5({3, 4}),
                   std_de5());
    }
    // symbolic form, polynomial in r and w = a/r
    Poly r = Poly::var("r"), w = Poly::var("w");
    Poly r2 = r * r;
    return make5(Form(5),
                 r * b5({1, 4}) - r * b5({2, 3}) - r2 * w * b5({2, 5}) + r2 * b5({3, 5}),
                 r * w * b5({1, 4}) - r * w * b5({2, 3}) - r2 * w * w * b5({2, 5}) + r2 * w * b5({3, 5}),
                 r * b5({1, 2}) + r * w * b5({1, 3}) - r2 * (Poly(1L) + w * w) * b5({1, 5}) +
                     r * w * b5({2, 4}) - r * b5({3, 4}),
                 std_de5());
  }
  if (id == "F4") {
    check_keys(params, {"a", "b"}, id);
    Poly a = pvar(params, "a"), b = pvar(params, "b");
    Poly q = a * a + b * b;
    return make5(Form(5), Form(5),
                 a * b5({1, 3}) + b * b5({1, 4}) - b * b5({2, 3}) + a * b5({2, 4}) - q * b5({2, 5}),
                 b * b5({1, 3}) - a * b5({1, 4}) - q * b5({1, 5}) + a * b5({2, 3}) + b * b5({2, 4}),
                 std_de5());
  }
  if (id == "F5") {
    check_keys(params, {"r"}, id);
    require_nonzero(params, "r", id);
    Poly r = pvar(params, "r");
    Poly half_r2 = Rational(1, 2) * r * r;
    return make5(Form(5),
                 r * b5({3, 4}) + half_r2 * b5({3, 5}),
                 r * b5({1, 3}),
                 -half_r2 * b5({1, 5}) + r * b5({2, 3}),
                 std_de5());
  }
  if (id == "F7") {
    check_keys(params, {"a", "r"}, id);
    require_nonzero(params, "r", id);
    bool has_a = params.count("a"), has_r = params.count("r");
    if (has_a != has_r) throw std::invalid_argument("F7: bind both a and r or neither");
    if (has_a) {
      Rational a = params.at("a"), r = params.at("r");
      Rational q = r * r + a * a;
      return make5(Form(5),
                   Poly(r) * b5({1, 2}) + Poly(a) * b5({1, 3}) + Poly(a) * b5({2, 4}) +
                       Poly(a * q / (2 * r)) * b5({2, 5}) + Poly(a * a / r) * b5({3, 4}) +
                       Poly(a * a * q / (2 * r * r)) * b5({3, 5}),
                   Poly(a) * b5({1, 2}) + Poly(a * a / r) * b5({1, 3}) - Poly(r) * b5({2, 4}) -
                       Poly(q / 2) * b5({2, 5}) - Poly(a) * b5({3, 4}) -
                       Poly(a * q / (2 * r)) * b5({3, 5}),
                   -Poly(q * q / (2 * r * r)) * b5({1, 5}) + Poly(q / r) * b5({2, 3}),
                   std_de5());
    }
    Poly r = Poly::var("r"), w = Poly::var("w");
    Poly r2 = r * r, w2 = w * w;
    Poly Q = Poly(1L) + w2; // q = r^2 Q
    return make5(Form(5),
                 r * b5({1, 2}) + r * w * b5({1, 3}) + r * w * b5({2, 4}) +
                     Rational(1, 2) * w * r2 * Q * b5({2, 5}) + r * w2 * b5({3, 4}) +
                     Rational(1, 2) * w2 * r2 * Q * b5({3, 5}),
                 r * w * b5({1, 2}) + r * w2 * b5({1, 3}) - r * b5({2, 4}) -
                     Rational(1, 2) * r2 * Q * b5({2, 5}) - r * w * b5({3, 4}) -
                     Rational(1, 2) * w * r2 * Q * b5({3, 5}),
                 Rational(-1, 2) * r2 * Q * Q * b5({1, 5}) + r * Q * b5({2, 3}),
                 std_de5());
  }
  throw std::invalid_argument("unknown family '" + id + "'");
}

LieAlgebra canonical(const std::string& id) {
  if (id == "h1")
    return make5(Form(5), Form(5), Form(5), Form(5), -b5({1, 4}) - b5({2, 3}));
  if (id == "h2")
    return make5(Poly(-2L) * b5({1, 5}) - b5({2, 3}), -b5({2, 5}), -b5({3, 5}),
                 Poly(3L) * b5({4, 5}), Form(5));
  if (id == "h3")
    return make5(Poly(-2L) * b5({1, 4}) - b5({2, 3}), -b5({2, 4}) - b5({3, 5}),
                 b5({2, 5}) - b5({3, 4}), Form(5), Form(5));
  if (id == "h4")
    return make5(-b5({1, 4}), -b5({2, 5}), b5({3, 4}) + b5({3, 5}), Form(5), Form(5));
  if (id == "h5")
    return make5(-b5({1, 5}) - b5({2, 4}), -b5({3, 4}), b5({3, 5}), -b5({4, 5}), Form(5));
  throw std::invalid_argument("unknown canonical algebra '" + id + "'");
}

LieAlgebra general_equations(const std::map<std::string, Rational>& coeffs) {
  check_keys(coeffs, {"A", "B12", "B13", "B14", "B34", "C13", "C14"}, "general_equations");
  Poly A = pvar(coeffs, "A");
  Poly B12 = pvar(coeffs, "B12"), B13 = pvar(coeffs, "B13"), B14 = pvar(coeffs, "B14");
  Poly B34 = pvar(coeffs, "B34"), C13 = pvar(coeffs, "C13"), C14 = pvar(coeffs, "C14");
  Rational h(1, 2);

  Poly B15 = h * (B12 * B14 + B14 * B34 + Poly(2L) * B14 * C13 - Poly(2L) * B13 * C14);
  Poly B25 = h * (B12 * B13 + Poly(4L) * A * B34 + Poly(3L) * B13 * B34 - Poly(2L) * B13 * C13 -
                  Poly(2L) * B14 * C14);
  Poly B35 = h * (Poly(2L) * A * B13 + Poly(2L) * B13 * B13 + Poly(2L) * B14 * B14 - B12 * B34 +
                  B34 * B34);
  Poly C15 = h * (Poly(-4L) * A * B14 - Poly(2L) * B13 * B14 + Poly(3L) * B12 * C14 + B34 * C14);
  Poly C25 = h * (Poly(-12L) * A * A - B12 * B12 - Poly(10L) * A * B13 - Poly(2L) * B13 * B13 -
                  Poly(2L) * B12 * B34 - B34 * B34 + Poly(3L) * B12 * C13 + Poly(3L) * B34 * C13 -
                  Poly(2L) * C13 * C13 - Poly(2L) * C14 * C14);
  Poly D15 = h * (-B12 * B12 - Poly(2L) * B14 * B14 + B12 * B34 - Poly(3L) * B12 * C13 +
                  B34 * C13 - Poly(2L) * C13 * C13 - Poly(2L) * C14 * C14);

  Form d1 = A * b5({1, 4}) + A * b5({2, 3});
  Form d2 = B12 * b5({1, 2}) + B13 * b5({1, 3}) + B14 * b5({1, 4}) + B15 * b5({1, 5}) -
            B14 * b5({2, 3}) + (Poly(2L) * A + B13) * b5({2, 4}) + B25 * b5({2, 5}) +
            B34 * b5({3, 4}) + B35 * b5({3, 5});
  Form d3 = (Poly(3L) * A + B13) * b5({1, 2}) + C13 * b5({1, 3}) + C14 * b5({1, 4}) +
            C15 * b5({1, 5}) - C14 * b5({2, 3}) - (B12 + B34 - C13) * b5({2, 4}) +
            C25 * b5({2, 5}) - (A + B13) * b5({3, 4}) - B25 * b5({3, 5});
  Form d4 = B14 * b5({1, 2}) + C14 * b5({1, 3}) + (B34 - C13) * b5({1, 4}) + D15 * b5({1, 5}) +
            (B12 + C13) * b5({2, 3}) + C14 * b5({2, 4}) + C15 * b5({2, 5}) - B14 * b5({3, 4}) -
            B15 * b5({3, 5});
  return make5(std::move(d1), std::move(d2), std::move(d3), std::move(d4), std_de5());
}

LieAlgebra family_limit(const std::string& id, const std::map<std::string, Rational>& params) {
  auto it = params.find("r");
  bool degenerate = (id == "F1" || id == "F2" || id == "F5") && it != params.end() && it->second == 0;
  if (!degenerate) return family(id, params);
  LieAlgebra g = family(id, {});
  std::map<std::string, Poly> bind;
  bind["r"] = Poly(Rational(0));
  return evaluate_algebra(g, bind);
}

LieAlgebra catalog_algebra(const std::string& id, const std::map<std::string, Rational>& params) {
  if (id == "F1" || id == "F2" || id == "F3" || id == "F4" || id == "F5" || id == "F7")
    return family(id, params);
  if (id == "K" || id == "Ktilde") return g2_extension(id, params);
  if (!params.empty()) throw std::invalid_argument(id + " takes no parameters");
  if (id.size() == 2 && id[0] == 'h') return canonical(id);
  if (id == "nilmanifold") return nilmanifold_algebra();
  if (id == "flat") return flat_algebra();
  throw std::invalid_argument("unknown catalog id '" + id + "'");
}

CanonicalChange basis_change_to_canonical(const std::string& id,
                                          const std::map<std::string, Rational>& params) {
  Poly z;
  if (id == "F1") {
    check_keys(params, {"r"}, id);
    require_nonzero(params, "r", id);
    Poly r = pvar(params, "r");
    BasisChange B = {{z, z, z, Poly(2L), Poly(-3L) * r},
                     {z, z, Poly(5L), z, z},
                     {z, Poly(2L) * r, z, z, z},
                     {z, z, z, Poly(-3L), Poly(-3L) * r},
                     {r, z, z, z, z}};
    return {"h2", B};
  }
  if (id == "F2") {
    check_keys(params, {"r"}, id);
    require_nonzero(params, "r", id);
    Poly r = pvar(params, "r");
    Poly q2 = Poly::var("q2");
    BasisChange B = {{z, z, z, r, z},
                     {z, z, q2 * r, z, z},
                     {z, q2 * r, z, z, z},
                     {r, z, z, z, z},
                     {z, z, z, Poly(3L) * r, Poly(3L) * r * r}};
    return {"h3", B};
  }
  if (id == "F3") {
    check_keys(params, {"a", "r"}, id);
    if (!params.count("a") || !params.count("r"))
      throw std::invalid_argument("F3: the exact change needs numeric a and r");
    Rational a = params.at("a"), r = params.at("r");
    if (r == 0) throw std::domain_error("F3 requires r != 0");
    auto s = rational_root(a * a + r * r, 2);
    if (!s) throw std::domain_error("F3: a^2 + r^2 must be a perfect rational square here");
    Poly q3 = Poly::var("q3");
    BasisChange B = {{z, Poly(2L), z, z, Poly(r)},
                     {(a / r) * q3, Poly(-*s / r), z, q3, Poly(*s)},
                     {(-a / r) * q3, Poly(-*s / r), z, -q3, Poly(*s)},
                     {z, Poly(-2L * a), Poly(2L * r), z, z},
                     {(-*s) * q3, Poly(a), Poly(-r), z, z}};
    return {"h4", B};
  }
  if (id == "F5") {
    check_keys(params, {"r"}, id);
    require_nonzero(params, "r", id);
    return {"h5", h5_change(pvar(params, "r"))};
  }
  if (id == "F7") {
    check_keys(params, {"a", "r"}, id);
    if (!params.count("a") || !params.count("r"))
      throw std::invalid_argument("F7: the exact change needs numeric a and r");
    RotationPair rot = rotation_f7_to_f5(params.at("a"), params.at("r"));
    BasisChange B = mat_mul(h5_change(Poly(rot.to_params.at("r"))), rot.B);
    return {"h5", B};
  }
  if (id == "Ktilde") {
    check_keys(params, {"r", "a2"}, id);
    if (!params.count("r") || !params.count("a2"))
      throw std::invalid_argument("Ktilde: the exact change needs numeric r and a2");
    Rational r = params.at("r"), a2 = params.at("a2");
    if (r == 0) throw std::domain_error("Ktilde requires r != 0");
    BasisChange B5 = h5_change(Poly(r));
    BasisChange B(6, std::vector<Poly>(6, z));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) B[i][j] = B5[i][j];
    B[5][2] = Poly(-a2 / r);
    B[5][5] = Poly(1L);
    return {"h5xR", B};
  }
  throw std::invalid_argument("no exact canonical change stored for '" + id + "'");
}

SU2Structure standard_structure() {
  SU2Structure s;
  s.eta = b5({5});
  s.om1 = b5({1, 2}) + b5({3, 4});
  s.om2 = b5({1, 3}) - b5({2, 4});
  s.om3 = b5({1, 4}) + b5({2, 3});
  return s;
}

RotationPair rotation_f3_to_f4(const Rational& a, const Rational& r) {
  if (r == 0) throw std::domain_error("F3 requires r != 0");
  Rational b = r;
  auto h = exact_sqrt(a * a + b * b);
  if (!h) throw std::domain_error("a^2 + r^2 has no exact square root here");
  Poly ct = Poly(a) * inverse(*h);
  Poly st = Poly(b) * inverse(*h);

  Poly cs, ss; // cos and sin of the auxiliary angle, exact only at pinned points
  if (a == 0) {
    cs = Rational(1, 2) * Poly::var("q3");
    ss = Poly(Rational(-1, 2));
  } else if (a == r) {
    cs = Rational(1, 2) * Poly::var("q2");
    ss = Rational(-1, 2) * Poly::var("q2");
  } else {
    throw std::domain_error("the auxiliary rotation angle is exact only for a = 0 or a = r");
  }

  Poly z;
  RotationPair p;
  p.from_id = "F3";
  p.from_params = {{"a", a}, {"r", r}};
  p.to_id = "F4";
  p.to_params = {{"a", a}, {"b", b}};
  p.B = {{ss, -cs * ct, cs * st, z, z},
         {cs, ss * ct, -ss * st, z, z},
         {z, ss * st, ss * ct, cs, z},
         {z, -cs * st, -cs * ct, ss, z},
         {z, z, z, z, Poly(1L)}};
  p.c = ct;
  p.s = -st;
  return p;
}

RotationPair rotation_f7_to_f5(const Rational& a, const Rational& r) {
  if (r == 0) throw std::domain_error("F7 requires r != 0");
  auto h = exact_sqrt(a * a + r * r);
  if (!h) throw std::domain_error("a^2 + r^2 has no exact square root here");
  Poly ct = Poly(a) * inverse(*h);
  Poly st = Poly(r) * inverse(*h);

  Poly z;
  BasisChange R = {{Poly(1L), z, z, z, z},
                   {z, ct, st, z, z},
                   {z, -st, ct, z, z},
                   {z, z, z, Poly(1L), z},
                   {z, z, z, z, Poly(1L)}};
  RotationPair p;
  p.from_id = "F7";
  p.from_params = {{"a", a}, {"r", r}};
  p.to_id = "F5";
  p.to_params = {{"r", (a * a + r * r) / r}};
  p.B = mat_transpose(R);
  p.c = ct;
  p.s = -st;
  return p;
}

std::vector<RotationPair> rotation_pairs() {
  return {rotation_f3_to_f4(0, 1), rotation_f7_to_f5(0, 1)};
}

LieAlgebra nilmanifold_algebra() {
  LieAlgebra g = abelian(6);
  g.d[4] = Poly(-2L) * b6({1, 4}) + Poly(-2L) * b6({2, 3});
  g.d[5] = Poly(-2L) * b6({1, 3}) + Poly(2L) * b6({2, 4});
  return g;
}

namespace {

SU3Structure standard_su3_forms() {
  SU3Structure m;
  m.F = b6({1, 2}) + b6({3, 4}) + b6({5, 6});
  m.psip = wedge(b6({1, 3}) - b6({2, 4}), b6({5})) - wedge(b6({1, 4}) + b6({2, 3}), b6({6}));
  m.psim = wedge(b6({1, 4}) + b6({2, 3}), b6({5})) + wedge(b6({1, 3}) - b6({2, 4}), b6({6}));
  return m;
}

} // namespace

SU3Structure nilmanifold_structure() { return standard_su3_forms(); }

LieAlgebra flat_algebra() { return abelian(6); }

SU3Structure flat_structure() { return standard_su3_forms(); }

SU2Structure killing_structure(const Poly& x) {
  if (x.is_zero() || (x.is_constant() && x.constant_value() == 0))
    throw std::invalid_argument("Killing field has zero length");
  SU2Structure s = standard_structure();
  s.eta = x * s.eta;
  s.om1 = x * s.om1;
  s.om2 = x * s.om2;
  s.om3 = x * s.om3;
  return s;
}

LieAlgebra g2_extension(const std::string& kind, const std::map<std::string, Rational>& params) {
  if (kind == "K") {
    check_keys(params, {"a", "b", "a1"}, kind);
    std::map<std::string, Rational> base;
    if (params.count("a")) base["a"] = params.at("a");
    if (params.count("b")) base["b"] = params.at("b");
    Poly a1 = pvar(params, "a1");
    return extend(family("F4", base), a1 * b5({1, 2}));
  }
  if (kind == "Ktilde") {
    check_keys(params, {"r", "a2"}, kind);
    std::map<std::string, Rational> base;
    if (params.count("r")) base["r"] = params.at("r");
    Poly a2 = pvar(params, "a2");
    return extend(family("F5", base), a2 * b5({1, 3}));
  }
  throw std::invalid_argument("unknown extension kind '" + kind + "'");
}

Form extension_differential(const std::string& id, const std::map<std::string, Rational>& params) {
  if (id == "F1") {
    check_keys(params, {"a1", "a2"}, id);
    return pvar(params, "a1") * b5({1, 2}) + pvar(params, "a2") * b5({1, 3});
  }
  if (id == "F2") {
    check_keys(params, {}, id);
    return Form(5);
  }
  if (id == "F3") {
    check_keys(params, {"a", "r", "a2"}, id);
    if (!params.count("a") || !params.count("r"))
      throw std::invalid_argument("F3: the extension pattern needs numeric a and r");
    Rational a = params.at("a"), r = params.at("r");
    if (r == 0) throw std::domain_error("F3 requires r != 0");
    return pvar(params, "a2") * (Poly(-a / r) * b5({1, 2}) + b5({1, 3}));
  }
  if (id == "F4") {
    check_keys(params, {"a1"}, id);
    return pvar(params, "a1") * b5({1, 2});
  }
  if (id == "F5") {
    check_keys(params, {"a2"}, id);
    return pvar(params, "a2") * b5({1, 3});
  }
  if (id == "F7") {
    check_keys(params, {"a", "r", "a1"}, id);
    if (!params.count("a") || !params.count("r"))
      throw std::invalid_argument("F7: the extension pattern needs numeric a and r");
    Rational a = params.at("a"), r = params.at("r");
    if (r == 0) throw std::domain_error("F7 requires r != 0");
    return pvar(params, "a1") * (b5({1, 2}) + Poly(a / r) * b5({1, 3}));
  }
  throw std::invalid_argument("no extension pattern for '" + id + "'");
}

std::vector<FamilyInfo> catalog_list() {
  return {
      {"F1", {"r"}, "solvable, contact; never eta-Einstein"},
      {"F2", {"r"}, "solvable, contact, eta-Einstein"},
      {"F3", {"a", "r"}, "rotation-equivalent to F4 at matched parameters"},
      {"F4", {"a", "b"}, "nilpotent at a = b = 0; K is its rank-one extension"},
      {"F5", {"r"}, "solvable; Ktilde is its rank-one extension"},
      {"F7", {"a", "r"}, "rotation-equivalent to F5 at matched parameters"},
      {"h1", {}, "nilpotent normal form"},
      {"h2", {}, "nilpotent normal form of F1"},
      {"h3", {}, "nilpotent normal form of F2"},
      {"h4", {}, "nilpotent normal form of F3"},
      {"h5", {}, "nilpotent normal form of F5 and F7"},
      {"K", {"a", "b", "a1"}, "6-dim extension of F4 with de6 = a1 e12"},
      {"Ktilde", {"r", "a2"}, "6-dim extension of F5 with de6 = a2 e13"},
      {"nilmanifold", {}, "6-dim nilpotent model with dF = 2 Psi+"},
      {"flat", {}, "abelian 6-dim model"},
  };
}

} // namespace hlab
