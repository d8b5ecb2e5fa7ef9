#include "hlab/structure_file.hpp"

#include "hlab/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hlab {

StructureParseError::StructureParseError(std::string file_, int line_, int col_,
                                         const std::string& msg)
    : std::runtime_error(file_ + ":" + std::to_string(line_) + ":" + std::to_string(col_) + ": " +
                         msg),
      file(std::move(file_)), line(line_), column(col_) {}

namespace {

struct Token {
  std::string text;
  int column = 0; // 1-based
};

std::vector<Token> tokenize(const std::string& raw) {
  std::string line = raw;
  if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool is_basis_token(const std::string& t) {
  if (t.size() < 2 || t[0] != 'e') return false;
  for (size_t i = 1; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

bool is_identifier(const std::string& t) {
  if (t.empty() || !std::isalpha(static_cast<unsigned char>(t[0]))) return false;
  for (char c : t)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

struct Parser {
  std::string file;
  int line = 0;

  [[noreturn]] void fail(int col, const std::string& msg) const {
    throw StructureParseError(file, line, col, msg);
  }

  Form::mask_t basis_mask(const Token& tok, int dim, int degree) const {
    int prev = 0;
    Form::mask_t m = 0;
    for (size_t i = 1; i < tok.text.size(); ++i) {
      int idx = tok.text[i] - '0';
      if (idx <= prev) fail(tok.column, "basis indices must be strictly increasing");
      if (idx > dim) fail(tok.column, "basis index exceeds dim " + std::to_string(dim));
      m |= static_cast<Form::mask_t>(1u << (idx - 1));
      prev = idx;
    }
    int got = static_cast<int>(tok.text.size()) - 1;
    if (degree > 0 && got != degree)
      fail(tok.column, "expected a " + std::to_string(degree) + "-form term, got e^" +
                           std::to_string(got) + " factor '" + tok.text + "'");
    return m;
  }

  Poly coefficient(const Token& tok, const StructureFile& sf) const {
    Poly p;
    try {
      p = parse_poly(tok.text);
    } catch (const std::invalid_argument& e) {
      fail(tok.column, std::string("bad coefficient '") + tok.text + "': " + e.what());
    }
    for (const std::string& v : p.variables())
      if (!sf.params.count(v) && !Poly::is_sqrt_var(v))
        fail(tok.column, "parameter '" + v + "' used but not declared");
    return p;
  }

  // term (('+'|'-') term)* with an optional single leading sign; a lone 0 is
  // the empty sum
  Form term_list(const std::vector<Token>& toks, size_t first, const StructureFile& sf,
                 int degree) const {
    Form f(sf.dim);
    if (first >= toks.size()) fail(1, "missing right-hand side");
    if (first + 1 == toks.size() && toks[first].text == "0") return f;
    size_t i = first;
    Rational sign(1);
    if (toks[i].text == "+" || toks[i].text == "-") {
      sign = toks[i].text == "-" ? Rational(-1) : Rational(1);
      if (++i >= toks.size()) fail(toks.back().column, "dangling sign");
    }
    while (true) {
      const Token& tok = toks[i];
      Poly c(sign);
      if (!is_basis_token(tok.text)) {
        if (tok.text == "+" || tok.text == "-") fail(tok.column, "unexpected sign");
        c = c * coefficient(tok, sf);
        if (++i >= toks.size() || !is_basis_token(toks[i].text))
          fail(tok.column, "expected a basis token after the coefficient");
      }
      f.add(basis_mask(toks[i], sf.dim, degree), c);
      if (++i >= toks.size()) break;
      if (toks[i].text != "+" && toks[i].text != "-")
        fail(toks[i].column, "expected '+' or '-' between terms");
      sign = toks[i].text == "-" ? Rational(-1) : Rational(1);
      if (++i >= toks.size()) fail(toks.back().column, "dangling sign");
    }
    return f;
  }
};

int structure_degree(const std::string& name, int dim) {
  if (name == "eta" || name == "om1" || name == "om2" || name == "om3") return dim == 5 ? (name == "eta" ? 1 : 2) : -1;
  if (name == "F") return dim == 6 ? 2 : -1;
  if (name == "psip" || name == "psim") return dim == 6 ? 3 : -1;
  return 0; // unknown name
}

Form subst_form(const Form& f, const std::map<std::string, Poly>& b) {
  Form out(f.dim());
  for (const auto& [m, c] : f.terms()) out.add(m, c.subst(b));
  return out;
}

std::map<std::string, Poly> bindings_of(const StructureFile& sf,
                                        const std::map<std::string, Rational>& overrides) {
  for (const auto& [k, v] : overrides)
    if (!sf.params.count(k))
      throw std::invalid_argument("override names undeclared parameter '" + k + "'");
  std::map<std::string, Poly> b;
  for (const auto& [k, v] : sf.params) {
    if (auto it = overrides.find(k); it != overrides.end()) b[k] = Poly(it->second);
    else if (v) b[k] = Poly(*v);
  }
  return b;
}

std::string monomial_token(const Monomial& m, const Rational& abs_coeff) {
  std::ostringstream os;
  bool need_star = false;
  if (m.empty() || abs_coeff != 1) {
    os << to_string(abs_coeff);
    need_star = !m.empty();
  }
  for (const auto& [v, e] : m.powers) {
    if (need_star) os << "*";
    os << v;
    if (e > 1) os << "^" << e;
    need_star = true;
  }
  return os.str();
}

void emit_form(std::ostream& os, const Form& f, int dim) {
  bool first = true;
  for (const auto& [mask, poly] : f.terms()) {
    std::string basis = "e";
    for (int i = 1; i <= dim; ++i)
      if (mask & (1u << (i - 1))) basis += static_cast<char>('0' + i);
    for (const auto& [mono, c] : poly.terms()) {
      bool neg = c < 0;
      if (first) {
        if (neg) os << "- ";
      } else {
        os << (neg ? " - " : " + ");
      }
      std::string tok = monomial_token(mono, neg ? Rational(-c) : c);
      if (tok != "1") os << tok << " ";
      os << basis;
      first = false;
    }
  }
  if (first) os << "0";
}

const char* kStructureOrder[] = {"eta", "om1", "om2", "om3", "F", "psip", "psim"};

} // namespace

StructureFile parse_structure_stream(std::istream& in, const std::string& name) {
  StructureFile sf;
  sf.name = name;
  Parser p{name, 0};
  bool have_dim = false;
  std::string raw;
  while (std::getline(in, raw)) {
    ++p.line;
    std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (!have_dim && kw != "dim") p.fail(toks[0].column, "the first directive must be 'dim'");
    if (kw == "dim") {
      if (have_dim) p.fail(toks[0].column, "duplicate dim");
      if (toks.size() != 2) p.fail(toks[0].column, "usage: dim N");
      try {
        sf.dim = std::stoi(toks[1].text);
      } catch (...) {
        p.fail(toks[1].column, "dim must be an integer");
      }
      if (sf.dim < 1 || sf.dim > 9) p.fail(toks[1].column, "dim must be between 1 and 9");
      have_dim = true;
    } else if (kw == "param") {
      if (toks.size() != 2 && !(toks.size() == 4 && toks[2].text == "="))
        p.fail(toks[0].column, "usage: param NAME [= p/q]");
      const std::string& nm = toks[1].text;
      if (!is_identifier(nm)) p.fail(toks[1].column, "bad parameter name '" + nm + "'");
      if (is_basis_token(nm))
        p.fail(toks[1].column, "parameter name '" + nm + "' collides with the basis syntax");
      if (Poly::is_sqrt_var(nm))
        p.fail(toks[1].column, "'" + nm + "' is a reserved square-root generator");
      if (sf.params.count(nm)) p.fail(toks[1].column, "duplicate parameter '" + nm + "'");
      std::optional<Rational> val;
      if (toks.size() == 4) {
        Poly v;
        try {
          v = parse_poly(toks[3].text);
        } catch (const std::invalid_argument& e) {
          p.fail(toks[3].column, std::string("bad value: ") + e.what());
        }
        if (!v.is_constant()) p.fail(toks[3].column, "parameter value must be a rational constant");
        val = v.constant_value();
      }
      sf.param_order.push_back(nm);
      sf.params[nm] = val;
    } else if (kw == "d") {
      if (toks.size() < 4 || toks[2].text != "=") p.fail(toks[0].column, "usage: d eK = terms");
      if (!is_basis_token(toks[1].text) || toks[1].text.size() != 2)
        p.fail(toks[1].column, "expected a single coframe element like e3");
      int k = toks[1].text[1] - '0';
      if (k < 1 || k > sf.dim) p.fail(toks[1].column, "coframe index exceeds dim");
      if (sf.d.count(k)) p.fail(toks[1].column, "duplicate differential for e" + std::to_string(k));
      Form f = p.term_list(toks, 3, sf, 2);
      if (!f.is_zero()) sf.d[k] = f;
    } else if (kw == "structure") {
      if (toks.size() < 4 || toks[2].text != "=")
        p.fail(toks[0].column, "usage: structure NAME = terms");
      const std::string& nm = toks[1].text;
      int deg = structure_degree(nm, sf.dim);
      if (deg == 0) p.fail(toks[1].column, "unknown structure form '" + nm + "'");
      if (deg < 0)
        p.fail(toks[1].column, "structure form '" + nm + "' does not fit dim " +
                                   std::to_string(sf.dim));
      if (sf.structure.count(nm)) p.fail(toks[1].column, "duplicate structure form '" + nm + "'");
      sf.structure[nm] = p.term_list(toks, 3, sf, deg);
    } else {
      p.fail(toks[0].column, "unknown directive '" + kw + "'");
    }
  }
  if (!have_dim) throw StructureParseError(name, p.line + 1, 1, "missing dim");
  return sf;
}

StructureFile parse_structure_text(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  return parse_structure_stream(in, name);
}

StructureFile load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_structure_stream(in, path);
}

LieAlgebra algebra_of(const StructureFile& sf, const std::map<std::string, Rational>& overrides) {
  auto b = bindings_of(sf, overrides);
  LieAlgebra g;
  g.dim = sf.dim;
  g.d.assign(static_cast<size_t>(sf.dim), Form(sf.dim));
  for (const auto& [k, f] : sf.d) g.d[static_cast<size_t>(k - 1)] = subst_form(f, b);
  return g;
}

bool has_su2_structure(const StructureFile& sf) {
  return sf.structure.count("eta") && sf.structure.count("om1") && sf.structure.count("om2") &&
         sf.structure.count("om3");
}

bool has_su3_structure(const StructureFile& sf) {
  return sf.structure.count("F") && sf.structure.count("psip") && sf.structure.count("psim");
}

SU2Structure su2_of(const StructureFile& sf, const std::map<std::string, Rational>& overrides) {
  if (!has_su2_structure(sf))
    throw std::invalid_argument(sf.name + " has no complete SU(2) structure");
  auto b = bindings_of(sf, overrides);
  return {subst_form(sf.structure.at("eta"), b), subst_form(sf.structure.at("om1"), b),
          subst_form(sf.structure.at("om2"), b), subst_form(sf.structure.at("om3"), b)};
}

SU3Structure su3_of(const StructureFile& sf, const std::map<std::string, Rational>& overrides) {
  if (!has_su3_structure(sf))
    throw std::invalid_argument(sf.name + " has no complete SU(3) structure");
  auto b = bindings_of(sf, overrides);
  return {subst_form(sf.structure.at("F"), b), subst_form(sf.structure.at("psip"), b),
          subst_form(sf.structure.at("psim"), b)};
}

std::string dump_structure_file(const StructureFile& sf) {
  std::ostringstream os;
  os << "# " << (sf.name.empty() ? "structure equations" : sf.name) << "\n";
  os << "dim " << sf.dim << "\n";
  for (const std::string& nm : sf.param_order) {
    os << "param " << nm;
    if (auto v = sf.params.at(nm)) os << " = " << to_string(*v);
    os << "\n";
  }
  for (const auto& [k, f] : sf.d) {
    if (f.is_zero()) continue;
    os << "d e" << k << " = ";
    emit_form(os, f, sf.dim);
    os << "\n";
  }
  for (const char* nm : kStructureOrder) {
    auto it = sf.structure.find(nm);
    if (it == sf.structure.end()) continue;
    os << "structure " << nm << " = ";
    emit_form(os, it->second, sf.dim);
    os << "\n";
  }
  return os.str();
}

StructureFile catalog_entry_file(const std::string& id,
                                 const std::map<std::string, Rational>& params) {
  LieAlgebra g = catalog_algebra(id, params);
  StructureFile sf;
  sf.dim = g.dim;
  std::ostringstream nm;
  nm << id;
  for (const auto& [k, v] : params) {
    nm << (sf.param_order.empty() ? " at " : ", ") << k << " = " << to_string(v);
    sf.param_order.push_back(k);
    sf.params[k] = v;
  }
  // parameters that stayed symbolic still need declarations
  for (const std::string& v : algebra_parameters(g))
    if (!sf.params.count(v)) {
      sf.param_order.push_back(v);
      sf.params[v] = std::nullopt;
    }
  if ((id == "F3" || id == "F7") && sf.params.count("w")) nm << " (w stands for a/r)";
  sf.name = nm.str();
  for (int k = 1; k <= g.dim; ++k)
    if (!g.diff(k).is_zero()) sf.d[k] = g.diff(k);
  auto attach_su2 = [&sf](const SU2Structure& s) {
    sf.structure["eta"] = s.eta;
    sf.structure["om1"] = s.om1;
    sf.structure["om2"] = s.om2;
    sf.structure["om3"] = s.om3;
  };
  auto attach_su3 = [&sf](const SU3Structure& s) {
    sf.structure["F"] = s.F;
    sf.structure["psip"] = s.psip;
    sf.structure["psim"] = s.psim;
  };
  if (g.dim == 5) attach_su2(standard_structure());
  else if (id == "flat") attach_su3(flat_structure());
  else if (id == "nilmanifold") attach_su3(nilmanifold_structure());
  return sf;
}

} // namespace hlab
