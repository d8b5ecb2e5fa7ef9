#pragma once

#include "hlab/jet.hpp"
#include "hlab/poly.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hlab {

namespace ring {
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Poly& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
template <class T> bool is_zero(const JetT<T>& j) {
  return is_zero(j.v) && is_zero(j.d1) && is_zero(j.d2);
}
template <class K> K from_long(long n) { return K(n); }
template <> inline double from_long<double>(long n) { return static_cast<double>(n); }
} // namespace ring

// Exterior forms on a coframe e^1..e^n, n <= 8. A term is stored under the
// bitmask of its strictly increasing index tuple (bit i-1 set for e^i).
// Wedge follows the determinant convention, no 1/k! factors:
// (e^i ^ e^j)(X, Y) = e^i(X) e^j(Y) - e^i(Y) e^j(X).
template <class K>
class FormT {
public:
  using mask_t = uint16_t;

  FormT() : dim_(0) {}
  explicit FormT(int dim) : dim_(dim) { check_dim(dim); }

  static FormT zero(int dim) { return FormT(dim); }

  // basis monomial e^{i1...ik} from 1-based indices, strictly increasing
  static FormT basis(int dim, std::initializer_list<int> idx) {
    FormT f(dim);
    mask_t m = 0;
    int prev = 0;
    for (int i : idx) {
      if (i <= prev || i > dim) throw std::invalid_argument("basis indices must be strictly increasing and within dim");
      m |= static_cast<mask_t>(1u << (i - 1));
      prev = i;
    }
    f.terms_[m] = ring::from_long<K>(1);
    return f;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<mask_t, K>& terms() const { return terms_; }

  int degree() const {
    if (terms_.empty()) return -1; // zero form has any degree
    return std::popcount(static_cast<unsigned>(terms_.begin()->first));
  }

  void set(mask_t m, const K& c) {
    if (ring::is_zero(c)) terms_.erase(m);
    else terms_[m] = c;
  }
  void add(mask_t m, const K& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!ring::is_zero(c)) terms_[m] = c;
    } else {
      it->second = it->second + c;
      if (ring::is_zero(it->second)) terms_.erase(it);
    }
  }
  K coeff(mask_t m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K{} : it->second;
  }
  K coeff(std::initializer_list<int> idx) const { return coeff(mask_of(idx)); }

  static mask_t mask_of(std::initializer_list<int> idx) {
    mask_t m = 0;
    for (int i : idx) m |= static_cast<mask_t>(1u << (i - 1));
    return m;
  }

  FormT operator-() const {
    FormT r(dim_);
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  FormT& operator+=(const FormT& o) {
    require_same_space(o, "+");
    for (auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  FormT& operator-=(const FormT& o) {
    require_same_space(o, "-");
    for (auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend FormT operator+(FormT a, const FormT& b) { a += b; return a; }
  friend FormT operator-(FormT a, const FormT& b) { a -= b; return a; }
  friend FormT operator*(const K& c, const FormT& f) {
    FormT r(f.dim_);
    for (auto& [m, kc] : f.terms_) r.add(m, c * kc);
    return r;
  }

  bool operator==(const FormT& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  // parity of the permutation merging two disjoint masks
  static int merge_sign(mask_t a, mask_t b) {
    int swaps = 0;
    for (int j = 0; j < 16; ++j) {
      if (b & (1u << j)) {
        unsigned above = a >> (j + 1);
        swaps += std::popcount(above);
      }
    }
    return (swaps % 2 == 0) ? 1 : -1;
  }

  friend FormT wedge(const FormT& a, const FormT& b) {
    a.require_same_dim(b, "wedge");
    FormT r(a.dim_);
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        if (ma & mb) continue;
        int s = merge_sign(ma, mb);
        K c = ca * cb;
        if (s < 0) c = -c;
        r.add(static_cast<mask_t>(ma | mb), c);
      }
    return r;
  }

  // interior product with the basis vector E_k (1-based)
  friend FormT contract_basis(int k, const FormT& f) {
    if (k < 1 || k > f.dim_) throw std::invalid_argument("contract_basis: index out of range");
    FormT r(f.dim_);
    mask_t bitk = static_cast<mask_t>(1u << (k - 1));
    for (auto& [m, c] : f.terms_) {
      if (!(m & bitk)) continue;
      int pos = std::popcount(static_cast<unsigned>(m & (bitk - 1))); // entries before k
      K cc = (pos % 2 == 0) ? c : -c;
      r.add(static_cast<mask_t>(m & ~bitk), cc);
    }
    return r;
  }

  // interior product with X = sum_k X[k-1] E_k; an antiderivation
  friend FormT contract(const std::vector<K>& X, const FormT& f) {
    if (static_cast<int>(X.size()) != f.dim_) throw std::invalid_argument("contract: vector size != dim");
    FormT r(f.dim_);
    for (int k = 1; k <= f.dim_; ++k) {
      if (ring::is_zero(X[k - 1])) continue;
      FormT part = contract_basis(k, f);
      for (auto& [m, c] : part.terms_) r.add(m, X[k - 1] * c);
    }
    return r;
  }

  // full antisymmetrized evaluation on deg(f) vectors
  friend K eval(const FormT& f, const std::vector<std::vector<K>>& vecs) {
    int k = f.degree();
    if (k < 0) return K{};
    if (static_cast<int>(vecs.size()) != k) throw std::invalid_argument("eval: wrong number of vectors");
    for (auto& v : vecs)
      if (static_cast<int>(v.size()) != f.dim_) throw std::invalid_argument("eval: vector size != dim");
    K out{};
    for (auto& [m, c] : f.terms_) {
      std::vector<int> idx;
      for (int i = 0; i < f.dim_; ++i)
        if (m & (1u << i)) idx.push_back(i);
      // det of M[p][q] = e^{idx[p]}(vecs[q]) by Laplace expansion
      out = out + c * det_minor(vecs, idx, 0, (1u << k) - 1);
    }
    return out;
  }

  std::string str(const char* letter = "e") const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
      std::string cs = coeff_str(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (first) {
        if (neg) { out += "-"; cs = cs.substr(1); }
      } else {
        out += neg ? " - " : " + ";
        if (neg) cs = cs.substr(1);
      }
      if (cs != "1") { out += cs; out += "*"; }
      out += letter;
      for (int i = 0; i < dim_; ++i)
        if (m & (1u << i)) out += static_cast<char>('1' + i);
      first = false;
    }
    return out;
  }

private:
  static void check_dim(int d) {
    if (d < 0 || d > 8) throw std::invalid_argument("form dimension must be in 0..8");
  }
  void require_same_dim(const FormT& o, const char* op) const {
    if (dim_ != o.dim_) throw std::invalid_argument(std::string("forms live on different spaces in ") + op);
  }
  void require_same_space(const FormT& o, const char* op) const {
    require_same_dim(o, op);
    if (!terms_.empty() && !o.terms_.empty() && degree() != o.degree())
      throw std::invalid_argument(std::string("forms have different degrees in ") + op);
  }

  // determinant of the submatrix with rows idx[row..] and columns in colmask
  static K det_minor(const std::vector<std::vector<K>>& vecs, const std::vector<int>& idx,
                     size_t row, unsigned colmask) {
    if (row == idx.size()) return ring::from_long<K>(1);
    K out{};
    int sign = 1;
    for (size_t q = 0; q < idx.size(); ++q) {
      if (!(colmask & (1u << q))) continue;
      const K& entry = vecs[q][idx[row]];
      if (!ring::is_zero(entry)) {
        K sub = det_minor(vecs, idx, row + 1, colmask & ~(1u << q));
        K term = entry * sub;
        out = (sign > 0) ? out + term : out - term;
      }
      sign = -sign;
    }
    return out;
  }

  static std::string coeff_str(const Rational& c) { return to_string(c); }
  static std::string coeff_str(const Poly& c) {
    std::string s = c.str();
    if (s.find(' ') != std::string::npos) return "(" + s + ")";
    return s;
  }
  static std::string coeff_str(double c) {
    std::string s = std::to_string(c);
    return s;
  }
  template <class T> static std::string coeff_str(const JetT<T>& c) {
    return "jet(" + coeff_str(c.v) + "," + coeff_str(c.d1) + "," + coeff_str(c.d2) + ")";
  }

  int dim_;
  std::map<mask_t, K> terms_;
};

using Form = FormT<Poly>;
using QForm = FormT<Rational>;
using DForm = FormT<double>;
using JetForm = FormT<Jet2>;
using QJetForm = FormT<QJet>;

// coframe substitution e^j -> sum_k M[j-1][k-1] f^k (rows of M index the old
// coframe); the workhorse behind basis changes and rotation pullbacks
template <class K>
FormT<K> substitute_coframe(const FormT<K>& f, const std::vector<std::vector<K>>& M, int new_dim) {
  std::vector<FormT<K>> images;
  images.reserve(M.size());
  for (auto& row : M) {
    FormT<K> img(new_dim);
    for (int k = 0; k < new_dim; ++k)
      if (!ring::is_zero(row[k])) img.add(static_cast<typename FormT<K>::mask_t>(1u << k), row[k]);
    images.push_back(img);
  }
  FormT<K> out(new_dim);
  for (auto& [m, c] : f.terms()) {
    FormT<K> prod(new_dim);
    prod.add(0, ring::from_long<K>(1));
    for (int i = 0; i < f.dim(); ++i)
      if (m & (1u << i)) prod = wedge(prod, images.at(i));
    out += c * prod;
  }
  return out;
}

inline DForm eval_form(const Form& f, const std::map<std::string, double>& vals) {
  DForm out(f.dim());
  for (auto& [m, c] : f.terms()) out.add(m, c.eval_double(vals));
  return out;
}

inline QForm eval_form_rational(const Form& f, const std::map<std::string, Rational>& vals) {
  QForm out(f.dim());
  for (auto& [m, c] : f.terms()) out.add(m, c.eval_rational(vals));
  return out;
}

inline double max_abs(const DForm& f) {
  double m = 0;
  for (auto& [k, c] : f.terms()) m = std::max(m, std::abs(c));
  return m;
}

// same terms on a larger coframe (masks unchanged)
template <class K>
FormT<K> embed_form(const FormT<K>& f, int new_dim) {
  if (new_dim < f.dim()) throw std::invalid_argument("embed_form: target dimension too small");
  FormT<K> out(new_dim);
  for (auto& [m, c] : f.terms()) out.set(m, c);
  return out;
}

// lift coefficients to constant jets (zero time derivatives)
template <class T>
FormT<JetT<T>> constant_jet_form(const FormT<T>& f) {
  FormT<JetT<T>> out(f.dim());
  for (auto& [m, c] : f.terms()) out.set(m, JetT<T>(c));
  return out;
}

// largest coefficient magnitude over the value and first-derivative slots;
// the d2 slot is skipped since shifted jets leave it unreliable
inline double max_abs_order1(const JetForm& f) {
  double m = 0;
  for (auto& [k, c] : f.terms()) m = std::max({m, std::abs(c.v), std::abs(c.d1)});
  return m;
}

// time derivative of a form whose coefficients are jets in t
template <class T>
FormT<JetT<T>> time_derivative(const FormT<JetT<T>>& f) {
  FormT<JetT<T>> out(f.dim());
  for (auto& [m, c] : f.terms()) out.set(m, shift(c));
  return out;
}

} // namespace hlab
