// Copyright 2026 The g2nil Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "g2nil/form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "g2nil/errors.hpp"

namespace g2nil {

Coframe::Coframe(int n, std::string sym) : dim(n), symbol(std::move(sym)) {
  if (n < 0 || n > kMaxDim) {
    throw DimensionError("coframe dimension " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxDim));
  }
}

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) m |= Mask{1} << i;
  return m;
}

int wedge_sign(Mask a, Mask b) {
  if ((a & b) != 0) return 0;
  int inversions = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------

Vector::Vector(Coframe space, std::vector<Scalar> components)
    : space_(std::move(space)), comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != space_.dim) {
    throw DimensionError("vector has " + std::to_string(comps_.size()) + " components in a " +
                         std::to_string(space_.dim) + "-dimensional space");
  }
}

Vector Vector::basis(const Coframe& space, int i) {
  std::vector<Scalar> c(static_cast<std::size_t>(space.dim));
  c.at(static_cast<std::size_t>(i)) = Scalar(1);
  return Vector(space, std::move(c));
}

// ---------------------------------------------------------------------------

KForm::KForm(Coframe space, int degree) : space_(std::move(space)), degree_(degree) {
  if (degree < 0 || degree > space_.dim) {
    throw DimensionError("form degree " + std::to_string(degree) + " outside 0.." +
                         std::to_string(space_.dim));
  }
}

KForm KForm::monomial(const Coframe& space, const std::vector<int>& indices, const Scalar& coeff) {
  for (int i : indices) {
    if (i < 0 || i >= space.dim) throw DimensionError("index " + std::to_string(i) + " out of range");
  }
  KForm f(space, static_cast<int>(indices.size()));
  // Sort while counting the permutation parity.
  std::vector<int> idx = indices;
  int parity = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return f;
      if (idx[i] > idx[j]) ++parity;
    }
  }
  f.add_term(mask_of(idx), parity % 2 == 0 ? coeff : -coeff);
  return f;
}

KForm KForm::constant(const Coframe& space, const Scalar& value) {
  KForm f(space, 0);
  f.add_term(0, value);
  return f;
}

KForm KForm::one_form(const Coframe& space, const std::vector<Scalar>& coeffs) {
  if (static_cast<int>(coeffs.size()) != space.dim) throw DimensionError("1-form coefficient count");
  KForm f(space, 1);
  for (int i = 0; i < space.dim; ++i) f.add_term(Mask{1} << i, coeffs[static_cast<std::size_t>(i)]);
  return f;
}

KForm KForm::volume(const Coframe& space, const Scalar& coeff) {
  KForm f(space, space.dim);
  f.add_term(space.full_mask(), coeff);
  return f;
}

Scalar KForm::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

Ring KForm::ring() const {
  Ring r = Ring::rational();
  for (const auto& [m, c] : terms_) r = Ring::join(r, c.ring());
  return r;
}

void KForm::add_term(Mask m, const Scalar& c) {
  if (std::popcount(m) != degree_ || (m & ~space_.full_mask()) != 0) {
    throw DimensionError("monomial does not match form degree/dimension");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

KForm KForm::operator-() const {
  KForm f = *this;
  for (auto& [m, c] : f.terms_) c = -c;
  return f;
}

KForm& KForm::operator+=(const KForm& o) {
  if (!(space_ == o.space_)) throw DimensionError("adding forms over different coframes");
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;  // the zero form carries no degree
  if (degree_ != o.degree_) throw DimensionError("adding forms of different degrees");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& o) { return *this += -o; }

KForm& KForm::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const KForm& a, const KForm& b) {
  if (!(a.space_ == b.space_)) return false;
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (a.degree_ != b.degree_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto x = a.terms_.begin();
  auto y = b.terms_.begin();
  for (; x != a.terms_.end(); ++x, ++y) {
    if (x->first != y->first || !(x->second == y->second)) return false;
  }
  return true;
}

std::string KForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string label;
    if (m == 0) {
      label = "";
    } else {
      label = space_.symbol;
      for (int i : mask_indices(m)) {
        label += (space_.dim <= 9) ? std::to_string(i + 1) : ("_" + std::to_string(i + 1));
      }
    }
    std::string coeff;
    bool negative = false;
    if (auto r = c.to_rational(); r && c.is_rational()) {
      negative = r->sign() < 0;
      const Rational mag = negative ? -*r : *r;
      if (!mag.is_one() || label.empty()) coeff = mag.str();
    } else {
      coeff = "(" + c.str() + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << coeff;
    if (!coeff.empty() && !label.empty()) os << "*";
    os << label;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

KForm wedge(const KForm& a, const KForm& b) {
  if (!(a.space() == b.space())) throw DimensionError("wedge of forms over different coframes");
  const int deg = a.degree() + b.degree();
  if (deg > a.space().dim) {
    // Still validate the rings so mismatches are reported consistently.
    (void)Ring::join(a.ring(), b.ring());
    return KForm(a.space(), 0);
  }
  (void)Ring::join(a.ring(), b.ring());
  KForm out(a.space(), deg);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      out.add_term(ma | mb, s > 0 ? c : -c);
    }
  }
  return out;
}

KForm contract(const Vector& v, const KForm& a) {
  if (!(v.space() == a.space())) throw DimensionError("contraction over different coframes");
  if (a.degree() == 0) return KForm(a.space(), 0);  // i_v f = 0
  KForm out(a.space(), a.degree() - 1);
  for (int i = 0; i < a.space().dim; ++i) {
    if (v[i].is_zero()) continue;
    const KForm part = contract_basis(i, a);
    out += v[i] * part;
  }
  return out;
}

KForm contract_basis(int i, const KForm& a) {
  if (i < 0 || i >= a.space().dim) throw DimensionError("frame index out of range");
  if (a.degree() == 0) return KForm(a.space(), 0);
  KForm out(a.space(), a.degree() - 1);
  const Mask bit = Mask{1} << i;
  for (const auto& [m, c] : a.terms()) {
    if ((m & bit) == 0) continue;
    const int before = std::popcount(m & (bit - 1));
    out.add_term(m & ~bit, before % 2 == 0 ? c : -c);
  }
  return out;
}

KForm change_coframe(const KForm& a, const ScalarMatrix& m, const Coframe& target) {
  const int n = a.space().dim;
  if (static_cast<int>(m.rows()) != n || static_cast<int>(m.cols()) != target.dim) {
    throw DimensionError("coframe substitution matrix has the wrong shape");
  }
  std::vector<KForm> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> row(static_cast<std::size_t>(target.dim));
    for (int j = 0; j < target.dim; ++j) row[static_cast<std::size_t>(j)] = m(i, j);
    images.push_back(KForm::one_form(target, row));
  }
  KForm out(target, a.degree());
  for (const auto& [mask, c] : a.terms()) {
    KForm prod = KForm::constant(target, c);
    for (int i : mask_indices(mask)) prod = wedge(prod, images[static_cast<std::size_t>(i)]);
    out += prod;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class FormParser {
 public:
  FormParser(const Coframe& space, std::string_view text, bool bare)
      : space_(space), text_(text), bare_(bare) {}

  KForm parse(std::optional<int> degree) {
    std::vector<std::pair<Scalar, std::vector<int>>> terms;
    bool zero_literal = false;
    skip_ws();
    if (pos_ == text_.size()) fail("empty form literal");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, indices, is_zero] = term();
      if (is_zero) {
        zero_literal = true;
      } else {
        terms.emplace_back(sign > 0 ? coeff : -coeff, std::move(indices));
      }
      skip_ws();
    }
    int deg = -1;
    for (const auto& [c, idx] : terms) {
      const int d = static_cast<int>(idx.size());
      if (deg >= 0 && d != deg) fail("terms of mixed degree");
      deg = d;
    }
    if (degree) {
      if (deg >= 0 && deg != *degree) {
        fail("expected a " + std::to_string(*degree) + "-form, got degree " + std::to_string(deg));
      }
      deg = *degree;
    }
    if (deg < 0) {
      if (!zero_literal) fail("cannot infer degree");
      throw ParseError("the literal 0 needs an explicit degree", pos_);
    }
    KForm f(space_, deg);
    for (const auto& [c, idx] : terms) f += KForm::monomial(space_, idx, c);
    return f;
  }

 private:
  struct Parsed {
    Rational coeff;
    std::vector<int> indices;
    bool zero;
  };

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  bool at_symbol() const { return text_.substr(pos_, space_.symbol.size()) == space_.symbol; }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<int> index_digits(const std::string& d, std::size_t at) const {
    if (d.empty()) throw ParseError("expected index digits", at);
    std::vector<int> out;
    for (std::size_t k = 0; k < d.size(); ++k) {
      const int i = d[k] - '0';
      if (i < 1 || i > space_.dim) {
        throw ParseError("index " + std::string(1, d[k]) + " out of range 1.." +
                             std::to_string(space_.dim),
                         at + k);
      }
      out.push_back(i - 1);
    }
    return out;
  }

  std::vector<int> monomial() {
    skip_ws();
    if (at_symbol()) {
      pos_ += space_.symbol.size();
    } else if (!bare_) {
      fail("expected '" + space_.symbol + "'");
    }
    const std::size_t at = pos_;
    return index_digits(digits(), at);
  }

  Parsed term() {
    if (at_symbol()) return {Rational(1), monomial(), false};
    const std::size_t at = pos_;
    std::string num = digits();
    if (num.empty()) fail("expected a coefficient or a monomial");
    std::string den;
    skip_ws();
    const bool has_slash = peek() == '/';
    if (has_slash) {
      ++pos_;
      skip_ws();
      den = digits();
      if (den.empty()) fail("expected denominator");
      skip_ws();
    }
    if (peek() == '*') {
      ++pos_;
      Rational c = Rational::parse(has_slash ? num + "/" + den : num);
      return {c, monomial(), false};
    }
    if (!has_slash && num.find_first_not_of('0') == std::string::npos) return {Rational(0), {}, true};
    if (bare_ && !has_slash) return {Rational(1), index_digits(num, at), false};
    throw ParseError("coefficient must be followed by '*' and a monomial", pos_);
  }

  const Coframe& space_;
  std::string_view text_;
  bool bare_;
  std::size_t pos_ = 0;
};

}  // namespace

KForm parse_form(const Coframe& space, std::string_view text, std::optional<int> degree,
                 bool bare_digits) {
  return FormParser(space, text, bare_digits).parse(degree);
}

}  // namespace g2nil
