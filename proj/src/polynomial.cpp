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

#include "g2nil/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "g2nil/errors.hpp"

namespace g2nil {

namespace {

using Exponents = Polynomial::Exponents;
using Term = Polynomial::Term;

// Remaps the exponent vectors of `terms` from `from` onto the superset `to`.
std::vector<Term> remap(const std::vector<std::string>& from, const std::vector<std::string>& to,
                        const std::vector<Term>& terms) {
  if (from == to) return terms;
  std::vector<std::size_t> pos(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    pos[i] = static_cast<std::size_t>(std::lower_bound(to.begin(), to.end(), from[i]) - to.begin());
  }
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Exponents e(to.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) e[pos[i]] = t.exps[i];
    out.push_back({std::move(e), t.coeff});
  }
  return out;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool lex_greater(const Exponents& a, const Exponents& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({{}, c});
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.vars_ = {name};
  p.terms_.push_back({{1}, Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
  std::vector<std::size_t> order(vars.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return vars[x] < vars[y]; });
  Polynomial p;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && vars[order[i]] == vars[order[i - 1]]) {
      throw PreconditionError("duplicate indeterminate '" + vars[order[i]] + "'");
    }
    p.vars_.push_back(vars[order[i]]);
  }
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (t.exps.size() != vars.size()) throw PreconditionError("exponent vector length mismatch");
    Exponents e(vars.size());
    for (std::size_t i = 0; i < order.size(); ++i) e[i] = t.exps[order[i]];
    p.terms_.push_back({std::move(e), std::move(t.coeff)});
  }
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return lex_greater(a.exps, b.exps); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exps == t.exps) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
  terms_ = std::move(merged);

  // Drop indeterminates that no longer occur.
  std::vector<bool> used(vars_.size(), false);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exps[i] != 0) used[i] = true;
    }
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) kept.push_back(vars_[i]);
  }
  for (auto& t : terms_) {
    Exponents e;
    e.reserve(kept.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (used[i]) e.push_back(t.exps[i]);
    }
    t.exps = std::move(e);
  }
  vars_ = std::move(kept);
}

std::optional<Rational> Polynomial::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

unsigned Polynomial::total_degree() const {
  unsigned best = 0;
  for (const auto& t : terms_) {
    unsigned d = 0;
    for (auto e : t.exps) d += e;
    best = std::max(best, d);
  }
  return best;
}

unsigned Polynomial::degree_in(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  unsigned best = 0;
  for (const auto& t : terms_) best = std::max(best, t.exps[idx]);
  return best;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& values) const {
  std::vector<const Rational*> bound(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it == values.end()) throw PreconditionError("no value for indeterminate '" + vars_[i] + "'");
    bound[i] = &it->second;
  }
  Rational sum;
  for (const auto& t : terms_) {
    Rational m = t.coeff;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exps[i] != 0) m *= bound[i]->pow(t.exps[i]);
    }
    sum += m;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& values) const {
  Polynomial sum;
  for (const auto& t : terms_) {
    std::vector<std::string> keep_vars;
    Exponents keep_exps;
    Polynomial factor(t.coeff);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exps[i] == 0) continue;
      auto it = values.find(vars_[i]);
      if (it == values.end()) {
        keep_vars.push_back(vars_[i]);
        keep_exps.push_back(t.exps[i]);
      } else {
        factor *= it->second.pow(t.exps[i]);
      }
    }
    if (!keep_vars.empty()) {
      factor *= from_terms(std::move(keep_vars), {{std::move(keep_exps), Rational(1)}});
    }
    sum += factor;
  }
  return sum;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (vars_ == o.vars_) {
    // Sorted merge in place of a full re-sort.
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && lex_greater(a->exps, b->exps))) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || lex_greater(b->exps, a->exps)) {
        out.push_back(*b++);
      } else {
        Rational c = a->coeff + b->coeff;
        if (!c.is_zero()) out.push_back({std::move(a->exps), std::move(c)});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    normalize();
    return *this;
  }
  auto vars = merge_vars(vars_, o.vars_);
  auto mine = remap(vars_, vars, terms_);
  auto theirs = remap(o.vars_, vars, o.terms_);
  mine.insert(mine.end(), std::make_move_iterator(theirs.begin()),
              std::make_move_iterator(theirs.end()));
  vars_ = std::move(vars);
  terms_ = std::move(mine);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    vars_.clear();
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.terms_.front().coeff;
  if (a.is_constant()) return b * a.terms_.front().coeff;
  Polynomial p;
  p.vars_ = merge_vars(a.vars_, b.vars_);
  const auto ta = remap(a.vars_, p.vars_, a.terms_);
  const auto tb = remap(b.vars_, p.vars_, b.terms_);
  p.terms_.reserve(ta.size() * tb.size());
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      Exponents e(x.exps.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = x.exps[i] + y.exps[i];
      p.terms_.push_back({std::move(e), x.coeff * y.coeff});
    }
  }
  p.normalize();
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (d.is_constant()) return *this * d.terms_.front().coeff.inverse();
  const auto vars = merge_vars(vars_, d.vars_);
  const auto dt = remap(d.vars_, vars, d.terms_);
  // Remainder keyed by exponents in decreasing lex order, so the leading
  // term is always begin() and each step costs |d| map updates.
  std::map<Exponents, Rational, std::greater<>> rem;
  for (auto& t : remap(vars_, vars, terms_)) rem.emplace(std::move(t.exps), std::move(t.coeff));
  std::vector<Term> quotient;
  const Term& lead = dt.front();
  const Rational lead_inv = lead.coeff.inverse();
  while (!rem.empty()) {
    const auto it = rem.begin();
    Exponents e(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (it->first[i] < lead.exps[i]) throw PreconditionError("polynomial division is not exact");
      e[i] = it->first[i] - lead.exps[i];
    }
    const Rational c = it->second * lead_inv;
    rem.erase(it);
    for (std::size_t k = 1; k < dt.size(); ++k) {
      Exponents s(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) s[i] = dt[k].exps[i] + e[i];
      auto [pos, inserted] = rem.try_emplace(std::move(s), -(c * dt[k].coeff));
      if (!inserted) {
        pos->second -= c * dt[k].coeff;
        if (pos->second.is_zero()) rem.erase(pos);
      }
    }
    quotient.push_back({std::move(e), c});
  }
  Polynomial q;
  q.vars_ = vars;
  q.terms_ = std::move(quotient);
  q.normalize();
  return q;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    const bool has_vars =
        std::any_of(t.exps.begin(), t.exps.end(), [](auto e) { return e != 0; });
    if (!c.is_one() || !has_vars) {
      os << c.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (t.exps[i] > 1) os << "^" << t.exps[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace g2nil
