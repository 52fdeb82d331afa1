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

#include "g2nil/ninth_root.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "g2nil/errors.hpp"

namespace g2nil {

namespace {

using UPoly = std::vector<Rational>;  // coefficient i multiplies x^i

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Euclidean division a = q*b + r.
void divmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational());
  const Rational lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

// Real ninth root of |a| at `bits` of precision.
mpf_class ninth_root_abs(const Rational& a, unsigned long bits) {
  mpf_class x(0, bits);
  x = a.abs().raw();
  long exp = 0;
  const double mant = mpf_get_d_2exp(&exp, x.get_mpf_t());
  long q = exp / 9;
  long r = exp % 9;
  if (r < 0) {
    r += 9;
    q -= 1;
  }
  mpf_class y(std::pow(std::ldexp(mant, static_cast<int>(r)), 1.0 / 9.0), bits);
  if (q >= 0) {
    mpf_mul_2exp(y.get_mpf_t(), y.get_mpf_t(), static_cast<unsigned long>(q));
  } else {
    mpf_div_2exp(y.get_mpf_t(), y.get_mpf_t(), static_cast<unsigned long>(-q));
  }
  // Newton steps double the number of correct bits.
  const int steps = 8 + static_cast<int>(std::log2(static_cast<double>(bits)));
  for (int i = 0; i < steps; ++i) {
    mpf_class y8(y, bits);
    for (int k = 0; k < 7; ++k) y8 *= y;
    mpf_class y9(y8 * y, bits);
    y = y - (y9 - x) / (9 * y8);
  }
  return y;
}

}  // namespace

NinthRoot::NinthRoot(const Rational& modulus, Coeffs coeffs)
    : modulus_(modulus), c_(std::move(coeffs)) {
  if (modulus_.is_zero()) throw PreconditionError("ninth-root modulus must be nonzero");
}

NinthRoot::NinthRoot(const Rational& modulus, const Rational& value) : modulus_(modulus) {
  if (modulus_.is_zero()) throw PreconditionError("ninth-root modulus must be nonzero");
  c_[0] = value;
}

NinthRoot NinthRoot::generator(const Rational& modulus) {
  Coeffs c;
  c[1] = Rational(1);
  return NinthRoot(modulus, c);
}

bool NinthRoot::is_zero() const {
  for (const auto& a : c_) {
    if (!a.is_zero()) return false;
  }
  return true;
}

bool NinthRoot::is_rational() const {
  for (int i = 1; i < kDegree; ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

void NinthRoot::check_same_ring(const NinthRoot& o) const {
  if (modulus_ != o.modulus_) {
    throw RingMismatchError("ninth-root elements over different moduli " + modulus_.str() +
                            " and " + o.modulus_.str());
  }
}

NinthRoot NinthRoot::operator-() const {
  NinthRoot r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

NinthRoot& NinthRoot::operator+=(const NinthRoot& o) {
  check_same_ring(o);
  for (int i = 0; i < kDegree; ++i) c_[i] += o.c_[i];
  return *this;
}

NinthRoot& NinthRoot::operator-=(const NinthRoot& o) {
  check_same_ring(o);
  for (int i = 0; i < kDegree; ++i) c_[i] -= o.c_[i];
  return *this;
}

NinthRoot& NinthRoot::operator*=(const Rational& c) {
  for (auto& a : c_) a *= c;
  return *this;
}

NinthRoot& NinthRoot::operator*=(const NinthRoot& o) {
  check_same_ring(o);
  std::array<Rational, 2 * kDegree - 1> prod;
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < kDegree; ++j) {
      if (o.c_[j].is_zero()) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  for (int k = 0; k < kDegree; ++k) c_[k] = prod[k];
  for (int k = kDegree; k < 2 * kDegree - 1; ++k) {
    if (!prod[k].is_zero()) c_[k - kDegree] += modulus_ * prod[k];
  }
  return *this;
}

NinthRoot NinthRoot::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in Q[d]/(d^9 - D)");
  UPoly a(c_.begin(), c_.end());
  trim(a);
  UPoly m(kDegree + 1);
  m[0] = -modulus_;
  m[kDegree] = Rational(1);
  // Invariant: s*a == r0 (mod m), s1*a == r1 (mod m).
  UPoly r0 = m, r1 = a;
  UPoly s0, s1 = {Rational(1)};
  while (!r1.empty()) {
    UPoly q, r;
    divmod(r0, r1, q, r);
    UPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) {
    throw ZeroDivisorError("element " + str() + " is a zero divisor: d^9 - " + modulus_.str() +
                           " is reducible over Q");
  }
  const Rational scale = r0[0].inverse();
  UPoly q, r;
  divmod(s0, m, q, r);
  Coeffs out;
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i] * scale;
  return NinthRoot(modulus_, out);
}

int NinthRoot::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return c_[0].sign();
  for (unsigned long bits = 128; bits <= (1UL << 20); bits *= 2) {
    mpf_class delta = ninth_root_abs(modulus_, bits);
    if (modulus_.sign() < 0) delta = -delta;
    mpf_class value(0, bits);
    mpf_class scale(0, bits);
    mpf_class power(1, bits);
    for (int i = 0; i < kDegree; ++i) {
      mpf_class term(power * mpf_class(c_[i].raw(), bits), bits);
      value += term;
      scale += abs(term);
      power *= delta;
    }
    mpf_class tol(scale, bits);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), bits - 32);
    if (abs(value) > tol) return sgn(value);
  }
  throw Error("could not resolve the sign of " + str());
}

double NinthRoot::to_double() const {
  mpf_class delta = ninth_root_abs(modulus_, 128);
  if (modulus_.sign() < 0) delta = -delta;
  mpf_class value(0, 128);
  mpf_class power(1, 128);
  for (int i = 0; i < kDegree; ++i) {
    value += power * mpf_class(c_[i].raw(), 128);
    power *= delta;
  }
  return value.get_d();
}

std::string NinthRoot::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].str() << ")";
    if (i == 1) os << "*d";
    if (i > 1) os << "*d^" << i;
  }
  if (first) os << "0";
  os << " [d^9 = " << modulus_.str() << "]";
  return os.str();
}

}  // namespace g2nil
