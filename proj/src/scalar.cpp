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

#include "g2nil/scalar.hpp"

#include "g2nil/errors.hpp"

namespace g2nil {

Ring Ring::join(const Ring& a, const Ring& b) {
  if (a.kind == Kind::kRational) return b;
  if (b.kind == Kind::kRational) return a;
  if (a == b) return a;
  throw RingMismatchError("incompatible scalar rings " + a.str() + " and " + b.str());
}

std::string Ring::str() const {
  switch (kind) {
    case Kind::kRational:
      return "Q";
    case Kind::kNinthRoot:
      return modulus.sign() < 0 ? "Q[d]/(d^9 + " + (-modulus).str() + ")"
                                : "Q[d]/(d^9 - " + modulus.str() + ")";
    case Kind::kPolynomial:
      return "Q[c]";
  }
  return "?";
}

Scalar Scalar::ninth_root_of(const Rational& d) {
  if (d.is_zero()) throw PreconditionError("ninth root of zero is not a unit");
  if (auto r = d.exact_root(9)) return Scalar(*r);
  // x^9 - D is irreducible iff D is not a cube; otherwise work modulo x^9 - r.
  if (auto r = d.exact_root(3)) {
    NinthRoot g = NinthRoot::generator(*r);
    NinthRoot cube = g;
    cube *= g;
    cube *= g;
    return Scalar(cube);
  }
  return Scalar(NinthRoot::generator(d));
}

Ring Scalar::ring() const {
  if (is_ninth_root()) return Ring::ninth_root(as_ninth_root().modulus());
  if (is_polynomial()) return Ring::polynomial();
  return Ring::rational();
}

const Rational& Scalar::as_rational() const {
  if (!is_rational()) throw PreconditionError("scalar " + str() + " is not a plain rational");
  return std::get<Rational>(v_);
}

std::optional<Rational> Scalar::to_rational() const {
  if (is_rational()) return std::get<Rational>(v_);
  if (is_ninth_root() && as_ninth_root().is_rational()) return as_ninth_root().coeffs()[0];
  if (is_polynomial()) return as_polynomial().constant_value();
  return std::nullopt;
}

Scalar Scalar::promoted(const Ring& r) const {
  const Ring mine = ring();
  if (mine == r) return *this;
  if (mine.kind != Ring::Kind::kRational) {
    throw RingMismatchError("cannot move " + mine.str() + " into " + r.str());
  }
  const auto& q = std::get<Rational>(v_);
  switch (r.kind) {
    case Ring::Kind::kRational:
      return *this;
    case Ring::Kind::kNinthRoot:
      return Scalar(NinthRoot(r.modulus, q));
    case Ring::Kind::kPolynomial:
      return Scalar(Polynomial(q));
  }
  return *this;
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_one() const {
  auto r = to_rational();
  return r && r->is_one();
}

int Scalar::sign() const {
  if (is_rational()) return std::get<Rational>(v_).sign();
  if (is_ninth_root()) return as_ninth_root().sign();
  if (auto c = as_polynomial().constant_value()) return c->sign();
  throw PreconditionError("sign of a non-constant polynomial is undefined");
}

double Scalar::to_double() const {
  if (is_rational()) return std::get<Rational>(v_).to_double();
  if (is_ninth_root()) return as_ninth_root().to_double();
  if (auto c = as_polynomial().constant_value()) return c->to_double();
  throw PreconditionError("non-constant polynomial has no numeric value");
}

Scalar Scalar::inverse() const {
  if (is_rational()) return Scalar(std::get<Rational>(v_).inverse());
  if (is_ninth_root()) return Scalar(as_ninth_root().inverse());
  if (auto c = as_polynomial().constant_value()) return Scalar(Polynomial(c->inverse()));
  throw PreconditionError("non-constant polynomial " + str() + " is not invertible");
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) += std::get<Rational>(o.v_);
    return *this;
  }
  const Ring r = Ring::join(ring(), o.ring());
  Scalar a = promoted(r);
  const Scalar b = o.promoted(r);
  if (r.kind == Ring::Kind::kNinthRoot) {
    std::get<NinthRoot>(a.v_) += std::get<NinthRoot>(b.v_);
  } else {
    std::get<Polynomial>(a.v_) += std::get<Polynomial>(b.v_);
  }
  return *this = std::move(a);
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) *= std::get<Rational>(o.v_);
    return *this;
  }
  // Scaling by a rational avoids promoting the rational operand.
  if (o.is_rational()) {
    const auto& c = std::get<Rational>(o.v_);
    if (is_ninth_root()) {
      std::get<NinthRoot>(v_) *= c;
    } else {
      std::get<Polynomial>(v_) *= c;
    }
    return *this;
  }
  if (is_rational()) {
    Scalar r = o;
    return *this = (r *= *this);
  }
  const Ring r = Ring::join(ring(), o.ring());
  if (r.kind == Ring::Kind::kNinthRoot) {
    std::get<NinthRoot>(v_) *= std::get<NinthRoot>(o.v_);
  } else {
    std::get<Polynomial>(v_) *= std::get<Polynomial>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZeroError("scalar division by zero");
  if (is_polynomial() || o.is_polynomial()) {
    const Ring r = Ring::join(ring(), o.ring());
    const Polynomial num = promoted(r).as_polynomial();
    const Polynomial den = o.promoted(r).as_polynomial();
    return *this = Scalar(num.divide_exact(den));
  }
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return a.as_rational() == b.as_rational();
  const Ring ra = a.ring();
  const Ring rb = b.ring();
  if (ra.kind != Ring::Kind::kRational && rb.kind != Ring::Kind::kRational && !(ra == rb)) {
    return false;
  }
  return (a - b).is_zero();
}

std::string Scalar::str() const {
  return std::visit([](const auto& x) { return x.str(); }, v_);
}

}  // namespace g2nil
