// Copyright 2026 The secz Authors
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

#include "secz/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace secz {

Integer make_integer(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t),
                "gmpxx conversions assume an LP64 platform");
  return Integer(static_cast<long>(v));
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer exceeds int64");
  return static_cast<std::int64_t>(v.get_si());
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(make_integer(num), make_integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  v_.canonicalize();
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rational(q);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::string str(s);
    std::size_t start = (str[0] == '-' || str[0] == '+') ? 1 : 0;
    if (start == str.size()) throw std::invalid_argument("bad integer: " + str);
    for (std::size_t i = start; i < str.size(); ++i) {
      if (str[i] < '0' || str[i] > '9') {
        throw std::invalid_argument("bad integer: " + str);
      }
    }
    if (str[0] == '+') str.erase(0, 1);
    return Integer(str, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return out;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::pow(int e) const {
  if (e < 0) return reciprocal().pow(-e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(den(), num());
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational rational_arith(const Rational& x, const Rational& y, ArithOp op) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

}  // namespace secz
