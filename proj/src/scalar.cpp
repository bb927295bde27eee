#include "kslogic/scalar.hpp"

#include <cctype>

#include "kslogic/error.hpp"

namespace kslogic {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_scalar(std::string_view text, const char* why) {
  throw ParseError("invalid scalar '" + std::string(text) + "': " + why);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidOperand("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InvalidOperand("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::str() const {
  // mpq_get_str already omits "/1" for integers and emits the reduced form.
  return value_.get_str(10);
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num)) bad_scalar(text, "expected digits for the numerator");
  if (!all_digits(den)) bad_scalar(text, "expected digits for the denominator");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) bad_scalar(text, "zero denominator");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw InvalidOperand("division by zero");
  const Rational n = rhs.norm_sq();
  *this *= conjugate(rhs);
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return im_.str() + "i";
  std::string out = re_.str();
  if (im_.sign() > 0) out += '+';
  out += im_.str();
  out += 'i';
  return out;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) bad_scalar(text, "empty");
  if (text.back() != 'i') return GaussianRational(Rational::parse(text));

  const std::string_view body = text.substr(0, text.size() - 1);
  if (body.empty()) bad_scalar(text, "imaginary unit needs an explicit coefficient");
  const auto split = body.find_last_of("+-");
  if (split == std::string_view::npos || split == 0) {
    if (body.front() == '+') bad_scalar(text, "leading '+' is not allowed");
    return {Rational(0), Rational::parse(body)};
  }
  std::string_view im = body.substr(split);
  if (im.front() == '+') im.remove_prefix(1);
  if (im.empty()) bad_scalar(text, "missing imaginary coefficient");
  return {Rational::parse(body.substr(0, split)), Rational::parse(im)};
}

GaussianRational conjugate(const GaussianRational& z) { return {z.re(), -z.im()}; }

GaussianRational arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw InvalidOperand("unknown arithmetic operation");
}

}  // namespace kslogic
