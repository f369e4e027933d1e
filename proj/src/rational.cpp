#include "ratfib/rational.hpp"

#include <cctype>

#include "ratfib/error.hpp"

namespace ratfib {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::EliminationFailure: return "EliminationFailure";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::LimitNotInX: return "LimitNotInX";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonIntegralLambda: return "NonIntegralLambda";
    case ErrorCode::GeneralPositionFailure: return "GeneralPositionFailure";
    case ErrorCode::BasePointInput: return "BasePointInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw Error(ErrorCode::PreconditionViolation, "zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num, true) ||
      (slash != std::string_view::npos && !valid_integer(den, false))) {
    throw Error(ErrorCode::ParseError,
                "not a rational literal: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Rational r;
  r.v_.get_num() = mpz_class(n, 10);
  r.v_.get_den() = slash == std::string_view::npos ? mpz_class(1)
                                                   : mpz_class(std::string(den), 10);
  if (r.v_.get_den() == 0) {
    throw Error(ErrorCode::ParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  r.v_.canonicalize();
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::PreconditionViolation, "inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::PreconditionViolation, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace ratfib
