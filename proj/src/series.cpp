#include "ratfib/series.hpp"

#include <algorithm>
#include <sstream>

#include "ratfib/error.hpp"

namespace ratfib {

TruncSeries::TruncSeries(int order) : coeffs_(order + 1), order_(order) {
  if (order < 0) throw Error(ErrorCode::PreconditionViolation, "negative series order");
}

TruncSeries::TruncSeries(std::vector<Rational> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0) throw Error(ErrorCode::PreconditionViolation, "negative series order");
  coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::constant(const Rational& c, int order) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::parameter(int order) {
  TruncSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

std::optional<int> TruncSeries::valuation() const {
  for (int k = 0; k <= order_; ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  return std::nullopt;
}

TruncSeries TruncSeries::truncated(int order) const {
  int n = std::min(order, order_);
  return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1), n);
}

TruncSeries TruncSeries::inverse() const {
  if (coeffs_[0].is_zero()) {
    throw Error(ErrorCode::PreconditionViolation, "series with zero constant term is not invertible");
  }
  TruncSeries r(order_);
  Rational inv0 = coeffs_[0].inverse();
  r.coeffs_[0] = inv0;
  for (int k = 1; k <= order_; ++k) {
    Rational acc;
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
    r.coeffs_[k] = -acc * inv0;
  }
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  int n = std::min(a.order_, b.order_);
  TruncSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  bool any = false;
  for (int k = 0; k <= order_; ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (any) os << " + ";
    any = true;
    os << "(" << coeffs_[k] << ")";
    if (k > 0) os << "*s^" << k;
  }
  if (!any) os << "0";
  os << " + O(s^" << order_ + 1 << ")";
  return os.str();
}

}  // namespace ratfib
