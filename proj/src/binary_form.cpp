#include "ratfib/binary_form.hpp"

#include <sstream>

#include "ratfib/error.hpp"
#include "ratfib/linalg.hpp"

namespace ratfib {

bool BinaryForm::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Rational BinaryForm::eval(const Rational& s, const Rational& t) const {
  Rational sum;
  const int d = degree();
  for (int k = 0; k <= d; ++k) sum += c_[k] * pow(s, d - k) * pow(t, k);
  return sum;
}

int BinaryForm::multiplicity_at_s_zero() const {
  int m = 0;
  for (int k = degree(); k >= 0 && c_[k].is_zero(); --k) ++m;
  return m;
}

BinaryForm BinaryForm::divide_by_s(int k) const {
  if (multiplicity_at_s_zero() < k)
    throw Error(ErrorCode::PreconditionViolation, "form not divisible by requested power of s");
  return BinaryForm(std::vector<Rational>(c_.begin(), c_.end() - k));
}

std::string BinaryForm::str() const {
  std::ostringstream os;
  const int d = degree();
  bool any = false;
  for (int k = 0; k <= d; ++k) {
    if (c_[k].is_zero()) continue;
    if (any) os << " + ";
    any = true;
    os << "(" << c_[k] << ")";
    if (d - k > 0) os << "*s^" << d - k;
    if (k > 0) os << "*t^" << k;
  }
  if (!any) os << "0";
  return os.str();
}

Rational binary_resultant(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroForm, "resultant of a zero form");
  const int m = f.degree();
  const int n = g.degree();
  if (m < 1 || n < 1) throw Error(ErrorCode::PreconditionViolation, "resultant needs degrees >= 1");
  const auto size = static_cast<std::size_t>(m + n);
  Matrix syl(size, size);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) syl(r, r + k) = f.coeffs()[k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) syl(n + r, r + k) = g.coeffs()[k];
  return determinant(std::move(syl));
}

namespace {

using Poly = std::vector<Rational>;  // coefficient of t^k at index k

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly remainder(Poly a, const Poly& b) {
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  int m0 = std::min(f.multiplicity_at_s_zero(), g.multiplicity_at_s_zero());
  Poly common = poly_gcd(f.coeffs(), g.coeffs());
  common.resize(common.size() + static_cast<std::size_t>(m0));
  return BinaryForm(std::move(common));
}

}  // namespace ratfib
