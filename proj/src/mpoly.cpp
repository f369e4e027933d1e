#include "ratfib/mpoly.hpp"

#include <numeric>
#include <sstream>

#include "ratfib/error.hpp"

namespace ratfib {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_same(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::DimensionMismatch, "polynomial variable count mismatch");
}

}  // namespace

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  Exponent e(nvars, 0);
  e.at(index) = 1;
  return monomial(e, 1);
}

MPoly MPoly::monomial(const Exponent& exp, const Rational& c) {
  MPoly p(exp.size());
  p.add_term(exp, c);
  return p;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

int MPoly::low_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = total(e);
    if (d < 0 || t < d) d = t;
  }
  return d;
}

bool MPoly::is_homogeneous() const {
  return degree() == low_degree();
}

Rational MPoly::coeff(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational{} : it->second;
}

void MPoly::set(const Exponent& exp, const Rational& c) {
  check_same(exp.size(), nvars_);
  if (c.is_zero()) {
    terms_.erase(exp);
  } else {
    terms_[exp] = c;
  }
}

void MPoly::add_term(const Exponent& exp, const Rational& c) {
  check_same(exp.size(), nvars_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MPoly::eval(std::span<const Rational> point) const {
  check_same(point.size(), nvars_);
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term *= pow(point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.add_term(d, c * Rational(e[var]));
  }
  return out;
}

MPoly MPoly::truncated(int max_degree) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (total(e) <= max_degree) out.terms_.emplace(e, c);
  }
  return out;
}

std::optional<MPoly> MPoly::divide_by_variable(std::size_t var, int power) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) < power) return std::nullopt;
    Exponent d = e;
    d[var] -= power;
    out.terms_.emplace(d, c);
  }
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_same(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_same(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  return MPoly::mul_truncated(a, b, -1);
}

MPoly MPoly::mul_truncated(const MPoly& a, const MPoly& b, int max_degree) {
  check_same(a.nvars_, b.nvars_);
  MPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (max_degree >= 0 && total(e) > max_degree) continue;
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string MPoly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = total(e) > 0;
    if (!has_var || mag != Rational(1)) {
      os << mag;
      if (has_var) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      if (i < names.size()) {
        os << names[i];
      } else {
        os << "x" << i;
      }
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace ratfib
