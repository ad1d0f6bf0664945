#include "hallq/coeff.hpp"

#include <cmath>

#include "hallq/errors.hpp"

namespace hallq {

namespace {
int int_sqrt(int q) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(q))));
  return r * r == q ? r : 0;
}
}  // namespace

Coeff::Coeff(int q, mpq_class a, mpq_class b) : q_(q), root_(int_sqrt(q)), a_(std::move(a)), b_(std::move(b)) {
  if (q < 2) throw InputError("coefficient field needs q >= 2");
  a_.canonicalize();
  b_.canonicalize();
  if (root_ && sgn(b_) != 0) {
    a_ += b_ * root_;
    b_ = 0;
  }
}

Coeff Coeff::vpow(int q, long long k) {
  long long h = k >= 0 ? k / 2 : -((-k + 1) / 2);  // floor(k/2)
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(h >= 0 ? h : -h));
  mpq_class s = h >= 0 ? mpq_class(p) : mpq_class(1, 1) / mpq_class(p);
  if (k - 2 * h == 0) return Coeff(q, s);
  return Coeff(q, 0, s);
}

void Coeff::check(const Coeff& o) const {
  if (q_ != o.q_) throw InputError("coefficients over different fields");
}

Coeff Coeff::operator+(const Coeff& o) const {
  check(o);
  return Coeff(q_, a_ + o.a_, b_ + o.b_);
}

Coeff Coeff::operator-(const Coeff& o) const {
  check(o);
  return Coeff(q_, a_ - o.a_, b_ - o.b_);
}

Coeff Coeff::operator-() const { return Coeff(q_, -a_, -b_); }

Coeff Coeff::operator*(const Coeff& o) const {
  check(o);
  return Coeff(q_, a_ * o.a_ + b_ * o.b_ * q_, a_ * o.b_ + b_ * o.a_);
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero coefficient");
  mpq_class n = a_ * a_ - b_ * b_ * q_;
  return Coeff(q_, a_ / n, -b_ / n);
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

std::string Coeff::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string s;
  if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
  return s + b_.get_str() + "*v";
}

}  // namespace hallq
