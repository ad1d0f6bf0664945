#pragma once

#include <gmpxx.h>

#include <string>

namespace hallq {

// Exact element a + b*sqrt(q) of Q(sqrt q). When q is a perfect square the
// b part stays zero and sqrt q folds into a.
class Coeff {
 public:
  Coeff() = default;
  Coeff(int q, mpq_class a, mpq_class b = 0);
  static Coeff zero(int q) { return Coeff(q, 0); }
  static Coeff one(int q) { return Coeff(q, 1); }
  // v^k with v = sqrt q, any integer k.
  static Coeff vpow(int q, long long k);

  int q() const { return q_; }
  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator-() const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff inverse() const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  bool operator==(const Coeff& o) const { return q_ == o.q_ && a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check(const Coeff& o) const;
  int q_ = 0;
  int root_ = 0;  // integer square root of q when q is a square, else 0
  mpq_class a_, b_;
};

}  // namespace hallq
