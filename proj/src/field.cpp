#include "hallq/field.hpp"

#include <map>
#include <mutex>

#include "hallq/errors.hpp"

namespace hallq {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Conway polynomials for the small extension fields, coefficients low to high.
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> t = {
      {{2, 2}, {1, 1, 1}},          {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},    {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}}, {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},          {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},    {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},       {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},         {{13, 2}, {2, 12, 1}},
  };
  return t;
}

using Poly = std::vector<int>;

// Multiply two residues modulo the monic modulus f over F_p.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  std::vector<int> r(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * k - 1; d >= k; --d) {
    int c = r[d];
    if (!c) continue;
    for (int i = 0; i <= k; ++i) r[d - k + i] = ((r[d - k + i] - c * f[i]) % p + p) % p;
  }
  r.resize(k);
  return r;
}

int encode(const Poly& a, int p) {
  int v = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) v = v * p + a[i];
  return v;
}

Poly decode(int v, int p, int k) {
  Poly a(k);
  for (int i = 0; i < k; ++i) {
    a[i] = v % p;
    v /= p;
  }
  return a;
}

// Order of x in the multiplicative group, given a multiplication table.
int mult_order(int x, int q, const std::vector<Elem>& mul) {
  int y = x, n = 1;
  while (y != 1) {
    y = mul[y * q + x];
    ++n;
    if (n > q) return 0;
  }
  return n;
}

}  // namespace

std::pair<int, int> prime_power(int q) {
  if (q < 2) return {0, 0};
  for (int p = 2; p <= q; ++p) {
    if (q % p) continue;
    if (!is_prime(p)) return {0, 0};
    int k = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    return r == 1 ? std::pair<int, int>{p, k} : std::pair<int, int>{0, 0};
  }
  return {0, 0};
}

std::vector<int> Field::coords(Elem a) const { return decode(a, p_, k_); }

std::shared_ptr<const Field> Field::make(int q) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(q); it != cache.end()) return it->second;

  auto [p, k] = prime_power(q);
  if (p == 0) throw InputError("q = " + std::to_string(q) + " is not a prime power");
  if (q > 256) throw InputError("q = " + std::to_string(q) + " exceeds the supported maximum 256");

  std::shared_ptr<Field> F(new Field());
  F->q_ = q;
  F->p_ = p;
  F->k_ = k;
  F->add_.assign(q * q, 0);
  F->mul_.assign(q * q, 0);
  F->neg_.assign(q, 0);
  F->inv_.assign(q, 0);

  auto build_mul = [&](const Poly& f) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        F->mul_[a * q + b] = static_cast<Elem>(encode(mulmod(decode(a, p, k), decode(b, p, k), f, p), p));
  };

  Poly f;
  if (k == 1) {
    f = {0, 1};
  } else if (auto it = conway_table().find({p, k}); it != conway_table().end()) {
    f = it->second;
  }
  if (!f.empty()) {
    build_mul(f);
  } else {
    // First monic polynomial (in encoding order) for which x generates the
    // multiplicative group; such a polynomial is irreducible and primitive.
    for (int tail = 0; tail < q; ++tail) {
      f = decode(tail, p, k);
      f.push_back(1);
      if (f[0] == 0) continue;
      build_mul(f);
      if (mult_order(p, q, F->mul_) == q - 1) break;
      f.clear();
    }
    if (f.empty()) throw TheoryViolation("no primitive polynomial found");
  }
  F->modulus_ = f;

  for (int a = 0; a < q; ++a) {
    Poly pa = decode(a, p, k);
    for (int b = 0; b < q; ++b) {
      Poly pb = decode(b, p, k), s(k);
      for (int i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
      F->add_[a * q + b] = static_cast<Elem>(encode(s, p));
    }
    Poly n(k);
    for (int i = 0; i < k; ++i) n[i] = (p - pa[i]) % p;
    F->neg_[a] = static_cast<Elem>(encode(n, p));
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (F->mul_[a * q + b] == 1) F->inv_[a] = static_cast<Elem>(b);

  for (int g = 1; g < q; ++g) {
    if (mult_order(g, q, F->mul_) == q - 1) {
      F->primitive_ = static_cast<Elem>(g);
      break;
    }
  }
  cache[q] = F;
  return F;
}

}  // namespace hallq
