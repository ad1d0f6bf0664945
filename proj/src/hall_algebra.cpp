#include "hallq/hall_algebra.hpp"

#include <algorithm>

#include "hallq/errors.hpp"

namespace hallq {

void HallElement::add(const IsoClass& c, const Coeff& x) {
  if (x.is_zero()) return;
  auto it = terms_.find(c);
  if (it == terms_.end()) {
    terms_.emplace(c, x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) terms_.erase(it);
}

Coeff HallElement::coeff(const IsoClass& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Coeff::zero(q_) : it->second;
}

std::vector<DimVector> HallElement::degrees() const {
  std::vector<DimVector> d;
  for (const auto& [c, x] : terms_) d.push_back(c.dim());
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

std::vector<std::pair<IsoClass, Coeff>> HallElement::sorted() const {
  std::vector<std::pair<IsoClass, Coeff>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

HallElement HallElement::operator+(const HallElement& o) const {
  HallElement r = *this;
  for (const auto& [c, x] : o.terms_) r.add(c, x);
  return r;
}

HallElement HallElement::operator-(const HallElement& o) const {
  HallElement r = *this;
  for (const auto& [c, x] : o.terms_) r.add(c, -x);
  return r;
}

HallElement HallElement::operator*(const Coeff& s) const {
  HallElement r(q_);
  if (s.is_zero()) return r;
  for (const auto& [c, x] : terms_) r.terms_.emplace(c, x * s);
  return r;
}

HallElement HallAlgebra::one() { return u(context().zero_class()); }

HallElement HallAlgebra::u(const IsoClass& M) {
  HallElement e(q());
  e.add(M, Coeff::one(q()));
  return e;
}

HallElement HallAlgebra::rescaled(const IsoClass& M) {
  HallElement e(q());
  e.add(M, v(-M.rep().total_dim() + M.end_dim()));
  return e;
}

HallElement HallAlgebra::basis_product(const IsoClass& M, const IsoClass& N) {
  auto key = std::make_pair(M.uid(), N.uid());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  HallElement r(q());
  if (M.is_zero()) {
    r.add(N, Coeff::one(q()));
  } else if (N.is_zero()) {
    r.add(M, Coeff::one(q()));
  } else {
    Coeff tw = twisted_ ? v(context().quiver().euler_form(M.dim(), N.dim())) : Coeff::one(q());
    for (const auto& t : H_.extension_targets(M, N))
      r.add(t.L, tw * Coeff(q(), mpz_class(static_cast<unsigned long>(t.g))));
  }
  return memo_.emplace(key, r).first->second;
}

HallElement HallAlgebra::product(const HallElement& x, const HallElement& y) {
  HallElement r(q());
  for (const auto& [M, a] : x.terms())
    for (const auto& [N, b] : y.terms()) {
      Coeff ab = a * b;
      HallElement mn = basis_product(M, N);
      for (const auto& [L, c] : mn.terms()) r.add(L, ab * c);
    }
  return r;
}

HallElement HallAlgebra::product(const std::vector<HallElement>& fs) {
  HallElement r = one();
  for (const auto& f : fs) r = product(r, f);
  return r;
}

Coeff quantum_int(int q, int n) {
  // (v^n - v^-n)/(v - v^-1) = sum_{k=0}^{n-1} v^{n-1-2k}
  Coeff s = Coeff::zero(q);
  for (int k = 0; k < n; ++k) s += Coeff::vpow(q, n - 1 - 2 * k);
  return s;
}

Coeff quantum_factorial(int q, int n) {
  Coeff f = Coeff::one(q);
  for (int k = 2; k <= n; ++k) f *= quantum_int(q, k);
  return f;
}

HallElement HallAlgebra::divided_power(const HallElement& x, int p) {
  HallElement r = one();
  for (int k = 0; k < p; ++k) r = product(r, x);
  return r * quantum_factorial(q(), p).inverse();
}

HallElement serre_lhs(HallAlgebra& A, int i, int j) {
  HallContext& ctx = A.context();
  auto C = ctx.quiver().cartan_matrix();
  int n = 1 - C[i][j];
  HallElement xi = A.u(ctx.simple(i)), xj = A.u(ctx.simple(j));
  HallElement s(A.q());
  for (int p = 0; p <= n; ++p) {
    HallElement t = A.product({A.divided_power(xi, p), xj, A.divided_power(xi, n - p)});
    s = p % 2 ? s - t : s + t;
  }
  return s;
}

bool serre_check(HallAlgebra& A, int i, int j) { return serre_lhs(A, i, j).is_zero(); }

std::vector<std::vector<Coeff>> coefficient_matrix(HallContext& ctx, const std::vector<HallElement>& xs,
                                                   const DimVector& degree) {
  const auto& cls = ctx.classes(degree);
  int q = ctx.q();
  std::vector<std::vector<Coeff>> rows;
  for (const auto& x : xs) {
    std::vector<Coeff> r(cls.size(), Coeff::zero(q));
    for (size_t k = 0; k < cls.size(); ++k) r[k] = x.coeff(cls[k]);
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {
// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Coeff>>& m, int ncols) {
  std::vector<int> piv;
  size_t r = 0;
  for (int c = 0; c < ncols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Coeff inv = m[r][c].inverse();
    for (int k = c; k < ncols; ++k) m[r][k] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Coeff f = m[i][c];
      for (int k = c; k < ncols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
    }
    piv.push_back(c);
    ++r;
  }
  m.resize(r);
  return piv;
}
}  // namespace

int rank(std::vector<std::vector<Coeff>> rows, int) {
  if (rows.empty()) return 0;
  int nc = static_cast<int>(rows[0].size());
  return static_cast<int>(rref(rows, nc).size());
}

int graded_rank(HallContext& ctx, const std::vector<HallElement>& xs, const DimVector& degree) {
  return rank(coefficient_matrix(ctx, xs, degree), ctx.q());
}

std::vector<HallElement> span_basis(HallContext& ctx, const std::vector<HallElement>& xs, const DimVector& degree) {
  auto m = coefficient_matrix(ctx, xs, degree);
  const auto& cls = ctx.classes(degree);
  rref(m, static_cast<int>(cls.size()));
  std::vector<HallElement> out;
  for (const auto& row : m) {
    HallElement e(ctx.q());
    for (size_t k = 0; k < cls.size(); ++k) e.add(cls[k], row[k]);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::vector<Coeff>> nullspace(std::vector<std::vector<Coeff>> rows, int ncols, int q) {
  auto piv = rref(rows, ncols);
  std::vector<char> is_piv(ncols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<std::vector<Coeff>> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Coeff> x(ncols, Coeff::zero(q));
    x[f] = Coeff::one(q);
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -rows[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

GeneratedSubalgebra::GeneratedSubalgebra(HallAlgebra& A, std::vector<HallElement> generators) : A_(A) {
  for (auto& g : generators) {
    auto d = g.degrees();
    if (d.size() != 1) throw InputError("generators must be nonzero and homogeneous");
    if (d[0].is_zero()) throw InputError("generators must have positive degree");
    gens_.emplace_back(d[0], std::move(g));
  }
}

const std::vector<HallElement>& GeneratedSubalgebra::basis(const DimVector& d) {
  if (auto it = memo_.find(d); it != memo_.end()) return it->second;
  std::vector<HallElement> out;
  if (d.is_zero()) {
    out.push_back(A_.one());
  } else {
    std::vector<HallElement> words;
    for (const auto& [e, g] : gens_) {
      if (!e.leq(d)) continue;
      for (const auto& b : basis(d - e)) words.push_back(A_.product(g, b));
    }
    out = span_basis(A_.context(), words, d);
  }
  return memo_.emplace(d, std::move(out)).first->second;
}

int subalgebra_graded_dim(HallAlgebra& A, const std::vector<HallElement>& generators, const DimVector& degree) {
  GeneratedSubalgebra S(A, generators);
  return S.graded_dim(degree);
}

}  // namespace hallq
