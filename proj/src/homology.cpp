#include "hallq/homology.hpp"

#include <random>

#include "hallq/errors.hpp"
#include "hallq/kernels.hpp"

namespace hallq {

std::vector<Matrix> HomSpace::blocks(const std::vector<Elem>& v) const {
  std::vector<Matrix> out;
  for (size_t i = 0; i < rows.size(); ++i) {
    Matrix m(rows[i], cols[i]);
    std::copy(v.begin() + offset[i], v.begin() + offset[i] + rows[i] * cols[i], m.a.begin());
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Elem> HomSpace::combine(const Field& F, const std::vector<Elem>& c) const {
  std::vector<Elem> v(length, 0);
  for (size_t k = 0; k < c.size(); ++k) {
    if (!c[k]) continue;
    for (int j = 0; j < length; ++j)
      if (basis[k][j]) v[j] = F.add(v[j], F.mul(c[k], basis[k][j]));
  }
  return v;
}

namespace {

void check_pair(const Representation& M, const Representation& N) {
  if (!M.compatible(N)) throw InputError("representations live over different quivers or fields");
}

struct Layout {
  std::vector<int> off0, off1;
  int c0 = 0, c1 = 0;
};

Layout layout(const Representation& M, const Representation& N) {
  const Quiver& Q = M.quiver();
  Layout L;
  for (int i = 0; i < Q.num_vertices(); ++i) {
    L.off0.push_back(L.c0);
    L.c0 += N.dim()[i] * M.dim()[i];
  }
  for (const auto& a : Q.arrows()) {
    L.off1.push_back(L.c1);
    L.c1 += N.dim()[a.tgt] * M.dim()[a.src];
  }
  return L;
}

}  // namespace

Matrix coboundary(const Representation& M, const Representation& N) {
  check_pair(M, N);
  const Quiver& Q = M.quiver();
  const Field& F = M.field();
  Layout L = layout(M, N);
  Matrix D(L.c1, L.c0);
  const auto& dM = M.dim();
  const auto& dN = N.dim();
  for (int r = 0; r < Q.num_arrows(); ++r) {
    int s = Q.arrows()[r].src, t = Q.arrows()[r].tgt;
    const Matrix& xM = M.mat(r);
    const Matrix& xN = N.mat(r);
    for (int a = 0; a < dN[t]; ++a)
      for (int b = 0; b < dM[s]; ++b) {
        int row = L.off1[r] + a * dM[s] + b;
        // f_t x^M: variable f_t[a][c] with coefficient x^M[c][b].
        for (int c = 0; c < dM[t]; ++c) {
          Elem x = xM(c, b);
          if (!x) continue;
          int col = L.off0[t] + a * dM[t] + c;
          D(row, col) = F.add(D(row, col), x);
        }
        // -x^N f_s: variable f_s[c][b] with coefficient -x^N[a][c].
        for (int c = 0; c < dN[s]; ++c) {
          Elem x = xN(a, c);
          if (!x) continue;
          int col = L.off0[s] + c * dM[s] + b;
          D(row, col) = F.sub(D(row, col), x);
        }
      }
  }
  return D;
}

HomSpace hom_space(const Representation& M, const Representation& N) {
  check_pair(M, N);
  HomSpace S;
  Layout L = layout(M, N);
  for (int i = 0; i < M.quiver().num_vertices(); ++i) {
    S.rows.push_back(N.dim()[i]);
    S.cols.push_back(M.dim()[i]);
  }
  S.offset = L.off0;
  S.length = L.c0;
  Matrix D = coboundary(M, N);
  Matrix K = D.rows ? nullspace(M.field(), D) : Matrix::identity(L.c0);
  for (int k = 0; k < K.rows; ++k) S.basis.emplace_back(K.a.begin() + k * K.cols, K.a.begin() + (k + 1) * K.cols);
  return S;
}

int hom_dim(const Representation& M, const Representation& N) {
  Matrix D = coboundary(M, N);
  return D.cols - rank(M.field(), D);
}

HomExt hom_ext_dims(const Representation& M, const Representation& N) {
  HomExt r;
  r.hom = hom_dim(M, N);
  r.ext = r.hom - M.quiver().euler_form(M.dim(), N.dim());
  if (r.ext < 0) throw TheoryViolation("negative Ext dimension");
  return r;
}

int end_dim(const Representation& M) { return hom_dim(M, M); }

Representation extension(const Representation& M, const Representation& N, const std::vector<Elem>& xi) {
  check_pair(M, N);
  const Quiver& Q = M.quiver();
  Layout L = layout(M, N);
  if (static_cast<int>(xi.size()) != L.c1) throw InputError("cocycle has the wrong length");
  std::vector<Matrix> mats;
  for (int r = 0; r < Q.num_arrows(); ++r) {
    int s = Q.arrows()[r].src, t = Q.arrows()[r].tgt;
    Matrix X(N.dim()[t], M.dim()[s]);
    std::copy(xi.begin() + L.off1[r], xi.begin() + L.off1[r] + X.rows * X.cols, X.a.begin());
    mats.push_back(upper_block(N.mat(r), X, M.mat(r)));
  }
  return Representation(M.quiver_ptr(), M.field_ptr(), N.dim() + M.dim(), std::move(mats));
}

ExtData ext_data(const Representation& M, const Representation& N) {
  Matrix D = coboundary(M, N);
  ExtData E;
  E.c1_dim = D.rows;
  Matrix T = transpose(D);
  auto piv = T.rows ? rref(M.field(), T) : std::vector<int>{};
  E.coboundary_rank = static_cast<int>(piv.size());
  std::vector<char> is_piv(D.rows, 0);
  for (int p : piv) is_piv[p] = 1;
  for (int j = 0; j < D.rows; ++j) {
    if (is_piv[j]) continue;
    std::vector<Elem> v(D.rows, 0);
    v[j] = 1;
    E.complement.push_back(std::move(v));
  }
  return E;
}

std::optional<std::vector<Matrix>> find_isomorphism(const Representation& M, const Representation& N,
                                                    const Guards& g) {
  check_pair(M, N);
  if (M.dim() != N.dim()) return std::nullopt;
  if (M == N) {
    std::vector<Matrix> id;
    for (int x : M.dim().v) id.push_back(Matrix::identity(x));
    return id;
  }
  int e = end_dim(M);
  if (end_dim(N) != e || hom_dim(M, N) != e || hom_dim(N, M) != e) return std::nullopt;
  HomSpace S = hom_space(M, N);
  const Field& F = M.field();
  std::vector<Elem> scratch;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<Elem> c(S.dim());
  for (int t = 0; t < 64; ++t) {
    for (auto& x : c) x = static_cast<Elem>(rng() % F.q());
    auto v = S.combine(F, c);
    if (kernels::blocks_invertible(F, S, v, scratch)) return S.blocks(v);
  }
  if (!within(F.q(), S.dim(), g.hom_log2))
    throw GuardExceeded("isomorphism search needs q^" + std::to_string(S.dim()) + " Hom elements");
  std::int64_t idx = kernels::first_invertible(F, S);
  if (idx < 0) return std::nullopt;
  kernels::decode_index(static_cast<std::uint64_t>(idx), F.q(), c);
  return S.blocks(S.combine(F, c));
}

bool is_isomorphic(const Representation& M, const Representation& N, const Guards& g) {
  return find_isomorphism(M, N, g).has_value();
}

Representation subrepresentation(const Representation& L, const std::vector<Matrix>& bases) {
  const Quiver& Q = L.quiver();
  const Field& F = L.field();
  int n = Q.num_vertices();
  std::vector<Matrix> B(bases);
  std::vector<std::vector<int>> piv(n);
  DimVector d = DimVector::zero(n);
  for (int i = 0; i < n; ++i) {
    piv[i] = rref(F, B[i]);
    d[i] = static_cast<int>(piv[i].size());
    B[i].rows = d[i];
    B[i].a.resize(static_cast<size_t>(d[i]) * B[i].cols);
  }
  std::vector<Matrix> mats;
  for (int r = 0; r < Q.num_arrows(); ++r) {
    int s = Q.arrows()[r].src, t = Q.arrows()[r].tgt;
    const Matrix& X = L.mat(r);
    Matrix M(d[t], d[s]);
    for (int j = 0; j < d[s]; ++j) {
      std::vector<Elem> y(X.rows, 0);
      for (int a = 0; a < X.rows; ++a)
        for (int b = 0; b < X.cols; ++b) y[a] = F.add(y[a], F.mul(X(a, b), B[s](j, b)));
      // Echelon rows: the coordinates of y are its entries at the pivot columns.
      std::vector<Elem> rem = y;
      for (int k = 0; k < d[t]; ++k) {
        Elem c = y[piv[t][k]];
        M(k, j) = c;
        if (!c) continue;
        for (int a = 0; a < X.rows; ++a) rem[a] = F.sub(rem[a], F.mul(c, B[t](k, a)));
      }
      for (Elem e : rem)
        if (e) throw InputError("subspace is not stable under the arrows");
    }
    mats.push_back(std::move(M));
  }
  return Representation(L.quiver_ptr(), L.field_ptr(), d, std::move(mats));
}

std::optional<Representation> split_summand(const Representation& L, const Representation& Z) {
  check_pair(L, Z);
  if (!Z.dim().leq(L.dim()) || Z.total_dim() == 0) return std::nullopt;
  HomSpace in = hom_space(Z, L), out = hom_space(L, Z);
  if (in.dim() == 0 || out.dim() == 0) return std::nullopt;
  const Field& F = L.field();
  int n = L.quiver().num_vertices();
  std::vector<Elem> scratch;
  HomSpace endZ;
  endZ.rows = Z.dim().v;
  endZ.cols = Z.dim().v;
  for (int i = 0, o = 0; i < n; ++i) {
    endZ.offset.push_back(o);
    o += Z.dim()[i] * Z.dim()[i];
    endZ.length = o;
  }
  for (const auto& gv : out.basis) {
    auto g = out.blocks(gv);
    for (const auto& fv : in.basis) {
      auto f = in.blocks(fv);
      std::vector<Elem> u;
      for (int i = 0; i < n; ++i) {
        Matrix c = mul(F, g[i], f[i]);
        u.insert(u.end(), c.a.begin(), c.a.end());
      }
      if (!kernels::blocks_invertible(F, endZ, u, scratch)) continue;
      std::vector<Matrix> ker;
      for (int i = 0; i < n; ++i) {
        if (g[i].rows == 0) {
          ker.push_back(Matrix::identity(L.dim()[i]));
        } else {
          ker.push_back(nullspace(F, g[i]));
        }
      }
      return subrepresentation(L, ker);
    }
  }
  return std::nullopt;
}

mpz_class aut_order(const Representation& M, const Guards& g) {
  HomSpace S = hom_space(M, M);
  if (!within(M.field().q(), S.dim(), g.hom_log2))
    throw GuardExceeded("unit count needs q^" + std::to_string(S.dim()) + " endomorphisms");
  return mpz_class(std::to_string(kernels::count_units(M.field(), S)));
}

bool is_indecomposable(const Representation& M, const Guards& g) {
  if (M.total_dim() == 0) return false;
  HomSpace S = hom_space(M, M);
  if (S.dim() == 1) return true;
  if (!within(M.field().q(), S.dim(), g.hom_log2))
    throw GuardExceeded("idempotent search needs q^" + std::to_string(S.dim()) + " endomorphisms");
  return !kernels::has_nontrivial_idempotent(M.field(), S);
}

std::optional<Representation> find_brick(QuiverPtr Q, FieldPtr F, const DimVector& d, long long max_tries) {
  int n = Q->rep_space_dim(d);
  int tot = d.total();
  if (tot == 0) return std::nullopt;
  Representation Z = Representation::zero(Q, F, d);
  if (tot == 1) return Z;
  // Flattened positions (arrow, entry).
  std::vector<std::pair<int, int>> pos;
  for (int r = 0; r < Q->num_arrows(); ++r)
    for (int k = 0; k < d[Q->arrows()[r].tgt] * d[Q->arrows()[r].src]; ++k) pos.push_back({r, k});
  long long tries = 0;
  // A brick is indecomposable, so its coefficient graph is connected: at least tot-1 ones.
  for (int k = tot - 1; k <= n; ++k) {
    std::vector<int> sel(k);
    for (int i = 0; i < k; ++i) sel[i] = i;
    while (true) {
      if (++tries > max_tries) return std::nullopt;
      std::vector<Matrix> mats = Z.mats();
      for (int i : sel) mats[pos[i].first].a[pos[i].second] = 1;
      Representation R(Q, F, d, std::move(mats));
      if (end_dim(R) == 1) return R;
      int i = k - 1;
      while (i >= 0 && sel[i] == n - k + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
  }
  return std::nullopt;
}

mpz_class qpow(int q, long long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  return r;
}

mpz_class gl_order(int q, int n) {
  mpz_class r = 1, qn = qpow(q, n);
  for (int i = 0; i < n; ++i) r *= qn - qpow(q, i);
  return r;
}

mpz_class group_order(int q, const DimVector& d) {
  mpz_class r = 1;
  for (int x : d.v) r *= gl_order(q, x);
  return r;
}

}  // namespace hallq
