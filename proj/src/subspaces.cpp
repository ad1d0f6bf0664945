#include "hallq/subspaces.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "hallq/config.hpp"
#include "hallq/errors.hpp"

namespace hallq {

std::uint64_t gaussian_binomial(int q, int n, int k) {
  if (k < 0 || k > n) return 0;
  // Pascal-type recursion [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int m = 0; m <= n; ++m) {
    t[m][0] = 1;
    std::uint64_t qk = 1;
    for (int j = 1; j <= m; ++j) {
      qk *= static_cast<std::uint64_t>(q);
      t[m][j] = t[m - 1][j - 1] + qk * t[m - 1][j];
    }
  }
  return t[n][k];
}

namespace {

SubspaceList build(const Field& F, int n, int k) {
  SubspaceList L;
  L.n = n;
  L.k = k;
  int q = F.q();
  std::vector<int> P(k);
  for (int i = 0; i < k; ++i) P[i] = i;
  while (true) {
    std::vector<char> is_piv(n, 0);
    for (int p : P) is_piv[p] = 1;
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < k; ++r)
      for (int c = P[r] + 1; c < n; ++c)
        if (!is_piv[c]) free_pos.push_back({r, c});
    std::vector<int> np;
    for (int c = 0; c < n; ++c)
      if (!is_piv[c]) np.push_back(c);
    std::uint64_t cnt = 1;
    for (size_t i = 0; i < free_pos.size(); ++i) cnt *= q;
    for (std::uint64_t idx = 0; idx < cnt; ++idx) {
      Matrix B(k, n);
      for (int r = 0; r < k; ++r) B(r, P[r]) = 1;
      std::uint64_t x = idx;
      for (int f = static_cast<int>(free_pos.size()) - 1; f >= 0; --f) {
        B(free_pos[f].first, free_pos[f].second) = static_cast<Elem>(x % q);
        x /= q;
      }
      L.bases.push_back(std::move(B));
      L.pivots.push_back(P);
      L.nonpivots.push_back(np);
    }
    int i = k - 1;
    while (i >= 0 && P[i] == n - k + i) --i;
    if (i < 0) break;
    ++P[i];
    for (int j = i + 1; j < k; ++j) P[j] = P[j - 1] + 1;
  }
  return L;
}

}  // namespace

const SubspaceList& subspaces(const Field& F, int n, int k) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<SubspaceList>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(F.q(), n, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<SubspaceList>(build(F, n, k))).first;
  return *it->second;
}

GradedSubspaces::GradedSubspaces(const Representation& L, const DimVector& sub_dim) : L_(L), sub_(sub_dim) {
  for (int i = 0; i < L.quiver().num_vertices(); ++i) {
    if (sub_dim[i] < 0 || sub_dim[i] > L.dim()[i]) throw InputError("sub dimension exceeds module dimension");
    lists_.push_back(&subspaces(L.field(), L.dim()[i], sub_dim[i]));
    total_ *= lists_.back()->size();
  }
}

void GradedSubspaces::choice(std::uint64_t index, std::vector<int>& out) const {
  out.resize(lists_.size());
  for (int i = static_cast<int>(lists_.size()) - 1; i >= 0; --i) {
    std::uint64_t s = lists_[i]->size();
    out[i] = static_cast<int>(index % s);
    index /= s;
  }
}

bool GradedSubspaces::stable(const std::vector<int>& ch, std::vector<Elem>& y) const {
  const Quiver& Q = L_.quiver();
  const Field& F = L_.field();
  for (int r = 0; r < Q.num_arrows(); ++r) {
    int s = Q.arrows()[r].src, t = Q.arrows()[r].tgt;
    const Matrix& X = L_.mat(r);
    const Matrix& Bs = lists_[s]->bases[ch[s]];
    const Matrix& Bt = lists_[t]->bases[ch[t]];
    const auto& Pt = lists_[t]->pivots[ch[t]];
    for (int j = 0; j < Bs.rows; ++j) {
      y.assign(X.rows, 0);
      for (int a = 0; a < X.rows; ++a) {
        Elem acc = 0;
        for (int b = 0; b < X.cols; ++b)
          if (Bs(j, b) && X(a, b)) acc = F.add(acc, F.mul(X(a, b), Bs(j, b)));
        y[a] = acc;
      }
      for (int kk = 0; kk < Bt.rows; ++kk) {
        Elem c = y[Pt[kk]];
        if (!c) continue;
        Elem nc = F.neg(c);
        for (int a = 0; a < X.rows; ++a)
          if (Bt(kk, a)) y[a] = F.add(y[a], F.mul(nc, Bt(kk, a)));
      }
      for (Elem e : y)
        if (e) return false;
    }
  }
  return true;
}

std::pair<Representation, Representation> GradedSubspaces::sub_and_quotient(const std::vector<int>& ch) const {
  const Quiver& Q = L_.quiver();
  const Field& F = L_.field();
  int nv = Q.num_vertices();
  DimVector ds = DimVector::zero(nv), dq = DimVector::zero(nv);
  for (int i = 0; i < nv; ++i) {
    ds[i] = lists_[i]->k;
    dq[i] = lists_[i]->n - lists_[i]->k;
  }
  std::vector<Matrix> ms, mq;
  for (int r = 0; r < Q.num_arrows(); ++r) {
    int s = Q.arrows()[r].src, t = Q.arrows()[r].tgt;
    const Matrix& X = L_.mat(r);
    const Matrix& Bs = lists_[s]->bases[ch[s]];
    const Matrix& Bt = lists_[t]->bases[ch[t]];
    const auto& Pt = lists_[t]->pivots[ch[t]];
    const auto& Ns = lists_[s]->nonpivots[ch[s]];
    const auto& Nt = lists_[t]->nonpivots[ch[t]];
    // Sub: coordinates of x w in the echelon basis are its pivot entries.
    Matrix S(ds[t], ds[s]);
    for (int j = 0; j < Bs.rows; ++j) {
      std::vector<Elem> y(X.rows, 0);
      for (int a = 0; a < X.rows; ++a)
        for (int b = 0; b < X.cols; ++b) y[a] = F.add(y[a], F.mul(X(a, b), Bs(j, b)));
      for (int kk = 0; kk < Bt.rows; ++kk) S(kk, j) = y[Pt[kk]];
    }
    // Quotient: image of the unit vector e_c (c non-pivot) reduced mod W_t.
    Matrix R(dq[t], dq[s]);
    for (size_t j = 0; j < Ns.size(); ++j) {
      std::vector<Elem> y(X.rows);
      for (int a = 0; a < X.rows; ++a) y[a] = X(a, Ns[j]);
      for (int kk = 0; kk < Bt.rows; ++kk) {
        Elem c = y[Pt[kk]];
        if (!c) continue;
        Elem nc = F.neg(c);
        for (int a = 0; a < X.rows; ++a) y[a] = F.add(y[a], F.mul(nc, Bt(kk, a)));
      }
      for (size_t i = 0; i < Nt.size(); ++i) R(static_cast<int>(i), static_cast<int>(j)) = y[Nt[i]];
    }
    ms.push_back(std::move(S));
    mq.push_back(std::move(R));
  }
  return {Representation(L_.quiver_ptr(), L_.field_ptr(), ds, std::move(ms)),
          Representation(L_.quiver_ptr(), L_.field_ptr(), dq, std::move(mq))};
}

namespace kernels {

std::vector<std::uint64_t> stable_subspaces_serial(const GradedSubspaces& G) {
  std::vector<std::uint64_t> out;
  std::vector<int> ch;
  std::vector<Elem> scratch;
  for (std::uint64_t i = 0; i < G.count(); ++i) {
    G.choice(i, ch);
    if (G.stable(ch, scratch)) out.push_back(i);
  }
  return out;
}

std::vector<std::uint64_t> stable_subspaces_omp(const GradedSubspaces& G) {
  const std::int64_t total = static_cast<std::int64_t>(G.count());
  std::vector<char> flag(static_cast<size_t>(total), 0);
#pragma omp parallel
  {
    std::vector<int> ch;
    std::vector<Elem> scratch;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < total; ++i) {
      G.choice(static_cast<std::uint64_t>(i), ch);
      flag[i] = G.stable(ch, scratch) ? 1 : 0;
    }
  }
  std::vector<std::uint64_t> out;
  for (std::int64_t i = 0; i < total; ++i)
    if (flag[i]) out.push_back(static_cast<std::uint64_t>(i));
  return out;
}

std::vector<std::uint64_t> stable_subspaces(const GradedSubspaces& G) {
  return parallel_enabled() ? stable_subspaces_omp(G) : stable_subspaces_serial(G);
}

}  // namespace kernels
}  // namespace hallq
