#pragma once

// Independent brute-force oracles used only by tests.

#include <algorithm>
#include <functional>
#include <set>

#include "hallq/homology.hpp"

#include "fixtures.hpp"

namespace oracle {

using namespace hallq;

inline std::vector<Matrix> all_matrices(const Field& F, int r, int c) {
  std::vector<Matrix> out;
  long long n = 1;
  for (int i = 0; i < r * c; ++i) n *= F.q();
  for (long long idx = 0; idx < n; ++idx) {
    Matrix M(r, c);
    long long x = idx;
    for (int i = r * c - 1; i >= 0; --i) {
      M.a[i] = static_cast<Elem>(x % F.q());
      x /= F.q();
    }
    out.push_back(M);
  }
  return out;
}

inline std::vector<Matrix> all_invertible(const Field& F, int n) {
  std::vector<Matrix> out;
  for (auto& M : all_matrices(F, n, n))
    if (invertible(F, M)) out.push_back(M);
  return out;
}

// Every element of G_d = prod GL_{d_i}.
inline void for_each_group_element(const Field& F, const DimVector& d,
                                   const std::function<void(const std::vector<Matrix>&)>& f) {
  std::vector<std::vector<Matrix>> gl;
  for (int x : d.v) gl.push_back(all_invertible(F, x));
  std::vector<Matrix> g(d.size());
  std::function<void(int)> rec = [&](int i) {
    if (i == d.size()) {
      f(g);
      return;
    }
    for (auto& M : gl[i]) {
      g[i] = M;
      rec(i + 1);
    }
  };
  rec(0);
}

// |Aut M| as the stabilizer of M under base change.
inline long long stabilizer_order(const Representation& M) {
  long long n = 0;
  for_each_group_element(M.field(), M.dim(), [&](const std::vector<Matrix>& g) {
    if (M.transform(g) == M) ++n;
  });
  return n;
}

// Number of orbits on E_d by Burnside's lemma.
inline long long burnside_orbits(QuiverPtr Q, FieldPtr F, const DimVector& d) {
  long long npts = 1;
  for (int i = 0; i < Q->rep_space_dim(d); ++i) npts *= F->q();
  std::vector<Representation> pts;
  for (long long p = 0; p < npts; ++p) pts.push_back(Representation::from_point(Q, F, d, p));
  long long fixed = 0, order = 0;
  for_each_group_element(*F, d, [&](const std::vector<Matrix>& g) {
    ++order;
    for (auto& x : pts)
      if (x.transform(g) == x) ++fixed;
  });
  return fixed / order;
}

// dim Hom by enumerating all tuples of linear maps (tiny cases).
inline int brute_hom_dim(const Representation& M, const Representation& N) {
  const Field& F = M.field();
  const Quiver& Q = M.quiver();
  std::vector<std::vector<Matrix>> choices;
  for (int i = 0; i < Q.num_vertices(); ++i) choices.push_back(all_matrices(F, N.dim()[i], M.dim()[i]));
  long long count = 0;
  std::vector<Matrix> f(Q.num_vertices());
  std::function<void(int)> rec = [&](int i) {
    if (i == Q.num_vertices()) {
      for (int r = 0; r < Q.num_arrows(); ++r) {
        int s = Q.arrows()[r].src, t = Q.arrows()[r].tgt;
        if (!(mul(F, f[t], M.mat(r)) == mul(F, N.mat(r), f[s]))) return;
      }
      ++count;
      return;
    }
    for (auto& X : choices[i]) {
      f[i] = X;
      rec(i + 1);
    }
  };
  rec(0);
  int h = 0;
  while (count > 1) {
    count /= F.q();
    ++h;
  }
  return h;
}

// Every k-dim subspace of F_q^n, found from all n x k generating matrices.
inline std::vector<Matrix> all_subspaces(const Field& F, int n, int k) {
  std::set<std::vector<Elem>> seen;
  std::vector<Matrix> out;
  for (auto& B : all_matrices(F, k, n)) {
    Matrix R = B;
    if (static_cast<int>(hallq::rref(F, R).size()) != k) continue;
    if (seen.insert(R.a).second) out.push_back(R);
  }
  return out;
}

// g^L_{MN} by scanning subspaces independently and testing isomorphism directly.
inline long long brute_hall(const Representation& L, const Representation& M, const Representation& N) {
  if (L.dim() != M.dim() + N.dim()) return 0;
  const Field& F = L.field();
  int n = L.quiver().num_vertices();
  std::vector<std::vector<Matrix>> subs;
  for (int i = 0; i < n; ++i) subs.push_back(all_subspaces(F, L.dim()[i], N.dim()[i]));
  long long count = 0;
  std::vector<Matrix> pick(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      Representation W;
      try {
        W = subrepresentation(L, pick);
      } catch (const InputError&) {
        return;
      }
      if (!is_isomorphic(W, N)) return;
      // Quotient: build a complement basis and map through it.
      std::vector<Matrix> comp;
      for (int v = 0; v < n; ++v) {
        Matrix B = pick[v];
        auto piv = hallq::rref(F, B);
        std::vector<int> np;
        for (int c = 0; c < L.dim()[v]; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) np.push_back(c);
        Matrix C(static_cast<int>(np.size()), L.dim()[v]);
        for (size_t r = 0; r < np.size(); ++r) C(static_cast<int>(r), np[r]) = 1;
        comp.push_back(C);
      }
      std::vector<Matrix> qm;
      for (int r = 0; r < L.quiver().num_arrows(); ++r) {
        int s = L.quiver().arrows()[r].src, t = L.quiver().arrows()[r].tgt;
        // Image of complement vector c under x, reduced modulo W_t, read on nonpivots.
        Matrix B = pick[t];
        auto piv = hallq::rref(F, B);
        Matrix X(comp[t].rows, comp[s].rows);
        for (int j = 0; j < comp[s].rows; ++j) {
          std::vector<Elem> y(L.dim()[t], 0);
          for (int a = 0; a < L.dim()[t]; ++a)
            for (int b = 0; b < L.dim()[s]; ++b) y[a] = F.add(y[a], F.mul(L.mat(r)(a, b), comp[s](j, b)));
          for (size_t pr = 0; pr < piv.size(); ++pr) {
            Elem c = y[piv[pr]];
            if (!c) continue;
            for (int a = 0; a < L.dim()[t]; ++a) y[a] = F.sub(y[a], F.mul(c, B(static_cast<int>(pr), a)));
          }
          int row = 0;
          for (int a = 0; a < L.dim()[t]; ++a) {
            if (std::find(piv.begin(), piv.end(), a) != piv.end()) continue;
            X(row++, j) = y[a];
          }
        }
        qm.push_back(X);
      }
      Representation Qt(L.quiver_ptr(), L.field_ptr(), L.dim() - N.dim(), qm);
      if (is_isomorphic(Qt, M)) ++count;
      return;
    }
    for (auto& S : subs[i]) {
      pick[i] = S;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace oracle
