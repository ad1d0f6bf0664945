#include "hallq/hall_numbers.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "hallq/errors.hpp"
#include "hallq/subspaces.hpp"

namespace hallq {

namespace {

void check_guard(const Guards& g, std::uint64_t count, const char* what) {
  if (std::log2(static_cast<double>(count) + 1) > g.enum_log2 + 1e-9)
    throw GuardExceeded(std::string(what) + " needs " + std::to_string(count) + " candidates");
}

std::uint64_t ipow(int q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::uint64_t>(q);
  return r;
}

}  // namespace

std::uint64_t HallNumbers::hall_number(const IsoClass& L, const IsoClass& M, const IsoClass& N) {
  if (L.dim() != M.dim() + N.dim()) return 0;
  if (cache_)
    if (auto g = cache_->get(L, M, N)) return *g;
  std::uint64_t total = 1;
  for (int i = 0; i < L.dim().size(); ++i) total *= gaussian_binomial(ctx_.q(), L.dim()[i], N.dim()[i]);
  check_guard(ctx_.guards(), total, "graded subspace scan");
  const HallTable& T = ctx_.hall_table(L, N.dim());
  auto it = T.counts.find({M.uid(), N.uid()});
  std::uint64_t g = it == T.counts.end() ? 0 : it->second;
  if (cache_) cache_->put(L, M, N, g);
  return g;
}

mpz_class HallNumbers::iterated(const IsoClass& L, const std::vector<IsoClass>& parts) {
  if (parts.empty()) return L.is_zero() ? 1 : 0;
  DimVector sum = DimVector::zero(L.dim().size());
  for (const auto& p : parts) sum = sum + p.dim();
  if (sum != L.dim()) return 0;
  if (parts.size() == 1) return L == parts[0] ? 1 : 0;
  // Peel off the top factor: W_{m-1} is a submodule X with L/X ~ parts[0].
  std::vector<IsoClass> rest(parts.begin() + 1, parts.end());
  DimVector sub = L.dim() - parts[0].dim();
  mpz_class total = 0;
  const HallTable& T = ctx_.hall_table(L, sub);
  for (const auto& [key, cnt] : T.counts) {
    if (key.first != parts[0].uid()) continue;
    IsoClass X = ctx_.by_uid(key.second);
    mpz_class inner = iterated(X, rest);
    if (inner != 0) total += inner * mpz_class(static_cast<unsigned long>(cnt));
  }
  return total;
}

const std::map<int, std::uint64_t>& HallNumbers::ext_class_counts(const IsoClass& M, const IsoClass& N) {
  auto key = std::make_pair(M.uid(), N.uid());
  if (auto it = ext_memo_.find(key); it != ext_memo_.end()) return it->second;
  ExtData E = ext_data(M.rep(), N.rep());
  int e = static_cast<int>(E.complement.size());
  if (!within(ctx_.q(), e, ctx_.guards().enum_log2))
    throw GuardExceeded("Ext space of dimension " + std::to_string(e) + " is too large to scan");
  const Field& F = ctx_.field();
  std::uint64_t cnt = ipow(ctx_.q(), e);
  std::map<int, std::uint64_t> out;
  std::vector<Elem> c(e), xi(E.c1_dim);
  for (std::uint64_t idx = 0; idx < cnt; ++idx) {
    std::uint64_t t = idx;
    for (int k = e - 1; k >= 0; --k) {
      c[k] = static_cast<Elem>(t % ctx_.q());
      t /= ctx_.q();
    }
    std::fill(xi.begin(), xi.end(), 0);
    for (int k = 0; k < e; ++k) {
      if (!c[k]) continue;
      for (int j = 0; j < E.c1_dim; ++j)
        if (E.complement[k][j]) xi[j] = F.add(xi[j], F.mul(c[k], E.complement[k][j]));
    }
    ++out[ctx_.classify(extension(M.rep(), N.rep(), xi)).uid()];
  }
  return ext_memo_.emplace(key, std::move(out)).first->second;
}

std::vector<Target> HallNumbers::extension_targets(const IsoClass& M, const IsoClass& N) {
  std::vector<Target> out;
  for (const auto& [uid, cnt] : ext_class_counts(M, N)) {
    IsoClass L = ctx_.by_uid(uid);
    std::uint64_t g = hall_number(L, M, N);
    if (g == 0) throw TheoryViolation("middle term " + L.label() + " has Hall number 0");
    out.push_back({L, g});
  }
  std::sort(out.begin(), out.end(), [](const Target& a, const Target& b) { return a.L < b.L; });
  return out;
}

IsoClass HallNumbers::generic_extension(const IsoClass& M, const IsoClass& N) {
  auto t = extension_targets(M, N);
  int best = -1, count = 0;
  IsoClass arg;
  for (const auto& x : t) {
    if (x.L.orbit_dim() > best) {
      best = x.L.orbit_dim();
      arg = x.L;
      count = 1;
    } else if (x.L.orbit_dim() == best) {
      ++count;
    }
  }
  if (count != 1) throw TheoryViolation("extension set has no unique orbit of maximal dimension");
  return arg;
}

mpq_class HallNumbers::via_ext_oracle(const IsoClass& L, const IsoClass& M, const IsoClass& N) {
  if (L.dim() != M.dim() + N.dim()) return 0;
  const auto& counts = ext_class_counts(M, N);
  auto it = counts.find(L.uid());
  if (it == counts.end()) return 0;
  mpq_class r(mpz_class(static_cast<unsigned long>(it->second)) * L.aut(),
              qpow(ctx_.q(), ctx_.hom(M, N)) * M.aut() * N.aut());
  r.canonicalize();
  return r;
}

PointFunction orbit_indicator(const Representation& M, const Guards& guards) {
  const Quiver& Q = M.quiver();
  const Field& F = M.field();
  const DimVector& d = M.dim();
  int edim = Q.rep_space_dim(d);
  if (!within(F.q(), edim, guards.enum_log2)) throw GuardExceeded("orbit indicator needs the full space E_d");
  PointFunction f{d, std::vector<mpq_class>(static_cast<size_t>(ipow(F.q(), edim)), 0)};

  // Generators of G_d: transvections I + c E_jk over additive generators c, and diag(w, 1, ...).
  std::vector<std::vector<Matrix>> gens;
  auto ident = [&] {
    std::vector<Matrix> g;
    for (int i = 0; i < d.size(); ++i) g.push_back(Matrix::identity(d[i]));
    return g;
  };
  int p = prime_power(F.q()).first;
  for (int i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    auto g = ident();
    g[i](0, 0) = F.primitive();
    gens.push_back(g);
    for (int j = 0; j < d[i]; ++j)
      for (int k = 0; k < d[i]; ++k) {
        if (j == k) continue;
        for (int c = 1; c < F.q(); c *= p) {
          auto t = ident();
          t[i](j, k) = static_cast<Elem>(c);
          gens.push_back(t);
        }
      }
  }
  std::deque<Representation> todo{M};
  f.val[M.point_index()] = 1;
  while (!todo.empty()) {
    Representation x = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : gens) {
      Representation y = x.transform(g);
      auto idx = y.point_index();
      if (f.val[idx] != 0) continue;
      f.val[idx] = 1;
      todo.push_back(std::move(y));
    }
  }
  return f;
}

namespace kernels {

namespace {
mpq_class convolve_at(const QuiverPtr& Q, const FieldPtr& F, const DimVector& gamma, const DimVector& beta,
                      std::uint64_t idx, const PointFunction& f, const PointFunction& g) {
  Representation x = Representation::from_point(Q, F, gamma, idx);
  GradedSubspaces G(x, beta);
  mpq_class acc = 0;
  std::vector<int> ch;
  std::vector<Elem> scratch;
  for (std::uint64_t s = 0; s < G.count(); ++s) {
    G.choice(s, ch);
    if (!G.stable(ch, scratch)) continue;
    auto [W, Qt] = G.sub_and_quotient(ch);
    const mpq_class& a = f.val[Qt.point_index()];
    if (sgn(a) == 0) continue;
    const mpq_class& b = g.val[W.point_index()];
    if (sgn(b) == 0) continue;
    acc += a * b;
  }
  return acc;
}
}  // namespace

PointFunction convolve_serial(const QuiverPtr& Q, const FieldPtr& F, const PointFunction& f, const PointFunction& g) {
  DimVector gamma = f.dim + g.dim;
  PointFunction out{gamma, std::vector<mpq_class>(static_cast<size_t>(ipow(F->q(), Q->rep_space_dim(gamma))))};
  for (std::uint64_t idx = 0; idx < out.val.size(); ++idx) out.val[idx] = convolve_at(Q, F, gamma, g.dim, idx, f, g);
  return out;
}

PointFunction convolve_omp(const QuiverPtr& Q, const FieldPtr& F, const PointFunction& f, const PointFunction& g) {
  DimVector gamma = f.dim + g.dim;
  PointFunction out{gamma, std::vector<mpq_class>(static_cast<size_t>(ipow(F->q(), Q->rep_space_dim(gamma))))};
  const std::int64_t n = static_cast<std::int64_t>(out.val.size());
  // Subspace lists are built lazily under a lock; warm them before the fan-out.
  for (int i = 0; i < gamma.size(); ++i) subspaces(*F, gamma[i], g.dim[i]);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t idx = 0; idx < n; ++idx)
    out.val[idx] = convolve_at(Q, F, gamma, g.dim, static_cast<std::uint64_t>(idx), f, g);
  return out;
}

}  // namespace kernels

PointFunction convolve(const QuiverPtr& Q, const FieldPtr& F, const PointFunction& f, const PointFunction& g,
                       const Guards& guards) {
  DimVector gamma = f.dim + g.dim;
  if (!within(F->q(), Q->rep_space_dim(gamma), guards.enum_log2)) throw GuardExceeded("convolution needs the full space E_d");
  return parallel_enabled() ? kernels::convolve_omp(Q, F, f, g) : kernels::convolve_serial(Q, F, f, g);
}

mpq_class convolution_coefficient(HallContext& ctx, const IsoClass& L, const IsoClass& M, const IsoClass& N,
                                  std::uint64_t seed) {
  if (L.dim() != M.dim() + N.dim()) return 0;
  PointFunction fm = orbit_indicator(M.rep(), ctx.guards());
  PointFunction fn = orbit_indicator(N.rep(), ctx.guards());
  PointFunction h = convolve(ctx.quiver_ptr(), ctx.field_ptr(), fm, fn, ctx.guards());
  // Move L by a random base change so the lookup is not at the stored representative.
  std::mt19937_64 rng(seed);
  const Field& F = ctx.field();
  std::vector<Matrix> g;
  for (int i = 0; i < L.dim().size(); ++i) {
    int n = L.dim()[i];
    Matrix A(n, n);
    do {
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) A(r, c) = static_cast<Elem>(rng() % F.q());
    } while (!invertible(F, A));
    g.push_back(A);
  }
  return h.val[L.rep().transform(g).point_index()];
}

}  // namespace hallq
