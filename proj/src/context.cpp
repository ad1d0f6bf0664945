#include "hallq/context.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "hallq/errors.hpp"
#include "hallq/subspaces.hpp"

namespace hallq {

struct OrbitTable {
  std::vector<std::int32_t> orbit;
};

struct CatalogTable {
  std::vector<IsoClass> probes;  // indecomposables of dimension <= d, largest first
  std::map<std::vector<int>, int> by_parts;  // sorted summand uids -> position
};

namespace {

// Generators of G_d acting on flattened points of E_d.
struct GroupAction {
  struct Gen {
    int vertex, a, b;  // b < 0: scale position a by w
    Elem lambda;
  };
  const Quiver& Q;
  const Field& F;
  DimVector d;
  std::vector<int> off;
  std::vector<Gen> gens;

  GroupAction(const Quiver& Q_, const Field& F_, const DimVector& d_) : Q(Q_), F(F_), d(d_) {
    int o = 0;
    for (const auto& a : Q.arrows()) {
      off.push_back(o);
      o += d[a.tgt] * d[a.src];
    }
    for (int i = 0; i < Q.num_vertices(); ++i) {
      int n = d[i];
      if (n == 0) continue;
      if (F.q() > 2) gens.push_back({i, 0, -1, F.primitive()});
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (a == b) continue;
          int pj = 1;
          for (int j = 0; j < F.degree(); ++j, pj *= F.p()) gens.push_back({i, a, b, static_cast<Elem>(pj)});
        }
    }
  }

  // x_r -> g_t x_r g_s^{-1}.
  void apply(const Gen& g, std::vector<Elem>& e) const {
    for (int r = 0; r < Q.num_arrows(); ++r) {
      int s = Q.arrows()[r].src, t = Q.arrows()[r].tgt;
      int R = d[t], C = d[s];
      Elem* M = e.data() + off[r];
      if (t == g.vertex) {
        if (g.b < 0) {
          for (int c = 0; c < C; ++c) M[g.a * C + c] = F.mul(M[g.a * C + c], g.lambda);
        } else {
          for (int c = 0; c < C; ++c) M[g.a * C + c] = F.add(M[g.a * C + c], F.mul(g.lambda, M[g.b * C + c]));
        }
      }
      if (s == g.vertex) {
        if (g.b < 0) {
          Elem iv = F.inv(g.lambda);
          for (int rr = 0; rr < R; ++rr) M[rr * C + g.a] = F.mul(M[rr * C + g.a], iv);
        } else {
          // g^{-1} = I - lambda E_ab: column b gets -lambda * column a.
          Elem nl = F.neg(g.lambda);
          for (int rr = 0; rr < R; ++rr) M[rr * C + g.b] = F.add(M[rr * C + g.b], F.mul(nl, M[rr * C + g.a]));
        }
      }
    }
  }
};

std::uint64_t encode(const std::vector<Elem>& e, int q) {
  std::uint64_t idx = 0;
  for (Elem x : e) idx = idx * q + x;
  return idx;
}

void decode(std::uint64_t idx, int q, std::vector<Elem>& e) {
  for (int k = static_cast<int>(e.size()) - 1; k >= 0; --k) {
    e[k] = static_cast<Elem>(idx % q);
    idx /= q;
  }
}

// All nonzero dimension vectors e <= d, in lexicographic order.
std::vector<DimVector> dims_below(const DimVector& d) {
  std::vector<DimVector> out;
  DimVector c = DimVector::zero(d.size());
  while (true) {
    if (!c.is_zero()) out.push_back(c);
    int i = d.size() - 1;
    while (i >= 0 && c[i] == d[i]) {
      c[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Representation block_sum(QuiverPtr Q, FieldPtr F, const DimVector& d, const std::vector<IsoClass>& parts) {
  Representation R = Representation::zero(Q, F, DimVector::zero(d.size()));
  for (const auto& p : parts) R = R.direct_sum(p.rep());
  return R;
}

}  // namespace

HallContext::HallContext(QuiverPtr Q, FieldPtr F, Guards g, EnumMode mode)
    : Q_(std::move(Q)), F_(std::move(F)), guards_(g), mode_(mode) {}

HallContext::~HallContext() = default;

bool HallContext::brute_at(const DimVector& d) const {
  switch (mode_) {
    case EnumMode::Brute:
      return true;
    case EnumMode::Catalog:
      return false;
    default:
      return within(q(), Q_->rep_space_dim(d), guards_.enum_log2);
  }
}

mpz_class aut_from_summands(int q, int end, const std::vector<IsoClass>& summands) {
  // End(M)/rad = prod M_m(F_{q^f}) over summand types; units lift from the top.
  mpz_class a = qpow(q, end);
  long long drop = 0;
  for (size_t i = 0; i < summands.size();) {
    size_t j = i;
    while (j < summands.size() && summands[j] == summands[i]) ++j;
    const IsoClass& X = summands[i];
    mpz_class r = qpow(q, X.end_dim()) - X.aut();
    int e_rad = 0;
    while (qpow(q, e_rad) < r) ++e_rad;
    if (qpow(q, e_rad) != r) throw TheoryViolation("endomorphism ring of an indecomposable is not local");
    int f = X.end_dim() - e_rad;
    int m = static_cast<int>(j - i);
    for (int k = 1; k <= m; ++k) {
      a *= qpow(q, static_cast<long long>(k) * f) - 1;
      drop += static_cast<long long>(k) * f;
    }
    i = j;
  }
  mpz_class den = qpow(q, drop);
  if (a % den != 0) throw TheoryViolation("automorphism count is not integral");
  return a / den;
}

mpz_class HallContext::aut_of(const Representation& rep, const std::vector<IsoClass>& summands, int end) {
  if (summands.size() > 1) return aut_from_summands(q(), end, summands);
  if (within(q(), end, guards_.hom_log2)) return aut_order(rep, guards_);
  throw GuardExceeded("unit count for an indecomposable exceeds the Hom guard");
}

IsoClass HallContext::make_class(Representation rep, std::vector<IsoClass> summands, bool indecomposable) {
  auto cd = std::make_shared<ClassData>();
  cd->uid = next_uid_++;
  cd->end_dim = end_dim(rep);
  cd->orbit_dim = Q_->group_dim(rep.dim()) - cd->end_dim;
  cd->indecomposable = indecomposable;
  std::sort(summands.begin(), summands.end());
  cd->aut = rep.total_dim() == 0 ? mpz_class(1) : aut_of(rep, summands, cd->end_dim);
  cd->summands = std::move(summands);
  cd->rep = std::move(rep);
  IsoClass c(cd);
  by_uid_[cd->uid] = c;
  return c;
}

void HallContext::ensure(const DimVector& d) {
  Q_->check(d);
  if (classes_.count(d)) return;
  if (d.is_zero()) {
    classes_[d] = {make_class(Representation::zero(Q_, F_, d), {}, false)};
    indec_[d] = {};
    return;
  }
  if (brute_at(d))
    build_brute(d);
  else
    build_catalog(d);
}

const std::vector<IsoClass>& HallContext::classes(const DimVector& d) {
  ensure(d);
  return classes_.at(d);
}

const std::vector<IsoClass>& HallContext::indecomposables(const DimVector& d) {
  if (auto it = indec_.find(d); it != indec_.end()) return it->second;
  ensure(d);
  return indec_.at(d);
}

std::vector<IsoClass> HallContext::indecomposables_upto(const DimVector& d) {
  std::vector<IsoClass> out;
  for (const auto& e : dims_below(d)) {
    const auto& v = indecomposables(e);
    out.insert(out.end(), v.begin(), v.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::int32_t>* HallContext::orbit_table(const DimVector& d) {
  ensure(d);
  auto it = orbits_.find(d);
  return it == orbits_.end() ? nullptr : &it->second->orbit;
}

void HallContext::build_brute(const DimVector& d) {
  int n = Q_->rep_space_dim(d);
  if (!within(q(), n, guards_.enum_log2))
    throw GuardExceeded("orbit scan of E_" + d.str() + " needs q^" + std::to_string(n) + " points");
  // Lower dimensions first: summand detection needs their classes.
  for (const auto& e : dims_below(d))
    if (e != d) ensure(e);

  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(q());
  auto tab = std::make_unique<OrbitTable>();
  tab->orbit.assign(total, -1);
  GroupAction G(*Q_, *F_, d);
  std::vector<std::uint64_t> starts;
  std::vector<Elem> e(n), f(n);
  std::deque<std::uint64_t> queue;
  std::int32_t next = 0;
  for (std::uint64_t p = 0; p < total; ++p) {
    if (tab->orbit[p] >= 0) continue;
    std::int32_t id = next++;
    starts.push_back(p);
    tab->orbit[p] = id;
    queue.push_back(p);
    while (!queue.empty()) {
      std::uint64_t x = queue.front();
      queue.pop_front();
      decode(x, q(), e);
      for (const auto& g : G.gens) {
        f = e;
        G.apply(g, f);
        std::uint64_t y = encode(f, q());
        if (tab->orbit[y] < 0) {
          tab->orbit[y] = id;
          queue.push_back(y);
        }
      }
    }
  }

  // Summands: a class hit by A + B with A indecomposable of smaller dimension is decomposable.
  std::vector<std::vector<IsoClass>> parts(starts.size());
  std::vector<char> hit(starts.size(), 0);
  for (const auto& d1 : dims_below(d)) {
    if (d1 == d) continue;
    for (const auto& A : indecomposables(d1))
      for (const auto& B : classes(d - d1)) {
        Representation S = A.rep().direct_sum(B.rep());
        std::int32_t c = tab->orbit[S.point_index()];
        if (hit[c]) continue;
        hit[c] = 1;
        parts[c] = B.summands();
        parts[c].push_back(A);
      }
  }
  std::vector<IsoClass> cls, ind;
  for (size_t c = 0; c < starts.size(); ++c) {
    Representation R = Representation::from_point(Q_, F_, d, starts[c]);
    IsoClass k = make_class(std::move(R), hit[c] ? parts[c] : std::vector<IsoClass>{}, !hit[c]);
    cls.push_back(k);
    if (!hit[c]) ind.push_back(k);
  }
  classes_[d] = std::move(cls);
  indec_[d] = std::move(ind);
  orbits_[d] = std::move(tab);
}

int HallContext::hom(const IsoClass& X, const IsoClass& Y) {
  auto key = std::make_pair(X.uid(), Y.uid());
  auto it = hom_memo_.find(key);
  if (it != hom_memo_.end()) return it->second;
  int h = hom_dim(X.rep(), Y.rep());
  hom_memo_[key] = h;
  return h;
}

std::vector<std::vector<IsoClass>> HallContext::multisets(const DimVector& d, const std::vector<IsoClass>& indec) {
  std::vector<std::vector<IsoClass>> out;
  std::vector<IsoClass> cur;
  std::function<void(size_t, DimVector)> rec = [&](size_t start, DimVector rem) {
    if (rem.is_zero()) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < indec.size(); ++i) {
      if (!indec[i].dim().leq(rem)) continue;
      cur.push_back(indec[i]);
      rec(i, rem - indec[i].dim());
      cur.pop_back();
    }
  };
  rec(0, d);
  return out;
}

std::vector<IsoClass> HallContext::catalog_indecomposables(const DimVector& d) {
  int n = Q_->num_vertices();
  for (int i = 0; i < n; ++i)
    if (d == DimVector::unit(n, i)) return {make_class(Representation::simple(Q_, F_, i), {}, true)};
  int qf = Q_->quadratic_form(d);
  // Dimension vectors of indecomposables are roots, and roots have q(d) <= 1.
  if (qf >= 2) return {};
  // A real root carries exactly one indecomposable, so the search can stop early.
  const bool real = qf == 1;

  // Every module of dimension d contains S_i for a sink i of its support, so
  // each indecomposable is a nonsplit extension of some class of d - e_i by S_i.
  int i0 = -1;
  for (int i = 0; i < n && i0 < 0; ++i) {
    if (d[i] == 0) continue;
    bool sink = true;
    for (const auto& a : Q_->arrows())
      if (a.src == i && d[a.tgt] > 0) sink = false;
    if (sink) i0 = i;
  }
  DimVector rest = d - DimVector::unit(n, i0);
  Representation S = Representation::simple(Q_, F_, i0);

  std::vector<IsoClass> smaller;
  for (const auto& e : dims_below(d)) {
    if (e == d) continue;
    const auto& v = indecomposables(e);
    smaller.insert(smaller.end(), v.begin(), v.end());
  }
  std::sort(smaller.begin(), smaller.end());

  std::vector<Representation> found;
  const Field& F = *F_;
  for (const auto& X : classes(rest)) {
    if (real && !found.empty()) break;
    ExtData E = ext_data(X.rep(), S);
    int e = static_cast<int>(E.complement.size());
    if (e == 0) continue;
    std::uint64_t cnt = 1;
    for (int k = 0; k < e; ++k) cnt *= static_cast<std::uint64_t>(q());
    std::vector<Elem> c(e);
    for (std::uint64_t idx = 1; idx < cnt && !(real && !found.empty()); ++idx) {
      std::uint64_t t = idx;
      for (int k = e - 1; k >= 0; --k) {
        c[k] = static_cast<Elem>(t % q());
        t /= q();
      }
      // Scalar multiples give isomorphic middle terms: keep a leading 1.
      int lead = 0;
      while (lead < e && c[lead] == 0) ++lead;
      if (c[lead] != 1) continue;
      std::vector<Elem> xi(E.c1_dim, 0);
      for (int k = 0; k < e; ++k) {
        if (!c[k]) continue;
        for (int j = 0; j < E.c1_dim; ++j)
          if (E.complement[k][j]) xi[j] = F.add(xi[j], F.mul(c[k], E.complement[k][j]));
      }
      Representation L = extension(X.rep(), S, xi);
      // Any decomposition of L has summands of smaller dimension, all known.
      bool known = false;
      for (const auto& Z : smaller)
        if (split_summand(L, Z.rep())) {
          known = true;
          break;
        }
      for (size_t j = 0; j < found.size() && !known; ++j)
        if (split_summand(L, found[j])) known = true;
      if (!known) found.push_back(std::move(L));
    }
  }
  std::vector<IsoClass> out;
  for (auto& R : found) out.push_back(make_class(std::move(R), {}, true));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IsoClass> HallContext::peel(const Representation& M, const std::vector<IsoClass>& probes) {
  std::vector<IsoClass> parts;
  Representation rest = M;
  for (const auto& Z : probes) {
    while (rest.total_dim() > 0 && Z.dim().leq(rest.dim())) {
      auto c = split_summand(rest, Z.rep());
      if (!c) break;
      parts.push_back(Z);
      rest = std::move(*c);
    }
    if (rest.total_dim() == 0) break;
  }
  if (rest.total_dim() != 0)
    throw TheoryViolation("no catalog indecomposable splits off a module of dimension " + rest.dim().str());
  std::sort(parts.begin(), parts.end());
  return parts;
}

void HallContext::build_catalog(const DimVector& d) {
  for (const auto& e : dims_below(d))
    if (e != d) ensure(e);
  indec_[d] = catalog_indecomposables(d);

  auto tab = std::make_unique<CatalogTable>();
  std::vector<IsoClass> ind = indecomposables_upto(d);
  std::vector<IsoClass> cls;
  for (auto& ms : multisets(d, ind)) {
    if (ms.size() == 1) {
      cls.push_back(ms[0]);
      continue;
    }
    Representation R = block_sum(Q_, F_, d, ms);
    cls.push_back(make_class(std::move(R), ms, false));
  }
  std::sort(cls.begin(), cls.end());
  for (size_t i = 0; i < cls.size(); ++i) {
    std::vector<int> key;
    for (const auto& z : cls[i].summands()) key.push_back(z.uid());
    std::sort(key.begin(), key.end());
    tab->by_parts[key] = static_cast<int>(i);
  }
  tab->probes.assign(ind.rbegin(), ind.rend());
  classes_[d] = std::move(cls);
  catalogs_[d] = std::move(tab);
}

IsoClass HallContext::classify(const Representation& M) {
  if (!(M.quiver() == *Q_) || M.field().q() != q()) throw InputError("representation does not belong to this context");
  const DimVector& d = M.dim();
  ensure(d);
  if (d.is_zero()) return classes_.at(d)[0];
  if (auto it = orbits_.find(d); it != orbits_.end()) return classes_.at(d)[it->second->orbit[M.point_index()]];
  std::string k = M.key();
  if (auto it = classify_memo_.find(k); it != classify_memo_.end()) return it->second;
  const CatalogTable& tab = *catalogs_.at(d);
  std::vector<int> key;
  for (const auto& z : peel(M, tab.probes)) key.push_back(z.uid());
  std::sort(key.begin(), key.end());
  auto it = tab.by_parts.find(key);
  if (it == tab.by_parts.end()) throw TheoryViolation("catalog at " + d.str() + " lacks a class for a decomposition");
  IsoClass c = classes_.at(d)[it->second];
  classify_memo_[k] = c;
  return c;
}

std::vector<IsoClass> HallContext::decompose(const Representation& M) {
  // Solve dim Hom(X, M) = sum_Z m_Z dim Hom(X, Z) over the catalog probes.
  std::vector<IsoClass> probes = indecomposables_upto(M.dim());
  if (M.total_dim() == 0) return {};
  size_t k = probes.size();
  std::vector<std::vector<mpq_class>> A(k, std::vector<mpq_class>(k + 1));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) A[i][j] = hom(probes[i], probes[j]);
    A[i][k] = hom_dim(probes[i].rep(), M);
  }
  std::vector<int> pivcol;
  size_t r = 0;
  for (size_t c = 0; c < k && r < k; ++c) {
    size_t s = r;
    while (s < k && A[s][c] == 0) ++s;
    if (s == k) continue;
    std::swap(A[s], A[r]);
    mpq_class iv = 1 / A[r][c];
    for (size_t j = c; j <= k; ++j) A[r][j] *= iv;
    for (size_t i = 0; i < k; ++i) {
      if (i == r || A[i][c] == 0) continue;
      mpq_class f = A[i][c];
      for (size_t j = c; j <= k; ++j) A[i][j] -= f * A[r][j];
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<IsoClass> out;
  bool ok = pivcol.size() == k;
  if (ok) {
    DimVector sum = DimVector::zero(M.dim().size());
    for (size_t i = 0; i < k && ok; ++i) {
      const mpq_class& m = A[i][k];
      if (m < 0 || m.get_den() != 1) {
        ok = false;
        break;
      }
      for (long j = 0; j < m.get_num().get_si(); ++j) {
        out.push_back(probes[pivcol[i]]);
        sum = sum + probes[pivcol[i]].dim();
      }
    }
    ok = ok && sum == M.dim();
  }
  // A unique solution is the true multiplicity vector, since the true one solves the system.
  if (ok) {
    std::sort(out.begin(), out.end());
    return out;
  }
  // Singular system: split summands off one at a time.
  std::vector<IsoClass> rev(probes.rbegin(), probes.rend());
  return peel(M, rev);
}

IsoClass HallContext::zero_class() { return classes(DimVector::zero(Q_->num_vertices()))[0]; }

IsoClass HallContext::simple(int vertex) { return classify(Representation::simple(Q_, F_, vertex)); }

IsoClass HallContext::direct_sum(const IsoClass& A, const IsoClass& B) { return classify(A.rep().direct_sum(B.rep())); }

IsoClass HallContext::by_uid(int uid) const { return by_uid_.at(uid); }

const HallTable& HallContext::hall_table(const IsoClass& L, const DimVector& sub_dim) {
  auto key = std::make_pair(L.uid(), sub_dim);
  if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  HallTable T;
  if (sub_dim.nonnegative() && sub_dim.leq(L.dim())) {
    ensure(sub_dim);
    ensure(L.dim() - sub_dim);
    GradedSubspaces G(L.rep(), sub_dim);
    auto stable = kernels::stable_subspaces(G);
    T.stable = stable.size();
    std::vector<int> ch;
    for (auto idx : stable) {
      G.choice(idx, ch);
      auto [W, Qt] = G.sub_and_quotient(ch);
      IsoClass cw = classify(W), cq = classify(Qt);
      ++T.counts[{cq.uid(), cw.uid()}];
    }
  }
  return tables_.emplace(key, std::move(T)).first->second;
}

}  // namespace hallq
