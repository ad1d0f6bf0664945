#include "hallq/orders.hpp"

#include <deque>
#include <functional>

#include "hallq/errors.hpp"
#include "hallq/pbw.hpp"

namespace hallq {

std::vector<DegenStep> DegenerationOrders::moves(const IsoClass& L) {
  std::vector<DegenStep> out;
  const DimVector& d = L.dim();
  DimVector e = DimVector::zero(d.size());
  std::function<void(int)> rec = [&](int i) {
    if (i == d.size()) {
      if (e.is_zero() || e == d) return;
      for (auto& [key, n] : ctx_.hall_table(L, e).counts) {
        if (n == 0) continue;
        IsoClass V = ctx_.by_uid(key.first), U = ctx_.by_uid(key.second);
        IsoClass T = ctx_.direct_sum(U, V);
        if (T.uid() == L.uid()) continue;
        out.push_back({L, U, V, T});
      }
      return;
    }
    for (int k = 0; k <= d[i]; ++k) {
      e[i] = k;
      rec(i + 1);
    }
    e[i] = 0;
  };
  rec(0);
  return out;
}

const std::map<int, DegenStep>& DegenerationOrders::ext_closure(const IsoClass& M) {
  auto it = closure_.find(M.uid());
  if (it != closure_.end()) return it->second;
  std::map<int, DegenStep> seen;
  seen.emplace(M.uid(), DegenStep{M, M, M, M});
  std::deque<IsoClass> todo{M};
  while (!todo.empty()) {
    IsoClass L = todo.front();
    todo.pop_front();
    for (auto& s : moves(L))
      if (seen.emplace(s.to.uid(), s).second) todo.push_back(s.to);
  }
  return closure_.emplace(M.uid(), std::move(seen)).first->second;
}

bool DegenerationOrders::ext_leq(const IsoClass& N, const IsoClass& M, std::vector<DegenStep>* witness) {
  if (N.dim() != M.dim()) return false;
  const auto& cl = ext_closure(M);
  auto it = cl.find(N.uid());
  if (it == cl.end()) return false;
  if (witness) {
    witness->clear();
    for (int u = N.uid(); u != M.uid();) {
      const DegenStep& s = cl.at(u);
      witness->push_back(s);
      u = s.from.uid();
    }
    std::reverse(witness->begin(), witness->end());
  }
  return true;
}

bool DegenerationOrders::hom_leq(const IsoClass& N, const IsoClass& M) {
  if (N.dim() != M.dim()) return false;
  auto it = probes_.find(M.uid());
  if (it == probes_.end()) it = probes_.emplace(M.uid(), classes_upto(ctx_, M.dim())).first;
  for (const auto& X : it->second)
    if (ctx_.hom(X, N) < ctx_.hom(X, M) || ctx_.hom(N, X) < ctx_.hom(M, X)) return false;
  return true;
}

std::vector<IsoClass> DegenerationOrders::ext_maxima(const std::vector<IsoClass>& xs) {
  std::vector<IsoClass> out;
  for (const auto& X : xs) {
    bool maximal = true;
    for (const auto& Y : xs)
      if (Y.uid() != X.uid() && ext_leq(X, Y)) maximal = false;
    if (maximal) out.push_back(X);
  }
  return out;
}

OrderReport orders_agree(DegenerationOrders& D, const DimVector& d) {
  OrderReport r;
  r.dim = d;
  r.classes = D.context().classes(d);
  size_t n = r.classes.size();
  r.ext.assign(n, std::vector<bool>(n));
  r.hom.assign(n, std::vector<bool>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      r.ext[a][b] = D.ext_leq(r.classes[a], r.classes[b]);
      r.hom[a][b] = D.hom_leq(r.classes[a], r.classes[b]);
      if (r.ext[a][b] != r.hom[a][b]) r.disagreements.emplace_back(a, b);
    }
  return r;
}

nlohmann::json OrderReport::to_json(DegenerationOrders& D) const {
  nlohmann::json j;
  j["dim"] = dim.v;
  nlohmann::json cl = nlohmann::json::array();
  for (auto& c : classes) cl.push_back(c.label());
  j["classes"] = cl;
  nlohmann::json rel = nlohmann::json::array();
  for (size_t a = 0; a < classes.size(); ++a)
    for (size_t b = 0; b < classes.size(); ++b) {
      nlohmann::json e{{"N", classes[a].label()}, {"M", classes[b].label()}, {"ext", bool(ext[a][b])},
                       {"hom", bool(hom[a][b])}};
      if (ext[a][b] && a != b) {
        std::vector<DegenStep> w;
        D.ext_leq(classes[a], classes[b], &w);
        nlohmann::json ws = nlohmann::json::array();
        for (auto& s : w)
          ws.push_back({{"from", s.from.label()}, {"sub", s.sub.label()}, {"quot", s.quot.label()}, {"to", s.to.label()}});
        e["witness"] = ws;
      }
      rel.push_back(e);
    }
  j["relations"] = rel;
  j["agree"] = agree();
  return j;
}

GenericReport generic_extension_maxima(DegenerationOrders& D, HallNumbers& H, const DimVector& d) {
  HallContext& ctx = H.context();
  GenericReport r;
  for (const auto& N : classes_upto(ctx, d)) {
    if (N.is_zero() || N.dim() == d) continue;
    for (const auto& M : ctx.classes(d - N.dim())) {
      auto ts = H.extension_targets(M, N);
      ++r.pairs;
      if (ts.size() < 2) continue;
      std::vector<IsoClass> xs;
      for (auto& t : ts) xs.push_back(t.L);
      auto mx = D.ext_maxima(xs);
      bool ok = mx.size() == 1;
      if (ok) {
        try {
          ok = H.generic_extension(M, N).uid() == mx[0].uid();
        } catch (const TheoryViolation&) {
          ok = false;
        }
      }
      if (!ok) r.failures.emplace_back(M, N);
    }
  }
  return r;
}

}  // namespace hallq
