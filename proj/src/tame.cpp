#include "hallq/tame.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hallq/errors.hpp"

namespace hallq {

std::string part_name(Part p) {
  switch (p) {
    case Part::Zero:
      return "zero";
    case Part::Preprojective:
      return "preprojective";
    case Part::Regular:
      return "regular";
    case Part::Preinjective:
      return "preinjective";
    case Part::Mixed:
      return "mixed";
  }
  return "?";
}

bool ModuleClass::all_nonhomogeneous() const {
  if (!regular()) return false;
  for (const auto& s : summands)
    if (s.tube < 0) return false;
  return true;
}

bool ModuleClass::all_homogeneous() const {
  if (!regular()) return false;
  for (const auto& s : summands)
    if (s.tube >= 0) return false;
  return true;
}

bool ModuleClass::single_tube() const {
  if (part != Part::Regular) return false;
  for (const auto& s : summands)
    if (s.tube < 0 || s.tube != summands[0].tube) return false;
  return true;
}

namespace {

// Inverse of an integer matrix with determinant +-1, by exact elimination.
std::vector<std::vector<long long>> unimodular_inverse(const std::vector<std::vector<int>>& A) {
  int n = static_cast<int>(A.size());
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = A[i][j];
    m[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw TheoryViolation("Euler matrix is singular");
    std::swap(m[p], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (int k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<std::vector<long long>> out(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m[i][n + j].get_den() != 1) throw TheoryViolation("Euler matrix is not unimodular");
      out[i][j] = m[i][n + j].get_num().get_si();
    }
  return out;
}

DimVector apply(const std::vector<std::vector<long long>>& C, const DimVector& d) {
  DimVector r = DimVector::zero(d.size());
  for (int i = 0; i < d.size(); ++i) {
    long long s = 0;
    for (int j = 0; j < d.size(); ++j) s += C[i][j] * d[j];
    r[i] = static_cast<int>(s);
  }
  return r;
}

}  // namespace

TameStructure::TameStructure(HallContext& ctx) : ctx_(ctx) {
  auto t = recognize_tame(ctx.quiver());
  if (!t) throw InputError("quiver is not of extended Dynkin type");
  t_ = *t;
  const Quiver& Q = ctx.quiver();
  int n = Q.num_vertices();
  // <x, y> = x^T E y and c = -E^{-1} E^T satisfy <x, y> = -<y, c x>.
  auto E = Q.euler_matrix();
  auto Ei = unimodular_inverse(E);
  cox_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long s = 0;
      for (int k = 0; k < n; ++k) s += Ei[i][k] * E[j][k];
      cox_[i][j] = -s;
    }
  std::vector<std::vector<int>> ci(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ci[i][j] = static_cast<int>(cox_[i][j]);
  coxinv_ = unimodular_inverse(ci);

  // Real roots 0 < x < delta of defect 0.
  const DimVector& delta = t_.delta;
  std::vector<DimVector> roots;
  DimVector x = DimVector::zero(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (x.is_zero() || x == delta) return;
      if (Q.quadratic_form(x) == 1 && defect(x) == 0) roots.push_back(x);
      return;
    }
    for (int k = 0; k <= delta[i]; ++k) {
      x[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
  std::set<DimVector> seen;
  for (const auto& r : roots) {
    if (seen.count(r)) continue;
    std::vector<DimVector> orbit{r};
    DimVector cur = coxeter_inverse(r);
    while (cur != r) {
      if (!cur.nonnegative() || orbit.size() > roots.size()) throw TheoryViolation("Coxeter orbit leaves the regular roots");
      orbit.push_back(cur);
      cur = coxeter_inverse(cur);
    }
    for (auto& o : orbit) seen.insert(o);
    DimVector sum = DimVector::zero(n);
    for (auto& o : orbit) sum = sum + o;
    if (sum != delta) continue;
    // Start the tube at its lexicographically largest simple.
    auto top = std::max_element(orbit.begin(), orbit.end(), [](const DimVector& a, const DimVector& b) { return a.v < b.v; });
    std::rotate(orbit.begin(), top, orbit.end());
    simples_.push_back(orbit);
  }
  std::sort(simples_.begin(), simples_.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0].v > b[0].v;
  });
  std::vector<int> periods;
  for (auto& s : simples_) periods.push_back(static_cast<int>(s.size()));
  if (periods != t_.periods) throw TheoryViolation("Coxeter orbits do not reproduce the tube periods of " + t_.name());
  simple_cls_.resize(simples_.size());
}

int TameStructure::defect(const DimVector& d) const { return ctx_.quiver().euler_form(t_.delta, d); }

DimVector TameStructure::coxeter(const DimVector& d) const { return apply(cox_, d); }
DimVector TameStructure::coxeter_inverse(const DimVector& d) const { return apply(coxinv_, d); }

const IsoClass& TameStructure::regular_simple(int tube, int k) {
  auto& v = simple_cls_.at(tube);
  if (v.empty()) {
    for (const auto& d : simples_[tube]) {
      const auto& ind = ctx_.indecomposables(d);
      if (ind.size() != 1) throw TheoryViolation("real root " + d.str() + " does not carry exactly one indecomposable");
      v.push_back(ind[0]);
    }
  }
  return v.at(k);
}

SummandInfo TameStructure::classify_indecomposable(const IsoClass& X) {
  if (auto it = memo_.find(X.uid()); it != memo_.end()) return it->second;
  SummandInfo s;
  s.cls = X;
  s.defect = defect(X.dim());
  if (s.defect < 0) {
    s.part = Part::Preprojective;
  } else if (s.defect > 0) {
    s.part = Part::Preinjective;
  } else {
    s.part = Part::Regular;
    for (int j = 0; j < static_cast<int>(simples_.size()) && s.tube < 0; ++j)
      for (int k = 0; k < static_cast<int>(simples_[j].size()); ++k)
        if (ctx_.hom(regular_simple(j, k), X) > 0) {
          s.tube = j;
          s.socle = k;
          break;
        }
    if (s.tube >= 0) {
      int r = static_cast<int>(simples_[s.tube].size());
      DimVector acc = DimVector::zero(X.dim().size());
      for (int len = 1; acc.leq(X.dim()); ++len) {
        acc = acc + simples_[s.tube][(s.socle + len - 1) % r];
        if (acc == X.dim()) {
          s.length = len;
          break;
        }
      }
      if (s.length == 0) throw TheoryViolation("regular module " + X.label() + " does not fit its tube");
    } else {
      // The mouth of a homogeneous tube is the smallest homogeneous module mapping into X.
      for (int k = 1; (t_.delta * k).leq(X.dim()) && !s.mouth.valid(); ++k)
        for (const auto& H : ctx_.indecomposables(t_.delta * k)) {
          if (ctx_.hom(H, X) == 0) continue;
          bool homog = true;
          for (int j = 0; j < static_cast<int>(simples_.size()) && homog; ++j)
            for (int i = 0; i < static_cast<int>(simples_[j].size()); ++i)
              if (ctx_.hom(regular_simple(j, i), H) > 0) homog = false;
          if (!homog) continue;
          s.mouth = H;
          break;
        }
      if (!s.mouth.valid()) throw TheoryViolation("no homogeneous mouth found for " + X.label());
      s.length = X.dim().total() / s.mouth.dim().total();
      if (s.mouth.dim() == t_.delta) {
        const auto& m = homogeneous_mouths();
        auto it = std::find(m.begin(), m.end(), s.mouth);
        if (it != m.end()) s.slot = static_cast<int>(it - m.begin()) + 1;
      }
    }
  }
  memo_[X.uid()] = s;
  return s;
}

ModuleClass TameStructure::classify(const IsoClass& M) {
  ModuleClass mc;
  if (M.is_zero()) return mc;
  for (const auto& Z : M.summands()) mc.summands.push_back(classify_indecomposable(Z));
  mc.part = mc.summands[0].part;
  for (const auto& s : mc.summands)
    if (s.part != mc.part) mc.part = Part::Mixed;
  return mc;
}

const std::vector<IsoClass>& TameStructure::homogeneous_mouths() {
  if (mouths_ready_) return mouths_;
  for (const auto& H : ctx_.indecomposables(t_.delta)) {
    bool homog = true;
    for (int j = 0; j < static_cast<int>(simples_.size()) && homog; ++j)
      for (int i = 0; i < static_cast<int>(simples_[j].size()); ++i)
        if (ctx_.hom(regular_simple(j, i), H) > 0) homog = false;
    if (homog) mouths_.push_back(H);
  }
  mouths_ready_ = true;
  return mouths_;
}

IsoClass TameStructure::tube_module(int tube, int socle, int length) {
  if (tube < 0 || tube >= static_cast<int>(simples_.size())) throw InputError("no tube " + std::to_string(tube));
  int r = static_cast<int>(simples_[tube].size());
  if (socle < 0 || socle >= r || length < 1) throw InputError("bad tube position");
  DimVector d = DimVector::zero(t_.delta.size());
  for (int k = 0; k < length; ++k) d = d + simples_[tube][(socle + k) % r];
  std::vector<IsoClass> hit;
  for (const auto& X : ctx_.indecomposables(d)) {
    auto s = classify_indecomposable(X);
    if (s.tube == tube && s.socle == socle && s.length == length) hit.push_back(X);
  }
  if (hit.size() != 1) throw TheoryViolation("tube position does not determine one module");
  return hit[0];
}

IsoClass TameStructure::homogeneous_module(int slot, int length) {
  const auto& m = homogeneous_mouths();
  if (slot < 1 || slot > static_cast<int>(m.size()))
    throw InputError("homogeneous slot " + std::to_string(slot) + " unavailable: F_" + std::to_string(ctx_.q()) +
                     " has " + std::to_string(m.size()) + " rational homogeneous tubes");
  if (length < 1) throw InputError("bad homogeneous length");
  std::vector<IsoClass> hit;
  for (const auto& X : ctx_.indecomposables(t_.delta * length)) {
    auto s = classify_indecomposable(X);
    if (s.part == Part::Regular && s.tube < 0 && s.mouth == m[slot - 1] && s.length == length) hit.push_back(X);
  }
  if (hit.size() != 1) throw TheoryViolation("homogeneous slot does not determine one module");
  return hit[0];
}

}  // namespace hallq
