#include "hallq/pbw.hpp"

#include <functional>

#include "hallq/errors.hpp"

namespace hallq {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<IsoClass> classes_upto(HallContext& ctx, const DimVector& d) {
  std::vector<IsoClass> out;
  DimVector cur = DimVector::zero(d.size());
  std::function<void(int)> rec = [&](int i) {
    if (i == d.size()) {
      for (const auto& c : ctx.classes(cur)) out.push_back(c);
      return;
    }
    for (int k = 0; k <= d[i]; ++k) {
      cur[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

EComponents e_delta_components(HallAlgebra& A, TameStructure& T, int n) {
  if (n < 1) throw InputError("E components need n >= 1");
  const DimVector d = T.type().delta * n;
  Coeff pre = A.v(-static_cast<long long>(n) * T.type().delta.total());
  EComponents E{HallElement(A.q()), HallElement(A.q()), HallElement(A.q())};
  for (const auto& L : A.context().classes(d)) {
    ModuleClass mc = T.classify(L);
    if (mc.part != Part::Regular) continue;
    if (mc.all_nonhomogeneous())
      E.e1.add(L, pre);
    else if (mc.all_homogeneous())
      E.e3.add(L, pre);
    else
      E.e2.add(L, pre);
  }
  return E;
}

HallElement e_partition(HallAlgebra& A, TameStructure& T, const Partition& w) {
  HallElement r = A.one();
  for (int p : w) r = A.product(r, e_delta_components(A, T, p).e3);
  return r;
}

HallElement pbw_element(HallAlgebra& A, TameStructure& T, const IsoClass& P, const IsoClass& M, const Partition& w,
                        const IsoClass& I) {
  auto p = T.classify(P), m = T.classify(M), i = T.classify(I);
  if (!(p.part == Part::Preprojective || p.part == Part::Zero)) throw TheoryViolation(P.label() + " is not preprojective");
  if (!m.all_nonhomogeneous()) throw TheoryViolation(M.label() + " is not in the non-homogeneous tubes");
  if (!(i.part == Part::Preinjective || i.part == Part::Zero)) throw TheoryViolation(I.label() + " is not preinjective");
  return A.product({A.rescaled(P), A.rescaled(M), e_partition(A, T, w), A.rescaled(I)});
}

std::vector<PbwMember> pbw_members(HallAlgebra& A, TameStructure& T, const DimVector& degree) {
  HallContext& ctx = A.context();
  std::vector<IsoClass> pre, nonhom, inj;
  for (const auto& X : classes_upto(ctx, degree)) {
    auto mc = T.classify(X);
    if (mc.part == Part::Zero || mc.part == Part::Preprojective) pre.push_back(X);
    if (mc.all_nonhomogeneous()) nonhom.push_back(X);
    if (mc.part == Part::Zero || mc.part == Part::Preinjective) inj.push_back(X);
  }
  const DimVector& delta = T.type().delta;
  std::vector<PbwMember> out;
  for (const auto& P : pre)
    for (const auto& M : nonhom) {
      DimVector pm = P.dim() + M.dim();
      if (!pm.leq(degree)) continue;
      for (int k = 0; (pm + delta * k).leq(degree); ++k) {
        DimVector rest = degree - pm - delta * k;
        for (const auto& w : partitions(k))
          for (const auto& I : ctx.classes(rest)) {
            auto mc = T.classify(I);
            if (!(mc.part == Part::Zero || mc.part == Part::Preinjective)) continue;
            out.push_back({P, M, w, I, pbw_element(A, T, P, M, w, I)});
          }
      }
    }
  return out;
}

std::vector<HallElement> composition_generators(HallAlgebra& A) {
  std::vector<HallElement> g;
  for (int i = 0; i < A.context().quiver().num_vertices(); ++i) g.push_back(A.u(A.context().simple(i)));
  return g;
}

std::vector<HallElement> rational_generators(HallAlgebra& A, TameStructure& T, const DimVector& bound) {
  std::vector<HallElement> g = composition_generators(A);
  for (const auto& X : classes_upto(A.context(), bound)) {
    if (X.is_zero()) continue;
    if (T.classify(X).single_tube()) g.push_back(A.u(X));
  }
  return g;
}

int graded_gap(HallAlgebra& A, TameStructure& T, const DimVector& degree) {
  int r = subalgebra_graded_dim(A, rational_generators(A, T, degree), degree);
  int c = subalgebra_graded_dim(A, composition_generators(A), degree);
  return r - c;
}

}  // namespace hallq
