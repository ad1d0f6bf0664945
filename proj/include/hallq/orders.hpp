#pragma once

#include <map>
#include <optional>
#include <vector>

#include "json.hpp"

#include "hallq/hall_numbers.hpp"

namespace hallq {

// One elementary step L -> U + V coming from 0 -> U -> L -> V -> 0.
struct DegenStep {
  IsoClass from, sub, quot, to;
};

class DegenerationOrders {
 public:
  explicit DegenerationOrders(HallContext& ctx) : ctx_(ctx) {}
  HallContext& context() { return ctx_; }

  // N <=_ext M: N is reached from M by elementary steps. The witness lists
  // them in order; empty when N = M.
  bool ext_leq(const IsoClass& N, const IsoClass& M, std::vector<DegenStep>* witness = nullptr);
  // Same dimension, dim Hom(X, N) >= dim Hom(X, M) and dim Hom(N, X) >=
  // dim Hom(M, X) for every X of dimension <= dim M. With all modules as
  // probes either half suffices; the bounded probe set needs both.
  bool hom_leq(const IsoClass& N, const IsoClass& M);

  // Every class below M in the ext order, with its parent step.
  const std::map<int, DegenStep>& ext_closure(const IsoClass& M);

  // Maximal elements of a set under the ext order.
  std::vector<IsoClass> ext_maxima(const std::vector<IsoClass>& xs);

 private:
  std::vector<DegenStep> moves(const IsoClass& L);

  HallContext& ctx_;
  std::map<int, std::map<int, DegenStep>> closure_;
  std::map<int, std::vector<IsoClass>> probes_;
};

struct OrderReport {
  DimVector dim;
  std::vector<IsoClass> classes;
  std::vector<std::vector<bool>> ext, hom;  // [n][m]: classes[n] <= classes[m]
  std::vector<std::pair<int, int>> disagreements;
  bool agree() const { return disagreements.empty(); }
  nlohmann::json to_json(DegenerationOrders& D) const;
};
OrderReport orders_agree(DegenerationOrders& D, const DimVector& d);

// For every ordered pair (M, N) of nonzero classes with dim M + dim N = d:
// whether the extension set has a unique ext-maximum equal to the generic
// extension.
struct GenericReport {
  int pairs = 0;
  std::vector<std::pair<IsoClass, IsoClass>> failures;  // (M, N) without a unique maximum
};
GenericReport generic_extension_maxima(DegenerationOrders& D, HallNumbers& H, const DimVector& d);

}  // namespace hallq
