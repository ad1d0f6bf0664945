#pragma once

#include <string>
#include <vector>

#include "hallq/context.hpp"
#include "hallq/tame_type.hpp"

namespace hallq {

enum class Part { Zero, Preprojective, Regular, Preinjective, Mixed };

std::string part_name(Part p);

// Position of an indecomposable. Regular summands in a non-homogeneous tube
// carry (tube, socle, length): the regular composition factors from the
// bottom are simples[tube][socle], simples[tube][socle + 1], ... (indices
// mod the period). Homogeneous ones carry the mouth of their tube and, when
// the mouth has dimension delta, its slot (1-based, in class order).
struct SummandInfo {
  IsoClass cls;
  Part part = Part::Zero;
  int defect = 0;
  int tube = -1;  // -1: homogeneous
  int socle = -1;
  int length = 0;
  IsoClass mouth;
  int slot = 0;
};

struct ModuleClass {
  Part part = Part::Zero;
  std::vector<SummandInfo> summands;
  bool regular() const { return part == Part::Regular || part == Part::Zero; }
  // Regular with every summand in a non-homogeneous tube / in homogeneous tubes.
  bool all_nonhomogeneous() const;
  bool all_homogeneous() const;
  // Regular with all summands in one non-homogeneous tube.
  bool single_tube() const;
};

// Tube structure of a tame quiver over one field.
class TameStructure {
 public:
  explicit TameStructure(HallContext& ctx);

  const TameType& type() const { return t_; }
  HallContext& context() { return ctx_; }
  // <delta, d>: negative on preprojective, zero on regular, positive on
  // preinjective indecomposables.
  int defect(const DimVector& d) const;

  // Per non-homogeneous tube, its regular simples in tau^{-1} order, tubes by
  // increasing period. Derived from orbits of the Coxeter transformation on
  // real roots of defect 0 below delta.
  const std::vector<std::vector<DimVector>>& regular_simples() const { return simples_; }
  const IsoClass& regular_simple(int tube, int k);

  // Coxeter transformation c with dim(tau M) = c(dim M).
  DimVector coxeter(const DimVector& d) const;
  DimVector coxeter_inverse(const DimVector& d) const;

  SummandInfo classify_indecomposable(const IsoClass& X);
  ModuleClass classify(const IsoClass& M);
  ModuleClass classify(const Representation& M) { return classify(ctx_.classify(M)); }

  // Homogeneous regular bricks of dimension delta, in class order.
  const std::vector<IsoClass>& homogeneous_mouths();
  // Indecomposable of the given non-homogeneous tube position.
  IsoClass tube_module(int tube, int socle, int length);
  // Indecomposable of regular length `length` in the homogeneous tube at a slot.
  IsoClass homogeneous_module(int slot, int length);

 private:
  HallContext& ctx_;
  TameType t_;
  std::vector<std::vector<long long>> cox_, coxinv_;
  std::vector<std::vector<DimVector>> simples_;
  std::vector<std::vector<IsoClass>> simple_cls_;
  std::vector<IsoClass> mouths_;
  bool mouths_ready_ = false;
  std::map<int, SummandInfo> memo_;
};

}  // namespace hallq
