#pragma once

#include <vector>

#include "hallq/hall_algebra.hpp"
#include "hallq/tame.hpp"

namespace hallq {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;
std::vector<Partition> partitions(int n);

// Regular classes of dimension n delta split by where their summands live:
// e1 all in non-homogeneous tubes, e3 all homogeneous, e2 mixed; each sum
// carries the factor v^{-n |delta|}.
struct EComponents {
  HallElement e1, e2, e3;
};
EComponents e_delta_components(HallAlgebra& A, TameStructure& T, int n);

// E_{w_1 delta, 3} * ... * E_{w_t delta, 3}; the empty partition gives 1.
HallElement e_partition(HallAlgebra& A, TameStructure& T, const Partition& w);

// <P> * <M> * E_{w delta, 3} * <I>; throws TheoryViolation unless P is
// preprojective, M lies in non-homogeneous tubes and I is preinjective.
HallElement pbw_element(HallAlgebra& A, TameStructure& T, const IsoClass& P, const IsoClass& M, const Partition& w,
                        const IsoClass& I);

struct PbwMember {
  IsoClass P, M;
  Partition w;
  IsoClass I;
  HallElement value;
};
// Every member of the PBW set of the given degree.
std::vector<PbwMember> pbw_members(HallAlgebra& A, TameStructure& T, const DimVector& degree);

// Generators u_{S_i}.
std::vector<HallElement> composition_generators(HallAlgebra& A);
// u_{S_i} together with every nonzero class of dimension <= bound lying in a
// single non-homogeneous tube.
std::vector<HallElement> rational_generators(HallAlgebra& A, TameStructure& T, const DimVector& bound);

// dim of the rational piece minus dim of the composition piece at a degree.
int graded_gap(HallAlgebra& A, TameStructure& T, const DimVector& degree);

// All classes of every dimension vector <= d (including 0), sorted.
std::vector<IsoClass> classes_upto(HallContext& ctx, const DimVector& d);

}  // namespace hallq
