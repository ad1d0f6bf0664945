#pragma once

#include <map>
#include <string>
#include <vector>

#include "hallq/hall_algebra.hpp"

namespace hallq {

class TameStructure;

// Basis element K_mu u_alpha of the extended positive half.
struct ExtKey {
  std::vector<int> mu;
  IsoClass cls;
  bool operator<(const ExtKey& o) const {
    if (mu != o.mu) return mu < o.mu;
    return cls.uid() < o.cls.uid();
  }
  bool operator==(const ExtKey& o) const { return mu == o.mu && cls.uid() == o.cls.uid(); }
};

// Finite sums of n-fold tensors of basis elements; n = 1 is an ordinary
// element of the extended half.
class Tensor {
 public:
  explicit Tensor(int q = 2) : q_(q) {}
  int q() const { return q_; }
  void add(std::vector<ExtKey> k, const Coeff& c);
  const std::map<std::vector<ExtKey>, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  bool operator==(const Tensor& o) const { return q_ == o.q_ && terms_ == o.terms_; }
  std::string str() const;

 private:
  int q_;
  std::map<std::vector<ExtKey>, Coeff> terms_;
};
using ExtendedElement = Tensor;

// |V_alpha| in the pairing: q^{dim M} or the orbit size |G_d| / a_alpha.
enum class VMode { QPowDim, OrbitSize };
const char* vmode_name(VMode m);

class HopfLayer {
 public:
  HopfLayer(HallAlgebra& A, VMode mode = VMode::QPowDim);

  HallAlgebra& algebra() { return A_; }
  int q() const { return A_.q(); }
  VMode vmode() const { return mode_; }

  ExtendedElement one();
  ExtendedElement u(const IsoClass& L, std::vector<int> mu = {});
  ExtendedElement K(std::vector<int> mu);

  ExtendedElement multiply(const ExtendedElement& x, const ExtendedElement& y);
  // Factorwise product of two n-fold tensors.
  Tensor tensor_multiply(const Tensor& x, const Tensor& y);
  // Apply delta at tensor slot `slot`.
  Tensor comultiply(const Tensor& x, int slot = 0);
  Coeff counit(const ExtendedElement& x);
  ExtendedElement antipode(const ExtendedElement& x);

  Coeff pairing(const ExtendedElement& x, const ExtendedElement& y_minus);

  bool counit_check(const IsoClass& L);
  bool coassociativity_check(const IsoClass& L);
  // mu (S x 1) Delta = eta eps on u_L.
  bool hopf_axiom_check(const IsoClass& L);
  // Delta(u_M u_N) = Delta(u_M) Delta(u_N), in the extended form and in the
  // K-free form with twisted tensor product.
  bool green_compatibility_check(const IsoClass& M, const IsoClass& N);
  // phi(u_a u_b, u_l) = (phi x phi)(u_a x u_b, Delta u_l) with K parts dropped,
  // over all classes of total dimension <= max_total.
  bool pairing_check(int max_total);

 private:
  ExtendedElement antipode_u(const IsoClass& L);
  Coeff vabs(const IsoClass& L);
  int sym(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> zero_mu() const;

  HallAlgebra& A_;
  VMode mode_;
  int n_;
  std::map<int, Tensor> delta_memo_;
  std::map<int, ExtendedElement> s_memo_;
};

// Picks the |V| reading under which pairing_check passes on A_2, default first.
VMode select_vmode(int q, int max_total = 3);

// Basis of the phi-orthogonal complement of the composition piece inside the
// rational piece at one degree.
std::vector<HallElement> orthogonal_complement(HopfLayer& H, TameStructure& T, const DimVector& degree);

// Every class of total dimension between 0 and n.
std::vector<IsoClass> classes_of_total(HallContext& ctx, int n);

}  // namespace hallq
