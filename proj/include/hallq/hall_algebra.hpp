#pragma once

#include <map>
#include <vector>

#include "hallq/coeff.hpp"
#include "hallq/hall_numbers.hpp"

namespace hallq {

struct UidLess {
  bool operator()(const IsoClass& a, const IsoClass& b) const { return a.uid() < b.uid(); }
};

// Finite formal sum of classes u_[M] with coefficients in Q(sqrt q). Zero
// coefficients are never stored.
class HallElement {
 public:
  explicit HallElement(int q = 2) : q_(q) {}
  int q() const { return q_; }

  void add(const IsoClass& c, const Coeff& x);
  Coeff coeff(const IsoClass& c) const;
  const std::map<IsoClass, Coeff, UidLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<DimVector> degrees() const;
  // Terms in class order (dimension, then representative).
  std::vector<std::pair<IsoClass, Coeff>> sorted() const;

  HallElement operator+(const HallElement& o) const;
  HallElement operator-(const HallElement& o) const;
  HallElement operator*(const Coeff& s) const;
  bool operator==(const HallElement& o) const { return q_ == o.q_ && terms_ == o.terms_; }
  bool operator!=(const HallElement& o) const { return !(*this == o); }

 private:
  int q_;
  std::map<IsoClass, Coeff, UidLess> terms_;
};

// The Hall algebra of one context: u_M * u_N = v^{<M,N>} sum_L g^L_{MN} u_L.
// With twisted = false the power of v is dropped (negative control only).
class HallAlgebra {
 public:
  explicit HallAlgebra(HallNumbers& H, bool twisted = true) : H_(H), twisted_(twisted) {}

  HallNumbers& numbers() { return H_; }
  HallContext& context() { return H_.context(); }
  int q() const { return H_.context().q(); }
  Coeff v(long long k) const { return Coeff::vpow(q(), k); }

  HallElement one();
  HallElement u(const IsoClass& M);
  // <M> = v^{-dim M + dim End M} u_M.
  HallElement rescaled(const IsoClass& M);
  HallElement product(const HallElement& x, const HallElement& y);
  HallElement product(const std::vector<HallElement>& factors);
  HallElement basis_product(const IsoClass& M, const IsoClass& N);
  // x^{(p)} = x^p / [p]!.
  HallElement divided_power(const HallElement& x, int p);

 private:
  HallNumbers& H_;
  bool twisted_;
  std::map<std::pair<int, int>, HallElement> memo_;
};

// [n]_v = (v^n - v^{-n}) / (v - v^{-1}) and [n]_v!.
Coeff quantum_int(int q, int n);
Coeff quantum_factorial(int q, int n);

// Left side of the quantum Serre relation for vertices i != j, with x_k = u_{S_k}.
HallElement serre_lhs(HallAlgebra& A, int i, int j);
bool serre_check(HallAlgebra& A, int i, int j);

// Coefficient rows of the elements over the classes of one degree.
std::vector<std::vector<Coeff>> coefficient_matrix(HallContext& ctx, const std::vector<HallElement>& xs,
                                                   const DimVector& degree);
int rank(std::vector<std::vector<Coeff>> rows, int q);
// Rank of the family restricted to one degree.
int graded_rank(HallContext& ctx, const std::vector<HallElement>& xs, const DimVector& degree);
// Row-reduced basis of the span of xs restricted to one degree.
std::vector<HallElement> span_basis(HallContext& ctx, const std::vector<HallElement>& xs, const DimVector& degree);
// Basis vectors of the nullspace of a matrix over Q(sqrt q).
std::vector<std::vector<Coeff>> nullspace(std::vector<std::vector<Coeff>> rows, int ncols, int q);

// Span of all products of generators (each homogeneous) of total degree d.
class GeneratedSubalgebra {
 public:
  GeneratedSubalgebra(HallAlgebra& A, std::vector<HallElement> generators);
  const std::vector<HallElement>& basis(const DimVector& d);
  int graded_dim(const DimVector& d) { return static_cast<int>(basis(d).size()); }

 private:
  HallAlgebra& A_;
  std::vector<std::pair<DimVector, HallElement>> gens_;
  std::map<DimVector, std::vector<HallElement>> memo_;
};

int subalgebra_graded_dim(HallAlgebra& A, const std::vector<HallElement>& generators, const DimVector& degree);

}  // namespace hallq
