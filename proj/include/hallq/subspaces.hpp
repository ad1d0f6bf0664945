#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hallq/representation.hpp"

namespace hallq {

// All k-dimensional subspaces of F_q^n as reduced row echelon bases.
struct SubspaceList {
  int n = 0, k = 0;
  std::vector<Matrix> bases;
  std::vector<std::vector<int>> pivots;
  std::vector<std::vector<int>> nonpivots;
  std::size_t size() const { return bases.size(); }
};

const SubspaceList& subspaces(const Field& F, int n, int k);
std::uint64_t gaussian_binomial(int q, int n, int k);

// The graded subspaces of L with a fixed dimension vector, indexed in mixed
// radix over the per-vertex subspace lists (vertex 0 most significant).
class GradedSubspaces {
 public:
  GradedSubspaces(const Representation& L, const DimVector& sub_dim);

  std::uint64_t count() const { return total_; }
  void choice(std::uint64_t index, std::vector<int>& out) const;
  bool stable(const std::vector<int>& choice, std::vector<Elem>& scratch) const;
  // Sub representation W and quotient L/W for a stable choice.
  std::pair<Representation, Representation> sub_and_quotient(const std::vector<int>& choice) const;

  const Representation& module() const { return L_; }

 private:
  const Representation& L_;
  DimVector sub_;
  std::vector<const SubspaceList*> lists_;
  std::uint64_t total_ = 1;
};

namespace kernels {
// Indices of the x-stable graded subspaces, in increasing order.
std::vector<std::uint64_t> stable_subspaces_serial(const GradedSubspaces& G);
std::vector<std::uint64_t> stable_subspaces_omp(const GradedSubspaces& G);
std::vector<std::uint64_t> stable_subspaces(const GradedSubspaces& G);
}  // namespace kernels

}  // namespace hallq
