#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "hallq/cache.hpp"
#include "hallq/context.hpp"

namespace hallq {

struct Target {
  IsoClass L;
  std::uint64_t g = 0;
};

// Filtration counts over one context. Results are memoized in memory and,
// when a cache is attached, on disk.
class HallNumbers {
 public:
  explicit HallNumbers(HallContext& ctx, HallCache* cache = nullptr) : ctx_(ctx), cache_(cache) {}

  HallContext& context() { return ctx_; }

  // g^L_{MN}: stable subspaces W of L with W ~ N and L/W ~ M.
  std::uint64_t hall_number(const IsoClass& L, const IsoClass& M, const IsoClass& N);

  // Filtrations 0 = W_0 < ... < W_m = L with W_i/W_{i-1} ~ parts[m-i], so
  // parts[0] is the top factor. This is the coefficient of u_L in the
  // untwisted product u_{parts[0]} ... u_{parts[m-1]}.
  mpz_class iterated(const IsoClass& L, const std::vector<IsoClass>& parts);

  // Every L with g^L_{MN} > 0, sorted. Candidates are the middle terms of
  // all classes in Ext^1(M, N).
  std::vector<Target> extension_targets(const IsoClass& M, const IsoClass& N);

  // The target of largest orbit dimension; throws TheoryViolation if not unique.
  IsoClass generic_extension(const IsoClass& M, const IsoClass& N);

  // g^L_{MN} = |Ext(M,N)_L| a_L / (|Hom(M,N)| a_M a_N), with |Ext(M,N)_L| the
  // number of extension classes whose middle term is L.
  mpq_class via_ext_oracle(const IsoClass& L, const IsoClass& M, const IsoClass& N);

  // Number of classes in Ext^1(M, N) with middle term in each class (keyed by uid).
  const std::map<int, std::uint64_t>& ext_class_counts(const IsoClass& M, const IsoClass& N);

 private:
  HallContext& ctx_;
  HallCache* cache_;
  std::map<std::pair<int, int>, std::map<int, std::uint64_t>> ext_memo_;
};

// A function on the points of E_d, indexed by Representation::point_index.
struct PointFunction {
  DimVector dim;
  std::vector<mpq_class> val;
};

// 1_[M]: the orbit of M found by closing under generators of G_d.
PointFunction orbit_indicator(const Representation& M, const Guards& g = {});

// (f o g)(x) = sum over x-stable W of f(x/W) g(W), f evaluated on quotients.
PointFunction convolve(const QuiverPtr& Q, const FieldPtr& F, const PointFunction& f, const PointFunction& g,
                       const Guards& guards = {});

namespace kernels {
PointFunction convolve_serial(const QuiverPtr& Q, const FieldPtr& F, const PointFunction& f, const PointFunction& g);
PointFunction convolve_omp(const QuiverPtr& Q, const FieldPtr& F, const PointFunction& f, const PointFunction& g);
}  // namespace kernels

// Value of 1_[M] o 1_[N] at a point of the orbit of L other than (in general)
// its canonical representative.
mpq_class convolution_coefficient(HallContext& ctx, const IsoClass& L, const IsoClass& M, const IsoClass& N,
                                  std::uint64_t seed = 1);

}  // namespace hallq
