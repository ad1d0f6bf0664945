#pragma once

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "hallq/cache.hpp"
#include "hallq/context.hpp"

namespace hallq {

class TameStructure;

// Field-independent module description: a sum of terms "k*X" with X one of
//   S<v> P<v> I<v>      simple, projective, injective at vertex v
//   root(d)             the unique indecomposable of a real root d
//   tube(t,s,len)       non-homogeneous tube t, regular socle s (1-based)
//   hom(slot,len)       homogeneous tube at a parameter slot (1-based)
//   0                   the zero module
struct SpecTerm {
  enum Kind { Simple, Projective, Injective, Root, Tube, Homogeneous, Zero } kind = Zero;
  std::string vertex;
  std::string dim;
  int a = 0, b = 0, c = 0;
  int mult = 1;
};

struct ModuleSpec {
  std::vector<SpecTerm> terms;
  std::string text;
  static ModuleSpec parse(const std::string& s);
  bool needs_tame() const;
};

// Builds the module over the context's field; the decomposition is checked
// against the requested summands. Throws InputError when the field has too
// few homogeneous slots.
IsoClass instantiate(const ModuleSpec& spec, HallContext& ctx, TameStructure* T = nullptr);

struct HallPolynomial {
  std::vector<std::string> specs;  // X3 then the factors top first
  std::vector<int> primes;
  std::vector<std::pair<int, mpz_class>> points;
  std::vector<mpq_class> coefficients;  // constant term first
  int validation = 0;
  std::string status;
  nlohmann::json to_json() const;
  std::string str() const;  // "x^2+2*x+1"
  mpq_class eval(const mpq_class& x) const;
};

using Evaluator = std::function<mpz_class(int q)>;

// Fits on k points, accepts after two consecutive successful predictions,
// then checks the held-out prime. Extends the prime list when a prediction
// fails. Throws ValidationFailure on a persistent mismatch or when a
// coefficient is not an integer.
HallPolynomial fit_polynomial(const Evaluator& f, std::vector<int> primes, int validation, int max_prime = 31);

// g^{X3}_{X1 ... Xm} as a function of q for specs over one quiver.
Evaluator hall_evaluator(QuiverPtr Q, const std::string& x3, const std::vector<std::string>& factors,
                         const Guards& guards = {}, HallCache* cache = nullptr);

// Lagrange coefficients (constant first) through the points.
std::vector<mpq_class> interpolate(const std::vector<std::pair<int, mpz_class>>& pts);

bool is_prime(int p);

}  // namespace hallq
