#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "hallq/representation.hpp"

namespace hallq {

class IsoClass;

struct ClassData {
  Representation rep;  // canonical representative
  int uid = 0;         // unique within the owning context
  int end_dim = 0;
  int orbit_dim = 0;
  mpz_class aut;       // a_lambda
  std::vector<IsoClass> summands;  // sorted; left empty for indecomposables
  bool indecomposable = false;
};

// An isomorphism class, represented by its canonical representative. Two
// classes are equal iff their representatives are identical.
class IsoClass {
 public:
  IsoClass() = default;
  explicit IsoClass(std::shared_ptr<const ClassData> d) : d_(std::move(d)) {}

  bool valid() const { return static_cast<bool>(d_); }
  const Representation& rep() const { return d_->rep; }
  const DimVector& dim() const { return d_->rep.dim(); }
  int uid() const { return d_->uid; }
  int end_dim() const { return d_->end_dim; }
  int orbit_dim() const { return d_->orbit_dim; }
  const mpz_class& aut() const { return d_->aut; }
  // Indecomposable summands, sorted; {*this} for an indecomposable, {} for zero.
  std::vector<IsoClass> summands() const;
  bool indecomposable() const { return d_->indecomposable; }
  bool is_zero() const { return d_->rep.total_dim() == 0; }

  // Canonical text of the representative; stable across runs.
  std::string key() const { return d_->rep.key(); }
  // Short stable label: hash of the key plus the summand dimension vectors.
  std::string label() const;

  bool operator==(const IsoClass& o) const {
    return d_ == o.d_ || (d_->rep.field().q() == o.d_->rep.field().q() && d_->rep == o.d_->rep);
  }
  // Order by dimension vector, then by flattened representative.
  bool operator<(const IsoClass& o) const;

 private:
  std::shared_ptr<const ClassData> d_;
};

}  // namespace hallq
