#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hallq/field.hpp"
#include "hallq/matrix.hpp"
#include "hallq/quiver.hpp"

namespace hallq {

// A representation: one (dim tgt) x (dim src) matrix per arrow.
class Representation {
 public:
  Representation() = default;
  Representation(QuiverPtr Q, FieldPtr F, DimVector dim, std::vector<Matrix> mats);

  static Representation zero(QuiverPtr Q, FieldPtr F, const DimVector& d);
  static Representation simple(QuiverPtr Q, FieldPtr F, int vertex);
  static Representation projective(QuiverPtr Q, FieldPtr F, int vertex);
  static Representation injective(QuiverPtr Q, FieldPtr F, int vertex);
  // Point of E_d with the given base-q index (first entry most significant).
  static Representation from_point(QuiverPtr Q, FieldPtr F, const DimVector& d, std::uint64_t index);

  const Quiver& quiver() const { return *Q_; }
  const QuiverPtr& quiver_ptr() const { return Q_; }
  const Field& field() const { return *F_; }
  const FieldPtr& field_ptr() const { return F_; }
  const DimVector& dim() const { return dim_; }
  const Matrix& mat(int arrow) const { return mats_[arrow]; }
  const std::vector<Matrix>& mats() const { return mats_; }
  int total_dim() const { return dim_.total(); }

  Representation direct_sum(const Representation& o) const;
  // Base change by g = (g_i): x_rho -> g_tgt x_rho g_src^{-1}.
  Representation transform(const std::vector<Matrix>& g) const;

  // Matrix entries, arrows in order, each row-major.
  std::vector<Elem> flatten() const;
  std::uint64_t point_index() const;

  nlohmann::json to_json() const;
  static Representation from_json(QuiverPtr Q, FieldPtr F, const nlohmann::json& j);
  // Compact deterministic text form "d=1,1;a=[[1]]".
  std::string key() const;

  bool compatible(const Representation& o) const;  // same quiver and field
  bool operator==(const Representation& o) const { return dim_ == o.dim_ && mats_ == o.mats_; }

 private:
  QuiverPtr Q_;
  FieldPtr F_;
  DimVector dim_;
  std::vector<Matrix> mats_;
};

// Paths of the quiver from u to w, as arrow index sequences (deterministic order).
std::vector<std::vector<int>> paths_between(const Quiver& Q, int u, int w);

}  // namespace hallq
