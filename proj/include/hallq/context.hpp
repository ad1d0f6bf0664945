#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hallq/config.hpp"
#include "hallq/homology.hpp"
#include "hallq/isoclass.hpp"

namespace hallq {

enum class EnumMode { Auto, Brute, Catalog };

// Counts of (quotient class uid, sub class uid) over the x-stable graded
// subspaces of a fixed module with a fixed dimension vector.
struct HallTable {
  std::map<std::pair<int, int>, std::uint64_t> counts;
  std::uint64_t stable = 0;
};

// |Aut M| from dim End M and the sorted summand list, via the semisimple top
// of End M; every summand's own a-value must already be known.
mpz_class aut_from_summands(int q, int end, const std::vector<IsoClass>& summands);

struct OrbitTable;
struct CatalogTable;

// Iso-class machinery for one quiver over one field. Results are memoized, so
// a context is not safe for concurrent use; kernels parallelize internally.
class HallContext {
 public:
  HallContext(QuiverPtr Q, FieldPtr F, Guards g = {}, EnumMode mode = EnumMode::Auto);
  ~HallContext();
  HallContext(const HallContext&) = delete;
  HallContext& operator=(const HallContext&) = delete;

  const Quiver& quiver() const { return *Q_; }
  const QuiverPtr& quiver_ptr() const { return Q_; }
  const Field& field() const { return *F_; }
  const FieldPtr& field_ptr() const { return F_; }
  int q() const { return F_->q(); }
  const Guards& guards() const { return guards_; }
  EnumMode mode() const { return mode_; }

  // Complete sorted list of classes of dimension d.
  const std::vector<IsoClass>& classes(const DimVector& d);
  // Indecomposable classes of dimension d.
  const std::vector<IsoClass>& indecomposables(const DimVector& d);
  // Indecomposables of every nonzero dimension <= d, sorted.
  std::vector<IsoClass> indecomposables_upto(const DimVector& d);
  // Whether classes of d are found by orbit scan (true) or from the catalog.
  bool brute_at(const DimVector& d) const;

  // Class of an arbitrary representation of this quiver and field.
  IsoClass classify(const Representation& M);
  // Krull-Schmidt summands of M, sorted.
  std::vector<IsoClass> decompose(const Representation& M);

  IsoClass zero_class();
  IsoClass simple(int vertex);
  IsoClass direct_sum(const IsoClass& A, const IsoClass& B);
  IsoClass by_uid(int uid) const;

  // Memoized dim Hom between classes.
  int hom(const IsoClass& X, const IsoClass& Y);

  // Stable subspaces of L with dimension sub_dim, grouped by (quotient, sub).
  const HallTable& hall_table(const IsoClass& L, const DimVector& sub_dim);

  // Orbit table for d when d is in brute mode (point index -> position in classes(d)).
  const std::vector<std::int32_t>* orbit_table(const DimVector& d);

 private:
  friend struct CatalogTable;
  IsoClass make_class(Representation rep, std::vector<IsoClass> summands, bool indecomposable);
  void ensure(const DimVector& d);
  void build_brute(const DimVector& d);
  void build_catalog(const DimVector& d);
  void assign_summands_brute(const DimVector& d);
  std::vector<IsoClass> catalog_indecomposables(const DimVector& d);
  std::vector<IsoClass> peel(const Representation& M, const std::vector<IsoClass>& probes);
  std::vector<std::vector<IsoClass>> multisets(const DimVector& d, const std::vector<IsoClass>& indec);
  mpz_class aut_of(const Representation& rep, const std::vector<IsoClass>& summands, int end);

  QuiverPtr Q_;
  FieldPtr F_;
  Guards guards_;
  EnumMode mode_;
  int next_uid_ = 0;
  std::map<int, IsoClass> by_uid_;
  std::map<DimVector, std::vector<IsoClass>> classes_;
  std::map<DimVector, std::vector<IsoClass>> indec_;
  std::map<DimVector, std::unique_ptr<OrbitTable>> orbits_;
  std::map<DimVector, std::unique_ptr<CatalogTable>> catalogs_;
  std::map<std::pair<int, int>, int> hom_memo_;
  std::map<std::pair<int, DimVector>, HallTable> tables_;
  std::map<std::string, IsoClass> classify_memo_;
};

}  // namespace hallq
