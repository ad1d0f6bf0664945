#pragma once

#include "hallq/context.hpp"
#include "hallq/quiver.hpp"

namespace fx {

using namespace hallq;

inline QuiverPtr a1() { return std::make_shared<const Quiver>(std::vector<std::string>{"1"}, std::vector<Arrow>{}); }

inline QuiverPtr a2() { return Quiver::from_json(R"({"vertices":["1","2"],"arrows":[["a","1","2"]]})"); }

inline QuiverPtr a3() {
  return Quiver::from_json(R"({"vertices":["1","2","3"],"arrows":[["a","1","2"],["b","2","3"]]})");
}

inline QuiverPtr kronecker() {
  return Quiver::from_json(R"({"vertices":["1","2"],"arrows":[["a","1","2"],["b","1","2"]]})");
}

inline QuiverPtr a21() {
  return Quiver::from_json(R"({"vertices":["1","2","3"],"arrows":[["a","1","2"],["b","2","3"],["c","1","3"]]})");
}

inline QuiverPtr d4() {
  return Quiver::from_json(
      R"({"vertices":["1","2","3","4","5"],"arrows":[["a","1","3"],["b","2","3"],["c","4","3"],["d","5","3"]]})");
}

inline QuiverPtr e6() {
  return Quiver::from_json(
      R"({"vertices":["1","2","3","4","5","6","7"],"arrows":[["a","1","2"],["b","2","3"],["c","5","4"],["d","4","3"],["e","7","6"],["f","6","3"]]})");
}

inline DimVector dv(std::vector<int> v) { return DimVector(std::move(v)); }

// Representation from per-arrow row-major entry lists.
inline Representation rep(QuiverPtr Q, FieldPtr F, std::vector<int> d, std::vector<std::vector<int>> entries) {
  DimVector dim(d);
  std::vector<Matrix> m;
  for (int r = 0; r < Q->num_arrows(); ++r) {
    const auto& a = Q->arrows()[r];
    Matrix X(dim[a.tgt], dim[a.src]);
    for (size_t k = 0; k < X.a.size(); ++k) X.a[k] = static_cast<Elem>(entries[r][k]);
    m.push_back(X);
  }
  return Representation(Q, F, dim, m);
}

}  // namespace fx
