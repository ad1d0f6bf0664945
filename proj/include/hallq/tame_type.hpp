#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallq/quiver.hpp"

namespace hallq {

enum class TameFamily { A, D, E6, E7, E8 };

// Extended Dynkin data of a quiver: family, tube periods (only those > 1),
// the null root delta and an extending vertex.
struct TameType {
  TameFamily family = TameFamily::A;
  std::vector<int> params;   // A: (p, q) with p >= q; D: (n); E: empty
  int l = 0;                 // number of non-homogeneous tubes
  std::vector<int> periods;  // r_1 <= ... <= r_l
  DimVector delta;
  int extending_vertex = 0;
  // Vertex -> position in the standard labelling of the shape: the cycle
  // order for A, branch point(s) first then arms for D and E.
  std::vector<int> relabel;

  std::string name() const;
};

// Matches the underlying graph against the extended Dynkin shapes; nullopt
// for anything else. Throws InputError for a disconnected quiver.
std::optional<TameType> recognize_tame(const Quiver& Q);

}  // namespace hallq
