#include "hallq/isoclass.hpp"

#include <cstdio>

namespace hallq {

namespace {
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}
}  // namespace

std::string IsoClass::label() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "c%08llx", static_cast<unsigned long long>(fnv1a(key()) & 0xffffffffULL));
  std::string s = buf;
  s += '[';
  if (is_zero()) {
    s += '0';
  } else if (indecomposable()) {
    s += dim().str();
  } else {
    bool first = true;
    for (const auto& x : d_->summands) {
      if (!first) s += '+';
      first = false;
      s += x.dim().str();
    }
  }
  s += ']';
  return s;
}

std::vector<IsoClass> IsoClass::summands() const {
  if (indecomposable()) return {*this};
  return d_->summands;
}

bool IsoClass::operator<(const IsoClass& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return rep().flatten() < o.rep().flatten();
}

}  // namespace hallq
