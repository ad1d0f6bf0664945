#pragma once

#include <cmath>
#include <string>

namespace hallq {

// Brute-force bounds, as base-2 logarithms of the number of objects scanned.
struct Guards {
  double enum_log2 = 24;  // q^{dim E_d}
  double hom_log2 = 20;   // q^{dim Hom}
};

inline double log2q(int q, long long exponent) { return static_cast<double>(exponent) * std::log2(static_cast<double>(q)); }

inline bool within(int q, long long exponent, double bound_log2) { return log2q(q, exponent) <= bound_log2 + 1e-9; }

// Selects the OpenMP kernels (default) or the serial reference kernels.
void set_parallel(bool on);
bool parallel_enabled();
void set_threads(int n);

}  // namespace hallq
