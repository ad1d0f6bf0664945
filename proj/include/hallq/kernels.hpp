#pragma once

#include <cstdint>
#include <vector>

#include "hallq/homology.hpp"

// Enumeration kernels. Each has a serial reference version and an OpenMP
// version; the public wrappers dispatch on parallel_enabled().
namespace hallq::kernels {

// Unit count in a space of square block maps (an endomorphism algebra).
std::uint64_t count_units_serial(const Field& F, const HomSpace& S);
std::uint64_t count_units_omp(const Field& F, const HomSpace& S);
std::uint64_t count_units(const Field& F, const HomSpace& S);

// Whether the algebra contains an idempotent e with e != 0, 1.
bool has_nontrivial_idempotent_serial(const Field& F, const HomSpace& S);
bool has_nontrivial_idempotent_omp(const Field& F, const HomSpace& S);
bool has_nontrivial_idempotent(const Field& F, const HomSpace& S);

// Smallest coordinate index (base q, first coordinate most significant) of an
// invertible element of a Hom space between equal dimension vectors, or -1.
std::int64_t first_invertible_serial(const Field& F, const HomSpace& S);
std::int64_t first_invertible_omp(const Field& F, const HomSpace& S);
std::int64_t first_invertible(const Field& F, const HomSpace& S);

// Helpers shared with other kernels.
void decode_index(std::uint64_t idx, int q, std::vector<Elem>& coords);
bool blocks_invertible(const Field& F, const HomSpace& S, const std::vector<Elem>& v, std::vector<Elem>& scratch);

}  // namespace hallq::kernels
