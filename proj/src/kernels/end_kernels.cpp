#include <omp.h>

#include <atomic>

#include "hallq/config.hpp"
#include "hallq/kernels.hpp"

namespace hallq {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }
void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

namespace kernels {

void decode_index(std::uint64_t idx, int q, std::vector<Elem>& coords) {
  for (int k = static_cast<int>(coords.size()) - 1; k >= 0; --k) {
    coords[k] = static_cast<Elem>(idx % q);
    idx /= q;
  }
}

namespace {

void combine_into(const Field& F, const HomSpace& S, const std::vector<Elem>& c, std::vector<Elem>& out) {
  std::fill(out.begin(), out.end(), 0);
  for (size_t k = 0; k < c.size(); ++k) {
    Elem x = c[k];
    if (!x) continue;
    const auto& b = S.basis[k];
    for (int j = 0; j < S.length; ++j)
      if (b[j]) out[j] = F.add(out[j], F.mul(x, b[j]));
  }
}

// Rank test of an n x n block copied into scratch.
bool square_invertible(const Field& F, const Elem* src, int n, std::vector<Elem>& A) {
  A.assign(src, src + n * n);
  for (int c = 0; c < n; ++c) {
    int s = -1;
    for (int i = c; i < n; ++i)
      if (A[i * n + c]) {
        s = i;
        break;
      }
    if (s < 0) return false;
    if (s != c)
      for (int j = 0; j < n; ++j) std::swap(A[s * n + j], A[c * n + j]);
    Elem iv = F.inv(A[c * n + c]);
    for (int i = c + 1; i < n; ++i) {
      Elem f = A[i * n + c];
      if (!f) continue;
      Elem m = F.neg(F.mul(f, iv));
      for (int j = c; j < n; ++j) A[i * n + j] = F.add(A[i * n + j], F.mul(m, A[c * n + j]));
    }
  }
  return true;
}

// e*e == e blockwise.
bool idempotent(const Field& F, const HomSpace& S, const std::vector<Elem>& e) {
  for (size_t b = 0; b < S.rows.size(); ++b) {
    int n = S.rows[b];
    const Elem* E = e.data() + S.offset[b];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Elem s = 0;
        for (int k = 0; k < n; ++k) s = F.add(s, F.mul(E[i * n + k], E[k * n + j]));
        if (s != E[i * n + j]) return false;
      }
  }
  return true;
}

bool is_identity(const HomSpace& S, const std::vector<Elem>& e) {
  for (size_t b = 0; b < S.rows.size(); ++b) {
    int n = S.rows[b];
    const Elem* E = e.data() + S.offset[b];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (E[i * n + j] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

bool is_zero(const std::vector<Elem>& e) {
  for (Elem x : e)
    if (x) return false;
  return true;
}

std::uint64_t space_size(int q, int dim) {
  std::uint64_t n = 1;
  for (int i = 0; i < dim; ++i) n *= static_cast<std::uint64_t>(q);
  return n;
}

}  // namespace

bool blocks_invertible(const Field& F, const HomSpace& S, const std::vector<Elem>& v, std::vector<Elem>& scratch) {
  for (size_t b = 0; b < S.rows.size(); ++b) {
    if (S.rows[b] != S.cols[b]) return false;
    if (S.rows[b] == 0) continue;
    if (!square_invertible(F, v.data() + S.offset[b], S.rows[b], scratch)) return false;
  }
  return true;
}

std::uint64_t count_units_serial(const Field& F, const HomSpace& S) {
  std::uint64_t total = space_size(F.q(), S.dim()), units = 0;
  std::vector<Elem> c(S.dim()), v(S.length), scratch;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_index(idx, F.q(), c);
    combine_into(F, S, c, v);
    if (blocks_invertible(F, S, v, scratch)) ++units;
  }
  return units;
}

std::uint64_t count_units_omp(const Field& F, const HomSpace& S) {
  const std::int64_t total = static_cast<std::int64_t>(space_size(F.q(), S.dim()));
  std::uint64_t units = 0;
#pragma omp parallel reduction(+ : units)
  {
    std::vector<Elem> c(S.dim()), v(S.length), scratch;
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      decode_index(static_cast<std::uint64_t>(idx), F.q(), c);
      combine_into(F, S, c, v);
      if (blocks_invertible(F, S, v, scratch)) ++units;
    }
  }
  return units;
}

std::uint64_t count_units(const Field& F, const HomSpace& S) {
  return parallel_enabled() ? count_units_omp(F, S) : count_units_serial(F, S);
}

bool has_nontrivial_idempotent_serial(const Field& F, const HomSpace& S) {
  std::uint64_t total = space_size(F.q(), S.dim());
  std::vector<Elem> c(S.dim()), v(S.length);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    decode_index(idx, F.q(), c);
    combine_into(F, S, c, v);
    if (idempotent(F, S, v) && !is_identity(S, v) && !is_zero(v)) return true;
  }
  return false;
}

bool has_nontrivial_idempotent_omp(const Field& F, const HomSpace& S) {
  const std::int64_t total = static_cast<std::int64_t>(space_size(F.q(), S.dim()));
  std::atomic<bool> found{false};
#pragma omp parallel
  {
    std::vector<Elem> c(S.dim()), v(S.length);
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t idx = 1; idx < total; ++idx) {
      if (found.load(std::memory_order_relaxed)) continue;
      decode_index(static_cast<std::uint64_t>(idx), F.q(), c);
      combine_into(F, S, c, v);
      if (idempotent(F, S, v) && !is_identity(S, v) && !is_zero(v)) found = true;
    }
  }
  return found;
}

bool has_nontrivial_idempotent(const Field& F, const HomSpace& S) {
  return parallel_enabled() ? has_nontrivial_idempotent_omp(F, S) : has_nontrivial_idempotent_serial(F, S);
}

std::int64_t first_invertible_serial(const Field& F, const HomSpace& S) {
  std::uint64_t total = space_size(F.q(), S.dim());
  std::vector<Elem> c(S.dim()), v(S.length), scratch;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_index(idx, F.q(), c);
    combine_into(F, S, c, v);
    if (blocks_invertible(F, S, v, scratch)) return static_cast<std::int64_t>(idx);
  }
  return -1;
}

std::int64_t first_invertible_omp(const Field& F, const HomSpace& S) {
  const std::int64_t total = static_cast<std::int64_t>(space_size(F.q(), S.dim()));
  std::int64_t best = total;
#pragma omp parallel
  {
    std::vector<Elem> c(S.dim()), v(S.length), scratch;
    std::int64_t local = total;
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      if (idx >= local) continue;
      decode_index(static_cast<std::uint64_t>(idx), F.q(), c);
      combine_into(F, S, c, v);
      if (blocks_invertible(F, S, v, scratch)) local = idx;
    }
#pragma omp critical
    if (local < best) best = local;
  }
  return best == total ? -1 : best;
}

std::int64_t first_invertible(const Field& F, const HomSpace& S) {
  return parallel_enabled() ? first_invertible_omp(F, S) : first_invertible_serial(F, S);
}

}  // namespace kernels
}  // namespace hallq
