#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "hallq/config.hpp"
#include "hallq/representation.hpp"

namespace hallq {

struct HomExt {
  int hom = 0;
  int ext = 0;
};

// Hom(M, N) as a subspace of C0 = sum_i Hom(M_i, N_i), each block row-major
// (N_i x M_i), blocks in vertex order.
struct HomSpace {
  std::vector<int> rows, cols;      // per vertex: dim N_i, dim M_i
  std::vector<int> offset;          // start of each block in a coordinate vector
  int length = 0;                   // dim C0
  std::vector<std::vector<Elem>> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  // Per-vertex matrices of a coordinate vector in C0.
  std::vector<Matrix> blocks(const std::vector<Elem>& v) const;
  // Linear combination sum c_k basis_k.
  std::vector<Elem> combine(const Field& F, const std::vector<Elem>& c) const;
};

// The coboundary map C0 -> C1, f -> (f_tgt x^M - x^N f_src) per arrow.
// C1 = sum over arrows Hom(M_src, N_tgt), blocks row-major (N_tgt x M_src).
Matrix coboundary(const Representation& M, const Representation& N);

HomSpace hom_space(const Representation& M, const Representation& N);
HomExt hom_ext_dims(const Representation& M, const Representation& N);
int hom_dim(const Representation& M, const Representation& N);
int end_dim(const Representation& M);

// Middle term of the extension 0 -> N -> E -> M -> 0 given by a cocycle xi in C1:
// E_i = N_i + M_i and x^E = [[x^N, xi], [0, x^M]].
Representation extension(const Representation& M, const Representation& N, const std::vector<Elem>& xi);

// Cocycles spanning a complement of the coboundaries in C1; their span maps
// bijectively onto Ext^1(M, N).
struct ExtData {
  int c1_dim = 0;
  int coboundary_rank = 0;
  std::vector<std::vector<Elem>> complement;
};
ExtData ext_data(const Representation& M, const Representation& N);

// Exact isomorphism test: invariant prefilter, sampled search, then the full
// Hom space (guarded).
bool is_isomorphic(const Representation& M, const Representation& N, const Guards& g = {});
// An isomorphism M -> N as per-vertex matrices, if one exists.
std::optional<std::vector<Matrix>> find_isomorphism(const Representation& M, const Representation& N,
                                                    const Guards& g = {});

// Restriction of L to the subrepresentation spanned per vertex by the rows of
// bases[i]; the subspaces must be stable under the arrows.
Representation subrepresentation(const Representation& L, const std::vector<Matrix>& bases);

// For an indecomposable Z: if Z is a direct summand of L, a complement of it.
// Non-units of the local ring End Z form a subspace, so Z | L iff g f is a unit
// for some pair of basis maps f: Z -> L, g: L -> Z; the complement is ker g.
std::optional<Representation> split_summand(const Representation& L, const Representation& Z);

// Number of units of End(M), by exhaustive count (guarded).
mpz_class aut_order(const Representation& M, const Guards& g = {});

// True iff End(M) has no idempotent other than 0 and 1 (guarded).
bool is_indecomposable(const Representation& M, const Guards& g = {});

// A representation of dimension d with 0/1 entries whose endomorphism ring is
// the field (a brick), searching by increasing number of nonzero entries.
std::optional<Representation> find_brick(QuiverPtr Q, FieldPtr F, const DimVector& d, long long max_tries = 1 << 22);

// |GL_n(F_q)| and |G_d| = prod_i |GL_{d_i}|.
mpz_class gl_order(int q, int n);
mpz_class group_order(int q, const DimVector& d);
mpz_class qpow(int q, long long e);

}  // namespace hallq
