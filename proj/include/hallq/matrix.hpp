#pragma once

#include <vector>

#include "hallq/field.hpp"

namespace hallq {

// Dense matrix over a finite field, row-major.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  Elem& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  Elem operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Matrix identity(int n);
  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;
  auto operator<=>(const Matrix& o) const = default;
};

Matrix mul(const Field& F, const Matrix& A, const Matrix& B);
Matrix add(const Field& F, const Matrix& A, const Matrix& B);
Matrix transpose(const Matrix& A);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(const Field& F, Matrix& A);
int rank(const Field& F, Matrix A);
bool invertible(const Field& F, const Matrix& A);
Matrix inverse(const Field& F, const Matrix& A);

// Basis of {x : A x = 0}, one vector per row.
Matrix nullspace(const Field& F, const Matrix& A);

// Block matrix [[A, B], [0, C]].
Matrix upper_block(const Matrix& A, const Matrix& B, const Matrix& C);

// Block diagonal diag(A, B).
Matrix block_diag(const Matrix& A, const Matrix& B);

}  // namespace hallq
