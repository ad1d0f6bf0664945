#include "hallq/matrix.hpp"

#include <stdexcept>

namespace hallq {

Matrix Matrix::identity(int n) {
  Matrix I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

bool Matrix::is_zero() const {
  for (Elem e : a)
    if (e) return false;
  return true;
}

Matrix mul(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch in mul");
  Matrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      Elem x = A(i, k);
      if (!x) continue;
      for (int j = 0; j < B.cols; ++j) {
        Elem y = B(k, j);
        if (y) C(i, j) = F.add(C(i, j), F.mul(x, y));
      }
    }
  return C;
}

Matrix add(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("matrix shape mismatch in add");
  Matrix C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
  return C;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
  return T;
}

std::vector<int> rref(const Field& F, Matrix& A) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int s = -1;
    for (int i = r; i < A.rows; ++i)
      if (A(i, c)) {
        s = i;
        break;
      }
    if (s < 0) continue;
    if (s != r)
      for (int j = 0; j < A.cols; ++j) std::swap(A(s, j), A(r, j));
    Elem iv = F.inv(A(r, c));
    for (int j = c; j < A.cols; ++j) A(r, j) = F.mul(A(r, j), iv);
    for (int i = 0; i < A.rows; ++i) {
      if (i == r) continue;
      Elem f = A(i, c);
      if (!f) continue;
      Elem nf = F.neg(f);
      for (int j = c; j < A.cols; ++j)
        if (A(r, j)) A(i, j) = F.add(A(i, j), F.mul(nf, A(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(const Field& F, Matrix A) { return static_cast<int>(rref(F, A).size()); }

bool invertible(const Field& F, const Matrix& A) { return A.rows == A.cols && rank(F, A) == A.rows; }

Matrix inverse(const Field& F, const Matrix& A) {
  int n = A.rows;
  Matrix M(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M(i, j) = A(i, j);
    M(i, n + i) = 1;
  }
  auto piv = rref(F, M);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1))
    throw std::invalid_argument("matrix is singular");
  Matrix R(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R(i, j) = M(i, n + j);
  return R;
}

Matrix nullspace(const Field& F, const Matrix& A) {
  Matrix R = A;
  auto piv = rref(F, R);
  std::vector<char> is_piv(A.cols, 0);
  for (int c : piv) is_piv[c] = 1;
  int nfree = A.cols - static_cast<int>(piv.size());
  Matrix N(nfree, A.cols);
  int k = 0;
  for (int f = 0; f < A.cols; ++f) {
    if (is_piv[f]) continue;
    N(k, f) = 1;
    for (size_t r = 0; r < piv.size(); ++r) N(k, piv[r]) = F.neg(R(static_cast<int>(r), f));
    ++k;
  }
  return N;
}

Matrix upper_block(const Matrix& A, const Matrix& B, const Matrix& C) {
  Matrix M(A.rows + C.rows, A.cols + C.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) M(i, j) = A(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) M(i, A.cols + j) = B(i, j);
  for (int i = 0; i < C.rows; ++i)
    for (int j = 0; j < C.cols; ++j) M(A.rows + i, A.cols + j) = C(i, j);
  return M;
}

Matrix block_diag(const Matrix& A, const Matrix& B) {
  return upper_block(A, Matrix(A.rows, B.cols), B);
}

}  // namespace hallq
