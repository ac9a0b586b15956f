#include "wrc/matutil.hpp"

#include <algorithm>

namespace wrc {

Int int_det(IntMatrix mat) {
  size_t n = mat.size();
  if (n == 0) throw DomainError("BadParameter", "determinant of an empty matrix");
  Int sign = 1, prev = 1;
  for (size_t col = 0; col + 1 < n; ++col) {
    size_t piv = col;
    while (piv < n && mat[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(mat[piv], mat[col]);
      sign = -sign;
    }
    for (size_t row = col + 1; row < n; ++row) {
      for (size_t j = col + 1; j < n; ++j)
        mat[row][j] = (mat[col][col] * mat[row][j] - mat[row][col] * mat[col][j]) / prev;
      mat[row][col] = 0;
    }
    prev = mat[col][col];
  }
  return mat[n - 1][n - 1] * sign;
}

namespace {

template <typename M>
M minor_of(const M& mat, size_t drop_row, size_t drop_col) {
  M out;
  for (size_t r = 0; r < mat.size(); ++r) {
    if (r == drop_row) continue;
    typename M::value_type row;
    for (size_t c = 0; c < mat.size(); ++c)
      if (c != drop_col) row.push_back(mat[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

Int int_det_cofactor(const IntMatrix& mat) {
  if (mat.size() == 1) return mat[0][0];
  Int acc = 0;
  for (size_t c = 0; c < mat.size(); ++c) {
    Int term = mat[0][c] * int_det_cofactor(minor_of(mat, 0, c));
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

IntMatrix int_adjugate(const IntMatrix& mat) {
  size_t n = mat.size();
  if (n == 1) return {{Int(1)}};
  IntMatrix adj(n, std::vector<Int>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      Int cof = int_det_cofactor(minor_of(mat, r, c));
      adj[c][r] = ((r + c) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

LaurentPoly poly_det(const PolyMatrix& mat) {
  if (mat.empty()) throw DomainError("BadParameter", "determinant of an empty matrix");
  if (mat.size() == 1) return mat[0][0];
  int vars = mat[0][0].vars();
  LaurentPoly acc(vars);
  for (size_t c = 0; c < mat.size(); ++c) {
    if (mat[0][c].is_zero()) continue;
    LaurentPoly term = mat[0][c] * poly_det(minor_of(mat, 0, c));
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

PolyMatrix poly_adjugate(const PolyMatrix& mat) {
  size_t n = mat.size();
  int vars = mat[0][0].vars();
  if (n == 1) return {{LaurentPoly::constant(vars, 1)}};
  PolyMatrix adj(n, std::vector<LaurentPoly>(n, LaurentPoly(vars)));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      LaurentPoly cof = poly_det(minor_of(mat, r, c));
      adj[c][r] = ((r + c) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

}  // namespace wrc
