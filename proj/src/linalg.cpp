#include "mqmap/linalg.hpp"

#include <algorithm>

namespace mqm {

Echelon row_reduce(const Field& F, Matrix rows, std::size_t ncols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Elem scale = F.inv(rows[r][col]);
    for (auto& x : rows[r]) x = F.mul(x, scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Elem factor = F.neg(rows[i][col]);
      for (std::size_t j = 0; j < ncols; ++j)
        rows[i][j] = F.add(rows[i][j], F.mul(factor, rows[r][j]));
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

Matrix kernel(const Field& F, const Matrix& A, std::size_t ncols) {
  const Echelon e = row_reduce(F, A, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = F.neg(e.rows[r][free]);
    const auto first = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    const Elem scale = F.inv(*first);
    for (auto& x : v) x = F.mul(x, scale);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec reduce(const Field& F, const Echelon& e, Vec v) {
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const Elem c = v[e.pivots[r]];
    if (c == 0) continue;
    const Elem factor = F.neg(c);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.add(v[j], F.mul(factor, e.rows[r][j]));
  }
  return v;
}

Vec vec_add(const Field& F, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.add(a[i], b[i]);
  return out;
}

Vec vec_scale(const Field& F, Elem s, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(s, a[i]);
  return out;
}

}  // namespace mqm
