#pragma once

#include <cstdint>
#include <vector>

#include "mqmap/field.hpp"

namespace mqm {

using Vec = std::vector<Elem>;
using Matrix = std::vector<Vec>;  // row-major

// Reduced row echelon form over a finite field. `pivots[r]` is the pivot
// column of row r; zero rows are dropped.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
};

Echelon row_reduce(const Field& F, Matrix rows, std::size_t ncols);

// Basis of {c : A c = 0}, each vector scaled so its first nonzero entry is 1.
Matrix kernel(const Field& F, const Matrix& A, std::size_t ncols);

// v minus its projection onto the row space of `e`; zero on every pivot column.
Vec reduce(const Field& F, const Echelon& e, Vec v);

Vec vec_add(const Field& F, const Vec& a, const Vec& b);
Vec vec_scale(const Field& F, Elem s, const Vec& a);

}  // namespace mqm
