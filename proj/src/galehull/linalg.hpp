#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "galehull/rational.hpp"

namespace galehull::linalg {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Rows must all have the same length.
  static RationalMatrix from_rows(std::span<const RationalPoint> rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalPoint row(std::size_t r) const;
  RationalPoint column(std::size_t c) const;
  RationalMatrix transpose() const;
  RationalPoint operator*(const RationalPoint& x) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  RationalMatrix reduced;             // reduced row-echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row, increasing
};

// Gauss-Jordan elimination over Q.
EchelonForm reduced_row_echelon(const RationalMatrix& m);

// Exact rank via fraction-free (Bareiss) elimination on the integer-scaled rows.
int rank(const RationalMatrix& m);

// Basis of {x : Mx = 0} read off the RREF: one vector per free column in
// increasing column order, with a 1 in that free column.
std::vector<RationalPoint> null_space_basis(const RationalMatrix& m);

// Dimension of the affine hull; -1 for an empty list.
int affine_dimension(std::span<const RationalPoint> points);

struct Hyperplane {
  RationalPoint normal;  // primitive integer vector, first nonzero entry positive
  Rational offset;       // normal . x == offset on the hyperplane
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

// The unique hyperplane through `points` when they affinely span one in
// R^ambient_dim; nothing otherwise.
std::optional<Hyperplane> spanning_hyperplane(std::span<const RationalPoint> points, int ambient_dim);

Rational dot(const RationalPoint& a, const RationalPoint& b);

// Scales a nonzero vector to a primitive integer vector with the same
// direction (positive multiple). Zero stays zero.
RationalPoint primitive_direction(const RationalPoint& v);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalPoint solution;
};

// maximize c.x  subject to  A x = b, x >= 0. Dense two-phase simplex over Q
// with Bland's rule, so it always terminates.
LpResult maximize(const RationalMatrix& a, const RationalPoint& b, const RationalPoint& c);

}  // namespace galehull::linalg
