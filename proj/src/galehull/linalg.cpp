#include "galehull/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace galehull::linalg {

RationalMatrix RationalMatrix::from_rows(std::span<const RationalPoint> rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("RationalMatrix: ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalPoint RationalMatrix::row(std::size_t r) const {
  return RationalPoint(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalPoint RationalMatrix::column(std::size_t c) const {
  RationalPoint out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalPoint RationalMatrix::operator*(const RationalPoint& x) const {
  if (x.size() != cols_) throw std::invalid_argument("RationalMatrix: dimension mismatch");
  RationalPoint out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c).raw() * x[c].raw();
    out[r] = Rational(std::move(acc));
  }
  return out;
}

EchelonForm reduced_row_echelon(const RationalMatrix& m) {
  EchelonForm out{m, {}};
  RationalMatrix& a = out.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(lead, c));
    const Rational inv = Rational(1) / a(lead, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(lead, c);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  return out;
}

namespace {

// Each row multiplied by the lcm of its denominators and divided by the gcd
// of its numerators.
std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).denominator());
    mpz_class g = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[r][c] = m(r, c).numerator() * (l / m(r, c).denominator());
      g = gcd(g, out[r][c]);
    }
    if (g > 1)
      for (auto& v : out[r]) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

}  // namespace

int rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  auto a = integer_rows(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class v = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return static_cast<int>(r);
}

std::vector<RationalPoint> null_space_basis(const RationalMatrix& m) {
  const EchelonForm e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalPoint> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalPoint v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

int affine_dimension(std::span<const RationalPoint> points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  const std::size_t dim = points.front().size();
  RationalMatrix diff(points.size() - 1, dim);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != dim) throw std::invalid_argument("affine_dimension: mixed dimensions");
    for (std::size_t c = 0; c < dim; ++c) diff(i - 1, c) = points[i][c] - points[0][c];
  }
  return rank(diff);
}

Rational dot(const RationalPoint& a, const RationalPoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(std::move(acc));
}

RationalPoint primitive_direction(const RationalPoint& v) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, x.denominator());
  mpz_class g = 0;
  std::vector<mpz_class> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].numerator() * (l / v[i].denominator());
    g = gcd(g, ints[i]);
  }
  RationalPoint out(v.size());
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(mpz_class(ints[i] / g), mpz_class(1));
  return out;
}

std::optional<Hyperplane> spanning_hyperplane(std::span<const RationalPoint> points, int ambient_dim) {
  if (ambient_dim < 1 || points.empty()) return std::nullopt;
  const auto d = static_cast<std::size_t>(ambient_dim);
  RationalMatrix system(points.size(), d + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) throw std::invalid_argument("spanning_hyperplane: point outside R^d");
    for (std::size_t c = 0; c < d; ++c) system(i, c) = points[i][c];
    system(i, d) = -1;
  }
  const auto basis = null_space_basis(system);
  if (basis.size() != 1) return std::nullopt;
  RationalPoint v = primitive_direction(basis.front());
  RationalPoint normal(v.begin(), v.begin() + ambient_dim);
  Rational offset = v[d];
  const auto lead = std::find_if(normal.begin(), normal.end(), [](const Rational& x) { return !x.is_zero(); });
  if (lead == normal.end()) return std::nullopt;
  if (lead->sign() < 0) {
    for (auto& x : normal) x = -x;
    offset = -offset;
  }
  return Hyperplane{std::move(normal), std::move(offset)};
}

namespace {

struct Tableau {
  RationalMatrix t;                 // m x (cols + 1), last column is the rhs
  std::vector<std::size_t> basis;   // basic column per row
  RationalPoint objective;          // reduced costs, last entry is the objective value

  std::size_t width() const { return t.cols() - 1; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / t(row, col);
    for (std::size_t c = 0; c < t.cols(); ++c) t(row, c) *= inv;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (r == row || t(r, col).is_zero()) continue;
      const Rational f = t(r, col);
      for (std::size_t c = 0; c < t.cols(); ++c) t(r, c) -= f * t(row, c);
    }
    if (!objective[col].is_zero()) {
      const Rational f = objective[col];
      for (std::size_t c = 0; c < t.cols(); ++c) objective[c] -= f * t(row, c);
    }
    basis[row] = col;
  }

  void set_objective(const RationalPoint& c) {
    objective.assign(t.cols(), Rational(0));
    for (std::size_t j = 0; j < t.cols(); ++j) {
      mpq_class acc = 0;
      for (std::size_t r = 0; r < t.rows(); ++r) acc += c[basis[r]].raw() * t(r, j).raw();
      objective[j] = Rational(std::move(acc));
      if (j < width()) objective[j] -= c[j];
    }
  }

  // Returns false when unbounded.
  bool optimize(std::size_t allowed_columns) {
    for (;;) {
      std::size_t enter = allowed_columns;
      for (std::size_t j = 0; j < allowed_columns; ++j)
        if (objective[j].sign() < 0) { enter = j; break; }
      if (enter == allowed_columns) return true;
      std::size_t leave = t.rows();
      Rational best;
      for (std::size_t r = 0; r < t.rows(); ++r) {
        if (t(r, enter).sign() <= 0) continue;
        Rational ratio = t(r, width()) / t(r, enter);
        if (leave == t.rows() || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == t.rows()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult maximize(const RationalMatrix& a, const RationalPoint& b, const RationalPoint& c) {
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();
  if (b.size() != m || c.size() != k) throw std::invalid_argument("maximize: dimension mismatch");

  Tableau tab;
  tab.t = RationalMatrix(m, k + m + 1);
  tab.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = b[r].sign() < 0;
    for (std::size_t j = 0; j < k; ++j) tab.t(r, j) = flip ? -a(r, j) : a(r, j);
    tab.t(r, k + r) = 1;
    tab.t(r, k + m) = flip ? -b[r] : b[r];
    tab.basis[r] = k + r;
  }

  RationalPoint phase1(k + m, Rational(0));
  for (std::size_t r = 0; r < m; ++r) phase1[k + r] = -1;
  tab.set_objective(phase1);
  tab.optimize(k + m);
  LpResult result;
  if (tab.objective[k + m].sign() < 0) return result;

  // Drive zero-valued artificials out of the basis where possible; rows where
  // that fails are redundant and keep their artificial at zero.
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < k) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (!tab.t(r, j).is_zero()) {
        tab.pivot(r, j);
        break;
      }
    }
  }

  RationalPoint phase2(k + m, Rational(0));
  std::copy(c.begin(), c.end(), phase2.begin());
  tab.set_objective(phase2);
  if (!tab.optimize(k)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.value = tab.objective[k + m];
  result.solution.assign(k, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    if (tab.basis[r] < k) result.solution[tab.basis[r]] = tab.t(r, k + m);
  return result;
}

}  // namespace galehull::linalg
