#include "hsca/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hsca {

namespace {

struct Echelon {
  std::vector<std::vector<mpq_class>> rows;
  std::vector<int> pivot_col;  // per pivot row
  int cols = 0;
};

// Fraction-free Gaussian elimination (Bareiss) after clearing denominators
// row-wise, followed by normalization of the pivot rows to a reduced echelon
// form.  Deterministic: the pivot is always the first nonzero entry in
// column order.
Echelon echelonize(const RationalMatrix& a) {
  Echelon ech;
  if (a.empty()) return ech;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  ech.cols = cols;

  std::vector<std::vector<mpz_class>> m(rows);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(a[i].size()) != cols) {
      throw std::invalid_argument("linalg: ragged matrix");
    }
    mpz_class lcm = 1;
    std::vector<mpq_class> q(cols);
    for (int j = 0; j < cols; ++j) {
      q[j] = a[i][j].to_mpq();
      mpz_class den = q[j].get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / g * den;
    }
    m[i].resize(cols);
    for (int j = 0; j < cols; ++j) {
      m[i][j] = mpz_class(q[j].get_num() * (lcm / q[j].get_den()));
    }
  }

  // Forward pass: one-step Bareiss on the rows below each pivot.  The
  // division by the previous pivot is exact there (Sylvester's identity).
  mpz_class prev_pivot = 1;
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[pivot_row], m[sel]);
    const mpz_class pivot = m[pivot_row][col];
    for (int r = pivot_row + 1; r < rows; ++r) {
      for (int j = col + 1; j < cols; ++j) {
        mpz_class t = m[r][j] * pivot - m[r][col] * m[pivot_row][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
        m[r][j] = std::move(t);
      }
      m[r][col] = 0;
    }
    prev_pivot = pivot;
    ech.pivot_col.push_back(col);
    ++pivot_row;
  }

  // Back substitution in rational arithmetic to reach reduced echelon form.
  ech.rows.resize(pivot_row);
  for (int r = 0; r < pivot_row; ++r) {
    ech.rows[r].resize(cols);
    const mpz_class& pivot = m[r][ech.pivot_col[r]];
    for (int j = 0; j < cols; ++j) {
      mpq_class q(m[r][j], pivot);
      q.canonicalize();
      ech.rows[r][j] = std::move(q);
    }
  }
  for (int r = pivot_row - 1; r >= 0; --r) {
    for (int above = 0; above < r; ++above) {
      const mpq_class factor = ech.rows[above][ech.pivot_col[r]];
      if (factor == 0) continue;
      for (int j = ech.pivot_col[r]; j < cols; ++j) {
        ech.rows[above][j] -= factor * ech.rows[r][j];
      }
    }
  }
  return ech;
}

}  // namespace

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  const Echelon ech = echelonize(a);
  const int cols = ech.cols;
  std::vector<bool> is_pivot(cols, false);
  for (int c : ech.pivot_col) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v(cols, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
      const mpq_class& entry = ech.rows[r][free_col];
      if (entry != 0) v[ech.pivot_col[r]] = Rational(mpq_class(-entry));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const RationalMatrix& a) {
  return static_cast<int>(echelonize(a).pivot_col.size());
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  if (a.empty()) return RationalVector{};
  const int cols = static_cast<int>(a[0].size());
  RationalMatrix aug(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  const Echelon ech = echelonize(aug);
  RationalVector x(cols, Rational(0));
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    if (ech.pivot_col[r] == cols) return std::nullopt;  // 0 = 1 row
    x[ech.pivot_col[r]] = Rational(ech.rows[r][cols]);
  }
  return x;
}

std::optional<RationalMatrix> invert(const RationalMatrix& a) {
  const int n = static_cast<int>(a.size());
  RationalMatrix aug(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) {
      throw std::invalid_argument("invert: matrix not square");
    }
    aug[i] = a[i];
    aug[i].resize(2 * n, Rational(0));
    aug[i][n + i] = Rational(1);
  }
  const Echelon ech = echelonize(aug);
  if (static_cast<int>(ech.pivot_col.size()) < n) return std::nullopt;
  for (int r = 0; r < n; ++r) {
    if (ech.pivot_col[r] >= n) return std::nullopt;
  }
  RationalMatrix inv(n, RationalVector(n, Rational(0)));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) inv[ech.pivot_col[r]][j] = Rational(ech.rows[r][n + j]);
  }
  return inv;
}

}  // namespace hsca
