#include "diagramkit/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace diagramkit {

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

SymMatrix::SymMatrix(const std::vector<std::vector<Rational>>& rows) : SymMatrix(rows.size()) {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (rows[i].size() != dim_) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < dim_; ++j) data_[i * dim_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (data_[i * dim_ + j] != data_[j * dim_ + i]) {
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
    }
  }
}

SymMatrix SymMatrix::from_integers(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (long v : rows[i]) q[i].emplace_back(v);
  }
  return SymMatrix(q);
}

SymMatrix SymMatrix::principal(std::span<const std::size_t> indices) const {
  SymMatrix out(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = 0; b < indices.size(); ++b) {
      out.data_[a * out.dim_ + b] = (*this)(indices[a], indices[b]);
    }
  }
  return out;
}

std::vector<Rational> SymMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != dim_) throw std::invalid_argument("dimension mismatch in multiply");
  std::vector<Rational> y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) y[i] += (*this)(i, j) * x[j];
  }
  return y;
}

SymMatrixBuilder::SymMatrixBuilder(std::size_t dim) : m_(dim) {}

void SymMatrixBuilder::set(std::size_t i, std::size_t j, const Rational& value) {
  m_.data_[i * m_.dim_ + j] = value;
  m_.data_[j * m_.dim_ + i] = value;
}

SymMatrix SymMatrixBuilder::build() && { return std::move(m_); }

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.zero) + "," +
         std::to_string(s.negative) + ")";
}

Signature signature(const SymMatrix& m) {
  // Work on the active trailing block a[k..n) of a dense copy.
  const std::size_t n = m.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }

  Signature sig;
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  while (!active.empty()) {
    std::optional<std::size_t> pivot;
    for (std::size_t p = 0; p < active.size(); ++p) {
      if (a[active[p]][active[p]] != 0) {
        pivot = p;
        break;
      }
    }
    if (!pivot) {
      // Zero diagonal: if some a[i][j] != 0, the congruence row_i += row_j,
      // col_i += col_j makes a[i][i] = 2 a[i][j] != 0.
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t p = 0; p < active.size() && !off; ++p) {
        for (std::size_t q = p + 1; q < active.size(); ++q) {
          if (a[active[p]][active[q]] != 0) {
            off = std::make_pair(p, q);
            break;
          }
        }
      }
      if (!off) {
        sig.zero += active.size();
        break;
      }
      const std::size_t i = active[off->first];
      const std::size_t j = active[off->second];
      for (std::size_t c : active) a[i][c] += a[j][c];
      for (std::size_t r : active) a[r][i] += a[r][j];
      pivot = off->first;
    }

    const std::size_t k = active[*pivot];
    const Rational d = a[k][k];
    if (d > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(*pivot));
    for (std::size_t r : active) {
      if (a[r][k] == 0) continue;
      const Rational factor = a[r][k] / d;
      for (std::size_t c : active) a[r][c] -= factor * a[k][c];
    }
  }
  return sig;
}

bool is_negative_definite(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] >= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      const Rational factor = a[r][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[r][c] -= factor * a[k][c];
    }
  }
  return true;
}

LinearSolution solve_linear(const SymMatrix& m, std::span<const Rational> rhs) {
  const std::size_t n = m.dim();
  if (rhs.size() != n) throw std::invalid_argument("rhs length does not match matrix dimension");

  // Augmented Gauss-Jordan to reduced row echelon form.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = rhs[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t c = col; c <= n; ++c) a[row][c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }

  const std::size_t rank = pivot_col.size();
  if (rank == n) {
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) x[pivot_col[r]] = a[r][n];
    return x;
  }

  SingularReport report;
  report.rank = rank;
  report.consistent = true;
  for (std::size_t r = rank; r < n; ++r) {
    if (a[r][n] != 0) report.consistent = false;
  }
  // Kernel vector from the first free column.
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  report.kernel.assign(n, Rational(0));
  report.kernel[free_col] = 1;
  for (std::size_t r = 0; r < rank; ++r) report.kernel[pivot_col[r]] = -a[r][free_col];
  return report;
}

}  // namespace diagramkit
