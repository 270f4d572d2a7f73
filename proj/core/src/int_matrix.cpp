#include "kerrep/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace kerrep {

IntMatrix::IntMatrix(int rows, int cols, long long fill)
    : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

long long& IntMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  return cells_[static_cast<std::size_t>(i) * cols_ + j];
}

long long IntMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  return cells_[static_cast<std::size_t>(i) * cols_ + j];
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const long long aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

IntMatrix mod_reduce(IntMatrix m, long long modulus) {
  if (modulus < 2) throw std::domain_error("modulus must be at least 2");
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      m.at(i, j) = ((m.at(i, j) % modulus) + modulus) % modulus;
    }
  }
  return m;
}

std::vector<long long> apply_row_vector(std::span<const long long> v, const IntMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows()) {
    throw std::invalid_argument("row vector length does not match matrix rows");
  }
  std::vector<long long> out(static_cast<std::size_t>(m.cols()), 0);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

namespace {

long long det_recursive(const IntMatrix& m, std::vector<int>& cols, int row) {
  if (cols.size() == 1) return m.at(row, cols[0]);
  long long det = 0;
  long long sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const int col = cols[k];
    const long long pivot = m.at(row, col);
    if (pivot != 0) {
      cols.erase(cols.begin() + k);
      det += sign * pivot * det_recursive(m, cols, row + 1);
      cols.insert(cols.begin() + k, col);
    }
    sign = -sign;
  }
  return det;
}

}  // namespace

long long determinant(const IntMatrix& m) {
  if (!m.square()) throw std::domain_error("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  std::vector<int> cols(m.cols());
  for (int j = 0; j < m.cols(); ++j) cols[j] = j;
  return det_recursive(m, cols, 0);
}

std::optional<IntMatrix> inverse_mod(const IntMatrix& m, long long modulus) {
  if (!m.square()) throw std::domain_error("inverse of a non-square matrix");
  if (modulus < 2) throw std::domain_error("modulus must be at least 2");
  const int n = m.rows();
  const long long det = ((determinant(m) % modulus) + modulus) % modulus;

  long long det_inv = -1;
  for (long long r = 0; r < modulus; ++r) {
    if (det * r % modulus == 1) {
      det_inv = r;
      break;
    }
  }
  if (det_inv < 0) return std::nullopt;

  // adjugate(i,j) = cofactor(j,i)
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(mr, mc) = m.at(r, c);
          ++mc;
        }
        ++mr;
      }
      const long long sign = ((i + j) % 2 == 0) ? 1 : -1;
      const long long cof = sign * determinant(minor);
      inv.at(i, j) = ((cof * det_inv % modulus) + modulus) % modulus;
    }
  }
  return inv;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace kerrep
