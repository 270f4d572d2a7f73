#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kerrep {

/// Dense matrix of exact integers, sized for alphabet-scale work (m <= 9).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, long long fill = 0);
  static IntMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  long long& at(int i, int j);
  long long at(int i, int j) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> cells_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Every entry reduced to [0, modulus).
IntMatrix mod_reduce(IntMatrix m, long long modulus);

/// Row vector times matrix; exact integers.
std::vector<long long> apply_row_vector(std::span<const long long> v, const IntMatrix& m);

/// Exact determinant by cofactor expansion; fine at these sizes.
long long determinant(const IntMatrix& m);

/// Two-sided inverse modulo `modulus` when the determinant is a unit:
/// adjugate times det^{-1}, with det^{-1} found by scanning residues.
/// Absent when no residue inverts the determinant.
std::optional<IntMatrix> inverse_mod(const IntMatrix& m, long long modulus);

std::string to_string(const IntMatrix& m);

}  // namespace kerrep
