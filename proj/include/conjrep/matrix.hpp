// Dense matrices over an exact field, with the Gaussian elimination used by
// the commutant and intertwiner certificates. Degrees at this scale are
// small, so no sparse machinery.

#ifndef CONJREP_MATRIX_HPP_
#define CONJREP_MATRIX_HPP_

#include <cstdint>
#include <vector>

#include "conjrep/error.hpp"

namespace conjrep {

template <class Field>
class Matrix {
 public:
  using Scalar = typename Field::Scalar;

  Matrix(const Field& field, std::uint32_t rows, std::uint32_t cols)
      : field_(field),
        rows_(rows),
        cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, field.zero()) {}

  static Matrix identity(const Field& field, std::uint32_t n) {
    Matrix m(field, n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::uint32_t i, std::uint32_t j) {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Scalar& at(std::uint32_t i, std::uint32_t j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix dimension mismatch in product");
    Matrix out(field_, rows_, o.cols_);
    for (std::uint32_t i = 0; i < rows_; ++i) {
      for (std::uint32_t k = 0; k < cols_; ++k) {
        const Scalar& aik = at(i, k);
        if (field_.is_zero(aik)) continue;
        for (std::uint32_t j = 0; j < o.cols_; ++j) {
          out.at(i, j) += aik * o.at(k, j);
        }
      }
    }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& s : a_) {
      if (!field_.is_zero(s)) return false;
    }
    return true;
  }

 private:
  Field field_;
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::vector<Scalar> a_;
};

// Rank of a row-list over the field; destroys its input.
template <class Field>
std::uint32_t gaussian_rank(const Field& field,
                            std::vector<std::vector<typename Field::Scalar>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::uint32_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && field.is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto inv = field.inverse(rows[rank][col]);
    for (std::size_t j = col; j < cols; ++j) rows[rank][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || field.is_zero(rows[r][col])) continue;
      const auto factor = rows[r][col];
      for (std::size_t j = col; j < cols; ++j) {
        rows[r][j] -= factor * rows[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace conjrep

#endif  // CONJREP_MATRIX_HPP_
