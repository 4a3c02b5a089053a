// Dense exact matrices and the incremental row eliminator used by the solvers.
#pragma once

#include "ttow/field.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace ttow {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec &f, std::size_t n);
bool is_zero_vec(const Vec &v);

class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(const FieldSpec &f, std::size_t rows, std::size_t cols);
  static DenseMatrix identity(const FieldSpec &f, std::size_t n);
  static DenseMatrix from_rows(const FieldSpec &f,
                               const std::vector<Vec> &rows,
                               std::size_t cols = 0);
  static DenseMatrix from_ints(const FieldSpec &f,
                               const std::vector<std::vector<long long>> &rows);
  // Elementary matrix E_{ij} (0-based).
  static DenseMatrix unit(const FieldSpec &f, std::size_t n, std::size_t i,
                          std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec &field() const { return field_; }

  Scalar &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Scalar &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const Vec &data() const { return data_; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  DenseMatrix transpose() const;
  DenseMatrix operator*(const DenseMatrix &b) const;
  DenseMatrix operator+(const DenseMatrix &b) const;
  DenseMatrix operator-(const DenseMatrix &b) const;
  DenseMatrix scaled(const Scalar &s) const;
  Vec apply(const Vec &v) const; // M v
  DenseMatrix pow(unsigned k) const;
  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const DenseMatrix &b) const;
  bool operator!=(const DenseMatrix &b) const { return !(*this == b); }

private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  Vec data_;
};

// Incremental echelon form. Rows are streamed in; only the reduced basis is
// kept, so memory stays at rank x cols no matter how many rows arrive.
class RowReducer {
public:
  RowReducer(const FieldSpec &f, std::size_t ncols);
  ~RowReducer();
  RowReducer(RowReducer &&) noexcept;
  RowReducer &operator=(RowReducer &&) noexcept;
  RowReducer(const RowReducer &);
  RowReducer &operator=(const RowReducer &);

  // Returns true when the row was independent of the rows seen so far.
  bool add_row(const Vec &row);
  bool add_sparse_row(const std::vector<std::pair<std::size_t, Scalar>> &row);
  bool in_span(const Vec &row) const;

  std::size_t rank() const;
  std::size_t ncols() const;
  const FieldSpec &field() const { return field_; }
  // Reduced row echelon basis, rows ordered by pivot column.
  std::vector<Vec> basis() const;
  std::vector<std::size_t> pivots() const;
  // Canonical basis of {x : r.x = 0 for all rows r}: one vector per free
  // column f with x_f = 1 and zeros on the other free columns.
  std::vector<Vec> kernel() const;

  struct Impl;

private:
  FieldSpec field_;
  std::unique_ptr<Impl> impl_;
};

std::size_t rank(const DenseMatrix &m);
DenseMatrix rref(const DenseMatrix &m);
std::vector<Vec> nullspace(const DenseMatrix &m);
std::vector<Vec> left_nullspace(const DenseMatrix &m);
std::optional<DenseMatrix> inverse(const DenseMatrix &m);
// Canonical RREF basis of the span of the given vectors.
std::vector<Vec> span_basis(const FieldSpec &f, std::size_t n,
                            const std::vector<Vec> &vs);
bool same_span(const FieldSpec &f, std::size_t n, const std::vector<Vec> &a,
               const std::vector<Vec> &b);
bool span_contains(const FieldSpec &f, std::size_t n,
                   const std::vector<Vec> &big, const std::vector<Vec> &small);
// Coefficients c_0..c_n of det(x I - m), c_n = 1. Hessenberg method.
Vec charpoly(const DenseMatrix &m);

} // namespace ttow
