#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "loophw/scalar.hpp"

namespace loophw {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
void axpy(Vec& y, const Scalar& c, const Vec& x);  // y += c x
Vec scaled(Vec v, const Scalar& c);
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);

// Row-major sparse matrix; each row keeps entries sorted by column, no zeros.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }
  Scalar at(std::size_t i, std::size_t j) const;

  void add(std::size_t i, std::size_t j, const Scalar& v);
  void set_row(std::size_t i, std::vector<Entry> entries);  // entries sorted, nonzero

  Vec apply(const Vec& v) const;
  void apply_add(const Vec& v, const Scalar& c, Vec& out) const;  // out += c M v
  Vec column(std::size_t j) const;

  bool is_zero() const;
  SparseMatrix& operator+=(const SparseMatrix& o);
  SparseMatrix& operator-=(const SparseMatrix& o);
  SparseMatrix& operator*=(const Scalar& c);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(SparseMatrix a, const Scalar& c) { return a *= c; }
  friend SparseMatrix operator*(const Scalar& c, SparseMatrix a) { return a *= c; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  // a ⊗ b in the index order i_a * b.rows() + i_b.
  friend SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix matrix_power(const SparseMatrix& a, int n);
SparseMatrix divided_power(const SparseMatrix& a, int n);  // a^n / n!, zero for n < 0

// Row space in reduced row echelon form. Rows are kept sorted by pivot
// column; pivots are normalized to 1 and cleared from every other row.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : n_(ambient) {}

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Residual of v after eliminating every pivot column.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  // Adds v to the span; returns true when the dimension grew.
  bool insert(const Vec& v);
  // Coefficients of v (assumed in the span) against basis().
  Vec coordinates(const Vec& v) const;
  // Standard basis indices that are not pivots, ascending.
  std::vector<std::size_t> free_columns() const;

  static Subspace sum(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::vector<std::size_t>> support_;
  std::vector<std::size_t> pivots_;
};

Subspace span_of(std::size_t n, const std::vector<Vec>& vs);
// Vectors v with <row, v> = 0 for every row, as an RREF basis.
Subspace kernel(std::size_t n, const std::vector<Vec>& rows);

}  // namespace loophw
