// Row-sparse matrices over the rationals and column-span subspaces.
// Explicit zeros are never stored; every mutating entry-level operation
// restores that invariant.
#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "gldirac/rational.hpp"

namespace gldirac {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols);

  static RatMatrix identity(int n);
  static RatMatrix diagonal(const std::vector<Rat>& d);
  // Dense literal, mainly for tests and small fixtures.
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rat>> rows);
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
  static RatMatrix column(const std::vector<Rat>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rat& get(int r, int c) const;      // zero reference when absent
  void set(int r, int c, const Rat& v);    // erases on zero
  void add_to(int r, int c, const Rat& v);

  const std::map<int, Rat>& row(int r) const { return data_[r]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rat& c) const;
  bool operator==(const RatMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_; }
  bool operator!=(const RatMatrix& rhs) const { return !(*this == rhs); }

  bool is_zero() const;
  std::size_t nnz() const;
  Rat trace() const;

  // Commutator AB - BA; the workhorse of the centrality checks.
  RatMatrix commutator(const RatMatrix& rhs) const;

  RatMatrix submatrix(const std::vector<int>& rowIdx, const std::vector<int>& colIdx) const;
  RatMatrix columns(const std::vector<int>& colIdx) const;
  std::vector<Rat> column_vector(int c) const;

  static RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);
  static RatMatrix hstack(const RatMatrix& left, const RatMatrix& right);
  static RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

  std::string to_string() const;  // dense, row per line; debugging aid

 private:
  int rows_, cols_;
  std::vector<std::map<int, Rat>> data_;
  void check_index(int r, int c) const;
};

// A subspace of Q^ambient spanned by the columns of `basis`.  Columns are
// linearly independent after construction through exact-linalg routines;
// raw aggregate construction is allowed for callers that guarantee it.
struct Subspace {
  int ambient = 0;
  RatMatrix basis;  // ambient x dim

  int dim() const { return basis.cols(); }
  static Subspace zero(int ambient) {
    return Subspace{ambient, RatMatrix(ambient, 0)};
  }
  static Subspace full(int ambient) {
    return Subspace{ambient, RatMatrix::identity(ambient)};
  }
};

}  // namespace gldirac
