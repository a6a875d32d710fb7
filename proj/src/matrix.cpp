#include "gldirac/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gldirac {

namespace {
const Rat kZero = 0;
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative shape");
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[i][i] = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rat>& d) {
  RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows_; ++i)
    if (d[i] != 0) m.data_[i][i] = d[i];
  return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<Rat>> rows) {
  std::vector<std::vector<Rat>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  RatMatrix m(nr, nc);
  for (int r = 0; r < nr; ++r) {
    if (static_cast<int>(rows[r].size()) != nc)
      throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
    for (int c = 0; c < nc; ++c)
      if (rows[r][c] != 0) m.data_[r][c] = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::column(const std::vector<Rat>& v) {
  RatMatrix m(static_cast<int>(v.size()), 1);
  for (int r = 0; r < m.rows_; ++r)
    if (v[r] != 0) m.data_[r][0] = v[r];
  return m;
}

void RatMatrix::check_index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("RatMatrix: index (" + std::to_string(r) + "," +
                            std::to_string(c) + ") outside " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
}

const Rat& RatMatrix::get(int r, int c) const {
  check_index(r, c);
  auto it = data_[r].find(c);
  return it == data_[r].end() ? kZero : it->second;
}

void RatMatrix::set(int r, int c, const Rat& v) {
  check_index(r, c);
  if (v == 0)
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void RatMatrix::add_to(int r, int c, const Rat& v) {
  check_index(r, c);
  if (v == 0) return;
  auto [it, inserted] = data_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) data_[r].erase(it);
  }
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("RatMatrix: shape mismatch in product");
  RatMatrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    auto& orow = out.data_[r];
    for (const auto& [k, a] : data_[r])
      for (const auto& [c, b] : rhs.data_[k]) {
        auto [it, inserted] = orow.try_emplace(c, a * b);
        if (!inserted) it->second += a * b;
      }
    for (auto it = orow.begin(); it != orow.end();)
      it = it->second == 0 ? orow.erase(it) : std::next(it);
  }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("RatMatrix: shape mismatch in sum");
  RatMatrix out = *this;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : rhs.data_[r]) out.add_to(r, c, v);
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  return *this + rhs.scaled(-1);
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix out(rows_, cols_);
  if (c == 0) return out;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [cc, v] : data_[r]) out.data_[r][cc] = c * v;
  return out;
}

bool RatMatrix::is_zero() const {
  for (const auto& row : data_)
    if (!row.empty()) return false;
  return true;
}

std::size_t RatMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

Rat RatMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("RatMatrix: trace of non-square");
  Rat t = 0;
  for (int r = 0; r < rows_; ++r) {
    auto it = data_[r].find(r);
    if (it != data_[r].end()) t += it->second;
  }
  return t;
}

RatMatrix RatMatrix::commutator(const RatMatrix& rhs) const {
  return *this * rhs - rhs * *this;
}

RatMatrix RatMatrix::submatrix(const std::vector<int>& rowIdx,
                               const std::vector<int>& colIdx) const {
  std::map<int, int> colPos;
  for (int j = 0; j < static_cast<int>(colIdx.size()); ++j) {
    if (colIdx[j] < 0 || colIdx[j] >= cols_)
      throw std::out_of_range("RatMatrix::submatrix: column index");
    colPos[colIdx[j]] = j;
  }
  RatMatrix out(static_cast<int>(rowIdx.size()), static_cast<int>(colIdx.size()));
  for (int i = 0; i < static_cast<int>(rowIdx.size()); ++i) {
    if (rowIdx[i] < 0 || rowIdx[i] >= rows_)
      throw std::out_of_range("RatMatrix::submatrix: row index");
    for (const auto& [c, v] : data_[rowIdx[i]]) {
      auto it = colPos.find(c);
      if (it != colPos.end()) out.data_[i][it->second] = v;
    }
  }
  return out;
}

RatMatrix RatMatrix::columns(const std::vector<int>& colIdx) const {
  std::vector<int> allRows(rows_);
  for (int r = 0; r < rows_; ++r) allRows[r] = r;
  return submatrix(allRows, colIdx);
}

std::vector<Rat> RatMatrix::column_vector(int c) const {
  check_index(0, c);
  std::vector<Rat> v(rows_, Rat(0));
  for (int r = 0; r < rows_; ++r) {
    auto it = data_[r].find(c);
    if (it != data_[r].end()) v[r] = it->second;
  }
  return v;
}

RatMatrix RatMatrix::vstack(const RatMatrix& top, const RatMatrix& bottom) {
  if (top.cols_ != bottom.cols_)
    throw std::invalid_argument("RatMatrix::vstack: column mismatch");
  RatMatrix out(top.rows_ + bottom.rows_, top.cols_);
  for (int r = 0; r < top.rows_; ++r) out.data_[r] = top.data_[r];
  for (int r = 0; r < bottom.rows_; ++r) out.data_[top.rows_ + r] = bottom.data_[r];
  return out;
}

RatMatrix RatMatrix::hstack(const RatMatrix& left, const RatMatrix& right) {
  if (left.rows_ != right.rows_)
    throw std::invalid_argument("RatMatrix::hstack: row mismatch");
  RatMatrix out(left.rows_, left.cols_ + right.cols_);
  for (int r = 0; r < left.rows_; ++r) {
    out.data_[r] = left.data_[r];
    for (const auto& [c, v] : right.data_[r]) out.data_[r][left.cols_ + c] = v;
  }
  return out;
}

RatMatrix RatMatrix::kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int ar = 0; ar < a.rows_; ++ar)
    for (const auto& [ac, av] : a.data_[ar])
      for (int br = 0; br < b.rows_; ++br)
        for (const auto& [bc, bv] : b.data_[br])
          out.data_[ar * b.rows_ + br][ac * b.cols_ + bc] = av * bv;
  return out;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << '[';
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << rat_str(get(r, c));
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace gldirac
