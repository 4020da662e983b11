#include "wildsets/bit_matrix.hpp"

#include <bit>

#include "wildsets/errors.hpp"

namespace wildsets {

BitVec BitVec::unit(std::size_t n, std::size_t i) {
  BitVec v(n);
  v.set(i);
  return v;
}

void BitVec::set(std::size_t i, bool v) {
  if (i >= n_) throw PreconditionError("bit index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (v)
    w_[i / 64] |= mask;
  else
    w_[i / 64] &= ~mask;
}

bool BitVec::is_zero() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BitVec BitVec::append(const BitVec& o) const {
  BitVec r(n_ + o.n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) r.set(i);
  for (std::size_t i = 0; i < o.n_; ++i)
    if (o.get(i)) r.set(n_ + i);
  return r;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.n_ != n_) throw PreconditionError("bit vector dimension mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

bool operator<(const BitVec& a, const BitVec& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.w_ < b.w_;
}

std::string BitVec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < n_; ++i) s += get(i) ? '1' : '0';
  return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

BitMatrix BitMatrix::from_rows(std::size_t cols, const std::vector<BitVec>& rows) {
  BitMatrix M(0, cols);
  for (const auto& r : rows) M.append_row(r);
  return M;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i) M.set(i, i);
  return M;
}

void BitMatrix::append_row(const BitVec& v) {
  if (v.size() != cols_) throw PreconditionError("row length does not match matrix width");
  rows_.push_back(v);
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix T(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) T.set(c, r);
  return T;
}

BitVec BitMatrix::mul(const BitVec& x) const {
  if (x.size() != cols_) throw PreconditionError("matrix-vector dimension mismatch");
  BitVec y(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    BitVec t = rows_[r];
    bool bit = false;
    for (std::size_t c = 0; c < cols_; ++c)
      if (t.get(c) && x.get(c)) bit = !bit;
    y.set(r, bit);
  }
  return y;
}

std::vector<std::size_t> BitMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows(); ++c) {
    std::size_t piv = r;
    while (piv < rows() && !rows_[piv].get(c)) ++piv;
    if (piv == rows()) continue;
    std::swap(rows_[r], rows_[piv]);
    for (std::size_t i = 0; i < rows(); ++i)
      if (i != r && rows_[i].get(c)) rows_[i] ^= rows_[r];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t f2_rank(BitMatrix M) { return M.row_reduce().size(); }

std::optional<BitVec> f2_solve(const BitMatrix& M, const BitVec& v) {
  if (v.size() != M.rows()) throw PreconditionError("right-hand side length does not match matrix rows");
  // Augment with v as an extra column.
  const std::size_t n = M.cols();
  BitMatrix A(0, n + 1);
  for (std::size_t r = 0; r < M.rows(); ++r) {
    BitVec row = M.row(r).append(BitVec(1));
    if (v.get(r)) row.set(n);
    A.append_row(row);
  }
  auto pivots = A.row_reduce();
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  BitVec x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (A.get(i, n)) x.set(pivots[i]);
  return x;
}

std::vector<BitVec> f2_nullspace(const BitMatrix& M) {
  BitMatrix A = M;
  auto pivots = A.row_reduce();
  const std::size_t n = M.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVec x(n);
    x.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (A.get(i, f)) x.set(pivots[i]);
    basis.push_back(x);
  }
  return basis;
}

std::optional<BitVec> f2_combination(const std::vector<BitVec>& vecs, std::size_t dim, const BitVec& target) {
  BitMatrix M(dim, vecs.size());
  for (std::size_t j = 0; j < vecs.size(); ++j) {
    if (vecs[j].size() != dim) throw PreconditionError("vector dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i)
      if (vecs[j].get(i)) M.set(i, j);
  }
  return f2_solve(M, target);
}

std::vector<std::size_t> f2_independent_subset(const std::vector<BitVec>& vecs, std::size_t dim) {
  std::vector<std::size_t> chosen;
  BitMatrix acc(0, dim);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    BitMatrix trial = acc;
    trial.append_row(vecs[i]);
    const std::size_t r = f2_rank(trial);
    if (r > rank) {
      acc = trial;
      rank = r;
      chosen.push_back(i);
    }
  }
  return chosen;
}

}  // namespace wildsets
