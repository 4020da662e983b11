#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wildsets {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  static BitVec unit(std::size_t n, std::size_t i);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true);
  void flip(std::size_t i) { w_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool is_zero() const;
  std::size_t popcount() const;
  /// Concatenation.
  BitVec append(const BitVec& o) const;

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend bool operator==(const BitVec& a, const BitVec& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
  friend bool operator<(const BitVec& a, const BitVec& b);

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Dense matrix over F_2 stored as rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix from_rows(std::size_t cols, const std::vector<BitVec>& rows);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }
  void append_row(const BitVec& v);

  BitMatrix transpose() const;
  BitVec mul(const BitVec& x) const;
  /// Reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> row_reduce();

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

std::size_t f2_rank(BitMatrix M);
/// Some x with M x = v, or nullopt when the system is inconsistent.
std::optional<BitVec> f2_solve(const BitMatrix& M, const BitVec& v);
/// Basis of {x : M x = 0}.
std::vector<BitVec> f2_nullspace(const BitMatrix& M);
/// Coefficients c with sum c_i * vecs[i] = target, or nullopt.
std::optional<BitVec> f2_combination(const std::vector<BitVec>& vecs, std::size_t dim, const BitVec& target);
/// Indices of a maximal independent subfamily, chosen greedily in order.
std::vector<std::size_t> f2_independent_subset(const std::vector<BitVec>& vecs, std::size_t dim);

}  // namespace wildsets
