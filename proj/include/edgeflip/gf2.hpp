#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "edgeflip/errors.hpp"

namespace edgeflip {

// Fixed-length GF(2) vector, bit-packed into 64-bit words. Addition is XOR
// (symmetric difference when read as a subset).
class GfVec {
 public:
  GfVec() = default;
  explicit GfVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static GfVec unit(std::size_t n, std::size_t i) {
    GfVec v(n);
    v.set(i);
    return v;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1u;
  }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  GfVec& operator^=(const GfVec& o) {
    if (o.size_ != size_) throw DimensionMismatch("GfVec sizes differ");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend GfVec operator^(GfVec a, const GfVec& b) { return a ^= b; }

  friend GfVec operator&(GfVec a, const GfVec& b) {
    if (a.size_ != b.size_) throw DimensionMismatch("GfVec sizes differ");
    for (std::size_t w = 0; w < a.words_.size(); ++w) a.words_[w] &= b.words_[w];
    return a;
  }

  bool operator==(const GfVec& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }
  bool operator!=(const GfVec& o) const { return !(*this == o); }
  bool operator<(const GfVec& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    for (std::size_t w = words_.size(); w-- > 0;)
      if (words_[w] != o.words_[w]) return words_[w] < o.words_[w];
    return false;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // Parity of the dot product <*this, o> over GF(2).
  bool dot(const GfVec& o) const {
    if (o.size_ != size_) throw DimensionMismatch("GfVec sizes differ");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1u;
  }

  int lowest_set() const {  // -1 when zero
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size_; ++i)
      if (test(i)) out.push_back(static_cast<int>(i));
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct GfVecHash {
  std::size_t operator()(const GfVec& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ v.size();
    for (auto w : v.words()) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Square GF(2) matrix stored as rows; acts on column vectors by M*x.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  explicit Gf2Matrix(std::size_t n) : rows_(n, GfVec(n)) {}

  static Gf2Matrix identity(std::size_t n) {
    Gf2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i);
    return m;
  }

  std::size_t dim() const { return rows_.size(); }
  GfVec& row(std::size_t i) { return rows_[i]; }
  const GfVec& row(std::size_t i) const { return rows_[i]; }

  bool get(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j) { rows_[i].set(j); }

  GfVec mul(const GfVec& x) const {
    if (x.size() != dim()) throw DimensionMismatch("matrix/vector dims differ");
    GfVec y(dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (rows_[i].dot(x)) y.set(i);
    return y;
  }

  // (A*B): row i of the product is the XOR of rows j of B with A[i][j]=1.
  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("matrix dims differ");
    Gf2Matrix c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (int j : a.rows_[i].to_indices()) c.rows_[i] ^= b.rows_[j];
    }
    return c;
  }

  bool operator==(const Gf2Matrix& o) const { return rows_ == o.rows_; }
  bool operator!=(const Gf2Matrix& o) const { return !(*this == o); }
  bool operator<(const Gf2Matrix& o) const { return key() < o.key(); }

  // Packed row words, used as a dedup/ordering key.
  std::vector<std::uint64_t> key() const {
    std::vector<std::uint64_t> k;
    k.reserve(dim());
    for (const auto& r : rows_)
      for (auto w : r.words()) k.push_back(w);
    return k;
  }

 private:
  std::vector<GfVec> rows_;
};

struct Gf2MatrixHash {
  std::size_t operator()(const Gf2Matrix& m) const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ m.dim();
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (auto w : m.row(i).words()) {
        h ^= w;
        h *= 0x100000001b3ull;
      }
    return static_cast<std::size_t>(h);
  }
};

// Incremental GF(2) column-space solver. Columns are added once; solve()
// expresses a target as a combination of the added columns, if possible.
class Gf2Solver {
 public:
  explicit Gf2Solver(std::size_t dim) : dim_(dim) {}

  std::size_t columns() const { return ncols_; }
  std::size_t rank() const { return pivots_.size(); }

  // Returns true if the column was independent of those already added.
  bool add_column(const GfVec& col) {
    if (col.size() != dim_) throw DimensionMismatch("column dim differs");
    if (ncols_ >= max_cols_) grow();
    GfVec v = col;
    GfVec combo(max_cols_);
    combo.set(ncols_);
    reduce(v, combo);
    ++ncols_;
    if (v.none()) return false;
    pivots_.push_back({v.lowest_set(), v, combo});
    return true;
  }

  // Column indices (in add order) summing to target, or nullopt if the
  // target is outside the span.
  std::optional<std::vector<int>> solve(const GfVec& target) const {
    if (target.size() != dim_) throw DimensionMismatch("target dim differs");
    GfVec v = target;
    GfVec combo(max_cols_);
    reduce(v, combo);
    if (v.any()) return std::nullopt;
    // Pivot combos are expressed over raw columns, so the accumulated combo
    // directly lists which added columns participate.
    auto idx = combo.to_indices();
    return std::vector<int>(idx.begin(), idx.end());
  }

  bool contains(const GfVec& target) const { return solve(target).has_value(); }

 private:
  struct Pivot {
    int bit;
    GfVec vec;
    GfVec combo;
  };

  void reduce(GfVec& v, GfVec& combo) const {
    for (const auto& p : pivots_) {
      if (v.test(p.bit)) {
        v ^= p.vec;
        GfVec c = p.combo;
        // combos may have been created at a smaller width
        for (int i : c.to_indices()) combo.flip(i);
      }
    }
  }

  void grow() {
    max_cols_ *= 2;
    for (auto& p : pivots_) {
      GfVec c(max_cols_);
      for (int i : p.combo.to_indices()) c.set(i);
      p.combo = c;
    }
  }

  std::size_t dim_;
  std::size_t ncols_ = 0;
  std::size_t max_cols_ = 64;
  std::vector<Pivot> pivots_;
};

}  // namespace edgeflip
