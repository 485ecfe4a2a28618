#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rcc::gf2 {

/// Fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bits past size() in the last word are kept zero, so word-level
/// comparisons and popcounts need no masking.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size);

  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(std::string_view bits);
  static BitVector from_indices(std::size_t size, std::span<const std::size_t> ones);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  bool operator[](std::size_t i) const { return test(i); }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void reset();

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  std::optional<std::size_t> first_set() const;
  std::vector<std::size_t> ones() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::span<const Word> words() const { return words_; }

  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Inner product over GF(2). Sizes must agree.
bool dot(const BitVector& a, const BitVector& b);

/// Dense GF(2) matrix stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// One row per line of '0'/'1' characters; blank lines are ignored.
  static BitMatrix from_text(std::string_view text);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool operator()(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector column(std::size_t c) const;
  void set_row(std::size_t r, BitVector v);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  std::string to_text() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

BitMatrix transpose(const BitMatrix& m);

/// x * m, the XOR of the rows of m selected by x.
BitVector row_combination(const BitVector& x, const BitMatrix& m);

/// m * v.
BitVector multiply(const BitMatrix& m, const BitVector& v);

std::size_t rank(const BitMatrix& m);

/// Finds x with x * m = target. Deterministic for a fixed row order.
std::optional<BitVector> solve_row_combination(const BitMatrix& m, const BitVector& target);

/// Basis of { v : m * v = 0 }, one vector per free column in increasing order.
std::vector<BitVector> right_nullspace(const BitMatrix& m);

/// Row-space membership via orthogonality to the right nullspace.
bool in_row_space(const BitMatrix& m, const BitVector& target);

}  // namespace rcc::gf2
