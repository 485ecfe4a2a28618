#include "rcc/gf2.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

#include "rcc/error.hpp"

namespace rcc::gf2 {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits; }

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw Error(ErrorCode::Malformed, "bit string may only contain 0 and 1");
    }
  }
  return v;
}

BitVector BitVector::from_indices(std::size_t size, std::span<const std::size_t> ones) {
  BitVector v(size);
  for (std::size_t i : ones) {
    if (i >= size) throw Error(ErrorCode::IndexMismatch, "bit index out of range");
    v.set(i);
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVector::reset() {
  for (Word& w : words_) w = 0;
}

bool BitVector::any() const {
  for (Word w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::optional<std::size_t> BitVector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return std::nullopt;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    Word w = words_[k];
    while (w != 0) {
      out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  assert(size_ == other.size_);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  assert(size_ == other.size_);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

bool dot(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::IndexMismatch, "dot product of vectors with different lengths");
  unsigned parity = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t k = 0; k < wa.size(); ++k) parity ^= static_cast<unsigned>(std::popcount(wa[k] & wb[k]));
  return (parity & 1U) != 0;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_text(std::string_view text) {
  std::vector<BitVector> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) rows.push_back(BitVector::from_string(line));
    start = end + 1;
  }
  if (rows.empty()) return {};
  BitMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(ErrorCode::Malformed, "matrix rows have different lengths");
    m.set_row(r, std::move(rows[r]));
  }
  return m;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].test(c)) v.set(r);
  }
  return v;
}

void BitMatrix::set_row(std::size_t r, BitVector v) {
  if (v.size() != cols_) throw Error(ErrorCode::IndexMismatch, "row length does not match column count");
  rows_[r] = std::move(v);
}

std::string BitMatrix::to_text() const {
  std::string out;
  for (const BitVector& r : rows_) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

BitMatrix transpose(const BitMatrix& m) {
  BitMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c : m.row(r).ones()) t.set(c, r);
  }
  return t;
}

BitVector row_combination(const BitVector& x, const BitMatrix& m) {
  if (x.size() != m.rows()) throw Error(ErrorCode::IndexMismatch, "combination vector length must equal row count");
  BitVector out(m.cols());
  for (std::size_t r : x.ones()) out ^= m.row(r);
  return out;
}

BitVector multiply(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) throw Error(ErrorCode::IndexMismatch, "vector length must equal column count");
  BitVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (dot(m.row(r), v)) out.set(r);
  }
  return out;
}

namespace {

// Reduced row echelon form built one input row at a time. Each incoming
// row is reduced against the current pivots; if anything survives, its
// first set bit becomes a new pivot and that column is cleared from the
// older pivot rows.
struct Echelon {
  std::vector<BitVector> rows;
  std::vector<BitVector> history;  // which input rows were summed into rows[k]
  std::vector<std::size_t> pivot_cols;

  Echelon(const BitMatrix& m, bool track_history) {
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      BitVector row = m.row(i);
      BitVector hist;
      if (track_history) {
        hist = BitVector(m.rows());
        hist.set(i);
      }
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (row.test(pivot_cols[k])) {
          row ^= rows[k];
          if (track_history) hist ^= history[k];
        }
      }
      const auto lead = row.first_set();
      if (!lead) continue;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].test(*lead)) {
          rows[k] ^= row;
          if (track_history) history[k] ^= hist;
        }
      }
      rows.push_back(std::move(row));
      if (track_history) history.push_back(std::move(hist));
      pivot_cols.push_back(*lead);
    }
  }
};

}  // namespace

std::size_t rank(const BitMatrix& m) { return Echelon(m, false).rows.size(); }

std::optional<BitVector> solve_row_combination(const BitMatrix& m, const BitVector& target) {
  if (target.size() != m.cols()) throw Error(ErrorCode::IndexMismatch, "target length must equal column count");
  const Echelon ech(m, true);
  BitVector residual = target;
  BitVector x(m.rows());
  for (std::size_t k = 0; k < ech.rows.size(); ++k) {
    if (residual.test(ech.pivot_cols[k])) {
      residual ^= ech.rows[k];
      x ^= ech.history[k];
    }
  }
  if (residual.any()) return std::nullopt;
  return x;
}

std::vector<BitVector> right_nullspace(const BitMatrix& m) {
  const Echelon ech(m, false);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<BitVector> basis;
  basis.reserve(m.cols() - ech.rows.size());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t k = 0; k < ech.rows.size(); ++k) {
      if (ech.rows[k].test(free)) v.set(ech.pivot_cols[k]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const BitMatrix& m, const BitVector& target) {
  if (target.size() != m.cols()) throw Error(ErrorCode::IndexMismatch, "target length must equal column count");
  for (const BitVector& v : right_nullspace(m)) {
    if (dot(v, target)) return false;
  }
  return true;
}

}  // namespace rcc::gf2
