#pragma once

/**
 * @file numeration.hpp
 * @brief Fibonacci numeration: f_n, [x]_F, canonical representations and r_F(n).
 *
 * Fibonacci numbers are indexed so the sequence is strictly increasing:
 *   f_1 = 1, f_2 = 2, f_{n+2} = f_{n+1} + f_n.
 * A binary word x = x_1 ... x_l is read most significant first:
 *   [x]_F = sum_i x_i f_{l-i+1}.
 * r_F(n) is the number of sets of distinct Fibonacci numbers summing to n.
 */

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "berstel_table.hpp"
#include "bigint.hpp"
#include "errors.hpp"

namespace fibpart {

/// Default ceiling on table-driven computations over 0 <= n < N.
inline constexpr std::uint64_t kDefaultDirectCap = 10'000'000;

class BitWord {
 public:
  BitWord() = default;

  explicit BitWord(std::string_view text) {
    bits_.reserve(text.size());
    for (char ch : text) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("BitWord: expected only '0'/'1'");
      bits_.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
  }

  explicit BitWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
      if (b > 1) throw std::invalid_argument("BitWord: bits must be 0 or 1");
  }

  /// The `length` low bits of `code`, most significant first.
  static BitWord from_code(std::uint64_t code, std::size_t length) {
    BitWord w;
    w.bits_.resize(length);
    for (std::size_t i = 0; i < length; ++i)
      w.bits_[i] = static_cast<std::uint8_t>((code >> (length - 1 - i)) & 1U);
    return w;
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  auto begin() const { return bits_.begin(); }
  auto end() const { return bits_.end(); }
  std::span<const std::uint8_t> bits() const { return bits_; }

  void push_back(int bit) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("BitWord: bits must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(bit));
  }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  /// Word rotated left by `k` positions.
  BitWord rotated(std::size_t k) const {
    BitWord w;
    if (bits_.empty()) return w;
    w.bits_.resize(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) w.bits_[i] = bits_[(i + k) % bits_.size()];
    return w;
  }

  bool has_factor_11() const {
    for (std::size_t i = 1; i < bits_.size(); ++i)
      if (bits_[i] == 1 && bits_[i - 1] == 1) return true;
    return false;
  }

  /// Membership in C_F: no factor 11 and no leading 0 (the empty word qualifies).
  bool is_canonical() const { return !has_factor_11() && (bits_.empty() || bits_.front() == 1); }

  /// Membership in 0*C_F.
  bool is_padded_canonical() const { return !has_factor_11(); }

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend auto operator<=>(const BitWord&, const BitWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// f_1 .. f_count as 64-bit values; throws once they would overflow.
inline std::vector<std::uint64_t> fib_table_u64(std::size_t count) {
  std::vector<std::uint64_t> f;
  f.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i < 2) {
      f.push_back(i + 1);
    } else {
      std::uint64_t next = 0;
      if (__builtin_add_overflow(f[i - 1], f[i - 2], &next))
        throw std::overflow_error("Fibonacci number exceeds 64 bits");
      f.push_back(next);
    }
  }
  return f;
}

/// Grow-on-demand f_1, f_2, ... (1-indexed).
class FibSequence {
 public:
  FibSequence() : values_{BigInt(1), BigInt(2)} {}

  const BigInt& operator()(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Fibonacci indices start at 1");
    while (values_.size() < n) values_.push_back(values_[values_.size() - 1] + values_[values_.size() - 2]);
    return values_[n - 1];
  }

  /// The unique l >= 1 with f_l <= n < f_{l+1}; requires n >= 1.
  std::size_t bracket(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("bracket requires n >= 1");
    std::size_t l = 1;
    while ((*this)(l + 1) <= n) ++l;
    return l;
  }

 private:
  std::vector<BigInt> values_;
};

inline BigInt fib(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Fibonacci indices start at 1");
  BigInt prev = 1, cur = 2;
  if (n == 1) return prev;
  for (std::size_t i = 2; i < n; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline BigInt eval_f(const BitWord& x) {
  BigInt total = 0;
  BigInt lo = 1, hi = 2;  // f_1, f_2; walk from the least significant bit
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i]) total += lo;
    BigInt next = lo + hi;
    lo = std::move(hi);
    hi = std::move(next);
  }
  return total;
}

/// The Zeckendorf word of n: greedy largest-Fibonacci-first.
inline BitWord canonical(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("canonical: n must be nonnegative");
  BitWord w;
  if (n == 0) return w;
  std::vector<BigInt> f{BigInt(1), BigInt(2)};
  while (f.back() <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  f.pop_back();  // now f.back() is the largest f_k <= n
  BigInt rest = n;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] <= rest) {
      w.push_back(1);
      rest -= f[i];
    } else {
      w.push_back(0);
    }
  }
  return w;
}

inline BitWord canonical(std::uint64_t n) { return canonical(BigInt(static_cast<unsigned long>(n))); }

/**
 * r_F(n) for all 0 <= n < limit by subset-sum dynamic programming:
 * Fibonacci numbers outer, targets inner descending.
 *
 * Entries are 64-bit: r_F(n) <= n + 1 and every intermediate count is a
 * sub-count of r_F(n), so nothing can overflow below 2^64.
 */
class PartitionTable {
 public:
  explicit PartitionTable(std::uint64_t limit, std::uint64_t cap = kDefaultDirectCap) {
    if (limit > cap)
      throw CapExceeded("partition table size " + std::to_string(limit) + " exceeds cap " +
                        std::to_string(cap));
    counts_.assign(limit, 0);
    if (limit == 0) return;
    counts_[0] = 1;
    std::uint64_t f = 1, g = 2;  // consecutive Fibonacci numbers
    while (f < limit) {
      for (std::uint64_t s = limit - 1; s >= f; --s) counts_[s] += counts_[s - f];
      std::uint64_t next = f + g;
      f = g;
      g = next;
    }
  }

  std::uint64_t limit() const { return counts_.size(); }
  std::uint64_t operator[](std::uint64_t n) const { return counts_.at(n); }
  BigInt count(std::uint64_t n) const { return BigInt(static_cast<unsigned long>(counts_.at(n))); }
  std::span<const std::uint64_t> values() const { return counts_; }

 private:
  std::vector<std::uint64_t> counts_;
};

/// r_F(n) via the subset-sum table (reference method).
inline BigInt count_partitions(std::uint64_t n, std::uint64_t cap = kDefaultDirectCap) {
  if (n >= cap) throw CapExceeded("count_partitions: n exceeds direct-computation cap");
  return PartitionTable(n + 1, cap).count(n);
}

/**
 * r_F(n) by transfer matrices: fix the y-track of the Berstel automaton to the
 * canonical word of n and count every x-track of the same length. Every
 * Fibonacci summand of n has index at most |canonical(n)|, so the accepted x
 * are exactly the representations of n.
 */
inline BigInt count_partitions_transfer(const BigInt& n) {
  const BitWord y = canonical(n);
  std::array<BigInt, 4> v{BigInt(1), BigInt(0), BigInt(0), BigInt(0)};
  for (auto bit : y) {
    const SmallMatrix4& m = bit ? kV1 : kV0;
    std::array<BigInt, 4> w{BigInt(0), BigInt(0), BigInt(0), BigInt(0)};
    for (std::size_t i = 0; i < 4; ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < 4; ++j)
        if (m[i][j] != 0) w[j] += v[i] * m[i][j];
    }
    v = std::move(w);
  }
  return v[static_cast<std::size_t>(Letter::a)] + v[static_cast<std::size_t>(Letter::d)];
}

inline BigInt count_partitions_transfer(std::uint64_t n) {
  return count_partitions_transfer(BigInt(static_cast<unsigned long>(n)));
}

}  // namespace fibpart
