#pragma once

/**
 * @file dfa.hpp
 * @brief Deterministic automata over (p+1)-bit tuple symbols.
 *
 * A symbol (x_1, ..., x_p, y) is encoded as the integer whose binary digits,
 * most significant first, are x_1 ... x_p y. Transition functions are partial;
 * a missing (state, symbol) pair rejects.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "../berstel_table.hpp"

namespace fibpart {

/// A state of B_p written as p letters from {a, b, c, d}.
class StateLabel {
 public:
  StateLabel() = default;

  explicit StateLabel(std::string letters) : letters_(std::move(letters)) {
    for (char ch : letters_)
      if (ch < 'a' || ch > 'd') throw std::invalid_argument("StateLabel: letters must be in {a,b,c,d}");
  }

  /// Decodes a base-4 index, first letter most significant.
  static StateLabel from_code(std::uint64_t code, int p) {
    std::string s(static_cast<std::size_t>(p), 'a');
    for (int i = p - 1; i >= 0; --i) {
      s[static_cast<std::size_t>(i)] = static_cast<char>('a' + (code & 3U));
      code >>= 2;
    }
    return StateLabel(std::move(s));
  }

  static StateLabel uniform(char letter, int p) { return StateLabel(std::string(static_cast<std::size_t>(p), letter)); }

  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (char ch : letters_) c = (c << 2) | static_cast<std::uint64_t>(ch - 'a');
    return c;
  }

  std::size_t size() const { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  const std::string& str() const { return letters_; }

  std::size_t count(char letter) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
  }

  bool contains(char letter) const { return count(letter) > 0; }

  /// Every letter lies in `alphabet`.
  bool within(std::string_view alphabet) const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [&](char ch) { return alphabet.find(ch) != std::string_view::npos; });
  }

  /// Membership in {s1, s2}^p minus {s1^p, s2^p}.
  bool in_mixed(char s1, char s2) const {
    const char two[2] = {s1, s2};
    return within(std::string_view(two, 2)) && count(s1) > 0 && count(s2) > 0;
  }

  friend bool operator==(const StateLabel&, const StateLabel&) = default;
  friend auto operator<=>(const StateLabel&, const StateLabel&) = default;

 private:
  std::string letters_;
};

/// Partition of {a,b,c,d}^p: the accessible set {a,b}^p ∪ {a,c}^p ∪ {b,d}^p,
/// then the rest split on whether d occurs.
enum class StateClass { accessible, unreachable_without_d, unreachable_with_d };

inline StateClass classify_state(const StateLabel& s) {
  if (s.within("ab") || s.within("ac") || s.within("bd")) return StateClass::accessible;
  return s.contains('d') ? StateClass::unreachable_with_d : StateClass::unreachable_without_d;
}

inline std::string_view to_string(StateClass c) {
  switch (c) {
    case StateClass::accessible: return "accessible";
    case StateClass::unreachable_without_d: return "unreachable-without-d";
    case StateClass::unreachable_with_d: return "unreachable-with-d";
  }
  return "?";
}

struct TupleSymbol {
  std::uint32_t x_bits = 0;  // x_1 is the most significant of p bits
  std::uint8_t y = 0;

  std::uint32_t code() const { return (x_bits << 1) | y; }
  static TupleSymbol from_code(std::uint32_t code) { return {code >> 1, static_cast<std::uint8_t>(code & 1U)}; }

  int x(std::size_t i, int p) const { return static_cast<int>((x_bits >> (p - 1 - static_cast<int>(i))) & 1U); }

  /// x_1 .. x_p, y
  std::vector<int> bits(int p) const {
    std::vector<int> b(static_cast<std::size_t>(p) + 1);
    for (int i = 0; i < p; ++i) b[static_cast<std::size_t>(i)] = x(static_cast<std::size_t>(i), p);
    b.back() = y;
    return b;
  }

  friend bool operator==(const TupleSymbol&, const TupleSymbol&) = default;
};

struct Transition {
  std::uint32_t symbol;
  std::uint32_t target;
  friend bool operator==(const Transition&, const Transition&) = default;
};

class Dfa {
 public:
  Dfa() = default;

  Dfa(int p, std::vector<StateLabel> states, std::size_t initial, const std::vector<std::size_t>& accepting)
      : p_(p), states_(std::move(states)), initial_(initial), accepting_(states_.size(), false), out_(states_.size()) {
    if (p < 1) throw std::invalid_argument("Dfa: p must be positive");
    if (initial >= states_.size()) throw std::out_of_range("Dfa: initial state out of range");
    for (auto a : accepting) accepting_.at(a) = true;
  }

  int p() const { return p_; }
  std::size_t alphabet_size() const { return std::size_t{1} << (p_ + 1); }
  std::size_t size() const { return states_.size(); }
  const StateLabel& state(std::size_t i) const { return states_[i]; }
  const std::vector<StateLabel>& states() const { return states_; }
  std::size_t initial() const { return initial_; }
  bool is_accepting(std::size_t i) const { return accepting_[i]; }

  std::vector<std::size_t> accepting_states() const {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < accepting_.size(); ++i)
      if (accepting_[i]) r.push_back(i);
    return r;
  }

  /// Keeps each row sorted by symbol; rejects a second target for a symbol.
  void add_transition(std::size_t from, std::uint32_t symbol, std::size_t to) {
    if (from >= size() || to >= size()) throw std::out_of_range("Dfa: transition endpoint out of range");
    if (symbol >= alphabet_size()) throw std::out_of_range("Dfa: symbol outside alphabet");
    auto& row = out_[from];
    auto it = std::lower_bound(row.begin(), row.end(), symbol,
                               [](const Transition& t, std::uint32_t s) { return t.symbol < s; });
    if (it != row.end() && it->symbol == symbol) throw std::logic_error("Dfa: nondeterministic transition");
    row.insert(it, Transition{symbol, static_cast<std::uint32_t>(to)});
  }

  /// Bulk insertion for builders that already produce rows sorted by symbol.
  void set_row(std::size_t from, std::vector<Transition> row) {
    for (std::size_t k = 1; k < row.size(); ++k)
      if (row[k - 1].symbol >= row[k].symbol) throw std::logic_error("Dfa: row not strictly sorted by symbol");
    out_.at(from) = std::move(row);
  }

  std::span<const Transition> transitions(std::size_t i) const { return out_[i]; }

  std::size_t transition_count() const {
    std::size_t n = 0;
    for (const auto& row : out_) n += row.size();
    return n;
  }

  std::optional<std::size_t> step(std::size_t state, std::uint32_t symbol) const {
    const auto& row = out_[state];
    auto it = std::lower_bound(row.begin(), row.end(), symbol,
                               [](const Transition& t, std::uint32_t s) { return t.symbol < s; });
    if (it == row.end() || it->symbol != symbol) return std::nullopt;
    return it->target;
  }

  bool accepts(std::span<const std::uint32_t> word) const {
    std::size_t s = initial_;
    for (auto sym : word) {
      auto next = step(s, sym);
      if (!next) return false;
      s = *next;
    }
    return accepting_[s];
  }

  std::optional<std::size_t> find(const StateLabel& label) const {
    if (const auto code = label.code(); code < states_.size() && states_[code] == label) return code;  // product order
    auto it = std::find(states_.begin(), states_.end(), label);
    if (it == states_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - states_.begin());
  }

 private:
  int p_ = 1;
  std::vector<StateLabel> states_;
  std::size_t initial_ = 0;
  std::vector<bool> accepting_;
  std::vector<std::vector<Transition>> out_;
};

}  // namespace fibpart
