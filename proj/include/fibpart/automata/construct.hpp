#pragma once

/**
 * @file construct.hpp
 * @brief The Berstel automaton B, its p-fold synchronized product B_p, and
 *        accessible restriction.
 *
 * B_p runs p copies of B on tracks (x^(i), y) sharing the y-track. Its states
 * are indexed by their base-4 code, so state order is lexicographic and the
 * per-y multiplicity matrices are Kronecker powers of those of B.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "../berstel_table.hpp"
#include "../errors.hpp"
#include "dfa.hpp"

namespace fibpart {

inline constexpr int kDefaultProductCap = 10;

inline Dfa berstel() {
  std::vector<StateLabel> states{StateLabel("a"), StateLabel("b"), StateLabel("c"), StateLabel("d")};
  Dfa dfa(1, std::move(states), 0, {0, 3});
  for (const auto& e : kBerstelEdges)
    dfa.add_transition(static_cast<std::size_t>(e.from), (static_cast<std::uint32_t>(e.x) << 1) | e.y,
                       static_cast<std::size_t>(e.to));
  return dfa;
}

namespace detail {

struct ComponentMove {
  std::uint8_t x;
  std::uint8_t to;
};

/// moves[letter][y]: the (x, destination) options of one copy of B.
inline std::array<std::array<std::vector<ComponentMove>, 2>, 4> berstel_moves() {
  std::array<std::array<std::vector<ComponentMove>, 2>, 4> moves;
  for (const auto& e : kBerstelEdges)
    moves[static_cast<std::size_t>(e.from)][e.y].push_back({e.x, static_cast<std::uint8_t>(e.to)});
  return moves;
}

}  // namespace detail

/// B_p with 4^p states in lexicographic order; initial a^p, accepting {a^p, d^p}.
inline Dfa product(int p, int cap = kDefaultProductCap) {
  if (p < 1) throw std::invalid_argument("product: p must be positive");
  if (p > cap) throw CapExceeded("product: p = " + std::to_string(p) + " exceeds cap " + std::to_string(cap));
  const std::uint64_t n = std::uint64_t{1} << (2 * p);
  std::vector<StateLabel> states;
  states.reserve(n);
  for (std::uint64_t code = 0; code < n; ++code) states.push_back(StateLabel::from_code(code, p));
  Dfa dfa(p, std::move(states), 0, {0, static_cast<std::size_t>(n - 1)});

  const auto moves = detail::berstel_moves();
  const auto up = static_cast<std::size_t>(p);
  std::vector<std::uint8_t> letters(up);
  std::vector<std::size_t> pick(up);
  std::vector<Transition> row;
  for (std::uint64_t code = 0; code < n; ++code) {
    for (std::size_t i = 0; i < up; ++i) letters[i] = static_cast<std::uint8_t>((code >> (2 * (up - 1 - i))) & 3U);
    row.clear();
    for (std::uint8_t y = 0; y < 2; ++y) {
      bool empty = false;
      for (std::size_t i = 0; i < up; ++i) empty = empty || moves[letters[i]][y].empty();
      if (empty) continue;
      // Odometer over each component's options.
      std::fill(pick.begin(), pick.end(), 0);
      while (true) {
        std::uint32_t xbits = 0;
        std::uint64_t target = 0;
        for (std::size_t i = 0; i < up; ++i) {
          const auto& mv = moves[letters[i]][y][pick[i]];
          xbits = (xbits << 1) | mv.x;
          target = (target << 2) | mv.to;
        }
        row.push_back(Transition{(xbits << 1) | y, static_cast<std::uint32_t>(target)});
        std::size_t i = up;
        while (i > 0 && ++pick[i - 1] == moves[letters[i - 1]][y].size()) pick[--i] = 0;
        if (i == 0) break;
      }
    }
    std::sort(row.begin(), row.end(), [](const Transition& a, const Transition& b) { return a.symbol < b.symbol; });
    dfa.set_row(code, row);
  }
  return dfa;
}

/// States reachable from the initial state, kept in their original relative order.
inline Dfa accessible(const Dfa& d) {
  std::vector<bool> seen(d.size(), false);
  std::queue<std::size_t> todo;
  seen[d.initial()] = true;
  todo.push(d.initial());
  while (!todo.empty()) {
    std::size_t s = todo.front();
    todo.pop();
    for (const auto& t : d.transitions(s))
      if (!seen[t.target]) {
        seen[t.target] = true;
        todo.push(t.target);
      }
  }
  std::vector<std::size_t> new_index(d.size(), SIZE_MAX);
  std::vector<StateLabel> states;
  std::vector<std::size_t> accepting;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (seen[i]) {
      new_index[i] = states.size();
      if (d.is_accepting(i)) accepting.push_back(states.size());
      states.push_back(d.state(i));
    }
  Dfa r(d.p(), std::move(states), new_index[d.initial()], accepting);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!seen[i]) continue;
    std::vector<Transition> row;
    row.reserve(d.transitions(i).size());
    for (const auto& t : d.transitions(i)) row.push_back({t.symbol, static_cast<std::uint32_t>(new_index[t.target])});
    r.set_row(new_index[i], std::move(row));
  }
  return r;
}

/// A_p: the accessible part of B_p.
inline Dfa accessible_product(int p, int cap = kDefaultProductCap) { return accessible(product(p, cap)); }

}  // namespace fibpart
