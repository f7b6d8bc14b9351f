#pragma once

// Graph properties of automata (strong connectivity, aperiodicity) and
// minimization by partition refinement.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

#include "dfa.hpp"

namespace fibpart {

namespace detail {

inline std::vector<bool> reachable_from(std::size_t start, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    for (auto t : adj[s])
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
  }
  return seen;
}

}  // namespace detail

/// One strongly connected component over all states, ignoring labels.
inline bool is_strongly_connected(const Dfa& d) {
  if (d.size() == 0) return false;
  std::vector<std::vector<std::size_t>> fwd(d.size()), bwd(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (const auto& t : d.transitions(i)) {
      fwd[i].push_back(t.target);
      bwd[t.target].push_back(i);
    }
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return all(detail::reachable_from(0, fwd)) && all(detail::reachable_from(0, bwd));
}

/// gcd of cycle lengths is 1. With BFS levels L, that gcd equals the gcd of
/// L(u) + 1 - L(v) over all edges u -> v.
inline bool is_aperiodic(const Dfa& d) {
  if (!is_strongly_connected(d)) throw std::invalid_argument("is_aperiodic: automaton is not strongly connected");
  std::vector<long> level(d.size(), -1);
  std::queue<std::size_t> todo;
  level[d.initial()] = 0;
  todo.push(d.initial());
  while (!todo.empty()) {
    std::size_t s = todo.front();
    todo.pop();
    for (const auto& t : d.transitions(s))
      if (level[t.target] < 0) {
        level[t.target] = level[s] + 1;
        todo.push(t.target);
      }
  }
  long g = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (const auto& t : d.transitions(i)) g = std::gcd(g, std::labs(level[i] + 1 - level[t.target]));
  return g == 1;
}

/**
 * Minimal DFA for the same language by Moore partition refinement.
 *
 * The partial transition function is completed with a rejecting sink for the
 * duration of the refinement; the sink's class (every state with an empty
 * future) is dropped again afterwards. Result states are numbered in BFS order
 * from the initial state, exploring symbols in increasing order, and each
 * keeps the label of its lowest-index member.
 */
inline Dfa minimize(const Dfa& d) {
  const std::size_t n = d.size();
  const std::size_t sink = n;
  const std::size_t sigma = d.alphabet_size();

  std::vector<std::uint32_t> dense((n + 1) * sigma, static_cast<std::uint32_t>(sink));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : d.transitions(i)) dense[i * sigma + t.symbol] = t.target;

  std::vector<std::uint32_t> cls(n + 1);
  for (std::size_t i = 0; i < n; ++i) cls[i] = d.is_accepting(i) ? 1 : 0;
  cls[sink] = 0;
  std::size_t classes = 0;
  {
    std::vector<bool> present(2, false);
    for (auto c : cls) present[c] = true;
    classes = static_cast<std::size_t>(present[0]) + static_cast<std::size_t>(present[1]);
  }

  std::vector<std::uint32_t> signature(sigma + 1);
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      signature[0] = cls[i];
      for (std::size_t a = 0; a < sigma; ++a) signature[a + 1] = cls[dense[i * sigma + a]];
      auto [it, inserted] = ids.emplace(signature, static_cast<std::uint32_t>(ids.size()));
      next[i] = it->second;
    }
    const bool stable = ids.size() == classes;
    cls = std::move(next);
    classes = ids.size();
    if (stable) break;
  }

  const std::uint32_t dead = cls[sink];
  std::vector<std::size_t> representative(classes, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i)
    if (representative[cls[i]] == SIZE_MAX) representative[cls[i]] = i;

  // Renumber live classes in BFS order from the initial class.
  std::vector<std::size_t> order;
  std::vector<std::size_t> new_id(classes, SIZE_MAX);
  if (cls[d.initial()] != dead) {
    std::queue<std::uint32_t> todo;
    new_id[cls[d.initial()]] = 0;
    order.push_back(cls[d.initial()]);
    todo.push(cls[d.initial()]);
    while (!todo.empty()) {
      std::uint32_t c = todo.front();
      todo.pop();
      const std::size_t rep = representative[c];
      for (std::size_t a = 0; a < sigma; ++a) {
        std::uint32_t tc = cls[dense[rep * sigma + a]];
        if (tc == dead || new_id[tc] != SIZE_MAX) continue;
        new_id[tc] = order.size();
        order.push_back(tc);
        todo.push(tc);
      }
    }
  }

  if (order.empty()) {
    // Empty language: a single rejecting state.
    return Dfa(d.p(), {d.state(d.initial())}, 0, {});
  }

  std::vector<StateLabel> states;
  std::vector<std::size_t> accepting;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t rep = representative[order[k]];
    states.push_back(d.state(rep));
    if (d.is_accepting(rep)) accepting.push_back(k);
  }
  Dfa m(d.p(), std::move(states), 0, accepting);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t rep = representative[order[k]];
    std::vector<Transition> row;
    for (std::size_t a = 0; a < sigma; ++a) {
      std::uint32_t tc = cls[dense[rep * sigma + a]];
      if (tc == dead) continue;
      row.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(new_id[tc])});
    }
    m.set_row(k, std::move(row));
  }
  return m;
}

}  // namespace fibpart
