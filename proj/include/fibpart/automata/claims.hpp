#pragma once

/**
 * @file claims.hpp
 * @brief Machine checks of the structural transition claims about B_p.
 *
 * Each claim is restated here from first principles as an expected set of
 * labeled transitions (or a closure property) and compared against the
 * concrete transition relation of product(p). The expected sets are built
 * from the claim wording, never from the product construction itself.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "../report.hpp"
#include "construct.hpp"
#include "dfa.hpp"

namespace fibpart {

namespace detail {

using LabeledEdge = std::pair<std::uint32_t, std::uint64_t>;  // (symbol code, target state code)
using EdgeSet = std::set<LabeledEdge>;

inline std::uint32_t symbol_code(const std::vector<int>& x, int y) {
  std::uint32_t c = 0;
  for (int b : x) c = (c << 1) | static_cast<std::uint32_t>(b);
  return (c << 1) | static_cast<std::uint32_t>(y);
}

inline std::uint64_t label_code(const std::string& letters) { return StateLabel(letters).code(); }

inline EdgeSet actual_edges(const Dfa& bp, std::uint64_t state) {
  EdgeSet s;
  for (const auto& t : bp.transitions(state)) s.insert({t.symbol, t.target});
  return s;
}

/// Every label over `alphabet` of length p, lexicographic.
inline std::vector<StateLabel> labels_over(std::string_view alphabet, int p) {
  std::vector<StateLabel> out;
  std::string cur(static_cast<std::size_t>(p), alphabet.front());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cur.size()) {
      out.emplace_back(cur);
      return;
    }
    for (char ch : alphabet) {
      cur[i] = ch;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Per-position alternatives (x_i, s'_i) -> all combined labeled edges with the given y.
inline EdgeSet combine(const std::vector<std::vector<std::pair<int, char>>>& options, int y) {
  EdgeSet out;
  const std::size_t p = options.size();
  std::vector<int> x(p);
  std::string target(p, 'a');
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == p) {
      out.insert({symbol_code(x, y), label_code(target)});
      return;
    }
    for (auto [xi, si] : options[i]) {
      x[i] = xi;
      target[i] = si;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline std::string describe(const StateLabel& s, const std::string& why) { return s.str() + ": " + why; }

}  // namespace detail

/**
 * Checks the ten transition claims on B_p. Check names, in order:
 *   from-a^p, from-b^p, from-c^p, from-d^p, from-{a,b}-mixed, from-{a,c}-mixed,
 *   from-{b,d}-mixed, accessible-closed, unreachable-no-d-moves, unreachable-with-d-moves.
 * At p = 1 the three mixed-set claims and the mixed part of from-c^p are vacuous.
 */
inline Report verify_transition_claims(int p, int cap = kDefaultProductCap) {
  using detail::EdgeSet;
  const Dfa bp = product(p, cap);
  const auto up = static_cast<std::size_t>(p);
  auto code_of = [](const StateLabel& s) { return s.code(); };
  Report report("transition claims, p = " + std::to_string(p));

  // From a^p: the (0..0, 0) self-loop, and for every x the label (x, 1)
  // leading to the state with b where x_i = 0 and d where x_i = 1.
  {
    EdgeSet expected;
    expected.insert({detail::symbol_code(std::vector<int>(up, 0), 0), code_of(StateLabel::uniform('a', p))});
    std::vector<std::vector<std::pair<int, char>>> opts(up, {{0, 'b'}, {1, 'd'}});
    auto fan = detail::combine(opts, 1);
    expected.insert(fan.begin(), fan.end());
    bool ok = detail::actual_edges(bp, code_of(StateLabel::uniform('a', p))) == expected;
    report.add("from-a^p", ok, std::to_string(expected.size()) + " transitions expected");
  }

  // From b^p: a single transition, to c^p.
  {
    auto actual = detail::actual_edges(bp, code_of(StateLabel::uniform('b', p)));
    bool ok = actual.size() == 1 && actual.begin()->second == code_of(StateLabel::uniform('c', p));
    report.add("from-b^p", ok, std::to_string(actual.size()) + " transition(s)");
  }

  // From c^p: (x, 0) with x not constant -> b where x_i = 0, a where x_i = 1;
  // (0..0, 0) and (1..1, 1) -> b^p; (1..1, 0) -> a^p.
  {
    EdgeSet expected;
    std::vector<std::vector<std::pair<int, char>>> opts(up, {{0, 'b'}, {1, 'a'}});
    for (const auto& e : detail::combine(opts, 0)) {
      const std::uint32_t xbits = e.first >> 1;
      const std::uint32_t all_ones = (1U << up) - 1U;
      if (xbits != 0 && xbits != all_ones) expected.insert(e);
    }
    const bool mixed_vacuous = expected.empty();
    const auto bp_code = code_of(StateLabel::uniform('b', p));
    expected.insert({detail::symbol_code(std::vector<int>(up, 0), 0), bp_code});
    expected.insert({detail::symbol_code(std::vector<int>(up, 1), 1), bp_code});
    expected.insert({detail::symbol_code(std::vector<int>(up, 1), 0), code_of(StateLabel::uniform('a', p))});
    bool ok = detail::actual_edges(bp, code_of(StateLabel::uniform('c', p))) == expected;
    report.add("from-c^p", ok,
               std::to_string(expected.size()) + " transitions expected" +
                   (mixed_vacuous ? "; non-constant-x part vacuous" : ""));
  }

  // From d^p: a single transition, to a^p.
  {
    auto actual = detail::actual_edges(bp, code_of(StateLabel::uniform('d', p)));
    bool ok = actual.size() == 1 && actual.begin()->second == code_of(StateLabel::uniform('a', p));
    report.add("from-d^p", ok, std::to_string(actual.size()) + " transition(s)");
  }

  // Mixed {a,b}: unique transition (x, 0); a -> (0, a), b -> (1, c); lands in mixed {a,c}.
  {
    std::size_t checked = 0;
    std::string failure;
    for (const auto& s : detail::labels_over("ab", p)) {
      if (!s.in_mixed('a', 'b')) continue;
      ++checked;
      std::vector<std::vector<std::pair<int, char>>> opts;
      for (std::size_t i = 0; i < up; ++i)
        opts.push_back(s[i] == 'a' ? std::vector<std::pair<int, char>>{{0, 'a'}} : std::vector<std::pair<int, char>>{{1, 'c'}});
      EdgeSet expected = detail::combine(opts, 0);
      bool in_target = StateLabel::from_code(expected.begin()->second, p).in_mixed('a', 'c');
      if (detail::actual_edges(bp, s.code()) != expected || !in_target) {
        failure = detail::describe(s, "unexpected transitions");
        break;
      }
    }
    report.add("from-{a,b}-mixed", failure.empty(),
               failure.empty() ? std::to_string(checked) + " states" : failure, checked == 0);
  }

  // Mixed {a,c}: with y = 0, a -> (0, a) and c -> (0, b) or (1, a);
  // with y = 1, a -> (0, b) or (1, d) and c -> (1, b).
  {
    std::size_t checked = 0;
    std::string failure;
    for (const auto& s : detail::labels_over("ac", p)) {
      if (!s.in_mixed('a', 'c')) continue;
      ++checked;
      std::vector<std::vector<std::pair<int, char>>> zero, one;
      for (std::size_t i = 0; i < up; ++i) {
        if (s[i] == 'a') {
          zero.push_back({{0, 'a'}});
          one.push_back({{0, 'b'}, {1, 'd'}});
        } else {
          zero.push_back({{0, 'b'}, {1, 'a'}});
          one.push_back({{1, 'b'}});
        }
      }
      EdgeSet expected = detail::combine(zero, 0);
      auto ones = detail::combine(one, 1);
      expected.insert(ones.begin(), ones.end());
      bool targets_ok = true;
      for (const auto& [sym, tgt] : expected) {
        auto t = StateLabel::from_code(tgt, p);
        targets_ok = targets_ok && ((sym & 1U) ? t.within("bd") : t.within("ab"));
      }
      if (detail::actual_edges(bp, s.code()) != expected || !targets_ok) {
        failure = detail::describe(s, "unexpected transitions");
        break;
      }
    }
    report.add("from-{a,c}-mixed", failure.empty(),
               failure.empty() ? std::to_string(checked) + " states" : failure, checked == 0);
  }

  // Mixed {b,d}: unique transition (x, 0); d -> (0, a), b -> (1, c); lands in mixed {a,c}.
  {
    std::size_t checked = 0;
    std::string failure;
    for (const auto& s : detail::labels_over("bd", p)) {
      if (!s.in_mixed('b', 'd')) continue;
      ++checked;
      std::vector<std::vector<std::pair<int, char>>> opts;
      for (std::size_t i = 0; i < up; ++i)
        opts.push_back(s[i] == 'd' ? std::vector<std::pair<int, char>>{{0, 'a'}} : std::vector<std::pair<int, char>>{{1, 'c'}});
      EdgeSet expected = detail::combine(opts, 0);
      bool in_target = StateLabel::from_code(expected.begin()->second, p).in_mixed('a', 'c');
      if (detail::actual_edges(bp, s.code()) != expected || !in_target) {
        failure = detail::describe(s, "unexpected transitions");
        break;
      }
    }
    report.add("from-{b,d}-mixed", failure.empty(),
               failure.empty() ? std::to_string(checked) + " states" : failure, checked == 0);
  }

  // No transition leaves the accessible set.
  {
    std::string failure;
    for (std::size_t i = 0; i < bp.size() && failure.empty(); ++i) {
      if (classify_state(bp.state(i)) != StateClass::accessible) continue;
      for (const auto& t : bp.transitions(i))
        if (classify_state(bp.state(t.target)) != StateClass::accessible) {
          failure = detail::describe(bp.state(i), "leaves to " + bp.state(t.target).str());
          break;
        }
    }
    report.add("accessible-closed", failure.empty(), failure);
  }

  // From an unreachable d-free state s, every transition either gains a's
  // without entering the d-containing class, or is the unique move to the
  // state obtained by swapping b and c.
  {
    std::size_t checked = 0;
    std::string failure;
    for (std::size_t i = 0; i < bp.size() && failure.empty(); ++i) {
      const StateLabel& s = bp.state(i);
      if (classify_state(s) != StateClass::unreachable_without_d) continue;
      ++checked;
      std::string swapped = s.str();
      for (char& ch : swapped) ch = ch == 'b' ? 'c' : ch == 'c' ? 'b' : ch;
      std::size_t swaps = 0;
      for (const auto& t : bp.transitions(i)) {
        const StateLabel& dst = bp.state(t.target);
        const bool gains = classify_state(dst) != StateClass::unreachable_with_d && dst.count('a') > s.count('a');
        const bool swap = dst.str() == swapped && classify_state(dst) == StateClass::unreachable_without_d;
        swaps += swap;
        if (!gains && !swap) {
          failure = detail::describe(s, "move to " + dst.str() + " is neither kind");
          break;
        }
      }
      if (failure.empty() && swaps != 1) failure = detail::describe(s, std::to_string(swaps) + " swap moves");
    }
    report.add("unreachable-no-d-moves", failure.empty(),
               failure.empty() ? std::to_string(checked) + " states" : failure, checked == 0);
  }

  // No transition between two d-containing unreachable states.
  {
    std::size_t checked = 0;
    std::string failure;
    for (std::size_t i = 0; i < bp.size() && failure.empty(); ++i) {
      if (classify_state(bp.state(i)) != StateClass::unreachable_with_d) continue;
      ++checked;
      for (const auto& t : bp.transitions(i))
        if (classify_state(bp.state(t.target)) == StateClass::unreachable_with_d) {
          failure = detail::describe(bp.state(i), "moves to " + bp.state(t.target).str());
          break;
        }
    }
    report.add("unreachable-with-d-moves", failure.empty(),
               failure.empty() ? std::to_string(checked) + " states" : failure, checked == 0);
  }

  return report;
}

}  // namespace fibpart
