#pragma once

/**
 * @file matrices.hpp
 * @brief Transition matrices of automata, state orderings, and exact counting
 *        of accepted words.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "../bigint.hpp"
#include "../exactlin/sparse.hpp"
#include "../report.hpp"
#include "construct.hpp"
#include "dfa.hpp"

namespace fibpart {

/// Entry (i, j) counts the symbols carrying state i to state j.
using TransitionMatrix = SparseIntMatrix;

/// position -> state index
using StateOrdering = std::vector<std::size_t>;

inline StateOrdering identity_ordering(const Dfa& d) {
  StateOrdering o(d.size());
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = i;
  return o;
}

inline StateOrdering lex_ordering(const Dfa& d) {
  StateOrdering o = identity_ordering(d);
  std::stable_sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) { return d.state(a) < d.state(b); });
  return o;
}

inline TransitionMatrix transition_matrix(const Dfa& d, std::span<const std::size_t> ordering) {
  if (ordering.size() != d.size()) throw std::invalid_argument("transition_matrix: ordering has wrong length");
  std::vector<std::size_t> position(d.size(), SIZE_MAX);
  for (std::size_t k = 0; k < ordering.size(); ++k) {
    if (ordering[k] >= d.size() || position[ordering[k]] != SIZE_MAX)
      throw std::invalid_argument("transition_matrix: ordering is not a permutation");
    position[ordering[k]] = k;
  }
  std::vector<Triplet<std::int64_t>> t;
  t.reserve(d.transition_count());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (const auto& tr : d.transitions(i)) t.push_back({position[i], position[tr.target], 1});
  return TransitionMatrix(d.size(), d.size(), std::move(t));
}

inline TransitionMatrix transition_matrix(const Dfa& d) {
  const auto o = identity_ordering(d);
  return transition_matrix(d, o);
}

/// Counts only symbols whose y-component equals `y`.
inline TransitionMatrix symbol_count_matrix(const Dfa& d, int y) {
  std::vector<Triplet<std::int64_t>> t;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (const auto& tr : d.transitions(i))
      if (static_cast<int>(tr.symbol & 1U) == y) t.push_back({i, tr.target, 1});
  return TransitionMatrix(d.size(), d.size(), std::move(t));
}

struct BlockOrdering {
  StateOrdering order;
  std::size_t accessible = 0;      // leading block
  std::size_t without_d = 0;       // middle block, in adjacent swap pairs
  std::size_t with_d = 0;          // trailing block
};

/**
 * Ordering of B_p's states used to expose the block-triangular shape:
 * accessible states first (lexicographic); then d-free unreachable states by
 * non-increasing count of a, each adjacent to its b<->c swap partner (the
 * member whose first non-a letter is b comes first); then d-containing states
 * (lexicographic).
 */
inline BlockOrdering block_ordering(const Dfa& bp) {
  BlockOrdering out;
  std::vector<std::size_t> first, middle, last;
  for (std::size_t i = 0; i < bp.size(); ++i) {
    switch (classify_state(bp.state(i))) {
      case StateClass::accessible: first.push_back(i); break;
      case StateClass::unreachable_without_d: middle.push_back(i); break;
      case StateClass::unreachable_with_d: last.push_back(i); break;
    }
  }
  auto by_label = [&](std::size_t a, std::size_t b) { return bp.state(a) < bp.state(b); };
  std::sort(first.begin(), first.end(), by_label);
  std::sort(last.begin(), last.end(), by_label);

  auto swap_bc = [](const std::string& s) {
    std::string r = s;
    for (char& ch : r) ch = ch == 'b' ? 'c' : ch == 'c' ? 'b' : ch;
    return r;
  };
  auto b_first = [](const std::string& s) {
    auto pos = s.find_first_not_of('a');
    return pos != std::string::npos && s[pos] == 'b';
  };
  std::vector<std::size_t> leaders;
  for (auto i : middle)
    if (b_first(bp.state(i).str())) leaders.push_back(i);
  std::sort(leaders.begin(), leaders.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = bp.state(a).count('a'), cb = bp.state(b).count('a');
    return ca != cb ? ca > cb : bp.state(a) < bp.state(b);
  });
  std::vector<std::size_t> paired;
  for (auto i : leaders) {
    paired.push_back(i);
    auto partner = bp.find(StateLabel(swap_bc(bp.state(i).str())));
    if (!partner) throw std::logic_error("block_ordering: missing swap partner");
    paired.push_back(*partner);
  }
  if (paired.size() != middle.size()) throw std::logic_error("block_ordering: unpaired d-free state");

  out.accessible = first.size();
  out.without_d = paired.size();
  out.with_d = last.size();
  out.order = first;
  out.order.insert(out.order.end(), paired.begin(), paired.end());
  out.order.insert(out.order.end(), last.begin(), last.end());
  return out;
}

/**
 * Accepted-word counts A_0, A_1, ... by exact iterated vector-matrix products
 * (the matrix power is never formed).
 */
class AcceptedCounter {
 public:
  explicit AcceptedCounter(const Dfa& d) : dfa_(&d), vec_(d.size(), BigInt(0)), next_(d.size(), BigInt(0)) {
    vec_[d.initial()] = 1;
  }

  /// Count for the current length, then advance by one symbol.
  BigInt next() {
    BigInt accepted = 0;
    for (std::size_t i = 0; i < vec_.size(); ++i)
      if (dfa_->is_accepting(i)) accepted += vec_[i];
    for (auto& v : next_) v = 0;
    for (std::size_t i = 0; i < vec_.size(); ++i) {
      if (vec_[i] == 0) continue;
      for (const auto& t : dfa_->transitions(i)) next_[t.target] += vec_[i];
    }
    std::swap(vec_, next_);
    return accepted;
  }

 private:
  const Dfa* dfa_;
  std::vector<BigInt> vec_;
  std::vector<BigInt> next_;
};

/// A_0 .. A_{terms-1}
inline std::vector<BigInt> accepted_counts(const Dfa& d, std::size_t terms) {
  AcceptedCounter counter(d);
  std::vector<BigInt> out;
  out.reserve(terms);
  for (std::size_t k = 0; k < terms; ++k) out.push_back(counter.next());
  return out;
}

inline BigInt count_accepted(const Dfa& d, std::size_t length) { return accepted_counts(d, length + 1).back(); }

/**
 * Under block_ordering, the transition matrix U_p of B_p is block lower
 * triangular: [[T_p, 0, 0], [*, T', 0], [*, *, 0]] where T_p is the transition
 * matrix of A_p and T' is itself block lower triangular with diagonal blocks
 * [[0, 1], [1, 0]].
 */
inline Report verify_block_structure(int p, int cap = kDefaultProductCap) {
  const Dfa bp = product(p, cap);
  const BlockOrdering bo = block_ordering(bp);
  const TransitionMatrix u = transition_matrix(bp, bo.order);
  const Dfa ap = accessible(bp);
  const TransitionMatrix t = transition_matrix(ap, lex_ordering(ap));
  const std::size_t s1 = bo.accessible, s2 = s1 + bo.without_d;
  Report report("block structure, p = " + std::to_string(p));

  report.add("accessible block size", bo.accessible == ap.size(),
             std::to_string(bo.accessible) + " vs " + std::to_string(ap.size()));

  bool top_ok = true, top_zero = true, mid_zero = true, last_zero = true;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (const auto& e : u.row(i)) {
      if (i < s1) {
        if (e.col >= s1)
          top_zero = false;
        else if (t.at(i, e.col) != e.value)
          top_ok = false;
      } else if (i < s2) {
        if (e.col >= s2) mid_zero = false;
      } else if (e.col >= s2) {
        last_zero = false;
      }
    }
  for (std::size_t i = 0; i < s1 && top_ok; ++i)
    for (const auto& e : t.row(i)) top_ok = top_ok && u.at(i, e.col) == e.value;
  report.add("top-left block equals accessible matrix", top_ok);
  report.add("accessible rows have no entries right of their block", top_zero);
  report.add("d-free rows avoid d-containing columns", mid_zero);
  report.add("d-containing columns are empty", last_zero && mid_zero && top_zero);

  bool diag_ok = true, upper_zero = true;
  for (std::size_t k = 0; k < bo.without_d; k += 2) {
    const std::size_t r0 = s1 + k, r1 = r0 + 1;
    diag_ok = diag_ok && u.at(r0, r0) == 0 && u.at(r0, r1) == 1 && u.at(r1, r0) == 1 && u.at(r1, r1) == 0;
    for (std::size_t r : {r0, r1})
      for (const auto& e : u.row(r))
        if (e.col > r1 && e.col < s2) upper_zero = false;
  }
  report.add("swap-pair diagonal blocks are [[0,1],[1,0]]", diag_ok,
             std::to_string(bo.without_d / 2) + " pairs");
  report.add("d-free block is block lower triangular", upper_zero);
  return report;
}

}  // namespace fibpart
