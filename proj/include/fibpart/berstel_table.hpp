#pragma once

// The four-state Berstel automaton over bit pairs (x, y). It accepts x × y
// exactly when [x]_F = [y]_F and y has no factor 11. States are a, b, c, d;
// a is initial, a and d are accepting. Missing (state, symbol) pairs reject.

#include <array>
#include <cstddef>
#include <cstdint>

namespace fibpart {

enum class Letter : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };

inline constexpr char letter_char(Letter l) { return static_cast<char>('a' + static_cast<int>(l)); }

struct BerstelEdge {
  Letter from;
  std::uint8_t x;
  std::uint8_t y;
  Letter to;
};

inline constexpr std::array<BerstelEdge, 8> kBerstelEdges{{
    {Letter::a, 0, 0, Letter::a},
    {Letter::a, 0, 1, Letter::b},
    {Letter::a, 1, 1, Letter::d},
    {Letter::b, 1, 0, Letter::c},
    {Letter::c, 0, 0, Letter::b},
    {Letter::c, 1, 1, Letter::b},
    {Letter::c, 1, 0, Letter::a},
    {Letter::d, 0, 0, Letter::a},
}};

using SmallMatrix4 = std::array<std::array<int, 4>, 4>;

/// Per-y transition multiplicities: entry (i, j) counts symbols (*, y) from i to j.
inline constexpr SmallMatrix4 kV0{{{1, 0, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}}};
inline constexpr SmallMatrix4 kV1{{{0, 1, 0, 1}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}};

constexpr SmallMatrix4 berstel_multiplicities(int y) {
  SmallMatrix4 m{};
  for (const auto& e : kBerstelEdges)
    if (e.y == y) ++m[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.to)];
  return m;
}

static_assert(berstel_multiplicities(0) == kV0, "edge table disagrees with V0");
static_assert(berstel_multiplicities(1) == kV1, "edge table disagrees with V1");

}  // namespace fibpart
