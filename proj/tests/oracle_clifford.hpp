// Test-only reference construction of Clifford algebra tables, deliberately
// independent of the library path it checks: words are normalized by repeated
// adjacent swaps/cancellations (bubble style) instead of the library's
// insertion-sort transposition count, and the basis enumeration is done with
// plain vector sorting.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "tenfold/superalgebra.hpp"

namespace oracle {

using tenfold::Index;
using tenfold::Rational;

/// Normalizes a word in generators 0..n-1 by one adjacent move at a time:
/// swap out-of-order neighbors (sign flips), cancel equal neighbors against
/// the generator square. Returns the sorted duplicate-free word and the sign.
inline std::pair<std::vector<int>, int> normalizeWord(std::vector<int> word,
                                                      const std::vector<int>& squares) {
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < word.size(); ++t) {
      if (word[t] == word[t + 1]) {
        sign *= squares[static_cast<std::size_t>(word[t])];
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(t),
                   word.begin() + static_cast<std::ptrdiff_t>(t) + 2);
        changed = true;
        break;
      }
      if (word[t] > word[t + 1]) {
        std::swap(word[t], word[t + 1]);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  return {std::move(word), sign};
}

/// All subsets of {0..n-1} as sorted index lists, ordered by size then
/// lexicographically.
inline std::vector<std::vector<int>> subsetBasis(int n) {
  std::vector<std::vector<int>> basis;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) s.push_back(b);
    basis.push_back(std::move(s));
  }
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return basis;
}

/// Reference Cl(p,q) table over the rationals.
inline tenfold::SuperAlgebra<Rational> cliffordTable(int p, int q) {
  const int n = p + q;
  std::vector<int> squares;
  for (int g = 0; g < n; ++g) squares.push_back(g < p ? 1 : -1);
  std::vector<std::vector<int>> basis = subsetBasis(n);
  const Index dim = static_cast<Index>(basis.size());

  auto indexOf = [&](const std::vector<int>& word) {
    for (Index k = 0; k < dim; ++k)
      if (basis[k] == word) return k;
    throw std::logic_error("oracle: word not in basis");
  };

  std::vector<std::uint8_t> parity(dim);
  for (Index k = 0; k < dim; ++k) parity[k] = basis[k].size() % 2;

  std::vector<std::vector<tenfold::VectorX<Rational>>> table(
      dim, std::vector<tenfold::VectorX<Rational>>(dim));
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      std::vector<int> word = basis[i];
      word.insert(word.end(), basis[j].begin(), basis[j].end());
      auto [norm, sign] = normalizeWord(std::move(word), squares);
      tenfold::VectorX<Rational> coords = tenfold::VectorX<Rational>::Zero(dim);
      coords[indexOf(norm)] = Rational(sign);
      table[i][j] = std::move(coords);
    }

  tenfold::VectorX<Rational> unit = tenfold::VectorX<Rational>::Zero(dim);
  unit[0] = 1;
  return tenfold::SuperAlgebra<Rational>::fromTable(std::move(parity), table, std::move(unit),
                                                    true);
}

/// Hamilton's table over basis (1, i, j, k), written out longhand.
inline tenfold::SuperAlgebra<Rational> quaternionTable() {
  // products[a][b] = (index, sign)
  constexpr int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  constexpr int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<tenfold::VectorX<Rational>>> table(
      4, std::vector<tenfold::VectorX<Rational>>(4));
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) {
      tenfold::VectorX<Rational> v = tenfold::VectorX<Rational>::Zero(4);
      v[idx[a][b]] = Rational(sgn[a][b]);
      table[a][b] = std::move(v);
    }
  tenfold::VectorX<Rational> unit = tenfold::VectorX<Rational>::Zero(4);
  unit[0] = 1;
  return tenfold::SuperAlgebra<Rational>::fromTable({0, 0, 0, 0}, table, std::move(unit), true);
}

}  // namespace oracle
