#ifndef SPG_TESTS_SUPPORT_HPP
#define SPG_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "spg/error.hpp"
#include "spg/spg.hpp"

namespace spg::testing {

/// d-set from 1-based labels, as written in prose ({1,2,3} -> symbols 0,1,2).
inline DSet one_based(std::initializer_list<Symbol> labels) {
  std::vector<Symbol> members;
  for (Symbol s : labels) members.push_back(s - 1);
  return DSet(std::move(members));
}

/// Singleton blocks joined in a path.
inline Spg path_spg(std::size_t n, std::size_t d, const std::vector<DSet>& sets) {
  std::vector<Block> blocks;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    blocks.push_back({sets[i]});
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  return Spg::make(SymbolSet(n), d, std::move(blocks), std::move(edges));
}

/// {12}-{23}-{13}: fails dimension reduction at F = {1}.
inline Spg triangle_path() {
  return path_spg(3, 2, {one_based({1, 2}), one_based({2, 3}), one_based({1, 3})});
}

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const SpgError& e) {
    return e.kind();
  }
  throw std::logic_error("expected an SpgError");
}

}  // namespace spg::testing

#endif  // SPG_TESTS_SUPPORT_HPP
