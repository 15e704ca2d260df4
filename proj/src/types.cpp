#include "spg/types.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "spg/error.hpp"

namespace spg {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyBlock: return "EmptyBlock";
    case ErrorKind::OverlappingBlocks: return "OverlappingBlocks";
    case ErrorKind::WrongCardinality: return "WrongCardinality";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::BadEdge: return "BadEdge";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::DSetNotPresent: return "DSetNotPresent";
    case ErrorKind::NotASpindle: return "NotASpindle";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::EdgeExists: return "EdgeExists";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::InvalidClf: return "InvalidClf";
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NoHamiltonianPath: return "NoHamiltonianPath";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

SymbolSubset::SymbolSubset(std::vector<Symbol> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw SpgError(ErrorKind::WrongCardinality,
                   "repeated symbol in " + format_subset(from_sorted(members_)));
  }
}

SymbolSubset::SymbolSubset(std::initializer_list<Symbol> members)
    : SymbolSubset(std::vector<Symbol>(members)) {}

SymbolSubset SymbolSubset::from_sorted(std::vector<Symbol> members) {
  SymbolSubset s;
  s.members_ = std::move(members);
  return s;
}

bool SymbolSubset::contains(Symbol s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool SymbolSubset::includes(const SymbolSubset& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

bool SymbolSubset::is_disjoint(const SymbolSubset& other) const {
  return intersection_size(other) == 0;
}

std::size_t SymbolSubset::intersection_size(const SymbolSubset& other) const {
  std::size_t count = 0;
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

SymbolSubset SymbolSubset::intersect(const SymbolSubset& other) const {
  std::vector<Symbol> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

SymbolSubset SymbolSubset::unite(const SymbolSubset& other) const {
  std::vector<Symbol> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

SymbolSubset SymbolSubset::minus(const SymbolSubset& other) const {
  std::vector<Symbol> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

SymbolSubset SymbolSubset::symmetric_difference(const SymbolSubset& other) const {
  std::vector<Symbol> out;
  std::set_symmetric_difference(members_.begin(), members_.end(),
                                other.members_.begin(), other.members_.end(),
                                std::back_inserter(out));
  return from_sorted(std::move(out));
}

SymbolSubset SymbolSubset::without(Symbol s) const {
  std::vector<Symbol> out;
  out.reserve(members_.size());
  for (Symbol m : members_) {
    if (m != s) out.push_back(m);
  }
  return from_sorted(std::move(out));
}

SymbolSet::SymbolSet(std::size_t n) : n_(n) {}

SymbolSet::SymbolSet(std::size_t n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (labels_.empty()) return;
  if (labels_.size() != n_) {
    throw SpgError(ErrorKind::BadParameter,
                   "expected " + std::to_string(n_) + " labels, got " +
                       std::to_string(labels_.size()));
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw SpgError(ErrorKind::BadParameter, "symbol labels are not distinct");
  }
}

std::string SymbolSet::label(Symbol s) const {
  if (s < labels_.size()) return labels_[s];
  return std::to_string(s);
}

SymbolSubset SymbolSet::all() const {
  std::vector<Symbol> m(n_);
  for (std::size_t i = 0; i < n_; ++i) m[i] = static_cast<Symbol>(i);
  return SymbolSubset::from_sorted(std::move(m));
}

std::string format_subset(const SymbolSubset& set, const SymbolSet& symbols) {
  std::string out = "{";
  bool first = true;
  for (Symbol s : set) {
    if (!first) out += ',';
    out += symbols.label(s);
    first = false;
  }
  return out + "}";
}

std::string format_subset(const SymbolSubset& set) {
  return format_subset(set, SymbolSet{});
}

std::vector<SymbolSubset> all_subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<SymbolSubset> out;
  if (k > n) return out;
  std::vector<Symbol> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = static_cast<Symbol>(i);
  while (true) {
    out.push_back(SymbolSubset::from_sorted(current));
    // advance to the next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace spg
