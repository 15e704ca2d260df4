#ifndef SPG_ERROR_HPP
#define SPG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace spg {

/// Every domain failure the library can raise. The name of the kind is part of
/// the CLI and HTTP contract (it is printed verbatim on failures).
enum class ErrorKind {
  EmptyBlock,
  OverlappingBlocks,
  WrongCardinality,
  DisconnectedGraph,
  BadEdge,
  UnknownSymbol,
  DSetNotPresent,
  NotASpindle,
  NoSuchEdge,
  EdgeExists,
  SelfLoop,
  InvalidClf,
  DisconnectedInput,
  BadParameter,
  NoHamiltonianPath,
  BudgetExceeded,
  BudgetExhausted,
  SyntaxError,
  ValidationError,
};

std::string_view error_name(ErrorKind kind);

class SpgError : public std::runtime_error {
 public:
  SpgError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// A validation failure raised while reading a document; keeps the core error
/// that caused it.
class ValidationError : public SpgError {
 public:
  explicit ValidationError(const SpgError& cause)
      : SpgError(ErrorKind::ValidationError,
                 std::string(cause.name()) + ": " + cause.detail()),
        cause_(cause.kind()) {}

  ErrorKind cause() const noexcept { return cause_; }

 private:
  ErrorKind cause_;
};

}  // namespace spg

#endif  // SPG_ERROR_HPP
