#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clifford {

enum class ErrorKind {
  IndexOutOfRange,
  SignatureMismatch,
  ZeroMultivector,
  Singular,
  DimensionTooSmall,
  DimensionTooLarge,
  NotAVector,
  CollinearPlane,
  ZeroVector,
  NotUnitVersor,
  NotInEvenSubalgebra,
  ZeroQuaternion,
  WrongSignature,
  UnboundVariable,
  DomainError,
  DegenerateNormal,
  LexError,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Half-open byte range [begin, end) into a source line.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message,
        std::optional<Span> span = std::nullopt)
      : std::runtime_error(message), kind_(kind), span_(span) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<Span> &span() const noexcept { return span_; }
  void set_span(Span s) { span_ = s; }

  // Parse and lex failures are usage errors at the CLI level.
  bool is_syntax() const noexcept {
    return kind_ == ErrorKind::LexError || kind_ == ErrorKind::ParseError;
  }

private:
  ErrorKind kind_;
  std::optional<Span> span_;
};

} // namespace clifford
