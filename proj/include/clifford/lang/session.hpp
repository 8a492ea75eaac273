#pragma once

#include "clifford/calculus/expr.hpp"
#include "clifford/lang/parser.hpp"
#include "clifford/multivector.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace clifford::lang {

// Multivectors for ordinary expressions, scalar expression trees for
// curvature() results.
using Value = std::variant<Multivector, calculus::Expr>;

enum class OutputFormat { text, json };

struct Outcome {
  enum class Kind { value, binding, directive };

  Kind kind = Kind::value;
  std::optional<Value> value;
  // Bound name for bindings, acknowledgment text for directives.
  std::string message;
};

// One statement segment of a source line with its byte offset in that line.
struct Segment {
  std::string_view text;
  std::size_t offset = 0;
};

// Splits at ';' after stripping a '#' comment; blank segments are dropped.
std::vector<Segment> split_statements(std::string_view line);

// Single-threaded evaluator state. A statement either completes or leaves
// the session exactly as it was.
class Session {
public:
  // Throws clifford::Error; every error raised while evaluating carries
  // the span of the innermost offending node.
  Outcome execute(std::string_view statement);
  Value evaluate(const Ast &ast) const;

  Signature signature() const { return sig_; }
  void set_signature(Signature sig) { sig_ = sig; }
  Mode mode() const { return mode_; }
  void set_mode(Mode m) { mode_ = m; }
  std::optional<unsigned> default_dim() const { return dim_; }
  void set_default_dim(std::optional<unsigned> n) { dim_ = n; }
  OutputFormat output_format() const { return format_; }
  void set_output_format(OutputFormat f) { format_ = f; }

  const std::map<std::string, Value> &bindings() const { return bindings_; }

  // Text or JSON according to the current output format.
  std::string render(const Outcome &outcome) const;

private:
  Outcome directive(const Statement &st);

  Signature sig_;
  Mode mode_ = Mode::rational;
  std::optional<unsigned> dim_;
  OutputFormat format_ = OutputFormat::text;
  std::map<std::string, Value> bindings_;
};

std::string render_text(const Value &v);

} // namespace clifford::lang
