// gacalc: command-line front end for the clifford expression language.

#include "clifford/lang/session.hpp"
#include "clifford/viz/scene.hpp"

#include "CLI11.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace clifford;
using namespace clifford::lang;

constexpr int kOk = 0;
constexpr int kEvalError = 1;
constexpr int kUsageError = 2;

// Batch status: the worst failure seen so far.
struct Status {
  bool eval_failed = false;
  bool syntax_failed = false;

  void record(const Error &e) { (e.is_syntax() ? syntax_failed : eval_failed) = true; }
  int code() const { return syntax_failed ? kUsageError : eval_failed ? kEvalError : kOk; }
};

void report(std::ostream &os, const Error &e, std::string_view line, std::size_t offset,
            const std::string &where) {
  os << where << "error[" << to_string(e.kind()) << "]: " << e.what() << "\n";
  if (!e.span())
    return;
  std::size_t begin = std::min(e.span()->begin + offset, line.size());
  std::size_t end = std::min(std::max(e.span()->end + offset, begin + 1), line.size() + 1);
  os << "  " << line << "\n  " << std::string(begin, ' ') << std::string(end - begin, '^')
     << "\n";
}

// Executes every statement of one line; returns false if one failed.
bool run_line(Session &session, const std::string &line, Status &status,
              const std::string &where) {
  bool ok = true;
  for (const Segment &seg : split_statements(line)) {
    try {
      Outcome o = session.execute(seg.text);
      std::cout << session.render(o) << "\n";
    } catch (const Error &e) {
      status.record(e);
      report(std::cerr, e, line, seg.offset, where);
      ok = false;
    }
  }
  return ok;
}

bool apply_signature(Session &session, const std::string &sig) {
  if (sig.empty())
    return true;
  try {
    session.execute(":sig " + sig);
    return true;
  } catch (const Error &e) {
    std::cerr << "error: --sig: " << e.what() << "\n";
    return false;
  }
}

int cmd_repl(Session &session) {
  const bool interactive = isatty(STDIN_FILENO);
  Status status;
  std::string line;
  while (true) {
    if (interactive)
      std::cout << "ga> " << std::flush;
    if (!std::getline(std::cin, line))
      break;
    if (line == ":quit" || line == ":q")
      break;
    run_line(session, line, status, "");
  }
  if (interactive)
    std::cout << "\n";
  return interactive ? kOk : status.code();
}

int cmd_eval(Session &session, const std::string &source) {
  Status status;
  run_line(session, source, status, "");
  return status.code();
}

int cmd_run(Session &session, const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kUsageError;
  }
  Status status;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number)
    run_line(session, line, status, path + ":" + std::to_string(number) + ": ");
  return status.code();
}

int cmd_draw(Session &session, const std::string &source, const std::string &output) {
  const std::string ext = std::filesystem::path(output).extension().string();
  if (ext != ".obj" && ext != ".svg") {
    std::cerr << "error: output must end in .obj or .svg\n";
    return kUsageError;
  }
  std::optional<Value> last;
  for (const Segment &seg : split_statements(source)) {
    try {
      last = session.execute(seg.text).value;
    } catch (const Error &e) {
      report(std::cerr, e, source, seg.offset, "");
      return e.is_syntax() ? kUsageError : kEvalError;
    }
  }
  const Multivector *mv = last ? std::get_if<Multivector>(&*last) : nullptr;
  if (!mv) {
    std::cerr << "error: draw needs an expression whose value is a multivector\n";
    return kEvalError;
  }
  try {
    viz::Scene scene = viz::scene_from_multivector(*mv);
    if (ext == ".obj")
      viz::export_obj(scene, output);
    else
      viz::export_svg(scene, output);
  } catch (const Error &e) {
    report(std::cerr, e, source, 0, "");
    return kEvalError;
  }
  std::cout << "wrote " << output << "\n";
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"gacalc: geometric algebra calculator"};
  app.require_subcommand(1);

  std::string sig, source, file, output;
  unsigned dim = 0;
  bool json = false;

  auto *repl = app.add_subcommand("repl", "Interactive session (reads statements from stdin)");
  repl->add_option("--sig", sig, "Initial signature: p or 'euclid'");

  auto *eval = app.add_subcommand("eval", "Evaluate ';'-separated statements");
  eval->add_option("-e,--expr", source, "Statements to evaluate")->required();
  eval->add_option("--sig", sig, "Signature: p or 'euclid'");
  eval->add_option("--dim", dim, "Default dimension for dual")->check(CLI::Range(1, 64));
  eval->add_flag("--json", json, "Print serialization records");

  auto *run = app.add_subcommand("run", "Evaluate a file, one or more statements per line");
  run->add_option("file", file, "Script path")->required();
  run->add_flag("--json", json, "Print serialization records");

  auto *draw = app.add_subcommand("draw", "Export a multivector of R3 as OBJ or SVG");
  draw->add_option("expr", source, "Expression to draw")->required();
  draw->add_option("-o,--output", output, "Output file (.obj or .svg)")->required();
  draw->add_option("--sig", sig, "Signature: p or 'euclid'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  Session session;
  if (!apply_signature(session, sig))
    return kUsageError;
  if (dim != 0)
    session.set_default_dim(dim);
  if (json)
    session.set_output_format(OutputFormat::json);

  if (*repl)
    return cmd_repl(session);
  if (*eval)
    return cmd_eval(session, source);
  if (*run)
    return cmd_run(session, file);
  return cmd_draw(session, source, output);
}
