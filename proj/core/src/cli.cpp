#include "dbgen/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dbgen/corpus.hpp"
#include "dbgen/emit.hpp"
#include "dbgen/laws.hpp"
#include "dbgen/lexer.hpp"
#include "dbgen/parser.hpp"
#include "dbgen/render.hpp"
#include "dbgen/version.hpp"

namespace dbgen {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSyntax = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

bool read_file(const std::filesystem::path& path, std::string& out,
               std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open '" + path.string() + "' for reading";
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    error = "failed while reading '" + path.string() + "'";
    return false;
  }
  out = buffer.str();
  return true;
}

// All-or-nothing replacement: write a sibling temp file, then rename over
// the target.
bool write_file_atomic(const std::filesystem::path& path, std::string_view data,
                       std::string& error) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      error = "cannot open '" + tmp.string() + "' for writing";
      return false;
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      error = "failed while writing '" + tmp.string() + "'";
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return false;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    error = "cannot replace '" + path.string() + "': " + ec.message();
    std::error_code ignore;
    std::filesystem::remove(tmp, ignore);
    return false;
  }
  return true;
}

int selftest(std::ostream& out) {
  bool ok = true;
  for (const corpus::Entry& entry : corpus::all()) {
    ValidGrammar grammar = validate_or_throw(parse_source(entry.source));
    Engine engine(grammar);
    LawBounds bounds;
    bounds.max_size = entry.name == "LambdaTerms" ? 4 : 3;
    bounds.max_index = 3;
    bounds.max_scalar = 3;
    bounds.named_samples = 200;
    for (LawId law : all_laws()) {
      auto start = std::chrono::steady_clock::now();
      auto cex = check_law(engine, law, bounds);
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      if (cex) {
        ok = false;
        out << "FAIL " << entry.name << " " << law_name(law) << ": "
            << cex->detail << "\n";
      } else {
        out << "ok   " << entry.name << " " << law_name(law) << " (" << elapsed
            << " ms)\n";
      }
    }
  }
  out << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? kExitOk : kExitUsage;
}

void debug_dump(std::ostream& err, const std::vector<Token>& tokens,
                const SourceGrammar& parsed, const ValidGrammar& grammar,
                const FunctionPlan& plan) {
  err << "== tokens ==\n";
  for (const Token& t : tokens) err << to_string(t) << "\n";
  err << "== grammar ==\n" << render_source(parsed);
  GrammarGraph graph = build_graph(grammar);
  dump_graph(err, grammar, graph);
  dump_plan(err, grammar, plan);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  bool debug = false;
  std::vector<std::string> positional;
  for (const std::string& arg : args) {
    // Options come first, exactly as in the usage line.
    if (!arg.empty() && arg[0] == '-' && positional.empty()) {
      if (arg == "-version") {
        out << "dbgen " << kVersion << "\n";
        return kExitOk;
      }
      if (arg == "-debug") {
        debug = true;
        continue;
      }
      err << kUsage << "\n";
      return kExitUsage;
    }
    positional.push_back(arg);
  }

  if (!debug && positional.size() == 1 && positional[0] == "selftest") {
    return selftest(out);
  }
  if (positional.size() != 2) {
    err << kUsage << "\n";
    return kExitUsage;
  }

  std::string source;
  std::string io_error;
  if (!read_file(positional[0], source, io_error)) {
    err << "dbgen: " << io_error << "\n";
    return kExitIo;
  }

  std::vector<Token> tokens;
  SourceGrammar parsed;
  try {
    tokens = tokenize(source);
    parsed = parse_module(tokens);
  } catch (const LexError& e) {
    err << positional[0] << ":" << e.what() << "\n";
    return kExitSyntax;
  } catch (const ParseError& e) {
    err << positional[0] << ":" << e.what() << "\n";
    return kExitSyntax;
  }

  auto validated = validate_grammar(std::move(parsed));
  if (auto* errors = std::get_if<std::vector<ValidationError>>(&validated)) {
    for (const ValidationError& e : *errors) {
      err << positional[0] << ":" << to_string(e.pos) << ": ["
          << validation_code_name(e.code) << "] " << e.message << "\n";
    }
    return kExitValidation;
  }
  const ValidGrammar& grammar = std::get<ValidGrammar>(validated);
  FunctionPlan plan = plan_functions(grammar);

  if (debug) {
    debug_dump(err, tokens, grammar.source(), grammar, plan);
  }

  EmittedFile file = emit_module(grammar, plan);
  if (!write_file_atomic(positional[1], file.rendered, io_error)) {
    err << "dbgen: " << io_error << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace dbgen
