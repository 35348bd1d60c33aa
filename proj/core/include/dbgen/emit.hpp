#ifndef DBGEN_EMIT_HPP
#define DBGEN_EMIT_HPP

#include <string>
#include <utility>
#include <vector>

#include "dbgen/analysis.hpp"
#include "dbgen/validate.hpp"

namespace dbgen {

struct EmitOptions {
  // Version string for the generated-by header; the tool version when empty.
  std::string version;
};

// The generated module as an ordered list of titled sections plus the full
// rendered text (UTF-8, LF line endings, trailing newline). Rendering is a
// pure function of the grammar, byte-deterministic across runs.
struct EmittedFile {
  std::vector<std::pair<std::string, std::string>> sections;
  std::string rendered;
};

EmittedFile emit_module(const ValidGrammar& g, const FunctionPlan& plan,
                        const EmitOptions& opts = {});

// Section bodies, exposed for targeted tests.

// The user's inductives, annotations stripped.
std::string emit_db_inductives(const ValidGrammar& g);

// The named mirror: every name prefixed with '_', index arguments become
// strings, binding parameters gain one list-of-names parameter per bound
// sort.
std::string emit_named_inductives(const ValidGrammar& g, const FunctionPlan& plan);

// Lifting then substitution fixpoints, one block per (indexed sort,
// mutual group) pair.
std::string emit_lift_subst(const ValidGrammar& g, const FunctionPlan& plan);

// Telescope type, lookup/push helpers and one dbify_<cat> per category.
std::string emit_translation(const ValidGrammar& g, const FunctionPlan& plan);

// Hint database, crush/ecrush, the per-pair variable-case lemmas, the
// index tactic, the advanced lemmas and the main tactic, in that order.
std::string emit_properties_and_tactics(const ValidGrammar& g,
                                        const FunctionPlan& plan);

}  // namespace dbgen

#endif
