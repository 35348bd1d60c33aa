#ifndef DBGEN_ENGINE_HPP
#define DBGEN_ENGINE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dbgen/analysis.hpp"
#include "dbgen/term.hpp"
#include "dbgen/validate.hpp"

namespace dbgen {

struct WfError {
  enum class Code {
    UnknownConstructor,
    ArityMismatch,
    SortMismatch,
    VarOfNonIndexedSort,
  };
  Code code;
  std::string path;  // argument positions from the root, e.g. "app/1/lam/0"
  std::string message;
};

class TranslateError : public std::runtime_error {
 public:
  enum class Code { UnboundName, BinderArityMismatch };

  TranslateError(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

// Interpreter for terms of one validated grammar. Implements the lifting
// and substitution semantics the generated code denotes, the named syntax
// with its translation, an independent capture-avoiding substitution over
// named terms, and a bounded exhaustive term enumerator.
class Engine {
 public:
  explicit Engine(const ValidGrammar& g);

  const ValidGrammar& grammar() const { return *g_; }
  const GrammarGraph& graph() const { return graph_; }
  const std::vector<SortId>& indexed() const { return indexed_; }
  bool reaches(SortId from, SortId to) const { return reach_[from][to]; }

  std::optional<WfError> check_wf(const TermPtr& t) const;

  // Adds n to every free index of sort s at or above cutoff k. Cutoffs
  // grow by the binder counts of sort s when descending under binders.
  TermPtr lift(SortId s, std::uint64_t n, std::uint64_t k, const TermPtr& t) const;

  // Replaces the sort-s variable at index j by u, decrementing higher
  // indices of sort s. When descending under a binder, u is lifted once
  // per bound sort that u's own sort reaches, keeping u well scoped.
  TermPtr subst(SortId s, const TermPtr& u, std::uint64_t j, const TermPtr& t) const;

  // Named -> nameless translation under a telescope. Throws TranslateError
  // on an unbound name or a binder list whose per-sort length differs from
  // the binding spec's count.
  TermPtr translate(const Telescope& ctx, const NamedTermPtr& t) const;

  // Capture-avoiding substitution on named terms; binders at risk of
  // capturing are renamed deterministically by appending primes.
  NamedTermPtr named_subst(const Binder& target, const NamedTermPtr& u,
                           const NamedTermPtr& t) const;

  // All well-formed terms of the sort with node count <= max_size, indices
  // below max_index plus the same-sort binders crossed, and nat arguments
  // drawn from {0, 1, 2}. Deterministic order.
  std::vector<TermPtr> enumerate(SortId sort, std::size_t max_size,
                                 std::uint64_t max_index) const;

  // Per-sort binder counts introduced by one constructor argument, reading
  // nat parameters from the node's own arguments.
  std::vector<std::uint64_t> arg_binder_counts(const Node& node,
                                               std::size_t param_index) const;

 private:
  CountEnv node_env(const Node& node) const;

  const ValidGrammar* g_;
  GrammarGraph graph_;
  std::vector<std::vector<bool>> reach_;  // reach_[a][b]: a ->* b
  std::vector<SortId> indexed_;
};

}  // namespace dbgen

#endif
