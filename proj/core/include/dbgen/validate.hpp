#ifndef DBGEN_VALIDATE_HPP
#define DBGEN_VALIDATE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dbgen/ast.hpp"

namespace dbgen {

using SortId = std::uint32_t;
using CtorId = std::uint32_t;

class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& message) : std::runtime_error(message) {}
};

using CountEnv = std::map<std::string, std::uint64_t, std::less<>>;

// Natural-number evaluation; subtraction truncates at zero. Throws
// EvalError on an identifier missing from env.
std::uint64_t eval_expr(const CountExpr& e, const CountEnv& env);

// Per-sort totals of a binding spec. A sort listed several times has its
// counts summed; sorts absent from the spec are absent from the map (read
// them as zero).
std::map<std::string, std::uint64_t> binder_counts(const BindingSpec& b,
                                                   const CountEnv& env);

// Sorts a binding spec binds, in canonical order: first appearance in the
// shift list. Binder name lists follow this order, sort by sort.
std::vector<std::string> binder_sort_order(const BindingSpec& b);

struct ValidationError {
  enum class Code {
    ExtraArgsOnIndexConstructor,
    MultipleIndexConstructors,
    UnknownCategoryInBind,
    UnknownCategoryInParam,
    UnboundExprIdentifier,
    DuplicateName,
  };

  Code code;
  std::string where;  // constructor/parameter path
  SourcePos pos;
  std::string message;
};

std::string_view validation_code_name(ValidationError::Code code);

// A grammar that passed validation, with interned sort and constructor
// ids (declaration order) and the lookups every downstream stage needs.
class ValidGrammar {
 public:
  const SourceGrammar& source() const { return grammar_; }
  const std::string& module_name() const { return grammar_.module_name; }

  std::size_t sort_count() const { return sorts_.size(); }
  const std::string& sort_name(SortId s) const { return sorts_[s]->name; }
  const Category& sort(SortId s) const { return *sorts_[s]; }
  std::optional<SortId> sort_id(std::string_view name) const;

  std::size_t ctor_count() const { return ctors_.size(); }
  const Constructor& ctor(CtorId c) const { return *ctors_[c].decl; }
  const std::string& ctor_name(CtorId c) const { return ctors_[c].decl->name; }
  SortId ctor_sort(CtorId c) const { return ctors_[c].sort; }
  std::optional<CtorId> ctor_id(std::string_view name) const;
  std::span<const CtorId> ctors_of(SortId s) const;

  // The unique index constructor of a sort, when the sort has one.
  std::optional<CtorId> index_ctor_of(SortId s) const;
  bool is_indexed(SortId s) const { return index_ctor_of(s).has_value(); }
  bool is_index_ctor(CtorId c) const;

  // Names of the nat parameters declared before the given parameter
  // position; these are the identifiers its count expressions may use.
  std::vector<std::string> nat_params_before(CtorId c, std::size_t param_index) const;

  // Groups of sorts as declared (the `with` blocks), in source order.
  const std::vector<std::vector<SortId>>& groups() const { return groups_; }

 private:
  friend std::variant<ValidGrammar, std::vector<ValidationError>>
  validate_grammar(SourceGrammar g);

  struct CtorEntry {
    const Constructor* decl;
    SortId sort;
  };

  void rebuild_indexes();

  SourceGrammar grammar_;
  std::vector<const Category*> sorts_;
  std::vector<CtorEntry> ctors_;
  std::vector<std::vector<CtorId>> ctors_of_sort_;
  std::vector<std::optional<CtorId>> index_ctor_;
  std::vector<std::vector<SortId>> groups_;

 public:
  ValidGrammar(const ValidGrammar& other);
  ValidGrammar& operator=(const ValidGrammar& other);
  ValidGrammar(ValidGrammar&& other) noexcept;
  ValidGrammar& operator=(ValidGrammar&& other) noexcept;
  ~ValidGrammar() = default;

 private:
  ValidGrammar() = default;
};

// Checks every restriction at once and reports all violations, sorted by
// source position.
std::variant<ValidGrammar, std::vector<ValidationError>> validate_grammar(
    SourceGrammar g);

// Convenience for tests and the corpus: validates or throws.
ValidGrammar validate_or_throw(SourceGrammar g);

}  // namespace dbgen

#endif
