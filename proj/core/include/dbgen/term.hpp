#ifndef DBGEN_TERM_HPP
#define DBGEN_TERM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dbgen/validate.hpp"

namespace dbgen {

// Nameless (De Bruijn) terms over an arbitrary validated grammar. Index
// constructors are always represented as Var, never as Node. Terms are
// immutable and share structure.

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var {
  SortId sort;
  std::uint64_t index;
};

// One constructor argument: a nat value or a subterm.
using Arg = std::variant<std::uint64_t, TermPtr>;

struct Node {
  SortId sort;
  CtorId ctor;
  std::vector<Arg> args;
};

struct Term : std::variant<Var, Node> {
  using variant::variant;

  SortId sort() const {
    if (const Var* v = std::get_if<Var>(this)) return v->sort;
    return std::get<Node>(*this).sort;
  }
  bool is_var() const { return std::holds_alternative<Var>(*this); }
};

TermPtr make_var(SortId sort, std::uint64_t index);
TermPtr make_node(SortId sort, CtorId ctor, std::vector<Arg> args);

bool term_eq(const TermPtr& a, const TermPtr& b);
std::size_t term_size(const TermPtr& t);  // node count; nat args are free
std::string print_term(const ValidGrammar& g, const TermPtr& t);

// Named terms: variables carry strings, binding arguments carry explicit
// binder-name lists (sort by sort, in shift-list order; later names are
// innermost).

struct NamedTerm;
using NamedTermPtr = std::shared_ptr<const NamedTerm>;

struct Binder {
  SortId sort;
  std::string name;

  friend bool operator==(const Binder&, const Binder&) = default;
};

struct NVar {
  SortId sort;
  std::string name;
};

struct NSubArg {
  std::vector<Binder> binders;  // empty for a non-binding parameter
  NamedTermPtr term;
};

using NamedArg = std::variant<std::uint64_t, NSubArg>;

struct NNode {
  SortId sort;
  CtorId ctor;
  std::vector<NamedArg> args;
};

struct NamedTerm : std::variant<NVar, NNode> {
  using variant::variant;

  SortId sort() const {
    if (const NVar* v = std::get_if<NVar>(this)) return v->sort;
    return std::get<NNode>(*this).sort;
  }
};

NamedTermPtr make_nvar(SortId sort, std::string name);
NamedTermPtr make_nnode(SortId sort, CtorId ctor, std::vector<NamedArg> args);

bool named_eq(const NamedTermPtr& a, const NamedTermPtr& b);
std::string print_named(const ValidGrammar& g, const NamedTermPtr& t);

// Translation context: ordered binders, innermost last. A lookup returns
// the distance, i.e. the number of same-sort entries strictly after the
// innermost match.
class Telescope {
 public:
  Telescope() = default;
  explicit Telescope(std::vector<Binder> entries) : entries_(std::move(entries)) {}

  void push(Binder b) { entries_.push_back(std::move(b)); }
  std::optional<std::uint64_t> lookup(SortId sort, std::string_view name) const;
  const std::vector<Binder>& entries() const { return entries_; }

 private:
  std::vector<Binder> entries_;
};

}  // namespace dbgen

#endif
