#ifndef DBGEN_AST_HPP
#define DBGEN_AST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dbgen {

// 1-based source position. Structural equality of AST nodes ignores
// positions so that parse(render(g)) == g holds.
struct SourcePos {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

std::string to_string(const SourcePos& pos);

// Arithmetic expression giving the number of variables a binder
// introduces. Variables refer to nat parameters declared earlier in the
// same constructor. Subtraction truncates at zero.
struct CountExpr {
  enum class Kind { Literal, Variable, Binary };
  enum class Op { Add, Sub, Mul };

  Kind kind = Kind::Literal;
  std::uint64_t value = 0;          // Literal
  std::string name;                 // Variable
  Op op = Op::Add;                  // Binary
  std::vector<CountExpr> children;  // exactly two when Binary
  SourcePos pos;

  static CountExpr literal(std::uint64_t v);
  static CountExpr variable(std::string name);
  static CountExpr binary(Op op, CountExpr lhs, CountExpr rhs);

  const CountExpr& lhs() const { return children[0]; }
  const CountExpr& rhs() const { return children[1]; }
};

bool operator==(const CountExpr& a, const CountExpr& b);
inline bool operator!=(const CountExpr& a, const CountExpr& b) { return !(a == b); }

// One `shift`: a count expression and the sort whose variables are bound.
// The shorthand form `CatName` is normalized to count literal 1 at parse time.
struct Shift {
  CountExpr count;
  std::string sort;
  SourcePos pos;
};

bool operator==(const Shift& a, const Shift& b);
inline bool operator!=(const Shift& a, const Shift& b) { return !(a == b); }

struct BindingSpec {
  std::vector<Shift> shifts;  // nonempty
};

bool operator==(const BindingSpec& a, const BindingSpec& b);
inline bool operator!=(const BindingSpec& a, const BindingSpec& b) { return !(a == b); }

enum class ParamKind {
  Index,    // ((* index *) x : nat)
  Nat,      // (n : nat)
  Subterm,  // (t : Cat) or ((* bind ... in *) t : Cat)
};

struct Param {
  std::string name;
  ParamKind kind = ParamKind::Nat;
  std::string category;                // Subterm only
  std::optional<BindingSpec> binding;  // Subterm only
  SourcePos pos;
};

bool operator==(const Param& a, const Param& b);
inline bool operator!=(const Param& a, const Param& b) { return !(a == b); }

struct Constructor {
  std::string name;
  std::vector<Param> params;
  SourcePos pos;
};

bool operator==(const Constructor& a, const Constructor& b);
inline bool operator!=(const Constructor& a, const Constructor& b) { return !(a == b); }

struct Category {
  std::string name;
  std::vector<Constructor> constructors;
  SourcePos pos;
};

bool operator==(const Category& a, const Category& b);
inline bool operator!=(const Category& a, const Category& b) { return !(a == b); }

// Categories joined by `with` in one Inductive block; they are emitted as
// one mutually recursive group.
struct InductiveGroup {
  std::vector<Category> categories;
  SourcePos pos;
};

bool operator==(const InductiveGroup& a, const InductiveGroup& b);
inline bool operator!=(const InductiveGroup& a, const InductiveGroup& b) { return !(a == b); }

struct SourceGrammar {
  std::string module_name;
  std::vector<InductiveGroup> groups;
};

bool operator==(const SourceGrammar& a, const SourceGrammar& b);
inline bool operator!=(const SourceGrammar& a, const SourceGrammar& b) { return !(a == b); }

}  // namespace dbgen

#endif
