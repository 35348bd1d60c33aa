#include "dbgen/ast.hpp"

namespace dbgen {

std::string to_string(const SourcePos& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

CountExpr CountExpr::literal(std::uint64_t v) {
  CountExpr e;
  e.kind = Kind::Literal;
  e.value = v;
  return e;
}

CountExpr CountExpr::variable(std::string name) {
  CountExpr e;
  e.kind = Kind::Variable;
  e.name = std::move(name);
  return e;
}

CountExpr CountExpr::binary(Op op, CountExpr lhs, CountExpr rhs) {
  CountExpr e;
  e.kind = Kind::Binary;
  e.op = op;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

bool operator==(const CountExpr& a, const CountExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case CountExpr::Kind::Literal:
      return a.value == b.value;
    case CountExpr::Kind::Variable:
      return a.name == b.name;
    case CountExpr::Kind::Binary:
      return a.op == b.op && a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

bool operator==(const Shift& a, const Shift& b) {
  return a.count == b.count && a.sort == b.sort;
}

bool operator==(const BindingSpec& a, const BindingSpec& b) {
  return a.shifts == b.shifts;
}

bool operator==(const Param& a, const Param& b) {
  return a.name == b.name && a.kind == b.kind && a.category == b.category &&
         a.binding == b.binding;
}

bool operator==(const Constructor& a, const Constructor& b) {
  return a.name == b.name && a.params == b.params;
}

bool operator==(const Category& a, const Category& b) {
  return a.name == b.name && a.constructors == b.constructors;
}

bool operator==(const InductiveGroup& a, const InductiveGroup& b) {
  return a.categories == b.categories;
}

bool operator==(const SourceGrammar& a, const SourceGrammar& b) {
  return a.module_name == b.module_name && a.groups == b.groups;
}

}  // namespace dbgen
