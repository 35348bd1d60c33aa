#include "dbgen/render.hpp"

namespace dbgen {

namespace {

int precedence(const CountExpr& e) {
  if (e.kind != CountExpr::Kind::Binary) return 3;
  return e.op == CountExpr::Op::Mul ? 2 : 1;
}

// expr rendered at `min_prec`; parenthesized when looser than required.
void render_expr(const CountExpr& e, int min_prec, std::string& out) {
  int prec = precedence(e);
  bool parens = prec < min_prec;
  if (parens) out += "(";
  switch (e.kind) {
    case CountExpr::Kind::Literal:
      out += std::to_string(e.value);
      break;
    case CountExpr::Kind::Variable:
      out += e.name;
      break;
    case CountExpr::Kind::Binary: {
      render_expr(e.lhs(), prec, out);
      switch (e.op) {
        case CountExpr::Op::Add: out += " + "; break;
        case CountExpr::Op::Sub: out += " - "; break;
        case CountExpr::Op::Mul: out += " * "; break;
      }
      render_expr(e.rhs(), prec + 1, out);
      break;
    }
  }
  if (parens) out += ")";
}

void render_shift(const Shift& s, std::string& out) {
  if (s.count.kind == CountExpr::Kind::Literal && s.count.value == 1) {
    out += s.sort;
    return;
  }
  out += "[";
  render_expr(s.count, 0, out);
  out += " ";
  out += s.sort;
  out += "]";
}

}  // namespace

std::string render_count_expr(const CountExpr& e) {
  std::string out;
  render_expr(e, 0, out);
  return out;
}

std::string render_param(const Param& p) {
  std::string out = "(";
  switch (p.kind) {
    case ParamKind::Index:
      out += "(* index *) " + p.name + " : nat";
      break;
    case ParamKind::Nat:
      out += p.name + " : nat";
      break;
    case ParamKind::Subterm:
      if (p.binding) {
        out += "(* bind ";
        bool first = true;
        for (const Shift& s : p.binding->shifts) {
          if (!first) out += ", ";
          first = false;
          render_shift(s, out);
        }
        out += " in *) ";
      }
      out += p.name + " : " + p.category;
      break;
  }
  out += ")";
  return out;
}

std::string render_source(const SourceGrammar& g) {
  std::string out = "Module " + g.module_name + ".\n";
  for (const InductiveGroup& group : g.groups) {
    out += "\n";
    bool first_cat = true;
    for (const Category& cat : group.categories) {
      out += first_cat ? "Inductive " : "with ";
      first_cat = false;
      out += cat.name + " : Type :=";
      for (const Constructor& ctor : cat.constructors) {
        out += "\n| " + ctor.name;
        for (const Param& p : ctor.params) {
          out += " " + render_param(p);
        }
      }
      out += "\n";
    }
    // Attach the closing dot to the last constructor line.
    out.pop_back();
    out += ".\n";
  }
  out += "\nEnd " + g.module_name + ".\n";
  return out;
}

}  // namespace dbgen
