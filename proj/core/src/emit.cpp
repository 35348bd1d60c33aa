#include "dbgen/emit.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dbgen/render.hpp"
#include "dbgen/version.hpp"

namespace dbgen {

namespace {

// Names we introduce in generated code must not collide with anything the
// grammar declares (or its '_'-prefixed mirror).
struct NameSupply {
  std::set<std::string> taken;

  explicit NameSupply(const ValidGrammar& g) {
    auto reserve = [&](const std::string& name) {
      taken.insert(name);
      taken.insert("_" + name);
    };
    for (SortId s = 0; s < g.sort_count(); ++s) reserve(g.sort_name(s));
    for (CtorId c = 0; c < g.ctor_count(); ++c) {
      reserve(g.ctor_name(c));
      for (const Param& p : g.ctor(c).params) reserve(p.name);
    }
  }

  std::string fresh(const std::string& base) {
    if (taken.insert(base).second) return base;
    for (int i = 0;; ++i) {
      std::string candidate = base + std::to_string(i);
      if (taken.insert(candidate).second) return candidate;
    }
  }
};

int expr_precedence(const CountExpr& e) {
  if (e.kind != CountExpr::Kind::Binary) return 3;
  return e.op == CountExpr::Op::Mul ? 2 : 1;
}

// Count expression in vernacular syntax; identifiers go through `xform`
// (the named sections pattern-bind nat parameters under '_'-prefixed names).
void render_expr_with(const CountExpr& e, int min_prec,
                      const std::function<std::string(const std::string&)>& xform,
                      std::string& out) {
  int prec = expr_precedence(e);
  bool parens = prec < min_prec;
  if (parens) out += "(";
  switch (e.kind) {
    case CountExpr::Kind::Literal:
      out += std::to_string(e.value);
      break;
    case CountExpr::Kind::Variable:
      out += xform(e.name);
      break;
    case CountExpr::Kind::Binary:
      render_expr_with(e.lhs(), prec, xform, out);
      out += e.op == CountExpr::Op::Add ? " + "
             : e.op == CountExpr::Op::Sub ? " - "
                                          : " * ";
      render_expr_with(e.rhs(), prec + 1, xform, out);
      break;
  }
  if (parens) out += ")";
}

std::string plain_name(const std::string& name) { return name; }

std::string prefixed_name(const std::string& name) { return "_" + name; }

// Joins count expressions (and an optional trailing atom) into one sum.
// Operands after the first are rendered one level tighter so that
// truncating subtraction groups per operand, matching the evaluator.
std::string render_sum(const std::vector<const CountExpr*>& exprs,
                       const std::function<std::string(const std::string&)>& xform,
                       const std::string& tail_atom) {
  std::string out;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    if (i > 0) out += " + ";
    render_expr_with(*exprs[i], i == 0 ? 1 : 2, xform, out);
  }
  if (!tail_atom.empty()) {
    if (!out.empty()) out += " + ";
    out += tail_atom;
  }
  return out;
}

// A sum rendered as one application argument.
std::string as_arg(const std::string& rendered) {
  bool atom = rendered.find(' ') == std::string::npos;
  return atom ? rendered : "(" + rendered + ")";
}

struct Emitter {
  const ValidGrammar& g;
  const FunctionPlan& plan;
  NameSupply supply;

  // Invented identifiers, collision-free against the grammar.
  std::string n, k, u, j, t0, e, d, m, k2, x;
  std::vector<std::string> results;

  Emitter(const ValidGrammar& grammar, const FunctionPlan& p)
      : g(grammar), plan(p), supply(grammar) {
    n = supply.fresh("n");
    k = supply.fresh("k");
    u = supply.fresh("u");
    j = supply.fresh("j");
    t0 = supply.fresh("t0");
    e = supply.fresh("e");
    d = supply.fresh("d");
    m = supply.fresh("m");
    k2 = supply.fresh("k'");
    x = supply.fresh("x");
    std::size_t max_subs = 0;
    for (CtorId c = 0; c < g.ctor_count(); ++c) {
      std::size_t subs = 0;
      for (const Param& param : g.ctor(c).params) {
        if (param.kind == ParamKind::Subterm) ++subs;
      }
      max_subs = std::max(max_subs, subs);
    }
    for (std::size_t i = 1; i <= max_subs; ++i) {
      results.push_back(supply.fresh("r" + std::to_string(i)));
    }
  }

  const std::string& db() const { return plan.hintdb_name; }

  std::optional<SortId> sort_of(const std::string& name) const {
    return g.sort_id(name);
  }

  // ---- section 2: De Bruijn structure ----

  std::string db_inductives() const {
    std::vector<std::string> items;
    for (const auto& group : plan.mutual_groups) {
      std::string text;
      bool first = true;
      for (SortId s : group) {
        text += first ? "Inductive " : "with ";
        first = false;
        text += g.sort_name(s) + " : Type :=";
        for (CtorId c : g.ctors_of(s)) {
          const Constructor& ctor = g.ctor(c);
          text += "\n| " + ctor.name;
          for (const Param& param : ctor.params) {
            if (param.kind == ParamKind::Subterm) {
              text += " (" + param.name + " : " + param.category + ")";
            } else {
              text += " (" + param.name + " : nat)";
            }
          }
        }
        text += "\n";
      }
      text.pop_back();
      text += ".";
      items.push_back(std::move(text));
    }
    return join(items);
  }

  // ---- named structure ----

  static std::string binder_list_param(const Param& param, const std::string& sort) {
    return "_" + param.name + "_" + sort + "_names";
  }

  std::string named_inductives() const {
    std::vector<std::string> items;
    for (const auto& group : plan.mutual_groups) {
      std::string text;
      bool first = true;
      for (SortId s : group) {
        text += first ? "Inductive " : "with ";
        first = false;
        text += plan.named_prefix + g.sort_name(s) + " : Type :=";
        for (CtorId c : g.ctors_of(s)) {
          const Constructor& ctor = g.ctor(c);
          text += "\n| _" + ctor.name;
          for (const Param& param : ctor.params) {
            switch (param.kind) {
              case ParamKind::Index:
                text += " (_" + param.name + " : string)";
                break;
              case ParamKind::Nat:
                text += " (_" + param.name + " : nat)";
                break;
              case ParamKind::Subterm:
                if (param.binding) {
                  for (const std::string& sort : binder_sort_order(*param.binding)) {
                    text += " (" + binder_list_param(param, sort) + " : list string)";
                  }
                }
                text += " (_" + param.name + " : _" + param.category + ")";
                break;
            }
          }
        }
        text += "\n";
      }
      text.pop_back();
      text += ".";
      items.push_back(std::move(text));
    }
    return join(items);
  }

  // ---- lifting and substitution ----

  // Sum of the shift counts of `sort` in the binding of one parameter;
  // empty when the parameter binds nothing of that sort.
  std::vector<const CountExpr*> counts_for(const Param& param,
                                           const std::string& sort) const {
    std::vector<const CountExpr*> exprs;
    if (param.kind == ParamKind::Subterm && param.binding) {
      for (const Shift& shift : param.binding->shifts) {
        if (shift.sort == sort) exprs.push_back(&shift.count);
      }
    }
    return exprs;
  }

  std::string lift_clause(SortId s, SortId p, CtorId c) const {
    const Constructor& ctor = g.ctor(c);
    if (g.is_index_ctor(c)) {
      const std::string& iv = ctor.name;
      const std::string& ix = ctor.params[0].name;
      if (p == s) {
        return "  | " + iv + " " + ix + " => if le_dec " + k + " " + ix +
               " then " + iv + " (" + n + " + " + ix + ") else " + iv + " " + ix;
      }
      return "  | " + iv + " " + ix + " => " + iv + " " + ix;
    }
    std::string pattern = "  | " + ctor.name;
    std::string body = ctor.name;
    for (const Param& param : ctor.params) {
      pattern += " " + param.name;
      if (param.kind != ParamKind::Subterm) {
        body += " " + param.name;
        continue;
      }
      const std::string* fn = plan.lift_name(s, *sort_of(param.category));
      if (fn == nullptr) {
        body += " " + param.name;
        continue;
      }
      std::string cutoff =
          render_sum(counts_for(param, g.sort_name(s)), plain_name, k);
      body += " (" + *fn + " " + n + " " + as_arg(cutoff) + " " + param.name + ")";
    }
    return pattern + " => " + body;
  }

  std::string subst_clause(SortId s, SortId p, CtorId c) const {
    const Constructor& ctor = g.ctor(c);
    if (g.is_index_ctor(c)) {
      const std::string& iv = ctor.name;
      const std::string& ix = ctor.params[0].name;
      if (p == s) {
        return "  | " + iv + " " + ix + " =>\n      if lt_dec " + ix + " " + j +
               " then " + iv + " " + ix + "\n      else if eq_nat_dec " + ix +
               " " + j + " then " + u + "\n      else " + iv + " (" + ix + " - 1)";
      }
      return "  | " + iv + " " + ix + " => " + iv + " " + ix;
    }
    std::string pattern = "  | " + ctor.name;
    std::string body = ctor.name;
    for (const Param& param : ctor.params) {
      pattern += " " + param.name;
      if (param.kind != ParamKind::Subterm) {
        body += " " + param.name;
        continue;
      }
      const std::string* fn = plan.subst_name(s, *sort_of(param.category));
      if (fn == nullptr) {
        body += " " + param.name;
        continue;
      }
      // Descending under binders: u is lifted once per bound sort that
      // the substituted sort reaches, then the target index moves by the
      // number of bound variables of sort s.
      std::string pushed = u;
      if (param.binding) {
        for (const std::string& sort : binder_sort_order(*param.binding)) {
          auto bound_sort = sort_of(sort);
          if (!bound_sort) continue;
          const std::string* lift_fn = plan.lift_name(*bound_sort, s);
          if (lift_fn == nullptr) continue;  // u cannot contain such indices
          std::string amount = render_sum(counts_for(param, sort), plain_name, "");
          pushed = "(" + *lift_fn + " " + as_arg(amount) + " 0 " + pushed + ")";
        }
      }
      std::string target =
          render_sum(counts_for(param, g.sort_name(s)), plain_name, j);
      body += " (" + *fn + " " + pushed + " " + as_arg(target) + " " + param.name + ")";
    }
    return pattern + " => " + body;
  }

  // One lift or subst block for an indexed sort and one mutual group.
  std::string fn_block(SortId s, const std::vector<SortId>& members, bool is_lift) const {
    bool recursive = false;
    for (SortId p : members) {
      for (CtorId c : g.ctors_of(p)) {
        for (const Param& param : g.ctor(c).params) {
          if (param.kind == ParamKind::Subterm) {
            auto q = sort_of(param.category);
            if (q && std::find(members.begin(), members.end(), *q) != members.end()) {
              recursive = true;
            }
          }
        }
      }
    }
    std::string text;
    bool first = true;
    for (SortId p : members) {
      const std::string& sort = g.sort_name(p);
      const std::string& fn =
          is_lift ? *plan.lift_name(s, p) : *plan.subst_name(s, p);
      std::string args = is_lift
                             ? "(" + n + " " + k + " : nat)"
                             : "(" + u + " : " + g.sort_name(s) + ") (" + j + " : nat)";
      if (first) {
        text += recursive ? "Fixpoint " : "Definition ";
      } else {
        text += "with ";
      }
      first = false;
      text += fn + " " + args + " (" + t0 + " : " + sort + ")";
      if (recursive) text += " {struct " + t0 + "}";
      text += " : " + sort + " :=\n";
      text += "  match " + t0 + " with\n";
      for (CtorId c : g.ctors_of(p)) {
        text += (is_lift ? lift_clause(s, p, c) : subst_clause(s, p, c)) + "\n";
      }
      text += "  end\n";
    }
    text.pop_back();
    text += ".";
    return text;
  }

  std::string lift_subst() const {
    if (plan.lifts.empty()) {
      return "(* No lifting or substitution functions: the grammar declares no "
             "index constructors. *)";
    }
    std::vector<std::string> items;
    for (bool is_lift : {true, false}) {
      for (SortId s : sorts_in(plan.lifts)) {
        for (const auto& group : plan.mutual_groups) {
          std::vector<SortId> members;
          for (SortId p : group) {
            if (plan.pair_planned(s, p)) members.push_back(p);
          }
          if (!members.empty()) items.push_back(fn_block(s, members, is_lift));
        }
      }
    }
    return join(items);
  }

  // Indexed sorts in plan order, deduplicated.
  static std::vector<SortId> sorts_in(const std::vector<FunctionPlan::Entry>& entries) {
    std::vector<SortId> sorts;
    for (const auto& entry : entries) {
      if (std::find(sorts.begin(), sorts.end(), entry.sort) == sorts.end()) {
        sorts.push_back(entry.sort);
      }
    }
    return sorts;
  }

  // ---- translation ----

  std::string translation() const {
    std::vector<std::string> items;
    items.push_back("Definition _telescope : Type := list (string * string).");
    items.push_back(
        "Fixpoint _lookup (s x : string) (e : _telescope) {struct e} : option nat :=\n"
        "  match e with\n"
        "  | nil => None\n"
        "  | (s0, x0) :: e0 =>\n"
        "      if string_dec s s0 then\n"
        "        if string_dec x x0 then Some 0\n"
        "        else match _lookup s x e0 with\n"
        "             | Some d => Some (1 + d)\n"
        "             | None => None\n"
        "             end\n"
        "      else _lookup s x e0\n"
        "  end.");
    items.push_back(
        "Definition _push (s : string) (xs : list string) (e : _telescope) : _telescope :=\n"
        "  List.fold_left (fun e0 x0 => (s, x0) :: e0) xs e.");
    for (const auto& group : plan.mutual_groups) {
      items.push_back(dbify_block(group));
    }
    return join(items);
  }

  std::string dbify_block(const std::vector<SortId>& members) const {
    bool recursive = false;
    for (SortId p : members) {
      for (CtorId c : g.ctors_of(p)) {
        for (const Param& param : g.ctor(c).params) {
          if (param.kind == ParamKind::Subterm) {
            auto q = sort_of(param.category);
            if (q && std::find(members.begin(), members.end(), *q) != members.end()) {
              recursive = true;
            }
          }
        }
      }
    }
    std::string text;
    bool first = true;
    for (SortId p : members) {
      const std::string& sort = g.sort_name(p);
      if (first) {
        text += recursive ? "Fixpoint " : "Definition ";
      } else {
        text += "with ";
      }
      first = false;
      text += plan.translate_names[p] + " (" + e + " : _telescope) (" + t0 +
              " : _" + sort + ")";
      if (recursive) text += " {struct " + t0 + "}";
      text += " : option " + sort + " :=\n";
      text += "  match " + t0 + " with\n";
      for (CtorId c : g.ctors_of(p)) {
        text += dbify_clause(p, c);
      }
      text += "  end\n";
    }
    text.pop_back();
    text += ".";
    return text;
  }

  std::string dbify_clause(SortId p, CtorId c) const {
    const Constructor& ctor = g.ctor(c);
    if (g.is_index_ctor(c)) {
      const std::string ix = "_" + ctor.params[0].name;
      std::string text = "  | _" + ctor.name + " " + ix + " =>\n";
      text += "      match _lookup \"" + g.sort_name(p) + "\" " + ix + " " + e +
              " with\n";
      text += "      | Some " + d + " => Some (" + ctor.name + " " + d + ")\n";
      text += "      | None => None\n";
      text += "      end\n";
      return text;
    }

    std::string pattern = "  | _" + ctor.name;
    for (const Param& param : ctor.params) {
      if (param.kind == ParamKind::Subterm && param.binding) {
        for (const std::string& sort : binder_sort_order(*param.binding)) {
          pattern += " " + binder_list_param(param, sort);
        }
      }
      pattern += " _" + param.name;
    }

    // Result expression once every subterm has been translated.
    std::string success;
    if (ctor.params.empty()) {
      success = "Some " + ctor.name;
    } else {
      success = ctor.name;
      std::size_t result_index = 0;
      for (const Param& param : ctor.params) {
        if (param.kind == ParamKind::Subterm) {
          success += " " + results[result_index++];
        } else {
          success += " _" + param.name;
        }
      }
      success = "Some (" + success + ")";
    }

    // Arity checks and option-matches nest left to right.
    std::function<std::string(std::size_t, std::size_t, int)> build =
        [&](std::size_t param_index, std::size_t result_i, int indent) -> std::string {
      std::string pad(static_cast<std::size_t>(indent), ' ');
      if (param_index == ctor.params.size()) {
        return pad + success + "\n";
      }
      const Param& param = ctor.params[param_index];
      if (param.kind != ParamKind::Subterm) {
        return build(param_index + 1, result_i, indent);
      }
      std::string text;
      int inner = indent;
      std::string close;
      if (param.binding) {
        for (const std::string& sort : binder_sort_order(*param.binding)) {
          std::string count = render_sum(counts_for(param, sort), prefixed_name, "");
          text += std::string(static_cast<std::size_t>(inner), ' ') +
                  "if eq_nat_dec (List.length " + binder_list_param(param, sort) +
                  ") " + as_arg(count) + " then\n";
          close = std::string(static_cast<std::size_t>(inner), ' ') + "else None\n" + close;
          inner += 2;
        }
      }
      std::string scrutinee = plan.translate_names[*sort_of(param.category)] + " " +
                              telescope_expr(param) + " _" + param.name;
      std::string ipad(static_cast<std::size_t>(inner), ' ');
      text += ipad + "match " + scrutinee + " with\n";
      text += ipad + "| Some " + results[result_i] + " =>\n";
      text += build(param_index + 1, result_i + 1, inner + 4);
      text += ipad + "| None => None\n";
      text += ipad + "end\n";
      text += close;
      return text;
    };
    return pattern + " =>\n" + build(0, 0, 6);
  }

  // The telescope passed to a subterm's translation, extended per bound
  // sort in canonical order (the first sort is pushed first).
  std::string telescope_expr(const Param& param) const {
    std::string expr = e;
    if (param.kind == ParamKind::Subterm && param.binding) {
      for (const std::string& sort : binder_sort_order(*param.binding)) {
        expr = "(_push \"" + sort + "\" " + binder_list_param(param, sort) + " " +
               expr + ")";
      }
    }
    return expr;
  }

  // ---- sections 1, 5, 6, 7, 8 ----

  std::string database_and_tactics() const {
    std::vector<std::string> items;
    items.push_back("Create HintDb " + db() + ".");
    items.push_back(
        "Ltac " + plan.tactics.crush + " :=\n"
        "  intros; simpl in *; subst;\n"
        "  try congruence; try omega;\n"
        "  auto with " + db() + " arith.");
    items.push_back(
        "Ltac " + plan.tactics.ecrush + " :=\n"
        "  intros; simpl in *; subst;\n"
        "  try congruence; try omega;\n"
        "  eauto with " + db() + " arith.");
    return join(items);
  }

  std::string lemma(const std::string& name, const std::string& statement,
                    const std::string& proof) const {
    return "Lemma " + name + " :\n" + statement + "\nProof. " + proof +
           " Qed.\nHint Resolve " + name + " : " + db() + ".";
  }

  std::string basic_properties() const {
    if (plan.lifts.empty()) {
      return "(* No index-case properties: the grammar declares no index "
             "constructors. *)";
    }
    std::vector<std::string> items;
    for (std::size_t i = 0; i < plan.lifts.size(); ++i) {
      SortId s = plan.lifts[i].sort;
      SortId p = plan.lifts[i].target;
      auto ic = g.index_ctor_of(p);
      if (!ic) continue;  // no variable case to state
      const std::string& iv = g.ctor_name(*ic);
      const std::string& lift_fn = plan.lifts[i].name;
      const std::string& subst_fn = plan.substs[i].name;
      const std::string& s_name = g.sort_name(s);

      if (p == s) {
        items.push_back(lemma(
            lift_fn + "_var_ge",
            "  forall " + n + " " + k + " " + x + " : nat, " + k + " <= " + x +
                " ->\n  " + lift_fn + " " + n + " " + k + " (" + iv + " " + x +
                ") = " + iv + " (" + n + " + " + x + ").",
            "intros; simpl; destruct (le_dec " + k + " " + x + "); " +
                plan.tactics.crush + "."));
        items.push_back(lemma(
            lift_fn + "_var_lt",
            "  forall " + n + " " + k + " " + x + " : nat, " + x + " < " + k +
                " ->\n  " + lift_fn + " " + n + " " + k + " (" + iv + " " + x +
                ") = " + iv + " " + x + ".",
            "intros; simpl; destruct (le_dec " + k + " " + x + "); " +
                plan.tactics.crush + "."));
        items.push_back(lemma(
            subst_fn + "_var_eq",
            "  forall (" + u + " : " + s_name + ") (" + j + " : nat),\n  " +
                subst_fn + " " + u + " " + j + " (" + iv + " " + j + ") = " + u +
                ".",
            "intros; simpl; destruct (lt_dec " + j + " " + j +
                "); try destruct (eq_nat_dec " + j + " " + j + "); " +
                plan.tactics.crush + "."));
        items.push_back(lemma(
            subst_fn + "_var_gt",
            "  forall (" + u + " : " + s_name + ") (" + j + " " + x +
                " : nat), " + j + " < " + x + " ->\n  " + subst_fn + " " + u +
                " " + j + " (" + iv + " " + x + ") = " + iv + " (" + x + " - 1).",
            "intros; simpl; destruct (lt_dec " + x + " " + j +
                "); try destruct (eq_nat_dec " + x + " " + j + "); " +
                plan.tactics.crush + "."));
        items.push_back(lemma(
            subst_fn + "_var_lt",
            "  forall (" + u + " : " + s_name + ") (" + j + " " + x +
                " : nat), " + x + " < " + j + " ->\n  " + subst_fn + " " + u +
                " " + j + " (" + iv + " " + x + ") = " + iv + " " + x + ".",
            "intros; simpl; destruct (lt_dec " + x + " " + j +
                "); try destruct (eq_nat_dec " + x + " " + j + "); " +
                plan.tactics.crush + "."));
      } else {
        items.push_back(lemma(
            lift_fn + "_var_skip",
            "  forall " + n + " " + k + " " + x + " : nat,\n  " + lift_fn + " " +
                n + " " + k + " (" + iv + " " + x + ") = " + iv + " " + x + ".",
            "intros; simpl; " + plan.tactics.crush + "."));
        items.push_back(lemma(
            subst_fn + "_var_skip",
            "  forall (" + u + " : " + s_name + ") (" + j + " " + x +
                " : nat),\n  " + subst_fn + " " + u + " " + j + " (" + iv + " " +
                x + ") = " + iv + " " + x + ".",
            "intros; simpl; " + plan.tactics.crush + "."));
      }
    }
    return join(items);
  }

  std::string index_tactic() const {
    return "Ltac " + plan.tactics.index +
           " :=\n"
           "  repeat (match goal with\n"
           "          | [ |- context [ le_dec ?a ?b ] ] => destruct (le_dec a b)\n"
           "          | [ H : context [ le_dec ?a ?b ] |- _ ] => destruct (le_dec a b)\n"
           "          | [ |- context [ lt_dec ?a ?b ] ] => destruct (lt_dec a b)\n"
           "          | [ H : context [ lt_dec ?a ?b ] |- _ ] => destruct (lt_dec a b)\n"
           "          | [ |- context [ eq_nat_dec ?a ?b ] ] => destruct (eq_nat_dec a b)\n"
           "          | [ H : context [ eq_nat_dec ?a ?b ] |- _ ] => destruct (eq_nat_dec a b)\n"
           "          | [ |- context [ string_dec ?a ?b ] ] => destruct (string_dec a b)\n"
           "          | [ H : context [ string_dec ?a ?b ] |- _ ] => destruct (string_dec a b)\n"
           "          end;\n"
           "          simpl in *; subst);\n"
           "  try omega; try congruence.";
  }

  std::string advanced_properties() const {
    if (plan.lifts.empty()) {
      return "(* No advanced properties: the grammar declares no index "
             "constructors. *)";
    }
    std::vector<std::string> items;
    std::string induction = "induction " + t0 + "; " + plan.tactics.crush + ".";

    for (const auto& entry : plan.lifts) {
      const std::string& fn = entry.name;
      const std::string& p_name = g.sort_name(entry.target);
      items.push_back(lemma(
          fn + "_zero",
          "  forall (" + t0 + " : " + p_name + ") (" + k + " : nat),\n  " + fn +
              " 0 " + k + " " + t0 + " = " + t0 + ".",
          induction));
      items.push_back(lemma(
          fn + "_add",
          "  forall (" + t0 + " : " + p_name + ") (" + n + " " + m + " " + k +
              " : nat),\n  " + fn + " " + n + " " + k + " (" + fn + " " + m +
              " " + k + " " + t0 + ") = " + fn + " (" + n + " + " + m + ") " +
              k + " " + t0 + ".",
          induction));
      items.push_back(lemma(
          fn + "_commute",
          "  forall (" + t0 + " : " + p_name + ") (" + n + " " + m + " " + k +
              " " + k2 + " : nat), " + k + " <= " + k2 + " ->\n  " + fn + " " +
              n + " " + k + " (" + fn + " " + m + " " + k2 + " " + t0 +
              ") = " + fn + " " + m + " (" + k2 + " + " + n + ") (" + fn + " " +
              n + " " + k + " " + t0 + ").",
          induction));
    }

    const std::vector<SortId> sorts = sorts_in(plan.lifts);
    for (std::size_t a = 0; a < sorts.size(); ++a) {
      for (std::size_t b = a + 1; b < sorts.size(); ++b) {
        SortId s = sorts[a];
        SortId s2 = sorts[b];
        for (SortId p = 0; p < g.sort_count(); ++p) {
          const std::string* fn_a = plan.lift_name(s, p);
          const std::string* fn_b = plan.lift_name(s2, p);
          if (fn_a == nullptr || fn_b == nullptr) continue;
          items.push_back(lemma(
              g.sort_name(s) + "_lift_" + g.sort_name(s2) + "_lift_commute_in_" +
                  g.sort_name(p),
              "  forall (" + t0 + " : " + g.sort_name(p) + ") (" + n + " " + m +
                  " " + k + " " + k2 + " : nat),\n  " + *fn_a + " " + n + " " +
                  k + " (" + *fn_b + " " + m + " " + k2 + " " + t0 + ") = " +
                  *fn_b + " " + m + " " + k2 + " (" + *fn_a + " " + n + " " + k +
                  " " + t0 + ").",
              induction));
        }
      }
    }

    for (std::size_t i = 0; i < plan.substs.size(); ++i) {
      const std::string& subst_fn = plan.substs[i].name;
      const std::string& lift_fn = plan.lifts[i].name;
      SortId s = plan.substs[i].sort;
      const std::string& p_name = g.sort_name(plan.substs[i].target);
      const std::string& s_name = g.sort_name(s);
      const std::string* lift_in_s = plan.lift_name(s, s);
      items.push_back(lemma(
          subst_fn + "_lift_cancel",
          "  forall (" + t0 + " : " + p_name + ") (" + u + " : " + s_name +
              ") (" + j + " : nat),\n  " + subst_fn + " " + u + " " + j + " (" +
              lift_fn + " 1 " + j + " " + t0 + ") = " + t0 + ".",
          induction));
      items.push_back(lemma(
          lift_fn + "_subst_distrib",
          "  forall (" + t0 + " : " + p_name + ") (" + u + " : " + s_name +
              ") (" + n + " " + k + " " + j + " : nat), " + k + " <= " + j +
              " ->\n  " + lift_fn + " " + n + " " + k + " (" + subst_fn + " " +
              u + " " + j + " " + t0 + ") =\n  " + subst_fn + " (" + *lift_in_s +
              " " + n + " " + k + " " + u + ") (" + j + " + " + n + ") (" +
              lift_fn + " " + n + " " + k + " " + t0 + ").",
          induction));
    }
    return join(items);
  }

  std::string main_tactic() const {
    return "Ltac " + plan.tactics.main + " :=\n  intros; " + plan.tactics.index +
           "; " + plan.tactics.crush + "; " + plan.tactics.ecrush + ".";
  }

  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out += "\n\n";
      out += items[i];
    }
    return out;
  }
};

}  // namespace

std::string emit_db_inductives(const ValidGrammar& g) {
  FunctionPlan plan = plan_functions(g);
  return Emitter(g, plan).db_inductives();
}

std::string emit_named_inductives(const ValidGrammar& g, const FunctionPlan& plan) {
  return Emitter(g, plan).named_inductives();
}

std::string emit_lift_subst(const ValidGrammar& g, const FunctionPlan& plan) {
  return Emitter(g, plan).lift_subst();
}

std::string emit_translation(const ValidGrammar& g, const FunctionPlan& plan) {
  Emitter em(g, plan);
  return "Local Open Scope string_scope.\n\n" + em.named_inductives() + "\n\n" +
         em.translation();
}

std::string emit_properties_and_tactics(const ValidGrammar& g,
                                        const FunctionPlan& plan) {
  Emitter em(g, plan);
  return em.database_and_tactics() + "\n\n" + em.basic_properties() + "\n\n" +
         em.index_tactic() + "\n\n" + em.advanced_properties() + "\n\n" +
         em.main_tactic();
}

EmittedFile emit_module(const ValidGrammar& g, const FunctionPlan& plan,
                        const EmitOptions& opts) {
  Emitter em(g, plan);
  EmittedFile file;
  file.sections = {
      {"Database and tactics definition.", em.database_and_tactics()},
      {"De Bruijn structure definition.", em.db_inductives()},
      {"Lifting and substitution function definitions.", em.lift_subst()},
      {"Auxiliary structure and function definitions.",
       "Local Open Scope string_scope.\n\n" + em.named_inductives() + "\n\n" +
           em.translation()},
      {"Basic functions properties w.r.t. index cases.", em.basic_properties()},
      {"Index tactic definition.", em.index_tactic()},
      {"Advanced functions properties and corresponding tactics.",
       em.advanced_properties()},
      {"Main tactic definition.", em.main_tactic()},
  };

  std::string version = opts.version.empty() ? std::string(kVersion) : opts.version;
  std::string out = "(* Generated by dbgen " + version + ". Do not edit. *)\n\n";
  out += "Require Import Arith.\n";
  out += "Require Import Omega.\n";
  out += "Require Import List.\n";
  out += "Require Import String.\n\n";
  out += "Module " + g.module_name() + ".\n";
  for (const auto& [title, body] : file.sections) {
    out += "\n(* -- " + title + " -- *)\n\n";
    out += body;
    out += "\n";
  }
  out += "\nEnd " + g.module_name() + ".\n";
  file.rendered = std::move(out);
  return file;
}

}  // namespace dbgen
