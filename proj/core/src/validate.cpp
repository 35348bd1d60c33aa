#include "dbgen/validate.hpp"

#include <algorithm>
#include <set>

namespace dbgen {

std::uint64_t eval_expr(const CountExpr& e, const CountEnv& env) {
  switch (e.kind) {
    case CountExpr::Kind::Literal:
      return e.value;
    case CountExpr::Kind::Variable: {
      auto it = env.find(e.name);
      if (it == env.end()) {
        throw EvalError("unbound identifier '" + e.name + "' in count expression");
      }
      return it->second;
    }
    case CountExpr::Kind::Binary: {
      std::uint64_t a = eval_expr(e.lhs(), env);
      std::uint64_t b = eval_expr(e.rhs(), env);
      switch (e.op) {
        case CountExpr::Op::Add: return a + b;
        case CountExpr::Op::Sub: return a > b ? a - b : 0;
        case CountExpr::Op::Mul: return a * b;
      }
    }
  }
  return 0;
}

std::map<std::string, std::uint64_t> binder_counts(const BindingSpec& b,
                                                   const CountEnv& env) {
  std::map<std::string, std::uint64_t> counts;
  for (const Shift& s : b.shifts) {
    counts[s.sort] += eval_expr(s.count, env);
  }
  return counts;
}

std::vector<std::string> binder_sort_order(const BindingSpec& b) {
  std::vector<std::string> order;
  for (const Shift& s : b.shifts) {
    if (std::find(order.begin(), order.end(), s.sort) == order.end()) {
      order.push_back(s.sort);
    }
  }
  return order;
}

std::string_view validation_code_name(ValidationError::Code code) {
  switch (code) {
    case ValidationError::Code::ExtraArgsOnIndexConstructor:
      return "ExtraArgsOnIndexConstructor";
    case ValidationError::Code::MultipleIndexConstructors:
      return "MultipleIndexConstructors";
    case ValidationError::Code::UnknownCategoryInBind:
      return "UnknownCategoryInBind";
    case ValidationError::Code::UnknownCategoryInParam:
      return "UnknownCategoryInParam";
    case ValidationError::Code::UnboundExprIdentifier:
      return "UnboundExprIdentifier";
    case ValidationError::Code::DuplicateName:
      return "DuplicateName";
  }
  return "ValidationError";
}

std::optional<SortId> ValidGrammar::sort_id(std::string_view name) const {
  for (SortId s = 0; s < sorts_.size(); ++s) {
    if (sorts_[s]->name == name) return s;
  }
  return std::nullopt;
}

std::optional<CtorId> ValidGrammar::ctor_id(std::string_view name) const {
  for (CtorId c = 0; c < ctors_.size(); ++c) {
    if (ctors_[c].decl->name == name) return c;
  }
  return std::nullopt;
}

std::span<const CtorId> ValidGrammar::ctors_of(SortId s) const {
  return ctors_of_sort_[s];
}

std::optional<CtorId> ValidGrammar::index_ctor_of(SortId s) const {
  return index_ctor_[s];
}

bool ValidGrammar::is_index_ctor(CtorId c) const {
  const Constructor& ctor = *ctors_[c].decl;
  return ctor.params.size() == 1 && ctor.params[0].kind == ParamKind::Index;
}

std::vector<std::string> ValidGrammar::nat_params_before(
    CtorId c, std::size_t param_index) const {
  std::vector<std::string> names;
  const Constructor& ctor = *ctors_[c].decl;
  for (std::size_t i = 0; i < param_index && i < ctor.params.size(); ++i) {
    if (ctor.params[i].kind == ParamKind::Nat) names.push_back(ctor.params[i].name);
  }
  return names;
}

void ValidGrammar::rebuild_indexes() {
  sorts_.clear();
  ctors_.clear();
  ctors_of_sort_.clear();
  index_ctor_.clear();
  groups_.clear();
  for (const InductiveGroup& group : grammar_.groups) {
    std::vector<SortId> ids;
    for (const Category& cat : group.categories) {
      SortId s = static_cast<SortId>(sorts_.size());
      sorts_.push_back(&cat);
      ids.push_back(s);
      ctors_of_sort_.emplace_back();
      index_ctor_.emplace_back();
      for (const Constructor& ctor : cat.constructors) {
        CtorId c = static_cast<CtorId>(ctors_.size());
        ctors_.push_back({&ctor, s});
        ctors_of_sort_[s].push_back(c);
        if (ctor.params.size() == 1 && ctor.params[0].kind == ParamKind::Index) {
          index_ctor_[s] = c;
        }
      }
    }
    groups_.push_back(std::move(ids));
  }
}

ValidGrammar::ValidGrammar(const ValidGrammar& other) : grammar_(other.grammar_) {
  rebuild_indexes();
}

ValidGrammar& ValidGrammar::operator=(const ValidGrammar& other) {
  if (this != &other) {
    grammar_ = other.grammar_;
    rebuild_indexes();
  }
  return *this;
}

ValidGrammar::ValidGrammar(ValidGrammar&& other) noexcept = default;
ValidGrammar& ValidGrammar::operator=(ValidGrammar&& other) noexcept = default;

namespace {

struct Checker {
  const SourceGrammar& g;
  std::vector<ValidationError> errors;

  void report(ValidationError::Code code, std::string where, SourcePos pos,
              std::string message) {
    errors.push_back({code, std::move(where), pos, std::move(message)});
  }

  std::set<std::string, std::less<>> category_names() const {
    std::set<std::string, std::less<>> names;
    for (const InductiveGroup& group : g.groups) {
      for (const Category& cat : group.categories) names.insert(cat.name);
    }
    return names;
  }

  void check_duplicates() {
    std::set<std::string_view> cats;
    for (const InductiveGroup& group : g.groups) {
      for (const Category& cat : group.categories) {
        if (!cats.insert(cat.name).second) {
          report(ValidationError::Code::DuplicateName, cat.name, cat.pos,
                 "duplicate category name '" + cat.name + "'");
        }
      }
    }
    std::set<std::string_view> ctors;
    for (const InductiveGroup& group : g.groups) {
      for (const Category& cat : group.categories) {
        for (const Constructor& ctor : cat.constructors) {
          if (cats.contains(ctor.name)) {
            report(ValidationError::Code::DuplicateName,
                   cat.name + "/" + ctor.name, ctor.pos,
                   "constructor '" + ctor.name + "' collides with a category name");
          }
          if (!ctors.insert(ctor.name).second) {
            report(ValidationError::Code::DuplicateName,
                   cat.name + "/" + ctor.name, ctor.pos,
                   "duplicate constructor name '" + ctor.name + "'");
          }
          std::set<std::string_view> params;
          for (const Param& p : ctor.params) {
            if (!params.insert(p.name).second) {
              report(ValidationError::Code::DuplicateName,
                     cat.name + "/" + ctor.name + "/" + p.name, p.pos,
                     "duplicate parameter name '" + p.name + "' in constructor '" +
                         ctor.name + "'");
            }
          }
        }
      }
    }
  }

  void check_index_constructors() {
    for (const InductiveGroup& group : g.groups) {
      for (const Category& cat : group.categories) {
        const Constructor* first_index = nullptr;
        for (const Constructor& ctor : cat.constructors) {
          bool has_index = std::any_of(
              ctor.params.begin(), ctor.params.end(),
              [](const Param& p) { return p.kind == ParamKind::Index; });
          if (!has_index) continue;
          if (ctor.params.size() > 1) {
            report(ValidationError::Code::ExtraArgsOnIndexConstructor,
                   cat.name + "/" + ctor.name, ctor.pos,
                   "index constructor '" + ctor.name +
                       "' may not have other arguments");
          }
          if (first_index != nullptr) {
            report(ValidationError::Code::MultipleIndexConstructors,
                   cat.name + "/" + ctor.name, ctor.pos,
                   "category '" + cat.name +
                       "' has more than one index constructor ('" +
                       first_index->name + "' and '" + ctor.name + "')");
          } else {
            first_index = &ctor;
          }
        }
      }
    }
  }

  void check_expr_vars(const CountExpr& e, const std::set<std::string>& in_scope,
                       const std::string& where) {
    switch (e.kind) {
      case CountExpr::Kind::Literal:
        return;
      case CountExpr::Kind::Variable:
        if (!in_scope.contains(e.name)) {
          report(ValidationError::Code::UnboundExprIdentifier, where, e.pos,
                 "count expression identifier '" + e.name +
                     "' is not a preceding nat parameter");
        }
        return;
      case CountExpr::Kind::Binary:
        check_expr_vars(e.lhs(), in_scope, where);
        check_expr_vars(e.rhs(), in_scope, where);
        return;
    }
  }

  void check_params() {
    auto cats = category_names();
    for (const InductiveGroup& group : g.groups) {
      for (const Category& cat : group.categories) {
        for (const Constructor& ctor : cat.constructors) {
          std::set<std::string> nat_in_scope;
          for (const Param& p : ctor.params) {
            std::string where = cat.name + "/" + ctor.name + "/" + p.name;
            if (p.kind == ParamKind::Subterm) {
              if (!cats.contains(p.category)) {
                report(ValidationError::Code::UnknownCategoryInParam, where, p.pos,
                       "parameter type '" + p.category + "' is not a category");
              }
              if (p.binding) {
                for (const Shift& s : p.binding->shifts) {
                  if (!cats.contains(s.sort)) {
                    report(ValidationError::Code::UnknownCategoryInBind, where,
                           s.pos,
                           "bound category '" + s.sort + "' is not a category");
                  }
                  check_expr_vars(s.count, nat_in_scope, where);
                }
              }
            }
            if (p.kind == ParamKind::Nat) nat_in_scope.insert(p.name);
          }
        }
      }
    }
  }
};

}  // namespace

std::variant<ValidGrammar, std::vector<ValidationError>> validate_grammar(
    SourceGrammar g) {
  Checker checker{g, {}};
  checker.check_duplicates();
  checker.check_index_constructors();
  checker.check_params();
  if (!checker.errors.empty()) {
    std::stable_sort(checker.errors.begin(), checker.errors.end(),
                     [](const ValidationError& a, const ValidationError& b) {
                       if (a.pos.line != b.pos.line) return a.pos.line < b.pos.line;
                       return a.pos.column < b.pos.column;
                     });
    return checker.errors;
  }
  ValidGrammar valid;
  valid.grammar_ = std::move(g);
  valid.rebuild_indexes();
  return valid;
}

ValidGrammar validate_or_throw(SourceGrammar g) {
  auto result = validate_grammar(std::move(g));
  if (auto* errors = std::get_if<std::vector<ValidationError>>(&result)) {
    std::string msg = "grammar validation failed:";
    for (const ValidationError& e : *errors) {
      msg += "\n  " + to_string(e.pos) + ": " + e.message;
    }
    throw std::runtime_error(msg);
  }
  return std::move(std::get<ValidGrammar>(result));
}

}  // namespace dbgen
