#include <algorithm>
#include <functional>

#include "dbgen/corpus.hpp"
#include "dbgen/parser.hpp"
#include "dbgen/render.hpp"
#include "dbgen/validate.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace dbgen;

namespace {

std::vector<ValidationError> errors_of(const std::string& src) {
  auto result = validate_grammar(parse_source(src));
  auto* errors = std::get_if<std::vector<ValidationError>>(&result);
  REQUIRE(errors != nullptr);
  return *errors;
}

bool has_code(const std::vector<ValidationError>& errors,
              ValidationError::Code code) {
  return std::any_of(errors.begin(), errors.end(),
                     [&](const ValidationError& e) { return e.code == code; });
}

}  // namespace

TEST_CASE("corpus grammars validate cleanly") {
  for (const corpus::Entry& entry : corpus::all()) {
    auto result = validate_grammar(parse_source(entry.source));
    CHECK(std::holds_alternative<ValidGrammar>(result));
  }
}

TEST_CASE("lambda calculus index constructor map") {
  ValidGrammar g = validate_or_throw(parse_source(corpus::kLambdaTerms));
  REQUIRE(g.sort_count() == 1);
  auto term = g.sort_id("term");
  REQUIRE(term.has_value());
  auto ic = g.index_ctor_of(*term);
  REQUIRE(ic.has_value());
  CHECK(g.ctor_name(*ic) == "var");
}

TEST_CASE("extra arguments on an index constructor are rejected") {
  auto errors = errors_of(
      "Module M.\nInductive term : Type :=\n"
      "| var ((* index *) x : nat) (t : term).\nEnd M.\n");
  CHECK(has_code(errors, ValidationError::Code::ExtraArgsOnIndexConstructor));
}

TEST_CASE("two index constructors in one category are rejected") {
  auto errors = errors_of(
      "Module M.\nInductive term : Type :=\n"
      "| var ((* index *) x : nat)\n| war ((* index *) y : nat).\nEnd M.\n");
  CHECK(has_code(errors, ValidationError::Code::MultipleIndexConstructors));
}

TEST_CASE("binding an unknown category is rejected") {
  auto errors = errors_of(
      "Module M.\nInductive term : Type :=\n"
      "| lam ((* bind typ in *) t : term).\nEnd M.\n");
  CHECK(has_code(errors, ValidationError::Code::UnknownCategoryInBind));
}

TEST_CASE("unknown parameter category is rejected") {
  auto errors = errors_of(
      "Module M.\nInductive term : Type :=\n| wrap (t : tree).\nEnd M.\n");
  CHECK(has_code(errors, ValidationError::Code::UnknownCategoryInParam));
}

TEST_CASE("count expressions may only use preceding nat parameters") {
  auto errors = errors_of(
      "Module M.\nInductive term : Type :=\n"
      "| mk ((* bind [n term] in *) t : term) (n : nat).\nEnd M.\n");
  CHECK(has_code(errors, ValidationError::Code::UnboundExprIdentifier));
}

TEST_CASE("duplicate names are rejected") {
  SUBCASE("categories") {
    auto errors = errors_of(
        "Module M.\nInductive t : Type :=.\nInductive t : Type :=.\nEnd M.\n");
    CHECK(has_code(errors, ValidationError::Code::DuplicateName));
  }
  SUBCASE("constructors across categories") {
    auto errors = errors_of(
        "Module M.\nInductive a : Type :=\n| mk (x : nat).\n"
        "Inductive b : Type :=\n| mk (y : nat).\nEnd M.\n");
    CHECK(has_code(errors, ValidationError::Code::DuplicateName));
  }
  SUBCASE("parameters within a constructor") {
    auto errors = errors_of(
        "Module M.\nInductive a : Type :=\n| mk (x : nat) (x : nat).\nEnd M.\n");
    CHECK(has_code(errors, ValidationError::Code::DuplicateName));
  }
}

TEST_CASE("all violations are reported, sorted by position") {
  auto errors = errors_of(
      "Module M.\n"
      "Inductive term : Type :=\n"
      "| var ((* index *) x : nat) (t : term)\n"
      "| lam ((* bind typ in *) t : term)\n"
      "| wrap (t : tree).\n"
      "End M.\n");
  CHECK(errors.size() == 3);
  CHECK(has_code(errors, ValidationError::Code::ExtraArgsOnIndexConstructor));
  CHECK(has_code(errors, ValidationError::Code::UnknownCategoryInBind));
  CHECK(has_code(errors, ValidationError::Code::UnknownCategoryInParam));
  for (std::size_t i = 1; i < errors.size(); ++i) {
    bool ordered = errors[i - 1].pos.line < errors[i].pos.line ||
                   (errors[i - 1].pos.line == errors[i].pos.line &&
                    errors[i - 1].pos.column <= errors[i].pos.column);
    CHECK(ordered);
  }
}

TEST_CASE("eval_expr basics") {
  CHECK(eval_expr(CountExpr::literal(3), {}) == 3);
  CountEnv env{{"n", 3}};
  CHECK(eval_expr(parse_count_expr("2*n - 1"), env) == 5);
  CHECK(eval_expr(parse_count_expr("1 - 2"), {}) == 0);
  CHECK_THROWS_AS(eval_expr(CountExpr::variable("ghost"), {}), EvalError);
}

TEST_CASE("eval_expr agrees with an independent recursive evaluator") {
  // The oracle: direct structural recursion, written independently of the
  // implementation in validate.cpp.
  std::function<std::uint64_t(const CountExpr&, const CountEnv&)> oracle =
      [&](const CountExpr& e, const CountEnv& env) -> std::uint64_t {
    switch (e.kind) {
      case CountExpr::Kind::Literal: return e.value;
      case CountExpr::Kind::Variable: return env.at(e.name);
      case CountExpr::Kind::Binary: {
        std::uint64_t a = oracle(e.lhs(), env);
        std::uint64_t b = oracle(e.rhs(), env);
        if (e.op == CountExpr::Op::Add) return a + b;
        if (e.op == CountExpr::Op::Mul) return a * b;
        return b > a ? 0 : a - b;
      }
    }
    return 0;
  };

  testgen::Gen gen(123456);
  std::vector<std::string> vars{"n", "m", "p"};
  for (int i = 0; i < 1000; ++i) {
    CountExpr e = gen.expr(vars, 6);
    CountEnv env{{"n", gen.pick(10)}, {"m", gen.pick(10)}, {"p", gen.pick(10)}};
    CHECK(eval_expr(e, env) == oracle(e, env));
  }
}

TEST_CASE("binder_counts sums per sort") {
  auto spec_of = [](const std::string& src) {
    SourceGrammar g = parse_source(src);
    return *g.groups[0].categories[0].constructors[0].params.back().binding;
  };

  BindingSpec single = spec_of(
      "Module M.\nInductive term : Type :=\n"
      "| lam ((* bind term in *) t : term).\nEnd M.\n");
  auto counts = binder_counts(single, {});
  CHECK(counts.at("term") == 1);
  CHECK(counts.size() == 1);

  BindingSpec multi = spec_of(
      "Module M.\nInductive term : Type :=\n"
      "| mk ((* bind type, [2 term] in *) t : term).\nEnd M.\n");
  counts = binder_counts(multi, {});
  CHECK(counts.at("type") == 1);
  CHECK(counts.at("term") == 2);

  BindingSpec repeated = spec_of(
      "Module M.\nInductive term : Type :=\n"
      "| mk (n : nat) ((* bind [n term], term in *) t : term).\nEnd M.\n");
  counts = binder_counts(repeated, {{"n", 2}});
  CHECK(counts.at("term") == 3);
}

TEST_CASE("binder_counts matches an independent fold") {
  testgen::Gen gen(5150);
  testgen::Options opts;
  opts.well_formed = true;
  for (int i = 0; i < 100; ++i) {
    SourceGrammar g = gen.grammar(opts);
    for (const auto& group : g.groups) {
      for (const auto& cat : group.categories) {
        for (const auto& ctor : cat.constructors) {
          CountEnv env;
          for (const auto& p : ctor.params) {
            if (p.kind == ParamKind::Nat) env[p.name] = gen.pick(5);
            if (p.kind != ParamKind::Subterm || !p.binding) continue;
            auto counts = binder_counts(*p.binding, env);
            std::map<std::string, std::uint64_t> fold;
            for (const Shift& s : p.binding->shifts) {
              fold[s.sort] += eval_expr(s.count, env);
            }
            CHECK(counts == fold);
          }
        }
      }
    }
  }
}

TEST_CASE("validation is total: valid or a nonempty error list") {
  testgen::Gen gen(31337);
  testgen::Options opts;
  for (int i = 0; i < 200; ++i) {
    SourceGrammar g = gen.grammar(opts);
    bool broke = false;
    // Mutate some grammars into invalid ones.
    if (gen.chance(50) && !g.groups.empty()) {
      auto& cats = g.groups[0].categories;
      switch (gen.pick(3)) {
        case 0:
          for (auto& cat : cats) {
            for (auto& ctor : cat.constructors) {
              for (auto& p : ctor.params) {
                if (p.kind == ParamKind::Subterm && !broke) {
                  p.category = "ghost_cat";
                  broke = true;
                }
              }
            }
          }
          break;
        case 1:
          if (cats.size() >= 2) {
            cats[1].name = cats[0].name;
            broke = true;
          }
          break;
        default:
          for (auto& ctor : cats[0].constructors) {
            if (!ctor.params.empty() && !broke) {
              Param extra;
              extra.name = "zzz";
              extra.kind = ParamKind::Index;
              ctor.params.push_back(extra);
              broke = true;
            }
          }
          break;
      }
    }
    auto result = validate_grammar(g);
    if (auto* errors = std::get_if<std::vector<ValidationError>>(&result)) {
      CHECK(!errors->empty());
    } else {
      CHECK(!broke);
    }
  }
}
