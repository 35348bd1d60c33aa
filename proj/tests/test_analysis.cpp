#include <set>
#include <sstream>

#include "dbgen/analysis.hpp"
#include "dbgen/corpus.hpp"
#include "dbgen/parser.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace dbgen;

namespace {

ValidGrammar load(std::string_view src) {
  return validate_or_throw(parse_source(src));
}

std::set<std::string> names(const ValidGrammar& g, const std::vector<SortId>& ids) {
  std::set<std::string> out;
  for (SortId s : ids) out.insert(g.sort_name(s));
  return out;
}

// Independent oracle: iterate the edge closure to a fixpoint.
std::set<SortId> naive_reach(const GrammarGraph& graph, SortId target) {
  std::set<SortId> reach{target};
  bool changed = true;
  while (changed) {
    changed = false;
    for (SortId from = 0; from < graph.out.size(); ++from) {
      if (reach.contains(from)) continue;
      for (SortId to : graph.out[from]) {
        if (reach.contains(to)) {
          reach.insert(from);
          changed = true;
          break;
        }
      }
    }
  }
  return reach;
}

}  // namespace

TEST_CASE("lambda calculus graph") {
  ValidGrammar g = load(corpus::kLambdaTerms);
  GrammarGraph graph = build_graph(g);
  CHECK(graph.node_count == 1);
  CHECK(graph.has_edge(0, 0));
  CHECK(names(g, indexed_sorts(g)) == std::set<std::string>{"term"});
}

TEST_CASE("System F graph and reachability") {
  ValidGrammar g = load(corpus::kSystemF);
  GrammarGraph graph = build_graph(g);
  SortId type = *g.sort_id("type");
  SortId term = *g.sort_id("term");
  CHECK(graph.has_edge(type, type));
  CHECK(graph.has_edge(term, term));
  CHECK(graph.has_edge(term, type));
  CHECK(!graph.has_edge(type, term));
  CHECK(graph.edges().size() == 3);

  CHECK(names(g, indexed_sorts(g)) == std::set<std::string>{"type", "term"});
  CHECK(indexed_sorts(g) == std::vector<SortId>{type, term});

  CHECK(names(g, reachable_from(graph, type)) ==
        std::set<std::string>{"type", "term"});
  CHECK(names(g, reachable_from(graph, term)) == std::set<std::string>{"term"});
}

TEST_CASE("leaf categories keep their node with no outgoing edges") {
  ValidGrammar g = load(
      "Module M.\nInductive leaf : Type :=\n| mk (n : nat).\n"
      "Inductive tree : Type :=\n| wrap (l : leaf).\nEnd M.\n");
  GrammarGraph graph = build_graph(g);
  SortId leaf = *g.sort_id("leaf");
  CHECK(graph.out[leaf].empty());
  CHECK(graph.node_count == 2);
}

TEST_CASE("grammar with no index annotations plans nothing") {
  ValidGrammar g = load(corpus::kChains);
  CHECK(indexed_sorts(g).empty());
  FunctionPlan plan = plan_functions(g);
  CHECK(plan.lifts.empty());
  CHECK(plan.substs.empty());
  CHECK(plan.hintdb_name == "Chains_database");
}

TEST_CASE("singleton sort without a self edge reaches only itself") {
  ValidGrammar g = load(
      "Module M.\nInductive c : Type :=\n| cvar ((* index *) x : nat).\nEnd M.\n");
  GrammarGraph graph = build_graph(g);
  CHECK(reachable_from(graph, 0) == std::vector<SortId>{0});
}

TEST_CASE("System F plan names match exactly") {
  ValidGrammar g = load(corpus::kSystemF);
  FunctionPlan plan = plan_functions(g);

  std::vector<std::string> lift_names;
  for (const auto& e : plan.lifts) lift_names.push_back(e.name);
  CHECK(lift_names == std::vector<std::string>{"type_lift_in_type",
                                               "type_lift_in_term",
                                               "term_lift_in_term"});

  std::vector<std::string> subst_names;
  for (const auto& e : plan.substs) subst_names.push_back(e.name);
  CHECK(subst_names == std::vector<std::string>{"type_subst_in_type",
                                                "type_subst_in_term",
                                                "term_subst_in_term"});

  CHECK(plan.hintdb_name == "SYS_F_terms_database");
  CHECK(plan.translate_names ==
        std::vector<std::string>{"dbify_type", "dbify_term"});
  CHECK(plan.tactics.crush == "crush_tac");
  CHECK(plan.tactics.ecrush == "ecrush_tac");
  CHECK(plan.tactics.index == "index_tac");
  CHECK(plan.tactics.main == "dbgen_tac");
  CHECK(plan.named_prefix == "_");
}

TEST_CASE("module name feeds the hint database name") {
  ValidGrammar g = load(corpus::kLambdaTerms);
  CHECK(plan_functions(g).hintdb_name == "LambdaTerms_database");
}

TEST_CASE("plan is deterministic") {
  ValidGrammar g = load(corpus::kMixedBind);
  FunctionPlan a = plan_functions(g);
  FunctionPlan b = plan_functions(g);
  REQUIRE(a.lifts.size() == b.lifts.size());
  for (std::size_t i = 0; i < a.lifts.size(); ++i) {
    CHECK(a.lifts[i].name == b.lifts[i].name);
    CHECK(a.lifts[i].sort == b.lifts[i].sort);
    CHECK(a.lifts[i].target == b.lifts[i].target);
  }
  REQUIRE(a.substs.size() == b.substs.size());
  for (std::size_t i = 0; i < a.substs.size(); ++i) {
    CHECK(a.substs[i].name == b.substs[i].name);
  }
}

TEST_CASE("plan domain law") {
  for (const corpus::Entry& entry : corpus::all()) {
    ValidGrammar g = load(entry.source);
    GrammarGraph graph = build_graph(g);
    FunctionPlan plan = plan_functions(g);
    std::size_t expected = 0;
    for (SortId s : indexed_sorts(g)) expected += reachable_from(graph, s).size();
    CHECK(plan.lifts.size() == expected);
    CHECK(plan.substs.size() == expected);
  }
}

TEST_CASE("reachability matches the naive closure on random grammars") {
  testgen::Gen gen(8086);
  testgen::Options opts;
  opts.well_formed = true;
  for (int i = 0; i < 100; ++i) {
    SourceGrammar source = gen.grammar(opts);
    auto result = validate_grammar(source);
    auto* valid = std::get_if<ValidGrammar>(&result);
    REQUIRE(valid != nullptr);
    GrammarGraph graph = build_graph(*valid);
    for (SortId s = 0; s < valid->sort_count(); ++s) {
      auto fast = reachable_from(graph, s);
      std::set<SortId> fast_set(fast.begin(), fast.end());
      CHECK(fast_set == naive_reach(graph, s));
    }
  }
}

TEST_CASE("debug dumps use a stable text format") {
  ValidGrammar g = load(corpus::kSystemF);
  GrammarGraph graph = build_graph(g);
  std::ostringstream out;
  dump_graph(out, g, graph);
  CHECK(out.str() ==
        "== grammar graph ==\n"
        "type -> type\n"
        "term -> type\n"
        "term -> term\n"
        "== indexed sorts ==\n"
        "type\n"
        "term\n"
        "== reachability ==\n"
        "type: type term\n"
        "term: term\n");

  std::ostringstream plan_out;
  dump_plan(plan_out, g, plan_functions(g));
  CHECK(plan_out.str() ==
        "== plan ==\n"
        "lift type_lift_in_type : nat -> nat -> type -> type\n"
        "lift type_lift_in_term : nat -> nat -> term -> term\n"
        "lift term_lift_in_term : nat -> nat -> term -> term\n"
        "subst type_subst_in_type : type -> nat -> type -> type\n"
        "subst type_subst_in_term : type -> nat -> term -> term\n"
        "subst term_subst_in_term : term -> nat -> term -> term\n"
        "translate dbify_type : telescope -> _type -> option type\n"
        "translate dbify_term : telescope -> _term -> option term\n"
        "hintdb SYS_F_terms_database\n"
        "tactics crush_tac ecrush_tac index_tac dbgen_tac\n"
        "groups [type] [term]\n");
}

TEST_CASE("mixed grammar reaches across groups") {
  ValidGrammar g = load(corpus::kMixedBind);
  GrammarGraph graph = build_graph(g);
  SortId pat = *g.sort_id("pat");
  SortId expr = *g.sort_id("expr");
  SortId prog = *g.sort_id("prog");
  CHECK(names(g, reachable_from(graph, pat)) ==
        std::set<std::string>{"pat", "expr", "prog"});
  CHECK(names(g, reachable_from(graph, expr)) ==
        std::set<std::string>{"expr", "prog"});
  CHECK(!g.is_indexed(prog));

  FunctionPlan plan = plan_functions(g);
  CHECK(plan.lifts.size() == 5);
  CHECK(plan.lift_name(pat, prog) != nullptr);
  CHECK(plan.lift_name(expr, pat) == nullptr);
}
