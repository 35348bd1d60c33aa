#ifndef DBGEN_ANALYSIS_HPP
#define DBGEN_ANALYSIS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dbgen/validate.hpp"

namespace dbgen {

// Subterm relation between categories: an edge (p, q) means some
// constructor of p has a subterm parameter of category q (binding or not).
struct GrammarGraph {
  std::size_t node_count = 0;
  std::vector<std::vector<SortId>> out;  // sorted, unique

  bool has_edge(SortId from, SortId to) const;
  std::vector<std::pair<SortId, SortId>> edges() const;
};

GrammarGraph build_graph(const ValidGrammar& g);

// Categories owning an index constructor, in source order.
std::vector<SortId> indexed_sorts(const ValidGrammar& g);

// All categories p with p ->* s (zero or more edges); always contains s.
// Sorted by sort id, i.e. source order.
std::vector<SortId> reachable_from(const GrammarGraph& graph, SortId s);

// Every name the generated module derives from the grammar. Lift/subst
// entries exist exactly for (indexed sort s, category p reaching s) and are
// ordered by indexed sort in source order, then by target category in
// source order.
struct FunctionPlan {
  struct Entry {
    SortId sort;    // the indexed sort whose variables are moved
    SortId target;  // the category the function traverses
    std::string name;
  };

  std::vector<Entry> lifts;   // "<s>_lift_in_<p>"
  std::vector<Entry> substs;  // "<s>_subst_in_<p>"
  std::vector<std::string> translate_names;  // per sort id: "dbify_<p>"
  std::string named_prefix;
  std::string hintdb_name;
  struct TacticNames {
    std::string crush;
    std::string ecrush;
    std::string index;
    std::string main;
  } tactics;
  std::vector<std::vector<SortId>> mutual_groups;

  const std::string* lift_name(SortId s, SortId p) const;
  const std::string* subst_name(SortId s, SortId p) const;
  bool pair_planned(SortId s, SortId p) const;
};

FunctionPlan plan_functions(const ValidGrammar& g);

// Stable text dumps used by the -debug mode.
void dump_graph(std::ostream& os, const ValidGrammar& g, const GrammarGraph& graph);
void dump_plan(std::ostream& os, const ValidGrammar& g, const FunctionPlan& plan);

}  // namespace dbgen

#endif
