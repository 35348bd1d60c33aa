#include "dbgen/analysis.hpp"

#include <algorithm>

namespace dbgen {

bool GrammarGraph::has_edge(SortId from, SortId to) const {
  const auto& row = out[from];
  return std::binary_search(row.begin(), row.end(), to);
}

std::vector<std::pair<SortId, SortId>> GrammarGraph::edges() const {
  std::vector<std::pair<SortId, SortId>> all;
  for (SortId from = 0; from < out.size(); ++from) {
    for (SortId to : out[from]) all.emplace_back(from, to);
  }
  return all;
}

GrammarGraph build_graph(const ValidGrammar& g) {
  GrammarGraph graph;
  graph.node_count = g.sort_count();
  graph.out.resize(g.sort_count());
  for (CtorId c = 0; c < g.ctor_count(); ++c) {
    SortId from = g.ctor_sort(c);
    for (const Param& p : g.ctor(c).params) {
      if (p.kind != ParamKind::Subterm) continue;
      if (auto to = g.sort_id(p.category)) {
        graph.out[from].push_back(*to);
      }
    }
  }
  for (auto& row : graph.out) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return graph;
}

std::vector<SortId> indexed_sorts(const ValidGrammar& g) {
  std::vector<SortId> sorts;
  for (SortId s = 0; s < g.sort_count(); ++s) {
    if (g.is_indexed(s)) sorts.push_back(s);
  }
  return sorts;
}

std::vector<SortId> reachable_from(const GrammarGraph& graph, SortId s) {
  // Walk edges backwards from s.
  std::vector<std::vector<SortId>> in(graph.node_count);
  for (SortId from = 0; from < graph.out.size(); ++from) {
    for (SortId to : graph.out[from]) in[to].push_back(from);
  }
  std::vector<bool> seen(graph.node_count, false);
  std::vector<SortId> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    SortId cur = stack.back();
    stack.pop_back();
    for (SortId pred : in[cur]) {
      if (!seen[pred]) {
        seen[pred] = true;
        stack.push_back(pred);
      }
    }
  }
  std::vector<SortId> result;
  for (SortId p = 0; p < seen.size(); ++p) {
    if (seen[p]) result.push_back(p);
  }
  return result;
}

const std::string* FunctionPlan::lift_name(SortId s, SortId p) const {
  for (const Entry& e : lifts) {
    if (e.sort == s && e.target == p) return &e.name;
  }
  return nullptr;
}

const std::string* FunctionPlan::subst_name(SortId s, SortId p) const {
  for (const Entry& e : substs) {
    if (e.sort == s && e.target == p) return &e.name;
  }
  return nullptr;
}

bool FunctionPlan::pair_planned(SortId s, SortId p) const {
  return lift_name(s, p) != nullptr;
}

FunctionPlan plan_functions(const ValidGrammar& g) {
  FunctionPlan plan;
  GrammarGraph graph = build_graph(g);
  for (SortId s : indexed_sorts(g)) {
    for (SortId p : reachable_from(graph, s)) {
      plan.lifts.push_back({s, p, g.sort_name(s) + "_lift_in_" + g.sort_name(p)});
      plan.substs.push_back({s, p, g.sort_name(s) + "_subst_in_" + g.sort_name(p)});
    }
  }
  for (SortId p = 0; p < g.sort_count(); ++p) {
    plan.translate_names.push_back("dbify_" + g.sort_name(p));
  }
  plan.named_prefix = "_";
  plan.hintdb_name = g.module_name() + "_database";
  plan.tactics = {"crush_tac", "ecrush_tac", "index_tac", "dbgen_tac"};
  plan.mutual_groups = g.groups();
  return plan;
}

void dump_graph(std::ostream& os, const ValidGrammar& g, const GrammarGraph& graph) {
  os << "== grammar graph ==\n";
  for (auto [from, to] : graph.edges()) {
    os << g.sort_name(from) << " -> " << g.sort_name(to) << "\n";
  }
  os << "== indexed sorts ==\n";
  for (SortId s : indexed_sorts(g)) {
    os << g.sort_name(s) << "\n";
  }
  os << "== reachability ==\n";
  for (SortId s : indexed_sorts(g)) {
    os << g.sort_name(s) << ":";
    for (SortId p : reachable_from(graph, s)) os << " " << g.sort_name(p);
    os << "\n";
  }
}

void dump_plan(std::ostream& os, const ValidGrammar& g, const FunctionPlan& plan) {
  os << "== plan ==\n";
  for (const FunctionPlan::Entry& e : plan.lifts) {
    os << "lift " << e.name << " : nat -> nat -> " << g.sort_name(e.target)
       << " -> " << g.sort_name(e.target) << "\n";
  }
  for (const FunctionPlan::Entry& e : plan.substs) {
    os << "subst " << e.name << " : " << g.sort_name(e.sort) << " -> nat -> "
       << g.sort_name(e.target) << " -> " << g.sort_name(e.target) << "\n";
  }
  for (SortId p = 0; p < g.sort_count(); ++p) {
    os << "translate " << plan.translate_names[p] << " : telescope -> "
       << plan.named_prefix << g.sort_name(p) << " -> option " << g.sort_name(p)
       << "\n";
  }
  os << "hintdb " << plan.hintdb_name << "\n";
  os << "tactics " << plan.tactics.crush << " " << plan.tactics.ecrush << " "
     << plan.tactics.index << " " << plan.tactics.main << "\n";
  os << "groups";
  for (const auto& group : plan.mutual_groups) {
    os << " [";
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i > 0) os << " ";
      os << g.sort_name(group[i]);
    }
    os << "]";
  }
  os << "\n";
}

}  // namespace dbgen
