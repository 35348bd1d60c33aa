#include "dbgen/engine.hpp"

#include <algorithm>
#include <set>

namespace dbgen {

Engine::Engine(const ValidGrammar& g)
    : g_(&g), graph_(build_graph(g)), indexed_(indexed_sorts(g)) {
  std::size_t n = g.sort_count();
  reach_.assign(n, std::vector<bool>(n, false));
  for (SortId to = 0; to < n; ++to) {
    for (SortId from : reachable_from(graph_, to)) reach_[from][to] = true;
  }
}

CountEnv Engine::node_env(const Node& node) const {
  CountEnv env;
  const Constructor& ctor = g_->ctor(node.ctor);
  for (std::size_t i = 0; i < ctor.params.size() && i < node.args.size(); ++i) {
    if (ctor.params[i].kind == ParamKind::Nat) {
      env[ctor.params[i].name] = std::get<std::uint64_t>(node.args[i]);
    }
  }
  return env;
}

std::vector<std::uint64_t> Engine::arg_binder_counts(const Node& node,
                                                     std::size_t param_index) const {
  std::vector<std::uint64_t> counts(g_->sort_count(), 0);
  const Param& param = g_->ctor(node.ctor).params[param_index];
  if (param.kind != ParamKind::Subterm || !param.binding) return counts;
  CountEnv env = node_env(node);
  for (const Shift& shift : param.binding->shifts) {
    if (auto sid = g_->sort_id(shift.sort)) {
      counts[*sid] += eval_expr(shift.count, env);
    }
  }
  return counts;
}

std::optional<WfError> Engine::check_wf(const TermPtr& t) const {
  struct Walker {
    const Engine& e;
    std::optional<WfError> error;

    void fail(WfError::Code code, const std::string& path, std::string message) {
      if (!error) error = WfError{code, path, std::move(message)};
    }

    void walk(const TermPtr& t, const std::string& path) {
      if (error) return;
      const ValidGrammar& g = e.grammar();
      if (const Var* v = std::get_if<Var>(t.get())) {
        if (v->sort >= g.sort_count() || !g.is_indexed(v->sort)) {
          fail(WfError::Code::VarOfNonIndexedSort, path,
               "variable of a sort without an index constructor");
        }
        return;
      }
      const Node& n = std::get<Node>(*t);
      if (n.ctor >= g.ctor_count() || g.ctor_sort(n.ctor) != n.sort) {
        fail(WfError::Code::UnknownConstructor, path,
             "constructor does not belong to the node's sort");
        return;
      }
      if (g.is_index_ctor(n.ctor)) {
        fail(WfError::Code::ArityMismatch, path,
             "index constructor '" + g.ctor_name(n.ctor) +
                 "' must be represented as a variable");
        return;
      }
      const Constructor& ctor = g.ctor(n.ctor);
      if (ctor.params.size() != n.args.size()) {
        fail(WfError::Code::ArityMismatch, path,
             "constructor '" + ctor.name + "' expects " +
                 std::to_string(ctor.params.size()) + " arguments, got " +
                 std::to_string(n.args.size()));
        return;
      }
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        std::string child_path = path.empty()
                                     ? ctor.name + "/" + std::to_string(i)
                                     : path + "/" + ctor.name + "/" + std::to_string(i);
        const Param& param = ctor.params[i];
        if (param.kind == ParamKind::Nat) {
          if (!std::holds_alternative<std::uint64_t>(n.args[i])) {
            fail(WfError::Code::ArityMismatch, child_path,
                 "expected a nat argument");
            return;
          }
        } else {
          const TermPtr* sub = std::get_if<TermPtr>(&n.args[i]);
          if (sub == nullptr) {
            fail(WfError::Code::ArityMismatch, child_path,
                 "expected a subterm argument");
            return;
          }
          auto want = g.sort_id(param.category);
          if (!want || (*sub)->sort() != *want) {
            fail(WfError::Code::SortMismatch, child_path,
                 "subterm sort does not match parameter category '" +
                     param.category + "'");
            return;
          }
          walk(*sub, child_path);
        }
      }
    }
  };

  Walker walker{*this, std::nullopt};
  walker.walk(t, "");
  return walker.error;
}

TermPtr Engine::lift(SortId s, std::uint64_t n, std::uint64_t k,
                     const TermPtr& t) const {
  if (n == 0) return t;
  if (const Var* v = std::get_if<Var>(t.get())) {
    if (v->sort == s && v->index >= k) return make_var(s, v->index + n);
    return t;
  }
  const Node& node = std::get<Node>(*t);
  std::vector<Arg> args;
  args.reserve(node.args.size());
  bool changed = false;
  for (std::size_t i = 0; i < node.args.size(); ++i) {
    if (const TermPtr* sub = std::get_if<TermPtr>(&node.args[i])) {
      std::uint64_t bound = arg_binder_counts(node, i)[s];
      TermPtr lifted = lift(s, n, k + bound, *sub);
      changed = changed || lifted != *sub;
      args.emplace_back(std::move(lifted));
    } else {
      args.push_back(node.args[i]);
    }
  }
  if (!changed) return t;
  return make_node(node.sort, node.ctor, std::move(args));
}

TermPtr Engine::subst(SortId s, const TermPtr& u, std::uint64_t j,
                      const TermPtr& t) const {
  if (const Var* v = std::get_if<Var>(t.get())) {
    if (v->sort != s) return t;
    if (v->index == j) return u;
    if (v->index > j) return make_var(s, v->index - 1);
    return t;
  }
  const Node& node = std::get<Node>(*t);
  std::vector<Arg> args;
  args.reserve(node.args.size());
  bool changed = false;
  for (std::size_t i = 0; i < node.args.size(); ++i) {
    if (const TermPtr* sub = std::get_if<TermPtr>(&node.args[i])) {
      std::vector<std::uint64_t> bound = arg_binder_counts(node, i);
      TermPtr pushed = u;
      for (SortId crossed : indexed_) {
        if (bound[crossed] > 0 && reach_[s][crossed]) {
          pushed = lift(crossed, bound[crossed], 0, pushed);
        }
      }
      TermPtr result = subst(s, pushed, j + bound[s], *sub);
      changed = changed || result != *sub;
      args.emplace_back(std::move(result));
    } else {
      args.push_back(node.args[i]);
    }
  }
  if (!changed) return t;
  return make_node(node.sort, node.ctor, std::move(args));
}

TermPtr Engine::translate(const Telescope& ctx, const NamedTermPtr& t) const {
  const ValidGrammar& g = *g_;
  if (const NVar* v = std::get_if<NVar>(t.get())) {
    auto distance = ctx.lookup(v->sort, v->name);
    if (!distance) {
      throw TranslateError(TranslateError::Code::UnboundName,
                           "unbound name '" + v->name + "' of sort " +
                               g.sort_name(v->sort));
    }
    return make_var(v->sort, *distance);
  }
  const NNode& node = std::get<NNode>(*t);
  const Constructor& ctor = g.ctor(node.ctor);
  if (ctor.params.size() != node.args.size()) {
    throw std::invalid_argument("named term arity does not match constructor '" +
                                ctor.name + "'");
  }

  // Nat parameters feed the binder-count environment.
  CountEnv env;
  for (std::size_t i = 0; i < ctor.params.size(); ++i) {
    if (ctor.params[i].kind == ParamKind::Nat) {
      env[ctor.params[i].name] = std::get<std::uint64_t>(node.args[i]);
    }
  }

  std::vector<Arg> args;
  args.reserve(node.args.size());
  for (std::size_t i = 0; i < node.args.size(); ++i) {
    const Param& param = ctor.params[i];
    if (param.kind == ParamKind::Nat) {
      args.emplace_back(std::get<std::uint64_t>(node.args[i]));
      continue;
    }
    const NSubArg& sub = std::get<NSubArg>(node.args[i]);
    std::vector<std::uint64_t> expected(g.sort_count(), 0);
    if (param.binding) {
      for (const Shift& shift : param.binding->shifts) {
        if (auto sid = g.sort_id(shift.sort)) {
          expected[*sid] += eval_expr(shift.count, env);
        }
      }
    }
    std::vector<std::uint64_t> got(g.sort_count(), 0);
    for (const Binder& b : sub.binders) ++got[b.sort];
    for (SortId sid = 0; sid < g.sort_count(); ++sid) {
      if (expected[sid] != got[sid]) {
        throw TranslateError(
            TranslateError::Code::BinderArityMismatch,
            "binder list for parameter '" + param.name + "' names " +
                std::to_string(got[sid]) + " variables of sort " +
                g.sort_name(sid) + ", expected " + std::to_string(expected[sid]));
      }
    }
    Telescope extended = ctx;
    for (const Binder& b : sub.binders) extended.push(b);
    args.emplace_back(translate(extended, sub.term));
  }
  return make_node(node.sort, node.ctor, std::move(args));
}

namespace {

// All names of the given sort occurring anywhere in t (free, bound or as
// binders); used as the avoid-set for fresh name generation.
void collect_names(const NamedTermPtr& t, SortId sort,
                   std::set<std::string>& out) {
  if (const NVar* v = std::get_if<NVar>(t.get())) {
    if (v->sort == sort) out.insert(v->name);
    return;
  }
  for (const NamedArg& a : std::get<NNode>(*t).args) {
    if (const NSubArg* sub = std::get_if<NSubArg>(&a)) {
      for (const Binder& b : sub->binders) {
        if (b.sort == sort) out.insert(b.name);
      }
      collect_names(sub->term, sort, out);
    }
  }
}

void free_names(const NamedTermPtr& t, SortId sort,
                std::vector<std::string> shadowed, std::set<std::string>& out) {
  if (const NVar* v = std::get_if<NVar>(t.get())) {
    if (v->sort == sort &&
        std::find(shadowed.begin(), shadowed.end(), v->name) == shadowed.end()) {
      out.insert(v->name);
    }
    return;
  }
  for (const NamedArg& a : std::get<NNode>(*t).args) {
    if (const NSubArg* sub = std::get_if<NSubArg>(&a)) {
      std::vector<std::string> inner = shadowed;
      for (const Binder& b : sub->binders) {
        if (b.sort == sort) inner.push_back(b.name);
      }
      free_names(sub->term, sort, std::move(inner), out);
    }
  }
}

// Renames free occurrences of (sort, from) to `to`.
NamedTermPtr rename_free(const NamedTermPtr& t, SortId sort,
                         const std::string& from, const std::string& to) {
  if (const NVar* v = std::get_if<NVar>(t.get())) {
    if (v->sort == sort && v->name == from) return make_nvar(sort, to);
    return t;
  }
  const NNode& node = std::get<NNode>(*t);
  std::vector<NamedArg> args;
  args.reserve(node.args.size());
  for (const NamedArg& a : node.args) {
    if (const NSubArg* sub = std::get_if<NSubArg>(&a)) {
      bool shadowed = std::any_of(
          sub->binders.begin(), sub->binders.end(),
          [&](const Binder& b) { return b.sort == sort && b.name == from; });
      NSubArg copy = *sub;
      if (!shadowed) copy.term = rename_free(sub->term, sort, from, to);
      args.emplace_back(std::move(copy));
    } else {
      args.push_back(a);
    }
  }
  return make_nnode(node.sort, node.ctor, std::move(args));
}

}  // namespace

NamedTermPtr Engine::named_subst(const Binder& target, const NamedTermPtr& u,
                                 const NamedTermPtr& t) const {
  if (const NVar* v = std::get_if<NVar>(t.get())) {
    if (v->sort == target.sort && v->name == target.name) return u;
    return t;
  }
  const NNode& node = std::get<NNode>(*t);
  std::vector<NamedArg> args;
  args.reserve(node.args.size());
  for (const NamedArg& a : node.args) {
    const NSubArg* sub = std::get_if<NSubArg>(&a);
    if (sub == nullptr) {
      args.push_back(a);
      continue;
    }
    // A binder equal to the target shadows it: nothing to substitute below.
    bool shadowed = std::any_of(
        sub->binders.begin(), sub->binders.end(),
        [&](const Binder& b) { return b == target; });
    if (shadowed) {
      args.push_back(a);
      continue;
    }
    std::vector<Binder> binders = sub->binders;
    NamedTermPtr body = sub->term;
    for (std::size_t i = 0; i < binders.size(); ++i) {
      std::set<std::string> risky;
      free_names(u, binders[i].sort, {}, risky);
      if (!risky.contains(binders[i].name)) continue;
      // Fresh name: avoid everything of this sort in u and the body, the
      // other binders, and the substituted name itself.
      std::set<std::string> avoid = risky;
      collect_names(body, binders[i].sort, avoid);
      for (const Binder& other : binders) {
        if (other.sort == binders[i].sort) avoid.insert(other.name);
      }
      if (binders[i].sort == target.sort) avoid.insert(target.name);
      std::string fresh = binders[i].name;
      do {
        fresh += "'";
      } while (avoid.contains(fresh));
      // Occurrences bound by this binder are those not shadowed by a later
      // binder of the same name.
      bool shadowed_later = false;
      for (std::size_t l = i + 1; l < binders.size(); ++l) {
        if (binders[l] == binders[i]) shadowed_later = true;
      }
      if (!shadowed_later) {
        body = rename_free(body, binders[i].sort, binders[i].name, fresh);
      }
      binders[i].name = fresh;
    }
    NSubArg replaced;
    replaced.binders = std::move(binders);
    replaced.term = named_subst(target, u, body);
    args.emplace_back(std::move(replaced));
  }
  return make_nnode(node.sort, node.ctor, std::move(args));
}

std::vector<TermPtr> Engine::enumerate(SortId sort, std::size_t max_size,
                                       std::uint64_t max_index) const {
  const ValidGrammar& g = *g_;

  struct Enumerator {
    const Engine& e;
    const ValidGrammar& g;
    std::uint64_t max_index;

    // Terms of exactly `size` nodes under per-sort binder depths.
    std::vector<TermPtr> exact(SortId sort, std::size_t size,
                               const std::vector<std::uint64_t>& depth) {
      std::vector<TermPtr> out;
      if (size == 0) return out;
      if (size == 1 && g.is_indexed(sort)) {
        std::uint64_t limit = max_index + depth[sort];
        for (std::uint64_t i = 0; i < limit; ++i) out.push_back(make_var(sort, i));
      }
      for (CtorId c : g.ctors_of(sort)) {
        if (g.is_index_ctor(c)) continue;
        emit_nodes(sort, c, size, depth, out);
      }
      return out;
    }

    void emit_nodes(SortId sort, CtorId c, std::size_t size,
                    const std::vector<std::uint64_t>& depth,
                    std::vector<TermPtr>& out) {
      const Constructor& ctor = g.ctor(c);
      std::size_t sub_count = 0;
      for (const Param& p : ctor.params) {
        if (p.kind == ParamKind::Subterm) ++sub_count;
      }
      if (size < 1 + sub_count) return;
      if (sub_count == 0 && size != 1) return;
      std::vector<Arg> args(ctor.params.size());
      fill_args(sort, c, ctor, 0, size - 1, depth, args, out);
    }

    // Chooses arguments left to right, spending `budget` nodes on the
    // remaining subterm parameters.
    void fill_args(SortId sort, CtorId c, const Constructor& ctor,
                   std::size_t param_index, std::size_t budget,
                   const std::vector<std::uint64_t>& depth, std::vector<Arg>& args,
                   std::vector<TermPtr>& out) {
      if (param_index == ctor.params.size()) {
        if (budget == 0) {
          out.push_back(make_node(sort, c, args));
        }
        return;
      }
      const Param& param = ctor.params[param_index];
      if (param.kind == ParamKind::Nat) {
        for (std::uint64_t v = 0; v <= 2; ++v) {
          args[param_index] = v;
          fill_args(sort, c, ctor, param_index + 1, budget, depth, args, out);
        }
        return;
      }
      std::size_t remaining_subs = 0;
      for (std::size_t i = param_index + 1; i < ctor.params.size(); ++i) {
        if (ctor.params[i].kind == ParamKind::Subterm) ++remaining_subs;
      }
      auto target = g.sort_id(param.category);
      if (!target) return;
      // Binder counts may depend on nat arguments already chosen.
      std::vector<std::uint64_t> child_depth = depth;
      if (param.binding) {
        CountEnv env;
        for (std::size_t i = 0; i < param_index; ++i) {
          if (ctor.params[i].kind == ParamKind::Nat) {
            env[ctor.params[i].name] = std::get<std::uint64_t>(args[i]);
          }
        }
        for (const Shift& shift : param.binding->shifts) {
          if (auto sid = g.sort_id(shift.sort)) {
            child_depth[*sid] += eval_expr(shift.count, env);
          }
        }
      }
      for (std::size_t spend = 1; spend + remaining_subs <= budget; ++spend) {
        for (const TermPtr& sub : exact(*target, spend, child_depth)) {
          args[param_index] = sub;
          fill_args(sort, c, ctor, param_index + 1, budget - spend, depth, args, out);
        }
      }
    }
  };

  Enumerator en{*this, g, max_index};
  std::vector<std::uint64_t> depth(g.sort_count(), 0);
  std::vector<TermPtr> all;
  for (std::size_t size = 1; size <= max_size; ++size) {
    for (TermPtr& t : en.exact(sort, size, depth)) all.push_back(std::move(t));
  }
  return all;
}

}  // namespace dbgen
