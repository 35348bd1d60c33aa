#include "dbgen/laws.hpp"

#include <map>
#include <random>

namespace dbgen {

std::vector<LawId> all_laws() {
  return {LawId::LiftZero,         LawId::LiftLiftAdd,
          LawId::LiftLiftCommute,  LawId::CrossSortLiftCommute,
          LawId::SubstLiftCancel,  LawId::LiftSubstDistrib,
          LawId::StructurePreservation, LawId::NamedDifferential};
}

std::string_view law_name(LawId law) {
  switch (law) {
    case LawId::LiftZero: return "lift_zero";
    case LawId::LiftLiftAdd: return "lift_lift_add";
    case LawId::LiftLiftCommute: return "lift_lift_commute";
    case LawId::CrossSortLiftCommute: return "cross_sort_lift_commute";
    case LawId::SubstLiftCancel: return "subst_lift_cancel";
    case LawId::LiftSubstDistrib: return "lift_subst_distrib";
    case LawId::StructurePreservation: return "structure_preservation";
    case LawId::NamedDifferential: return "named_differential";
  }
  return "law";
}

namespace {

struct Checker {
  const Engine& engine;
  const ValidGrammar& g;
  const LawBounds& bounds;
  LawHooks ops;
  std::map<SortId, std::vector<TermPtr>> term_cache;

  Checker(const Engine& e, const LawBounds& b, const LawHooks* hooks)
      : engine(e), g(e.grammar()), bounds(b) {
    if (hooks && hooks->lift) {
      ops.lift = hooks->lift;
    } else {
      ops.lift = [&e](SortId s, std::uint64_t n, std::uint64_t k,
                      const TermPtr& t) { return e.lift(s, n, k, t); };
    }
    if (hooks && hooks->subst) {
      ops.subst = hooks->subst;
    } else {
      ops.subst = [&e](SortId s, const TermPtr& u, std::uint64_t j,
                       const TermPtr& t) { return e.subst(s, u, j, t); };
    }
  }

  const std::vector<TermPtr>& terms(SortId sort) {
    auto it = term_cache.find(sort);
    if (it == term_cache.end()) {
      it = term_cache
               .emplace(sort, engine.enumerate(sort, bounds.max_size,
                                               bounds.max_index))
               .first;
    }
    return it->second;
  }

  std::vector<SortId> reaching(SortId s) const {
    std::vector<SortId> out;
    for (SortId p = 0; p < g.sort_count(); ++p) {
      if (engine.reaches(p, s)) out.push_back(p);
    }
    return out;
  }

  Counterexample cex(LawId law, std::string detail) const {
    return {law, std::move(detail)};
  }

  std::string show(const TermPtr& t) const { return print_term(g, t); }

  std::optional<Counterexample> lift_zero() {
    for (SortId s : engine.indexed()) {
      for (SortId p : reaching(s)) {
        for (const TermPtr& t : terms(p)) {
          for (std::uint64_t k = 0; k <= bounds.max_scalar; ++k) {
            TermPtr r = ops.lift(s, 0, k, t);
            if (!term_eq(r, t)) {
              return cex(LawId::LiftZero,
                         "lift " + g.sort_name(s) + " 0 " + std::to_string(k) +
                             " (" + show(t) + ") = " + show(r));
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Counterexample> lift_lift_add() {
    for (SortId s : engine.indexed()) {
      for (SortId p : reaching(s)) {
        for (const TermPtr& t : terms(p)) {
          for (std::uint64_t n = 0; n <= bounds.max_scalar; ++n) {
            for (std::uint64_t m = 0; m <= bounds.max_scalar; ++m) {
              for (std::uint64_t k = 0; k <= bounds.max_scalar; ++k) {
                TermPtr lhs = ops.lift(s, n, k, ops.lift(s, m, k, t));
                TermPtr rhs = ops.lift(s, n + m, k, t);
                if (!term_eq(lhs, rhs)) {
                  return cex(LawId::LiftLiftAdd,
                             "s=" + g.sort_name(s) + " n=" + std::to_string(n) +
                                 " m=" + std::to_string(m) +
                                 " k=" + std::to_string(k) + " t=" + show(t) +
                                 " lhs=" + show(lhs) + " rhs=" + show(rhs));
                }
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Counterexample> lift_lift_commute() {
    for (SortId s : engine.indexed()) {
      for (SortId p : reaching(s)) {
        for (const TermPtr& t : terms(p)) {
          for (std::uint64_t n = 0; n <= bounds.max_scalar; ++n) {
            for (std::uint64_t m = 0; m <= bounds.max_scalar; ++m) {
              for (std::uint64_t k = 0; k <= bounds.max_scalar; ++k) {
                for (std::uint64_t k2 = k; k2 <= bounds.max_scalar; ++k2) {
                  TermPtr lhs = ops.lift(s, n, k, ops.lift(s, m, k2, t));
                  TermPtr rhs = ops.lift(s, m, k2 + n, ops.lift(s, n, k, t));
                  if (!term_eq(lhs, rhs)) {
                    return cex(LawId::LiftLiftCommute,
                               "s=" + g.sort_name(s) + " n=" + std::to_string(n) +
                                   " m=" + std::to_string(m) +
                                   " k=" + std::to_string(k) +
                                   " k'=" + std::to_string(k2) + " t=" + show(t) +
                                   " lhs=" + show(lhs) + " rhs=" + show(rhs));
                  }
                }
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Counterexample> cross_sort_lift_commute() {
    const auto& indexed = engine.indexed();
    for (std::size_t a = 0; a < indexed.size(); ++a) {
      for (std::size_t b = a + 1; b < indexed.size(); ++b) {
        SortId s = indexed[a];
        SortId s2 = indexed[b];
        for (SortId p = 0; p < g.sort_count(); ++p) {
          if (!engine.reaches(p, s) || !engine.reaches(p, s2)) continue;
          for (const TermPtr& t : terms(p)) {
            for (std::uint64_t n = 0; n <= bounds.max_scalar; ++n) {
              for (std::uint64_t m = 0; m <= bounds.max_scalar; ++m) {
                for (std::uint64_t k = 0; k <= bounds.max_scalar; ++k) {
                  for (std::uint64_t k2 = 0; k2 <= bounds.max_scalar; ++k2) {
                    TermPtr lhs = ops.lift(s, n, k, ops.lift(s2, m, k2, t));
                    TermPtr rhs = ops.lift(s2, m, k2, ops.lift(s, n, k, t));
                    if (!term_eq(lhs, rhs)) {
                      return cex(LawId::CrossSortLiftCommute,
                                 "s=" + g.sort_name(s) + " s'=" + g.sort_name(s2) +
                                     " n=" + std::to_string(n) +
                                     " m=" + std::to_string(m) +
                                     " k=" + std::to_string(k) +
                                     " k'=" + std::to_string(k2) +
                                     " t=" + show(t) + " lhs=" + show(lhs) +
                                     " rhs=" + show(rhs));
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Counterexample> subst_lift_cancel() {
    for (SortId s : engine.indexed()) {
      for (SortId p : reaching(s)) {
        for (const TermPtr& t : terms(p)) {
          for (const TermPtr& u : terms(s)) {
            for (std::uint64_t j = 0; j <= bounds.max_scalar; ++j) {
              TermPtr lifted = ops.lift(s, 1, j, t);
              TermPtr r = ops.subst(s, u, j, lifted);
              if (!term_eq(r, t)) {
                return cex(LawId::SubstLiftCancel,
                           "s=" + g.sort_name(s) + " j=" + std::to_string(j) +
                               " u=" + show(u) + " t=" + show(t) +
                               " got=" + show(r));
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Counterexample> lift_subst_distrib() {
    for (SortId s : engine.indexed()) {
      for (SortId p : reaching(s)) {
        for (const TermPtr& t : terms(p)) {
          for (const TermPtr& u : terms(s)) {
            for (std::uint64_t n = 0; n <= bounds.max_scalar; ++n) {
              for (std::uint64_t k = 0; k <= bounds.max_scalar; ++k) {
                for (std::uint64_t j = k; j <= bounds.max_scalar; ++j) {
                  TermPtr lhs = ops.lift(s, n, k, ops.subst(s, u, j, t));
                  TermPtr rhs = ops.subst(s, ops.lift(s, n, k, u), j + n,
                                          ops.lift(s, n, k, t));
                  if (!term_eq(lhs, rhs)) {
                    return cex(LawId::LiftSubstDistrib,
                               "s=" + g.sort_name(s) + " n=" + std::to_string(n) +
                                   " k=" + std::to_string(k) +
                                   " j=" + std::to_string(j) + " u=" + show(u) +
                                   " t=" + show(t) + " lhs=" + show(lhs) +
                                   " rhs=" + show(rhs));
                  }
                }
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  // Nodes keep their constructor and nat arguments; variable occurrences
  // may change or be replaced.
  static bool shape_preserved(const TermPtr& before, const TermPtr& after) {
    if (before->is_var()) return true;
    if (after->is_var()) return false;
    const Node& nb = std::get<Node>(*before);
    const Node& na = std::get<Node>(*after);
    if (nb.ctor != na.ctor || nb.args.size() != na.args.size()) return false;
    for (std::size_t i = 0; i < nb.args.size(); ++i) {
      if (const std::uint64_t* v = std::get_if<std::uint64_t>(&nb.args[i])) {
        if (!std::holds_alternative<std::uint64_t>(na.args[i]) ||
            *v != std::get<std::uint64_t>(na.args[i])) {
          return false;
        }
      } else if (!shape_preserved(std::get<TermPtr>(nb.args[i]),
                                  std::get<TermPtr>(na.args[i]))) {
        return false;
      }
    }
    return true;
  }

  std::optional<Counterexample> structure_preservation() {
    for (SortId s : engine.indexed()) {
      for (SortId p : reaching(s)) {
        for (const TermPtr& t : terms(p)) {
          for (std::uint64_t n = 0; n <= bounds.max_scalar; ++n) {
            for (std::uint64_t k = 0; k <= bounds.max_scalar; ++k) {
              TermPtr r = ops.lift(s, n, k, t);
              if (!shape_preserved(t, r)) {
                return cex(LawId::StructurePreservation,
                           "lift " + g.sort_name(s) + " " + std::to_string(n) +
                               " " + std::to_string(k) + " (" + show(t) +
                               ") = " + show(r));
              }
            }
          }
          for (const TermPtr& u : terms(s)) {
            for (std::uint64_t j = 0; j <= bounds.max_scalar; ++j) {
              TermPtr r = ops.subst(s, u, j, t);
              if (!shape_preserved(t, r)) {
                return cex(LawId::StructurePreservation,
                           "subst " + g.sort_name(s) + " (" + show(u) + ") " +
                               std::to_string(j) + " (" + show(t) +
                               ") = " + show(r));
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Counterexample> named_differential();
};

// ---- randomized named-term generation for the differential law ----

struct NamedGen {
  const Engine& engine;
  const ValidGrammar& g;
  std::mt19937_64& rng;
  int fresh_counter = 0;

  static constexpr std::size_t kUnbounded = 1u << 20;

  // Smallest reachable term size per sort, assuming the harness keeps a
  // variable in scope for every indexed sort.
  std::vector<std::size_t> min_size;

  NamedGen(const Engine& e, const ValidGrammar& grammar, std::mt19937_64& r)
      : engine(e), g(grammar), rng(r) {
    min_size.assign(g.sort_count(), kUnbounded);
    bool changed = true;
    while (changed) {
      changed = false;
      for (SortId s = 0; s < g.sort_count(); ++s) {
        std::size_t best = g.is_indexed(s) ? 1 : kUnbounded;
        for (CtorId c : g.ctors_of(s)) {
          if (g.is_index_ctor(c)) continue;
          std::size_t total = 1;
          for (const Param& p : g.ctor(c).params) {
            if (p.kind != ParamKind::Subterm) continue;
            auto q = g.sort_id(p.category);
            total += q ? min_size[*q] : kUnbounded;
            if (total >= kUnbounded) total = kUnbounded;
          }
          best = std::min(best, total);
        }
        if (best < min_size[s]) {
          min_size[s] = best;
          changed = true;
        }
      }
    }
  }

  std::uint64_t pick(std::uint64_t limit) {  // uniform in [0, limit)
    return std::uniform_int_distribution<std::uint64_t>(0, limit - 1)(rng);
  }

  std::string fresh_binder() { return "b" + std::to_string(++fresh_counter); }

  // Names in scope per sort.
  using Scope = std::vector<std::vector<std::string>>;

  std::size_t ctor_min(CtorId c) const {
    std::size_t total = 1;
    for (const Param& p : g.ctor(c).params) {
      if (p.kind != ParamKind::Subterm) continue;
      auto q = g.sort_id(p.category);
      total += q ? min_size[*q] : kUnbounded;
      if (total >= kUnbounded) return kUnbounded;
    }
    return total;
  }

  // Requires budget >= min_size[sort].
  NamedTermPtr gen(SortId sort, std::size_t budget, const Scope& scope) {
    std::vector<CtorId> feasible;
    for (CtorId c : g.ctors_of(sort)) {
      if (g.is_index_ctor(c)) continue;
      if (ctor_min(c) <= budget) feasible.push_back(c);
    }
    bool can_var = g.is_indexed(sort) && !scope[sort].empty();
    if (feasible.empty() && !can_var) {
      throw std::logic_error("named generator has no option for sort " +
                             g.sort_name(sort));
    }
    // Prefer building structure while the budget allows it.
    if (!feasible.empty() && (!can_var || (budget >= 3 && pick(4) != 0))) {
      return gen_node(sort, feasible[pick(feasible.size())], budget, scope);
    }
    if (can_var && (feasible.empty() || pick(2) == 0)) {
      return make_nvar(sort, scope[sort][pick(scope[sort].size())]);
    }
    return gen_node(sort, feasible[pick(feasible.size())], budget, scope);
  }

  NamedTermPtr gen_node(SortId sort, CtorId c, std::size_t budget,
                        const Scope& scope) {
    const Constructor& ctor = g.ctor(c);
    std::size_t need = ctor_min(c);
    std::size_t spare = budget > need ? budget - need : 0;
    std::vector<NamedArg> args;
    CountEnv env;
    for (std::size_t i = 0; i < ctor.params.size(); ++i) {
      const Param& param = ctor.params[i];
      if (param.kind == ParamKind::Nat) {
        std::uint64_t v = pick(3);
        env[param.name] = v;
        args.emplace_back(v);
        continue;
      }
      std::size_t extra = spare > 0 ? pick(spare + 1) : 0;
      spare -= extra;
      NSubArg sub;
      Scope inner = scope;
      if (param.binding) {
        for (const std::string& sort_name : binder_sort_order(*param.binding)) {
          auto sid = g.sort_id(sort_name);
          std::uint64_t count = 0;
          for (const Shift& shift : param.binding->shifts) {
            if (shift.sort == sort_name) count += eval_expr(shift.count, env);
          }
          for (std::uint64_t bi = 0; bi < count; ++bi) {
            std::string name = fresh_binder();
            sub.binders.push_back({*sid, name});
            inner[*sid].push_back(name);
          }
        }
      }
      auto target = g.sort_id(param.category);
      sub.term = gen(*target, min_size[*target] + extra, inner);
      args.emplace_back(std::move(sub));
    }
    return make_nnode(sort, c, std::move(args));
  }
};

std::optional<Counterexample> Checker::named_differential() {
  std::mt19937_64 rng(bounds.seed);
  NamedGen gen{engine, g, rng};
  const auto& indexed = engine.indexed();
  if (indexed.empty()) return std::nullopt;

  for (int sample = 0; sample < bounds.named_samples; ++sample) {
    SortId s = indexed[sample % indexed.size()];
    std::vector<SortId> targets;
    for (SortId p : reaching(s)) {
      if (gen.min_size[p] <= bounds.named_max_size) targets.push_back(p);
    }
    if (targets.empty()) continue;
    SortId p = targets[gen.pick(targets.size())];

    // Base context: a couple of names for every indexed sort, plus noise.
    std::vector<Binder> ctx;
    int serial = 0;
    for (SortId is : indexed) {
      ctx.push_back({is, "c" + std::to_string(serial++)});
      ctx.push_back({is, "c" + std::to_string(serial++)});
    }
    std::uint64_t extras = gen.pick(4);
    for (std::uint64_t i = 0; i < extras; ++i) {
      ctx.push_back({indexed[gen.pick(indexed.size())],
                     "c" + std::to_string(serial++)});
    }

    // Insert the substituted name; entries after it determine its index.
    std::string x = "xsub";
    std::size_t cut = gen.pick(ctx.size() + 1);
    std::vector<Binder> full(ctx.begin(), ctx.begin() + cut);
    full.push_back({s, x});
    full.insert(full.end(), ctx.begin() + cut, ctx.end());
    std::uint64_t d = 0;
    for (std::size_t i = cut; i < ctx.size(); ++i) {
      if (ctx[i].sort == s) ++d;
    }

    NamedGen::Scope full_scope(g.sort_count());
    for (const Binder& b : full) full_scope[b.sort].push_back(b.name);
    NamedGen::Scope clean_scope(g.sort_count());
    for (const Binder& b : ctx) clean_scope[b.sort].push_back(b.name);

    NamedTermPtr t = gen.gen(p, bounds.named_max_size, full_scope);
    NamedTermPtr u = gen.gen(s, bounds.named_max_size, clean_scope);

    Telescope clean_tel{std::vector<Binder>(ctx)};
    Telescope full_tel{std::vector<Binder>(full)};
    TermPtr lhs = engine.translate(clean_tel, engine.named_subst({s, x}, u, t));
    TermPtr rhs =
        ops.subst(s, engine.translate(clean_tel, u), d, engine.translate(full_tel, t));
    if (!term_eq(lhs, rhs)) {
      return cex(LawId::NamedDifferential,
                 "sample " + std::to_string(sample) + ": s=" + g.sort_name(s) +
                     " d=" + std::to_string(d) + " t=" + print_named(g, t) +
                     " u=" + print_named(g, u) + " lhs=" + show(lhs) +
                     " rhs=" + show(rhs));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Counterexample> check_law(const Engine& engine, LawId law,
                                        const LawBounds& bounds,
                                        const LawHooks* hooks) {
  Checker checker(engine, bounds, hooks);
  switch (law) {
    case LawId::LiftZero: return checker.lift_zero();
    case LawId::LiftLiftAdd: return checker.lift_lift_add();
    case LawId::LiftLiftCommute: return checker.lift_lift_commute();
    case LawId::CrossSortLiftCommute: return checker.cross_sort_lift_commute();
    case LawId::SubstLiftCancel: return checker.subst_lift_cancel();
    case LawId::LiftSubstDistrib: return checker.lift_subst_distrib();
    case LawId::StructurePreservation: return checker.structure_preservation();
    case LawId::NamedDifferential: return checker.named_differential();
  }
  return std::nullopt;
}

std::optional<Counterexample> check_all_laws(const Engine& engine,
                                             const LawBounds& bounds) {
  for (LawId law : all_laws()) {
    if (auto cex = check_law(engine, law, bounds)) return cex;
  }
  return std::nullopt;
}

}  // namespace dbgen
