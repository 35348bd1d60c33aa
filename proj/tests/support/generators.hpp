#ifndef DBGEN_TESTS_GENERATORS_HPP
#define DBGEN_TESTS_GENERATORS_HPP

#include <random>
#include <string>
#include <vector>

#include "dbgen/ast.hpp"

namespace dbgen::testgen {

// Deterministic random grammars for round-trip and fuzz properties. Names
// avoid the reserved words so every generated grammar renders to lexable
// text; structural validity (unique names, declared categories) is NOT
// guaranteed unless `well_formed` is set.

struct Options {
  bool well_formed = false;  // unique names, resolvable categories
  int max_groups = 3;
  int max_categories = 3;
  int max_constructors = 3;
  int max_params = 3;
  int max_expr_depth = 3;
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t pick(std::uint64_t bound) {  // [0, bound)
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng_);
  }

  bool chance(int percent) { return pick(100) < static_cast<std::uint64_t>(percent); }

  std::string name(const char* stem, int i) {
    return std::string(stem) + std::to_string(i);
  }

  CountExpr expr(const std::vector<std::string>& vars, int depth) {
    if (depth <= 0 || chance(40)) {
      if (!vars.empty() && chance(40)) {
        return CountExpr::variable(vars[pick(vars.size())]);
      }
      return CountExpr::literal(pick(10));
    }
    auto op = static_cast<CountExpr::Op>(pick(3));
    return CountExpr::binary(op, expr(vars, depth - 1), expr(vars, depth - 1));
  }

  SourceGrammar grammar(const Options& opts) {
    SourceGrammar g;
    g.module_name = "Fuzz";
    int groups = 1 + static_cast<int>(pick(opts.max_groups));
    int cat_serial = 0;
    int ctor_serial = 0;

    // Pre-pick category names so subterm references can resolve.
    std::vector<std::string> cats;
    std::vector<int> group_sizes;
    for (int gi = 0; gi < groups; ++gi) {
      int size = 1 + static_cast<int>(pick(opts.max_categories));
      group_sizes.push_back(size);
      for (int ci = 0; ci < size; ++ci) cats.push_back(name("cat", cat_serial++));
    }

    int cat_index = 0;
    for (int gi = 0; gi < groups; ++gi) {
      InductiveGroup group;
      for (int ci = 0; ci < group_sizes[gi]; ++ci) {
        Category cat;
        cat.name = cats[cat_index++];
        bool has_index = opts.well_formed ? chance(70) : chance(50);
        int ctors = static_cast<int>(pick(opts.max_constructors + 1));
        if (has_index) {
          Constructor ivar;
          ivar.name = name("c", ctor_serial++);
          Param p;
          p.name = "ix";
          p.kind = ParamKind::Index;
          ivar.params.push_back(p);
          cat.constructors.push_back(ivar);
        }
        for (int ki = 0; ki < ctors; ++ki) {
          Constructor ctor;
          ctor.name = name("c", ctor_serial++);
          int params = static_cast<int>(pick(opts.max_params + 1));
          std::vector<std::string> nat_names;
          for (int pi = 0; pi < params; ++pi) {
            Param p;
            p.name = name("a", pi);
            std::uint64_t kind = pick(3);
            if (kind == 0) {
              p.kind = ParamKind::Nat;
              nat_names.push_back(p.name);
            } else {
              p.kind = ParamKind::Subterm;
              p.category = cats[pick(cats.size())];
              if (kind == 2) {
                BindingSpec spec;
                int shifts = 1 + static_cast<int>(pick(2));
                for (int si = 0; si < shifts; ++si) {
                  Shift shift;
                  shift.sort = cats[pick(cats.size())];
                  shift.count = chance(50) ? CountExpr::literal(1 + pick(3))
                                           : expr(nat_names, opts.max_expr_depth);
                  spec.shifts.push_back(shift);
                }
                p.binding = spec;
              }
            }
            ctor.params.push_back(p);
          }
          cat.constructors.push_back(ctor);
        }
        group.categories.push_back(cat);
      }
      g.groups.push_back(group);
    }
    return g;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace dbgen::testgen

#endif
