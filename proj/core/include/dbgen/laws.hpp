#ifndef DBGEN_LAWS_HPP
#define DBGEN_LAWS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dbgen/engine.hpp"

namespace dbgen {

// The algebra of lifting and substitution, checked exhaustively over
// enumerated terms (plus one randomized differential law against the named
// substitution oracle).
enum class LawId {
  LiftZero,
  LiftLiftAdd,
  LiftLiftCommute,
  CrossSortLiftCommute,
  SubstLiftCancel,
  LiftSubstDistrib,
  StructurePreservation,
  NamedDifferential,
};

std::vector<LawId> all_laws();
std::string_view law_name(LawId law);

struct LawBounds {
  std::size_t max_size = 3;
  std::uint64_t max_index = 3;
  std::uint64_t max_scalar = 3;  // n, m, k, k', j range over 0..max_scalar
  int named_samples = 200;
  std::size_t named_max_size = 6;
  std::uint64_t seed = 20121204;
};

// Replaceable lift/subst so the checker itself can be tested against
// deliberately broken implementations.
struct LawHooks {
  std::function<TermPtr(SortId, std::uint64_t, std::uint64_t, const TermPtr&)> lift;
  std::function<TermPtr(SortId, const TermPtr&, std::uint64_t, const TermPtr&)> subst;
};

struct Counterexample {
  LawId law;
  std::string detail;
};

std::optional<Counterexample> check_law(const Engine& engine, LawId law,
                                        const LawBounds& bounds,
                                        const LawHooks* hooks = nullptr);

// Runs every law; returns the first counterexample found, if any.
std::optional<Counterexample> check_all_laws(const Engine& engine,
                                             const LawBounds& bounds);

}  // namespace dbgen

#endif
