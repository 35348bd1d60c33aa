#ifndef DBGEN_CORPUS_HPP
#define DBGEN_CORPUS_HPP

#include <string_view>
#include <vector>

namespace dbgen::corpus {

// Built-in source grammars used by `dbgen selftest` and the test suites.

// Ordinary lambda calculus: one category, one binder.
extern const std::string_view kLambdaTerms;

// System F: two indexed categories, cross-sort binding under `gen`.
extern const std::string_view kSystemF;

// Mutually recursive patterns/expressions with arithmetic binder counts,
// repeated sorts in one shift list, and an index-free third category.
extern const std::string_view kMixedBind;

// No index constructors at all.
extern const std::string_view kChains;

struct Entry {
  std::string_view name;
  std::string_view source;
};

std::vector<Entry> all();

}  // namespace dbgen::corpus

#endif
