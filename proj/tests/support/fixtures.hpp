#ifndef DBGEN_TESTS_FIXTURES_HPP
#define DBGEN_TESTS_FIXTURES_HPP

#include <string_view>

#include "dbgen/engine.hpp"
#include "dbgen/parser.hpp"
#include "dbgen/validate.hpp"

namespace dbgen::testfix {

struct Loaded {
  ValidGrammar grammar;
  Engine engine;

  explicit Loaded(std::string_view source)
      : grammar(validate_or_throw(parse_source(source))), engine(grammar) {}

  SortId sort(std::string_view name) const { return *grammar.sort_id(name); }
  CtorId ctor(std::string_view name) const { return *grammar.ctor_id(name); }

  TermPtr node(std::string_view ctor_name, std::vector<Arg> args) const {
    CtorId c = ctor(ctor_name);
    return make_node(grammar.ctor_sort(c), c, std::move(args));
  }

  NamedTermPtr nnode(std::string_view ctor_name, std::vector<NamedArg> args) const {
    CtorId c = ctor(ctor_name);
    return make_nnode(grammar.ctor_sort(c), c, std::move(args));
  }
};

}  // namespace dbgen::testfix

#endif
