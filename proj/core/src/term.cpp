#include "dbgen/term.hpp"

namespace dbgen {

TermPtr make_var(SortId sort, std::uint64_t index) {
  return std::make_shared<const Term>(Var{sort, index});
}

TermPtr make_node(SortId sort, CtorId ctor, std::vector<Arg> args) {
  return std::make_shared<const Term>(Node{sort, ctor, std::move(args)});
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->index() != b->index()) return false;
  if (a->is_var()) {
    const Var& va = std::get<Var>(*a);
    const Var& vb = std::get<Var>(*b);
    return va.sort == vb.sort && va.index == vb.index;
  }
  const Node& na = std::get<Node>(*a);
  const Node& nb = std::get<Node>(*b);
  if (na.sort != nb.sort || na.ctor != nb.ctor || na.args.size() != nb.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < na.args.size(); ++i) {
    if (na.args[i].index() != nb.args[i].index()) return false;
    if (const std::uint64_t* va = std::get_if<std::uint64_t>(&na.args[i])) {
      if (*va != std::get<std::uint64_t>(nb.args[i])) return false;
    } else if (!term_eq(std::get<TermPtr>(na.args[i]),
                        std::get<TermPtr>(nb.args[i]))) {
      return false;
    }
  }
  return true;
}

std::size_t term_size(const TermPtr& t) {
  if (t->is_var()) return 1;
  std::size_t size = 1;
  for (const Arg& a : std::get<Node>(*t).args) {
    if (const TermPtr* sub = std::get_if<TermPtr>(&a)) size += term_size(*sub);
  }
  return size;
}

std::string print_term(const ValidGrammar& g, const TermPtr& t) {
  if (const Var* v = std::get_if<Var>(t.get())) {
    std::optional<CtorId> ic = g.index_ctor_of(v->sort);
    std::string name = ic ? g.ctor_name(*ic) : ("?" + g.sort_name(v->sort));
    return name + " " + std::to_string(v->index);
  }
  const Node& n = std::get<Node>(*t);
  std::string out = g.ctor_name(n.ctor);
  for (const Arg& a : n.args) {
    out += " ";
    if (const std::uint64_t* v = std::get_if<std::uint64_t>(&a)) {
      out += std::to_string(*v);
    } else {
      const TermPtr& sub = std::get<TermPtr>(a);
      bool atom = sub->is_var() ? false : std::get<Node>(*sub).args.empty();
      if (atom) {
        out += print_term(g, sub);
      } else {
        out += "(" + print_term(g, sub) + ")";
      }
    }
  }
  return out;
}

NamedTermPtr make_nvar(SortId sort, std::string name) {
  return std::make_shared<const NamedTerm>(NVar{sort, std::move(name)});
}

NamedTermPtr make_nnode(SortId sort, CtorId ctor, std::vector<NamedArg> args) {
  return std::make_shared<const NamedTerm>(NNode{sort, ctor, std::move(args)});
}

bool named_eq(const NamedTermPtr& a, const NamedTermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->index() != b->index()) return false;
  if (const NVar* va = std::get_if<NVar>(a.get())) {
    const NVar& vb = std::get<NVar>(*b);
    return va->sort == vb.sort && va->name == vb.name;
  }
  const NNode& na = std::get<NNode>(*a);
  const NNode& nb = std::get<NNode>(*b);
  if (na.sort != nb.sort || na.ctor != nb.ctor || na.args.size() != nb.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < na.args.size(); ++i) {
    if (na.args[i].index() != nb.args[i].index()) return false;
    if (const std::uint64_t* va = std::get_if<std::uint64_t>(&na.args[i])) {
      if (*va != std::get<std::uint64_t>(nb.args[i])) return false;
    } else {
      const NSubArg& sa = std::get<NSubArg>(na.args[i]);
      const NSubArg& sb = std::get<NSubArg>(nb.args[i]);
      if (sa.binders != sb.binders) return false;
      if (!named_eq(sa.term, sb.term)) return false;
    }
  }
  return true;
}

std::string print_named(const ValidGrammar& g, const NamedTermPtr& t) {
  if (const NVar* v = std::get_if<NVar>(t.get())) {
    std::optional<CtorId> ic = g.index_ctor_of(v->sort);
    std::string name = ic ? "_" + g.ctor_name(*ic) : ("?" + g.sort_name(v->sort));
    return name + " \"" + v->name + "\"";
  }
  const NNode& n = std::get<NNode>(*t);
  std::string out = "_" + g.ctor_name(n.ctor);
  for (const NamedArg& a : n.args) {
    out += " ";
    if (const std::uint64_t* v = std::get_if<std::uint64_t>(&a)) {
      out += std::to_string(*v);
    } else {
      const NSubArg& sub = std::get<NSubArg>(a);
      if (!sub.binders.empty()) {
        out += "[";
        for (std::size_t i = 0; i < sub.binders.size(); ++i) {
          if (i > 0) out += " ";
          out += g.sort_name(sub.binders[i].sort) + ":\"" + sub.binders[i].name + "\"";
        }
        out += "] ";
      }
      out += "(" + print_named(g, sub.term) + ")";
    }
  }
  return out;
}

std::optional<std::uint64_t> Telescope::lookup(SortId sort,
                                               std::string_view name) const {
  std::uint64_t distance = 0;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->sort != sort) continue;
    if (it->name == name) return distance;
    ++distance;
  }
  return std::nullopt;
}

}  // namespace dbgen
