#include "dbgen/corpus.hpp"

namespace dbgen::corpus {

const std::string_view kLambdaTerms = R"(Module LambdaTerms.

Inductive term : Type :=
| var ((* index *) x : nat)
| app (t1 : term) (t2 : term)
| lam ((* bind term in *) t : term).

End LambdaTerms.
)";

const std::string_view kSystemF = R"(Module SYS_F_terms.

Inductive type : Type :=
| tvar ((* index *) i : nat)
| tconst (n : nat)
| tarrow (A : type) (B : type)
| tall ((* bind type in *) A : type).

Inductive term : Type :=
| var ((* index *) x : nat)
| app (t1 : term) (t2 : term)
| lam (A : type) ((* bind term in *) t : term)
| tapp (t : term) (A : type)
| gen ((* bind type in *) t : term).

End SYS_F_terms.
)";

const std::string_view kMixedBind = R"(Module MixedBind.

Inductive pat : Type :=
| pvar ((* index *) x : nat)
| pwild
| ppair (p1 : pat) (p2 : pat)
with expr : Type :=
| evar ((* index *) y : nat)
| elit (k : nat)
| ematch (scrut : expr) (n : nat) (arm : pat) ((* bind [n + 1 pat], expr in *) body : expr)
| eletrec (n : nat) ((* bind [n expr], expr in *) body : expr).

Inductive prog : Type :=
| pmain (body : expr)
| pseq (first : prog) (rest : prog).

End MixedBind.
)";

const std::string_view kChains = R"(Module Chains.

Inductive chain : Type :=
| cnil
| ccons (n : nat) (rest : chain).

End Chains.
)";

std::vector<Entry> all() {
  return {{"LambdaTerms", kLambdaTerms},
          {"SYS_F_terms", kSystemF},
          {"MixedBind", kMixedBind},
          {"Chains", kChains}};
}

}  // namespace dbgen::corpus
