// Finitely represented, checkable derivation trees for the primitive rules
// a)-j). Omega-rule nodes carry one parametric sub-derivation plus a finite
// exception table; rule-q output uses a recipe-backed branch whose instances
// are generated on demand.

#ifndef OSEQ_DERIVATION_HPP
#define OSEQ_DERIVATION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oseq/oracle.hpp"
#include "oseq/terms.hpp"

namespace oseq {

enum class Rule { Basic, A, B, C, D, E, F, G, H, I, J };

const char* rule_name(Rule r);

class Derivation;
struct DerivationNode;

// Raised by the rule constructors and by check. kind carries the schema
// violation class, path the node position (root is "/", children by index,
// "w" for an omega body, "e<n>" for the exception at n).
struct proof_error : std::runtime_error {
  std::string kind;
  std::string path;
  proof_error(std::string k, std::string p, const std::string& what)
      : std::runtime_error(k + " at " + (p.empty() ? "/" : p) + ": " + what),
        kind(std::move(k)),
        path(std::move(p)) {}
};

class Derivation {
 public:
  Derivation() = default;

  bool empty() const { return node_ == nullptr; }
  Rule rule() const;
  const Sequent& conclusion() const;
  const std::vector<Derivation>& premisses() const;  // Basic: 0; A: 2; B,D..I: 1
  std::size_t position() const;                      // D, G, H, I
  const Term& witness() const;                       // F
  // C, J branch pieces:
  const std::string& parameter() const;
  bool has_body() const;
  const Derivation& body() const;
  const std::map<std::uint64_t, Derivation>& exceptions() const;
  bool has_recipe() const;
  Derivation run_recipe(std::uint64_t n) const;

  std::size_t size() const;  // node count (recipe branches count as 1)

  static Derivation make(std::shared_ptr<const DerivationNode> node);
  const std::shared_ptr<const DerivationNode>& node() const { return node_; }

 private:
  std::shared_ptr<const DerivationNode> node_;
};

using BranchRecipe = std::function<Derivation(std::uint64_t)>;

struct DerivationNode {
  Rule rule = Rule::Basic;
  Sequent conclusion;
  std::vector<Derivation> premisses;
  std::size_t pos = 0;
  Term witness;
  // omega branch (C, J)
  std::string param;
  Derivation branch_body;  // may be empty for recipe-backed or truncated nodes
  std::map<std::uint64_t, Derivation> branch_exceptions;
  BranchRecipe recipe;     // instances beyond the exception table
};

// Rule constructors. Each returns a node check will accept (given a
// cooperating oracle for Basic leaves) or throws proof_error at
// construction time.

// Basic: a relation the oracle must accept; all formulas prime, at most
// one antecedent entry.
Derivation mk_basic(Sequent s);

// a) from c -> A and c -> B conclude c -> A ^ B (identical antecedents).
Derivation mk_a(Derivation d1, Derivation d2);

// b) from A, c -> (absent succedent) conclude c -> ~A: the leading
// antecedent formula moves to a negated succedent.
Derivation mk_b(Derivation d);

// c) from the parametric family c -> A(param) conclude c -> (x) A(x) with
// the parameter as binder. The parameter may not occur free in c.
Derivation mk_c(std::string param, Derivation body,
                std::map<std::uint64_t, Derivation> exceptions = {});

// d) from G -> s conclude G' -> s where G' has `inserted` at index pos.
Derivation mk_d(Formula inserted, std::size_t pos, Derivation d);

// e) from G -> B conclude G, ~B -> rhs for arbitrary rhs (possibly absent).
Derivation mk_e(std::optional<Formula> rhs, Derivation d);

// f) from A(n), G -> s conclude (x) A(x), G -> s; `omega` is the resulting
// leading formula, `witness` the index term n (a numeral, or an opaque
// parameter inside an omega body).
Derivation mk_f(Formula omega, Term witness, Derivation d);

// g) contraction of two adjacent equal antecedent entries at pos, pos+1.
Derivation mk_g(std::size_t pos, Derivation d);

// h) exchange of the adjacent antecedent entries at pos, pos+1.
Derivation mk_h(std::size_t pos, Derivation d);

// i) re-association: the adjacent entries A at pos and B at pos+1 of the
// premiss become the single entry A ^ B. The flat antecedent list is the
// right-nested reading; i moves the nesting point into an explicit meet.
Derivation mk_i(std::size_t pos, Derivation d);

// j) from the family A(n) for all n conclude A(param) with the parameter a
// free variable: the conclusion is the body's conclusion itself.
Derivation mk_j(std::string param, Derivation body,
                std::map<std::uint64_t, Derivation> exceptions = {});

// j) with instances produced by a recipe instead of a parametric body.
// conclusion[param := n] must be the conclusion of recipe(n).
Derivation mk_j_recipe(std::string param, Sequent conclusion, BranchRecipe recipe,
                       std::map<std::uint64_t, Derivation> exceptions = {});

// Truncated omega nodes (parsed from files with a `_` body): only the
// listed exceptions exist. check audits exactly those.
Derivation mk_c_truncated(std::string param, Sequent conclusion,
                          std::map<std::uint64_t, Derivation> exceptions);
Derivation mk_j_truncated(std::string param, Sequent conclusion,
                          std::map<std::uint64_t, Derivation> exceptions);

// The n-th premiss of an omega branch of `d` (a C or J node): the exception
// at n if present, else the body with the parameter replaced by n (for
// recipe-backed nodes, the recipe's output).
Derivation instantiate(const Derivation& d, Numeral n);

// Replaces a free variable throughout a derivation: conclusions, rule-f
// witness terms, and recursively all premisses and branch parts.
Derivation substitute_derivation(const Derivation& d, const std::string& v,
                                 const Term& replacement);

struct CheckOptions {
  // Indices audited on recipe-backed branches, in addition to the
  // exception table.
  std::uint64_t audit_window = 5;
};

// Verifies that every node instantiates its rule schema and that every
// Basic leaf is accepted by the oracle; returns the conclusion. `opaque`
// lists ambient free variables treated as opaque closed terms (the
// conclusion of a rule-j derivation mentions its parameter this way).
Sequent check(const Derivation& d, const PreorderOracle& oracle,
              const std::set<std::string>& opaque = {},
              const CheckOptions& options = {});

}  // namespace oseq

#endif
