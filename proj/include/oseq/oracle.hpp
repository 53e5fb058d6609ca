// The prime-level preorder interface: the axioms of the calculus are the
// basic relations an oracle accepts. Two implementations: material
// implication between arithmetic primes, and generic finite preorders.

#ifndef OSEQ_ORACLE_HPP
#define OSEQ_ORACLE_HPP

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "oseq/terms.hpp"

namespace oseq {

// Decides basic relations. Defined on sequents whose antecedent has length
// <= 1 and whose formulas are all prime. Formulas may mention opaque
// parameters (variables standing for arbitrary numerals); an implementation
// must answer true only if the relation holds under every instantiation.
//
// Required beyond the signature:
//   - basic(p <= p) for every prime p of the carrier,
//   - basic(p <= q) and basic(q <= r) imply basic(p <= r), and more
//     generally X <= p, p <= Y compose for the -> p / p -> forms,
//   - basic of the empty sequent "->" is false.
class PreorderOracle {
 public:
  virtual ~PreorderOracle() = default;
  virtual bool basic(const Sequent& s) const = 0;
};

using OraclePtr = std::shared_ptr<const PreorderOracle>;

// Preorder by material implication: basic(P -> Q) iff not P or Q under
// arithmetic evaluation, basic(-> P) iff P, basic(P ->) iff not P.
// Primes containing variables are compared as polynomials, so that e.g.
// a = a and 1*a = a are accepted as always true, and relations among
// contingent open primes hold only between equal polynomial pairs.
OraclePtr arithmetic_oracle();

// Generic finite preorder over named (nullary) primes. basic(p <= q) is
// membership in the reflexive-transitive closure; the truth forms -> p and
// p -> are always false.
class FinitePreorder : public PreorderOracle {
 public:
  FinitePreorder(std::vector<std::string> elements,
                 std::vector<std::pair<std::string, std::string>> pairs);

  bool basic(const Sequent& s) const override;

  const std::vector<std::string>& elements() const { return elements_; }
  bool leq(const std::string& p, const std::string& q) const;
  Formula prime(const std::string& name) const;

 private:
  std::vector<std::string> elements_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> closure_;
};

std::shared_ptr<const FinitePreorder> finite_preorder(
    std::vector<std::string> elements,
    std::vector<std::pair<std::string, std::string>> pairs);

// Polynomial normal form of a term: monomial (sorted variable multiset)
// -> coefficient. Exposed for the oracle tests.
using Monomial = std::vector<std::string>;
using Polynomial = std::map<Monomial, std::uint64_t>;

Polynomial term_polynomial(const Term& t);

enum class PrimeTruth { AlwaysTrue, AlwaysFalse, Contingent };

// Three-valued truth of a (possibly open) prime over all instantiations of
// its variables by numerals.
PrimeTruth prime_truth(const PrimeFormula& p);

}  // namespace oseq

#endif
