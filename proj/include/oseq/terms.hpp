// Formula and numeral syntax for the sequent calculus over a preordered
// set of prime formulas: terms, prime formulas, formulas (prime / meet /
// negation / omega-meet), sequents, and capture-avoiding substitution.

#ifndef OSEQ_TERMS_HPP
#define OSEQ_TERMS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oseq {

// Numbers are 1, 1', 1'', ...; there is no zero.
struct Numeral {
  std::uint64_t value = 1;

  Numeral() = default;
  explicit Numeral(std::uint64_t v) : value(v) {
    if (v == 0) throw std::invalid_argument("Numeral: value must be >= 1");
  }
  friend bool operator==(Numeral a, Numeral b) { return a.value == b.value; }
  friend bool operator<(Numeral a, Numeral b) { return a.value < b.value; }
};

// Stroke notation: 1, 1', 1'', ...
std::string render(Numeral n);
Numeral parse_numeral(const std::string& s);

struct TermNode;

// Immutable shared term tree. A default-constructed Term is empty and only
// valid as a placeholder; all factory results are non-empty.
class Term {
public:
  enum class Kind { Num, Var, Succ, Sum, Prod };

  Term() = default;

  static Term num(std::uint64_t value);
  static Term num(Numeral n) { return num(n.value); }
  static Term var(std::string name);
  static Term succ(Term t);
  static Term sum(Term a, Term b);
  static Term prod(Term a, Term b);

  bool empty() const { return node_ == nullptr; }
  Kind kind() const;
  std::uint64_t value() const;          // Num
  const std::string& name() const;      // Var
  const Term& child(int i) const;       // Succ (0), Sum/Prod (0, 1)

private:
  std::shared_ptr<const TermNode> node_;
};

struct TermNode {
  Term::Kind kind;
  std::uint64_t value = 0;
  std::string name;
  Term a, b;
};

struct PrimeFormula {
  std::string pred;          // "=" for equality; bare names act as nullary predicates
  std::vector<Term> args;
};

struct FormulaNode;

class Formula {
public:
  enum class Kind { Prime, Meet, Neg, Omega };

  Formula() = default;

  static Formula prime(PrimeFormula p);
  static Formula prime(std::string pred, std::vector<Term> args);
  static Formula meet(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula omega(std::string binder, Formula body);

  bool empty() const { return node_ == nullptr; }
  Kind kind() const;
  const PrimeFormula& prime_formula() const;  // Prime
  const Formula& left() const;                // Meet
  const Formula& right() const;               // Meet
  const Formula& body() const;                // Neg, Omega
  const std::string& binder() const;          // Omega

private:
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  Formula::Kind kind;
  PrimeFormula prime;
  std::string binder;
  Formula a, b;
};

// antecedent models a1 ^ a2 ^ ... ^ an on the left; an absent succedent is
// the empty right-hand side ("P ->"), an empty antecedent the empty left.
struct Sequent {
  std::vector<Formula> antecedent;
  std::optional<Formula> succedent;
};

// Total structural order; 0 on equality. Used for canonical printing and
// for set-normalized search keys.
int compare(const Term& a, const Term& b);
int compare(const PrimeFormula& a, const PrimeFormula& b);
int compare(const Formula& a, const Formula& b);
int compare(const Sequent& a, const Sequent& b);

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }
bool operator==(const Formula& a, const Formula& b);
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
bool operator==(const Sequent& a, const Sequent& b);
inline bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }

struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const { return compare(a, b) < 0; }
};
struct SequentLess {
  bool operator()(const Sequent& a, const Sequent& b) const { return compare(a, b) < 0; }
};

void collect_free_vars(const Term& t, std::set<std::string>& out);
void collect_free_vars(const Formula& f, std::set<std::string>& out);
std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
std::set<std::string> free_vars(const Sequent& s);

// Closed up to the given set of opaque parameters.
bool is_closed(const Term& t, const std::set<std::string>& opaque = {});
bool is_closed(const Formula& f, const std::set<std::string>& opaque = {});
bool is_closed(const Sequent& s, const std::set<std::string>& opaque = {});

struct eval_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Standard arithmetic value of a closed term; successor adds 1.
// Throws eval_error (FreeVariablePresent) if the term is not closed.
Numeral eval_term(const Term& t);

// Truth of a closed prime formula. Only "=" is built in.
bool eval_prime(const PrimeFormula& p);

// Replaces every free occurrence of v. Binders shadow; substituting under a
// binder that occurs in t would capture and is rejected.
Term substitute(const Term& t, const std::string& v, const Term& replacement);
Formula substitute(const Formula& f, const std::string& v, const Term& replacement);
Sequent substitute(const Sequent& s, const std::string& v, const Term& replacement);

// A variable name not occurring in `avoid`, derived from `hint`.
std::string fresh_var(const std::string& hint, const std::set<std::string>& avoid);

}  // namespace oseq

#endif
