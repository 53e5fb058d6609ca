#include "oseq/terms.hpp"

#include <algorithm>

namespace oseq {

std::string render(Numeral n) {
  std::string s = "1";
  for (std::uint64_t i = 1; i < n.value; ++i) s += '\'';
  return s;
}

Numeral parse_numeral(const std::string& s) {
  if (s.empty() || s[0] != '1')
    throw std::invalid_argument("numeral must start with 1: " + s);
  std::uint64_t v = 1;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] != '\'') throw std::invalid_argument("bad numeral: " + s);
    ++v;
  }
  return Numeral(v);
}

Term Term::num(std::uint64_t value) {
  if (value == 0) throw std::invalid_argument("numeral literal must be >= 1");
  TermNode n;
  n.kind = Kind::Num;
  n.value = value;
  Term t;
  t.node_ = std::make_shared<const TermNode>(std::move(n));
  return t;
}

Term Term::var(std::string name) {
  TermNode n;
  n.kind = Kind::Var;
  n.name = std::move(name);
  Term t;
  t.node_ = std::make_shared<const TermNode>(std::move(n));
  return t;
}

Term Term::succ(Term a) {
  TermNode n;
  n.kind = Kind::Succ;
  n.a = std::move(a);
  Term t;
  t.node_ = std::make_shared<const TermNode>(std::move(n));
  return t;
}

Term Term::sum(Term a, Term b) {
  TermNode n;
  n.kind = Kind::Sum;
  n.a = std::move(a);
  n.b = std::move(b);
  Term t;
  t.node_ = std::make_shared<const TermNode>(std::move(n));
  return t;
}

Term Term::prod(Term a, Term b) {
  TermNode n;
  n.kind = Kind::Prod;
  n.a = std::move(a);
  n.b = std::move(b);
  Term t;
  t.node_ = std::make_shared<const TermNode>(std::move(n));
  return t;
}

Term::Kind Term::kind() const { return node_->kind; }
std::uint64_t Term::value() const { return node_->value; }
const std::string& Term::name() const { return node_->name; }
const Term& Term::child(int i) const { return i == 0 ? node_->a : node_->b; }

Formula Formula::prime(PrimeFormula p) {
  FormulaNode n;
  n.kind = Kind::Prime;
  n.prime = std::move(p);
  Formula f;
  f.node_ = std::make_shared<const FormulaNode>(std::move(n));
  return f;
}

Formula Formula::prime(std::string pred, std::vector<Term> args) {
  return prime(PrimeFormula{std::move(pred), std::move(args)});
}

Formula Formula::meet(Formula a, Formula b) {
  FormulaNode n;
  n.kind = Kind::Meet;
  n.a = std::move(a);
  n.b = std::move(b);
  Formula f;
  f.node_ = std::make_shared<const FormulaNode>(std::move(n));
  return f;
}

Formula Formula::neg(Formula a) {
  FormulaNode n;
  n.kind = Kind::Neg;
  n.a = std::move(a);
  Formula f;
  f.node_ = std::make_shared<const FormulaNode>(std::move(n));
  return f;
}

Formula Formula::omega(std::string binder, Formula body) {
  FormulaNode n;
  n.kind = Kind::Omega;
  n.binder = std::move(binder);
  n.a = std::move(body);
  Formula f;
  f.node_ = std::make_shared<const FormulaNode>(std::move(n));
  return f;
}

Formula::Kind Formula::kind() const { return node_->kind; }
const PrimeFormula& Formula::prime_formula() const { return node_->prime; }
const Formula& Formula::left() const { return node_->a; }
const Formula& Formula::right() const { return node_->b; }
const Formula& Formula::body() const { return node_->a; }
const std::string& Formula::binder() const { return node_->binder; }

namespace {
int cmp3(std::uint64_t a, std::uint64_t b) { return a < b ? -1 : a > b ? 1 : 0; }
int cmp3(const std::string& a, const std::string& b) {
  return a < b ? -1 : a > b ? 1 : 0;
}
}  // namespace

int compare(const Term& a, const Term& b) {
  if (a.empty() || b.empty()) return cmp3(!a.empty(), !b.empty());
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Term::Kind::Num:
      return cmp3(a.value(), b.value());
    case Term::Kind::Var:
      return cmp3(a.name(), b.name());
    case Term::Kind::Succ:
      return compare(a.child(0), b.child(0));
    case Term::Kind::Sum:
    case Term::Kind::Prod: {
      int c = compare(a.child(0), b.child(0));
      return c != 0 ? c : compare(a.child(1), b.child(1));
    }
  }
  return 0;
}

int compare(const PrimeFormula& a, const PrimeFormula& b) {
  if (int c = cmp3(a.pred, b.pred); c != 0) return c;
  if (int c = cmp3(a.args.size(), b.args.size()); c != 0) return c;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (int c = compare(a.args[i], b.args[i]); c != 0) return c;
  return 0;
}

int compare(const Formula& a, const Formula& b) {
  if (a.empty() || b.empty()) return cmp3(!a.empty(), !b.empty());
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Formula::Kind::Prime:
      return compare(a.prime_formula(), b.prime_formula());
    case Formula::Kind::Meet: {
      int c = compare(a.left(), b.left());
      return c != 0 ? c : compare(a.right(), b.right());
    }
    case Formula::Kind::Neg:
      return compare(a.body(), b.body());
    case Formula::Kind::Omega: {
      int c = cmp3(a.binder(), b.binder());
      return c != 0 ? c : compare(a.body(), b.body());
    }
  }
  return 0;
}

int compare(const Sequent& a, const Sequent& b) {
  if (int c = cmp3(a.antecedent.size(), b.antecedent.size()); c != 0) return c;
  for (std::size_t i = 0; i < a.antecedent.size(); ++i)
    if (int c = compare(a.antecedent[i], b.antecedent[i]); c != 0) return c;
  if (a.succedent.has_value() != b.succedent.has_value())
    return a.succedent.has_value() ? 1 : -1;
  if (!a.succedent) return 0;
  return compare(*a.succedent, *b.succedent);
}

bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
bool operator==(const Sequent& a, const Sequent& b) { return compare(a, b) == 0; }

void collect_free_vars(const Term& t, std::set<std::string>& out) {
  if (t.empty()) return;
  switch (t.kind()) {
    case Term::Kind::Num:
      return;
    case Term::Kind::Var:
      out.insert(t.name());
      return;
    case Term::Kind::Succ:
      collect_free_vars(t.child(0), out);
      return;
    case Term::Kind::Sum:
    case Term::Kind::Prod:
      collect_free_vars(t.child(0), out);
      collect_free_vars(t.child(1), out);
      return;
  }
}

void collect_free_vars(const Formula& f, std::set<std::string>& out) {
  if (f.empty()) return;
  switch (f.kind()) {
    case Formula::Kind::Prime:
      for (const Term& t : f.prime_formula().args) collect_free_vars(t, out);
      return;
    case Formula::Kind::Meet:
      collect_free_vars(f.left(), out);
      collect_free_vars(f.right(), out);
      return;
    case Formula::Kind::Neg:
      collect_free_vars(f.body(), out);
      return;
    case Formula::Kind::Omega: {
      std::set<std::string> inner;
      collect_free_vars(f.body(), inner);
      inner.erase(f.binder());
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_free_vars(t, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  collect_free_vars(f, out);
  return out;
}

std::set<std::string> free_vars(const Sequent& s) {
  std::set<std::string> out;
  for (const Formula& f : s.antecedent) collect_free_vars(f, out);
  if (s.succedent) collect_free_vars(*s.succedent, out);
  return out;
}

namespace {
bool subset_of(const std::set<std::string>& xs, const std::set<std::string>& ys) {
  return std::all_of(xs.begin(), xs.end(),
                     [&](const std::string& x) { return ys.count(x) != 0; });
}
}  // namespace

bool is_closed(const Term& t, const std::set<std::string>& opaque) {
  return subset_of(free_vars(t), opaque);
}
bool is_closed(const Formula& f, const std::set<std::string>& opaque) {
  return subset_of(free_vars(f), opaque);
}
bool is_closed(const Sequent& s, const std::set<std::string>& opaque) {
  return subset_of(free_vars(s), opaque);
}

Numeral eval_term(const Term& t) {
  if (t.empty()) throw eval_error("eval_term: empty term");
  switch (t.kind()) {
    case Term::Kind::Num:
      return Numeral(t.value());
    case Term::Kind::Var:
      throw eval_error("FreeVariablePresent: cannot evaluate variable " + t.name());
    case Term::Kind::Succ:
      return Numeral(eval_term(t.child(0)).value + 1);
    case Term::Kind::Sum:
      return Numeral(eval_term(t.child(0)).value + eval_term(t.child(1)).value);
    case Term::Kind::Prod:
      return Numeral(eval_term(t.child(0)).value * eval_term(t.child(1)).value);
  }
  throw eval_error("eval_term: bad kind");
}

bool eval_prime(const PrimeFormula& p) {
  if (p.pred == "=") {
    if (p.args.size() != 2)
      throw eval_error("equality takes two arguments, got " +
                       std::to_string(p.args.size()));
    return eval_term(p.args[0]) == eval_term(p.args[1]);
  }
  throw eval_error("no evaluation rule for predicate " + p.pred);
}

Term substitute(const Term& t, const std::string& v, const Term& replacement) {
  if (t.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::Num:
      return t;
    case Term::Kind::Var:
      return t.name() == v ? replacement : t;
    case Term::Kind::Succ:
      return Term::succ(substitute(t.child(0), v, replacement));
    case Term::Kind::Sum:
      return Term::sum(substitute(t.child(0), v, replacement),
                       substitute(t.child(1), v, replacement));
    case Term::Kind::Prod:
      return Term::prod(substitute(t.child(0), v, replacement),
                        substitute(t.child(1), v, replacement));
  }
  return t;
}

Formula substitute(const Formula& f, const std::string& v, const Term& replacement) {
  if (f.empty()) return f;
  switch (f.kind()) {
    case Formula::Kind::Prime: {
      PrimeFormula p = f.prime_formula();
      for (Term& a : p.args) a = substitute(a, v, replacement);
      return Formula::prime(std::move(p));
    }
    case Formula::Kind::Meet:
      return Formula::meet(substitute(f.left(), v, replacement),
                           substitute(f.right(), v, replacement));
    case Formula::Kind::Neg:
      return Formula::neg(substitute(f.body(), v, replacement));
    case Formula::Kind::Omega: {
      if (f.binder() == v) return f;  // bound occurrences are untouched
      if (free_vars(replacement).count(f.binder()))
        throw std::invalid_argument("substitute: would capture binder " + f.binder());
      return Formula::omega(f.binder(), substitute(f.body(), v, replacement));
    }
  }
  return f;
}

Sequent substitute(const Sequent& s, const std::string& v, const Term& replacement) {
  Sequent out;
  out.antecedent.reserve(s.antecedent.size());
  for (const Formula& f : s.antecedent)
    out.antecedent.push_back(substitute(f, v, replacement));
  if (s.succedent) out.succedent = substitute(*s.succedent, v, replacement);
  return out;
}

std::string fresh_var(const std::string& hint, const std::set<std::string>& avoid) {
  if (!avoid.count(hint)) return hint;
  for (int i = 1;; ++i) {
    std::string cand = hint + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

}  // namespace oseq
