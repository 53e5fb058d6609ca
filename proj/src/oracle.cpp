#include "oseq/oracle.hpp"

#include <algorithm>

namespace oseq {

namespace {

Polynomial poly_const(std::uint64_t c) {
  Polynomial p;
  if (c != 0) p[{}] = c;
  return p;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [m, c] : b) {
    r[m] += c;
    if (r[m] == 0) r.erase(m);
  }
  return r;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      r[m] += ca * cb;
    }
  return r;
}

}  // namespace

Polynomial term_polynomial(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Num:
      return poly_const(t.value());
    case Term::Kind::Var:
      return Polynomial{{Monomial{t.name()}, 1}};
    case Term::Kind::Succ:
      return poly_add(term_polynomial(t.child(0)), poly_const(1));
    case Term::Kind::Sum:
      return poly_add(term_polynomial(t.child(0)), term_polynomial(t.child(1)));
    case Term::Kind::Prod:
      return poly_mul(term_polynomial(t.child(0)), term_polynomial(t.child(1)));
  }
  throw eval_error("term_polynomial: bad term");
}

PrimeTruth prime_truth(const PrimeFormula& p) {
  if (p.pred != "=" || p.args.size() != 2) return PrimeTruth::Contingent;
  Polynomial lhs = term_polynomial(p.args[0]);
  Polynomial rhs = term_polynomial(p.args[1]);
  if (lhs == rhs) return PrimeTruth::AlwaysTrue;
  // Sides whose non-constant parts agree but whose constants differ can
  // never be equal, whatever the variables are.
  Polynomial l = lhs, r = rhs;
  l.erase(Monomial{});
  r.erase(Monomial{});
  if (l == r) return PrimeTruth::AlwaysFalse;
  return PrimeTruth::Contingent;
}

namespace {

// Unordered polynomial pair of an equality: (a = 1) and (1 = a) have the
// same truth set.
std::pair<Polynomial, Polynomial> poly_pair(const PrimeFormula& p) {
  Polynomial a = term_polynomial(p.args[0]);
  Polynomial b = term_polynomial(p.args[1]);
  if (b < a) std::swap(a, b);
  return {a, b};
}

bool same_truth_set(const PrimeFormula& p, const PrimeFormula& q) {
  if (p.pred != "=" || q.pred != "=" || p.args.size() != 2 || q.args.size() != 2)
    return compare(p, q) == 0;
  return poly_pair(p) == poly_pair(q);
}

class ArithmeticOracle : public PreorderOracle {
 public:
  bool basic(const Sequent& s) const override {
    if (s.antecedent.size() > 1) return false;
    const Formula* ante = s.antecedent.empty() ? nullptr : &s.antecedent[0];
    if (ante && ante->kind() != Formula::Kind::Prime) return false;
    if (s.succedent && s.succedent->kind() != Formula::Kind::Prime) return false;
    if (!ante && !s.succedent) return false;  // "->" is never correct
    if (!ante) return prime_truth(s.succedent->prime_formula()) == PrimeTruth::AlwaysTrue;
    const PrimeFormula& p = ante->prime_formula();
    if (!s.succedent) return prime_truth(p) == PrimeTruth::AlwaysFalse;
    const PrimeFormula& q = s.succedent->prime_formula();
    if (prime_truth(p) == PrimeTruth::AlwaysFalse) return true;
    if (prime_truth(q) == PrimeTruth::AlwaysTrue) return true;
    // Contingent: p implies q under every instantiation only when the
    // truth sets coincide syntactically (up to polynomial normal form).
    return same_truth_set(p, q);
  }
};

}  // namespace

OraclePtr arithmetic_oracle() { return std::make_shared<ArithmeticOracle>(); }

FinitePreorder::FinitePreorder(
    std::vector<std::string> elements,
    std::vector<std::pair<std::string, std::string>> pairs)
    : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
  std::size_t n = elements_.size();
  closure_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) closure_[i][i] = true;
  for (const auto& [a, b] : pairs) {
    auto ia = index_.find(a), ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end())
      throw std::invalid_argument("finite_preorder: pair mentions unknown element");
    closure_[ia->second][ib->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (closure_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (closure_[k][j]) closure_[i][j] = true;
}

bool FinitePreorder::leq(const std::string& p, const std::string& q) const {
  auto ip = index_.find(p), iq = index_.find(q);
  if (ip == index_.end() || iq == index_.end()) return false;
  return closure_[ip->second][iq->second];
}

Formula FinitePreorder::prime(const std::string& name) const {
  return Formula::prime(name, {});
}

bool FinitePreorder::basic(const Sequent& s) const {
  // Generic preorders carry no truth: only the p <= q form can hold.
  if (s.antecedent.size() != 1 || !s.succedent) return false;
  const Formula& a = s.antecedent[0];
  const Formula& b = *s.succedent;
  if (a.kind() != Formula::Kind::Prime || b.kind() != Formula::Kind::Prime)
    return false;
  const PrimeFormula& p = a.prime_formula();
  const PrimeFormula& q = b.prime_formula();
  if (!p.args.empty() || !q.args.empty()) return false;
  return leq(p.pred, q.pred);
}

std::shared_ptr<const FinitePreorder> finite_preorder(
    std::vector<std::string> elements,
    std::vector<std::pair<std::string, std::string>> pairs) {
  return std::make_shared<FinitePreorder>(std::move(elements), std::move(pairs));
}

}  // namespace oseq
