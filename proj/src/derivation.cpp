#include "oseq/derivation.hpp"

#include <algorithm>

namespace oseq {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Basic: return "basic";
    case Rule::A: return "a";
    case Rule::B: return "b";
    case Rule::C: return "c";
    case Rule::D: return "d";
    case Rule::E: return "e";
    case Rule::F: return "f";
    case Rule::G: return "g";
    case Rule::H: return "h";
    case Rule::I: return "i";
    case Rule::J: return "j";
  }
  return "?";
}

Rule Derivation::rule() const { return node_->rule; }
const Sequent& Derivation::conclusion() const { return node_->conclusion; }
const std::vector<Derivation>& Derivation::premisses() const {
  return node_->premisses;
}
std::size_t Derivation::position() const { return node_->pos; }
const Term& Derivation::witness() const { return node_->witness; }
const std::string& Derivation::parameter() const { return node_->param; }
bool Derivation::has_body() const { return !node_->branch_body.empty(); }
const Derivation& Derivation::body() const { return node_->branch_body; }
const std::map<std::uint64_t, Derivation>& Derivation::exceptions() const {
  return node_->branch_exceptions;
}
bool Derivation::has_recipe() const { return static_cast<bool>(node_->recipe); }
Derivation Derivation::run_recipe(std::uint64_t n) const { return node_->recipe(n); }

Derivation Derivation::make(std::shared_ptr<const DerivationNode> node) {
  Derivation d;
  d.node_ = std::move(node);
  return d;
}

std::size_t Derivation::size() const {
  std::size_t n = 1;
  for (const Derivation& p : node_->premisses) n += p.size();
  if (!node_->branch_body.empty()) n += node_->branch_body.size();
  for (const auto& [k, e] : node_->branch_exceptions) n += e.size();
  return n;
}

namespace {

Derivation finish(DerivationNode n) {
  return Derivation::make(std::make_shared<const DerivationNode>(std::move(n)));
}

[[noreturn]] void mismatch(const std::string& what) {
  throw proof_error("RuleMismatch", "/", what);
}

void require_prime_sequent(const Sequent& s) {
  if (s.antecedent.size() > 1)
    mismatch("basic sequent must have at most one antecedent formula");
  for (const Formula& f : s.antecedent)
    if (f.kind() != Formula::Kind::Prime)
      mismatch("basic sequent formulas must be prime");
  if (s.succedent && s.succedent->kind() != Formula::Kind::Prime)
    mismatch("basic sequent formulas must be prime");
}

}  // namespace

Derivation mk_basic(Sequent s) {
  require_prime_sequent(s);
  DerivationNode n;
  n.rule = Rule::Basic;
  n.conclusion = std::move(s);
  return finish(std::move(n));
}

Derivation mk_a(Derivation d1, Derivation d2) {
  const Sequent& s1 = d1.conclusion();
  const Sequent& s2 = d2.conclusion();
  if (!s1.succedent || !s2.succedent)
    mismatch("rule a premisses need present succedents");
  if (s1.antecedent != s2.antecedent)
    mismatch("rule a premisses must share their antecedent");
  DerivationNode n;
  n.rule = Rule::A;
  n.conclusion.antecedent = s1.antecedent;
  n.conclusion.succedent = Formula::meet(*s1.succedent, *s2.succedent);
  n.premisses = {std::move(d1), std::move(d2)};
  return finish(std::move(n));
}

Derivation mk_b(Derivation d) {
  const Sequent& s = d.conclusion();
  if (s.succedent) mismatch("rule b premiss must have an absent succedent");
  if (s.antecedent.empty()) mismatch("rule b needs a leading antecedent formula");
  DerivationNode n;
  n.rule = Rule::B;
  n.conclusion.antecedent.assign(s.antecedent.begin() + 1, s.antecedent.end());
  n.conclusion.succedent = Formula::neg(s.antecedent[0]);
  n.premisses = {std::move(d)};
  return finish(std::move(n));
}

Derivation mk_c(std::string param, Derivation body,
                std::map<std::uint64_t, Derivation> exceptions) {
  const Sequent& s = body.conclusion();
  if (!s.succedent) mismatch("rule c body must conclude a present succedent");
  for (const Formula& f : s.antecedent)
    if (free_vars(f).count(param))
      throw proof_error("ParameterEscape", "/",
                        "omega parameter " + param + " occurs in the context");
  DerivationNode n;
  n.rule = Rule::C;
  n.conclusion.antecedent = s.antecedent;
  n.conclusion.succedent = Formula::omega(param, *s.succedent);
  n.param = std::move(param);
  n.branch_body = std::move(body);
  n.branch_exceptions = std::move(exceptions);
  for (const auto& [k, e] : n.branch_exceptions) {
    Sequent expected{s.antecedent, substitute(*s.succedent, n.param, Term::num(k))};
    if (!(e.conclusion() == expected))
      mismatch("rule c exception at " + std::to_string(k) +
               " concludes the wrong instance");
  }
  return finish(std::move(n));
}

Derivation mk_d(Formula inserted, std::size_t pos, Derivation d) {
  const Sequent& s = d.conclusion();
  if (pos > s.antecedent.size()) mismatch("rule d position out of range");
  DerivationNode n;
  n.rule = Rule::D;
  n.conclusion = s;
  n.conclusion.antecedent.insert(n.conclusion.antecedent.begin() + pos,
                                 std::move(inserted));
  n.pos = pos;
  n.premisses = {std::move(d)};
  return finish(std::move(n));
}

Derivation mk_e(std::optional<Formula> rhs, Derivation d) {
  const Sequent& s = d.conclusion();
  if (!s.succedent) mismatch("rule e premiss must have a present succedent");
  DerivationNode n;
  n.rule = Rule::E;
  n.conclusion.antecedent = s.antecedent;
  n.conclusion.antecedent.push_back(Formula::neg(*s.succedent));
  n.conclusion.succedent = std::move(rhs);
  n.premisses = {std::move(d)};
  return finish(std::move(n));
}

Derivation mk_f(Formula omega, Term witness, Derivation d) {
  if (omega.kind() != Formula::Kind::Omega)
    mismatch("rule f needs an omega-meet formula");
  const Sequent& s = d.conclusion();
  if (s.antecedent.empty()) mismatch("rule f premiss needs a leading entry");
  Formula instance = substitute(omega.body(), omega.binder(), witness);
  if (!(s.antecedent[0] == instance))
    mismatch("rule f premiss does not start with the witnessed instance");
  DerivationNode n;
  n.rule = Rule::F;
  n.conclusion = s;
  n.conclusion.antecedent[0] = std::move(omega);
  n.witness = std::move(witness);
  n.premisses = {std::move(d)};
  return finish(std::move(n));
}

Derivation mk_g(std::size_t pos, Derivation d) {
  const Sequent& s = d.conclusion();
  if (pos + 1 >= s.antecedent.size()) mismatch("rule g position out of range");
  if (!(s.antecedent[pos] == s.antecedent[pos + 1]))
    mismatch("rule g needs adjacent equal antecedent entries");
  DerivationNode n;
  n.rule = Rule::G;
  n.conclusion = s;
  n.conclusion.antecedent.erase(n.conclusion.antecedent.begin() + pos);
  n.pos = pos;
  n.premisses = {std::move(d)};
  return finish(std::move(n));
}

Derivation mk_h(std::size_t pos, Derivation d) {
  const Sequent& s = d.conclusion();
  if (pos + 1 >= s.antecedent.size()) mismatch("rule h position out of range");
  DerivationNode n;
  n.rule = Rule::H;
  n.conclusion = s;
  std::swap(n.conclusion.antecedent[pos], n.conclusion.antecedent[pos + 1]);
  n.pos = pos;
  n.premisses = {std::move(d)};
  return finish(std::move(n));
}

Derivation mk_i(std::size_t pos, Derivation d) {
  const Sequent& s = d.conclusion();
  if (pos + 1 >= s.antecedent.size()) mismatch("rule i position out of range");
  DerivationNode n;
  n.rule = Rule::I;
  n.conclusion = s;
  Formula merged = Formula::meet(s.antecedent[pos], s.antecedent[pos + 1]);
  n.conclusion.antecedent.erase(n.conclusion.antecedent.begin() + pos + 1);
  n.conclusion.antecedent[pos] = std::move(merged);
  n.pos = pos;
  n.premisses = {std::move(d)};
  return finish(std::move(n));
}

Derivation mk_j(std::string param, Derivation body,
                std::map<std::uint64_t, Derivation> exceptions) {
  DerivationNode n;
  n.rule = Rule::J;
  n.conclusion = body.conclusion();
  n.param = std::move(param);
  n.branch_body = std::move(body);
  n.branch_exceptions = std::move(exceptions);
  for (const auto& [k, e] : n.branch_exceptions) {
    Sequent expected = substitute(n.conclusion, n.param, Term::num(k));
    if (!(e.conclusion() == expected))
      mismatch("rule j exception at " + std::to_string(k) +
               " concludes the wrong instance");
  }
  return finish(std::move(n));
}

Derivation mk_j_recipe(std::string param, Sequent conclusion, BranchRecipe recipe,
                       std::map<std::uint64_t, Derivation> exceptions) {
  DerivationNode n;
  n.rule = Rule::J;
  n.conclusion = std::move(conclusion);
  n.param = std::move(param);
  n.recipe = std::move(recipe);
  n.branch_exceptions = std::move(exceptions);
  return finish(std::move(n));
}

namespace {

Derivation mk_truncated(Rule rule, std::string param, Sequent conclusion,
                        std::map<std::uint64_t, Derivation> exceptions) {
  DerivationNode n;
  n.rule = rule;
  n.conclusion = std::move(conclusion);
  n.param = std::move(param);
  n.branch_exceptions = std::move(exceptions);
  return finish(std::move(n));
}

}  // namespace

Derivation mk_c_truncated(std::string param, Sequent conclusion,
                          std::map<std::uint64_t, Derivation> exceptions) {
  if (!conclusion.succedent || conclusion.succedent->kind() != Formula::Kind::Omega)
    mismatch("truncated rule c needs an omega-meet succedent");
  return mk_truncated(Rule::C, std::move(param), std::move(conclusion),
                      std::move(exceptions));
}

Derivation mk_j_truncated(std::string param, Sequent conclusion,
                          std::map<std::uint64_t, Derivation> exceptions) {
  return mk_truncated(Rule::J, std::move(param), std::move(conclusion),
                      std::move(exceptions));
}

Derivation substitute_derivation(const Derivation& d, const std::string& v,
                                 const Term& replacement) {
  const DerivationNode& n = *d.node();
  if ((n.rule == Rule::C || n.rule == Rule::J) && n.param == v) {
    if (n.rule == Rule::C) return d;  // the parameter is rebound below here
    throw std::logic_error("substitute_derivation: j parameter conflates with " + v);
  }
  DerivationNode out = n;
  out.conclusion = substitute(n.conclusion, v, replacement);
  if (!n.witness.empty()) out.witness = substitute(n.witness, v, replacement);
  for (Derivation& p : out.premisses) p = substitute_derivation(p, v, replacement);
  if (!n.branch_body.empty())
    out.branch_body = substitute_derivation(n.branch_body, v, replacement);
  for (auto& [k, e] : out.branch_exceptions)
    e = substitute_derivation(e, v, replacement);
  if (n.recipe) {
    BranchRecipe inner = n.recipe;
    Term repl = replacement;
    out.recipe = [inner, v, repl](std::uint64_t k) {
      return substitute_derivation(inner(k), v, repl);
    };
  }
  return finish(std::move(out));
}

Derivation instantiate(const Derivation& d, Numeral n) {
  const DerivationNode& node = *d.node();
  if (node.rule != Rule::C && node.rule != Rule::J)
    throw std::logic_error("instantiate: not an omega node");
  auto hit = node.branch_exceptions.find(n.value);
  if (hit != node.branch_exceptions.end()) return hit->second;
  if (node.recipe) return node.recipe(n.value);
  if (node.branch_body.empty())
    throw proof_error("TruncatedBranch", "/",
                      "no premiss available at index " + std::to_string(n.value));
  return substitute_derivation(node.branch_body, node.param, Term::num(n));
}

namespace {

struct Checker {
  const PreorderOracle& oracle;
  CheckOptions options;

  [[noreturn]] void fail(const std::string& kind, const std::string& path,
                         const std::string& what) const {
    throw proof_error(kind, path, what);
  }

  void expect(bool ok, const std::string& path, const std::string& what) const {
    if (!ok) fail("RuleMismatch", path, what);
  }

  Sequent instance_conclusion(const DerivationNode& n, std::uint64_t k) const {
    if (n.rule == Rule::J) return substitute(n.conclusion, n.param, Term::num(k));
    const Formula& om = *n.conclusion.succedent;
    return Sequent{n.conclusion.antecedent,
                   substitute(om.body(), om.binder(), Term::num(k))};
  }

  void check_branch(const DerivationNode& n, const std::set<std::string>& opaque,
                    const std::string& path) const {
    if (!n.branch_body.empty()) {
      std::set<std::string> inner = opaque;
      inner.insert(n.param);
      run(n.branch_body, inner, path + "w/");
    }
    for (const auto& [k, e] : n.branch_exceptions) {
      Sequent expected = instance_conclusion(n, k);
      expect(e.conclusion() == expected, path,
             "exception at " + std::to_string(k) + " concludes the wrong instance");
      run(e, opaque, path + "e" + std::to_string(k) + "/");
    }
    if (n.recipe) {
      for (std::uint64_t k = 1; k <= options.audit_window; ++k) {
        if (n.branch_exceptions.count(k)) continue;
        Derivation inst = n.recipe(k);
        expect(inst.conclusion() == instance_conclusion(n, k), path,
               "recipe instance at " + std::to_string(k) +
                   " concludes the wrong sequent");
        run(inst, opaque, path + "r" + std::to_string(k) + "/");
      }
    }
  }

  void run(const Derivation& d, const std::set<std::string>& opaque,
           const std::string& path) const {
    const DerivationNode& n = *d.node();
    const Sequent& c = n.conclusion;
    switch (n.rule) {
      case Rule::Basic: {
        expect(n.premisses.empty(), path, "basic nodes have no premisses");
        if (c.antecedent.size() > 1)
          fail("RuleMismatch", path, "basic sequent with long antecedent");
        for (const Formula& f : c.antecedent)
          expect(f.kind() == Formula::Kind::Prime, path, "basic formulas must be prime");
        if (c.succedent)
          expect(c.succedent->kind() == Formula::Kind::Prime, path,
                 "basic formulas must be prime");
        if (!is_closed(c, opaque))
          fail("FreeVariablePresent", path, "basic sequent is not closed");
        if (!oracle.basic(c))
          fail("BasicNotInOracle", path, "oracle rejects the basic relation");
        return;
      }
      case Rule::A: {
        expect(n.premisses.size() == 2, path, "rule a takes two premisses");
        const Sequent& s1 = n.premisses[0].conclusion();
        const Sequent& s2 = n.premisses[1].conclusion();
        expect(s1.succedent.has_value() && s2.succedent.has_value(), path,
               "rule a premisses need succedents");
        expect(s1.antecedent == s2.antecedent, path,
               "rule a premisses must share their antecedent");
        expect(s1.antecedent == c.antecedent, path,
               "rule a conclusion keeps the antecedent");
        expect(c.succedent.has_value() &&
                   *c.succedent == Formula::meet(*s1.succedent, *s2.succedent),
               path, "rule a concludes the meet of the premiss succedents");
        run(n.premisses[0], opaque, path + "0/");
        run(n.premisses[1], opaque, path + "1/");
        return;
      }
      case Rule::B: {
        expect(n.premisses.size() == 1, path, "rule b takes one premiss");
        const Sequent& s = n.premisses[0].conclusion();
        expect(!s.succedent.has_value(), path, "rule b premiss has no succedent");
        expect(!s.antecedent.empty(), path, "rule b premiss needs a leading entry");
        Sequent expected;
        expected.antecedent.assign(s.antecedent.begin() + 1, s.antecedent.end());
        expected.succedent = Formula::neg(s.antecedent[0]);
        expect(c == expected, path, "rule b conclusion shape");
        run(n.premisses[0], opaque, path + "0/");
        return;
      }
      case Rule::C: {
        expect(c.succedent.has_value() &&
                   c.succedent->kind() == Formula::Kind::Omega,
               path, "rule c concludes an omega meet");
        expect(c.succedent->binder() == n.param, path,
               "rule c binder must be the branch parameter");
        for (const Formula& f : c.antecedent)
          if (free_vars(f).count(n.param))
            fail("ParameterEscape", path,
                 "parameter " + n.param + " occurs in the context");
        if (!n.branch_body.empty()) {
          const Sequent& s = n.branch_body.conclusion();
          expect(s.succedent.has_value(), path, "rule c body needs a succedent");
          Sequent expected{s.antecedent, Formula::omega(n.param, *s.succedent)};
          expect(c == expected, path, "rule c conclusion shape");
        }
        check_branch(n, opaque, path);
        return;
      }
      case Rule::D: {
        expect(n.premisses.size() == 1, path, "rule d takes one premiss");
        const Sequent& s = n.premisses[0].conclusion();
        expect(n.pos < c.antecedent.size(), path, "rule d position");
        Sequent expected = c;
        expected.antecedent.erase(expected.antecedent.begin() + n.pos);
        expect(expected == s, path, "rule d inserts one antecedent entry");
        run(n.premisses[0], opaque, path + "0/");
        return;
      }
      case Rule::E: {
        expect(n.premisses.size() == 1, path, "rule e takes one premiss");
        const Sequent& s = n.premisses[0].conclusion();
        expect(s.succedent.has_value(), path, "rule e premiss needs a succedent");
        expect(!c.antecedent.empty(), path, "rule e conclusion shape");
        expect(c.antecedent.back() == Formula::neg(*s.succedent), path,
               "rule e appends the negated premiss succedent");
        std::vector<Formula> front(c.antecedent.begin(), c.antecedent.end() - 1);
        expect(front == s.antecedent, path, "rule e keeps the premiss antecedent");
        run(n.premisses[0], opaque, path + "0/");
        return;
      }
      case Rule::F: {
        expect(n.premisses.size() == 1, path, "rule f takes one premiss");
        expect(!c.antecedent.empty() &&
                   c.antecedent[0].kind() == Formula::Kind::Omega,
               path, "rule f conclusion leads with an omega meet");
        expect(!n.witness.empty(), path, "rule f carries its witness");
        if (!is_closed(n.witness, opaque))
          fail("FreeVariablePresent", path, "rule f witness is not closed");
        const Formula& om = c.antecedent[0];
        const Sequent& s = n.premisses[0].conclusion();
        Sequent expected = c;
        expected.antecedent[0] = substitute(om.body(), om.binder(), n.witness);
        expect(expected == s, path, "rule f premiss instantiates the leading entry");
        run(n.premisses[0], opaque, path + "0/");
        return;
      }
      case Rule::G: {
        expect(n.premisses.size() == 1, path, "rule g takes one premiss");
        const Sequent& s = n.premisses[0].conclusion();
        expect(n.pos < c.antecedent.size(), path, "rule g position");
        Sequent expected = c;
        expected.antecedent.insert(expected.antecedent.begin() + n.pos,
                                   c.antecedent[n.pos]);
        expect(expected == s, path, "rule g contracts adjacent equal entries");
        run(n.premisses[0], opaque, path + "0/");
        return;
      }
      case Rule::H: {
        expect(n.premisses.size() == 1, path, "rule h takes one premiss");
        const Sequent& s = n.premisses[0].conclusion();
        expect(n.pos + 1 < c.antecedent.size(), path, "rule h position");
        Sequent expected = c;
        std::swap(expected.antecedent[n.pos], expected.antecedent[n.pos + 1]);
        expect(expected == s, path, "rule h exchanges adjacent entries");
        run(n.premisses[0], opaque, path + "0/");
        return;
      }
      case Rule::I: {
        expect(n.premisses.size() == 1, path, "rule i takes one premiss");
        const Sequent& s = n.premisses[0].conclusion();
        expect(n.pos < c.antecedent.size() &&
                   c.antecedent[n.pos].kind() == Formula::Kind::Meet,
               path, "rule i needs a meet entry at its position");
        Sequent expected = c;
        const Formula& m = c.antecedent[n.pos];
        expected.antecedent[n.pos] = m.left();
        expected.antecedent.insert(expected.antecedent.begin() + n.pos + 1,
                                   m.right());
        expect(expected == s, path, "rule i re-associates two adjacent entries");
        run(n.premisses[0], opaque, path + "0/");
        return;
      }
      case Rule::J: {
        if (opaque.count(n.param))
          fail("ParameterEscape", path,
               "rule j parameter " + n.param + " shadows an ambient parameter");
        if (!n.branch_body.empty()) {
          expect(n.branch_body.conclusion() == c, path,
                 "rule j conclusion is its body's conclusion");
        }
        check_branch(n, opaque, path);
        return;
      }
    }
    fail("RuleMismatch", path, "unknown rule tag");
  }
};

}  // namespace

Sequent check(const Derivation& d, const PreorderOracle& oracle,
              const std::set<std::string>& opaque, const CheckOptions& options) {
  if (d.empty()) throw proof_error("RuleMismatch", "/", "empty derivation");
  Checker ck{oracle, options};
  ck.run(d, opaque, "/");
  return d.conclusion();
}

}  // namespace oseq
