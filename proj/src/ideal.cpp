#include "koenig/ideal.hpp"

#include "koenig/error.hpp"
#include "koenig/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace koenig {

std::string to_string(Side s) { return s == Side::First ? "first" : "second"; }

Binomial::Binomial(Monomial a, Monomial b, std::string t)
    : first(std::move(a)), second(std::move(b)), tag(std::move(t)) {
  if (first == second)
    throw Error(ErrorCode::PreconditionViolated, "binomial " + tag + " has equal terms");
  if (first.degree() != 2 || second.degree() != 2)
    throw Error(ErrorCode::PreconditionViolated, "binomial " + tag + " is not quadratic");
}

std::optional<std::size_t> IdealGenerators::find_tag(const std::string& tag) const {
  for (std::size_t i = 0; i < binomials.size(); ++i)
    if (binomials[i].tag == tag) return i;
  return std::nullopt;
}

std::optional<VarId> IdealGenerators::find_var(const std::string& name) const {
  for (std::size_t i = 0; i < var_names.size(); ++i)
    if (var_names[i] == name) return static_cast<VarId>(i);
  return std::nullopt;
}

bool IdealGenerators::has_private_monomials() const {
  std::map<Monomial, std::size_t> count;
  for (const auto& b : binomials) {
    ++count[b.first];
    ++count[b.second];
  }
  return std::all_of(binomials.begin(), binomials.end(),
                     [&](const Binomial& b) { return count[b.first] == 1 || count[b.second] == 1; });
}

IdealGenerators join_meet_generators(const DistributiveLattice& l) {
  IdealGenerators g;
  g.num_vars = l.size();
  for (std::size_t i = 0; i < l.size(); ++i) g.var_names.push_back(l.label(i));
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      if (l.comparable(a, b)) continue;
      const auto m = static_cast<VarId>(l.meet(a, b));
      const auto j = static_cast<VarId>(l.join(a, b));
      g.binomials.emplace_back(Monomial::product(static_cast<VarId>(a), static_cast<VarId>(b)),
                               Monomial::product(m, j),
                               "f(" + g.var_names[a] + "," + g.var_names[b] + ")");
    }
  }
  return g;
}

bool is_monomial_regular_sequence(const std::vector<Monomial>& ms) {
  for (const auto& m : ms)
    if (m.is_one()) throw Error(ErrorCode::UnitMonomial, "regular sequence contains the unit monomial");
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!ms[i].coprime(ms[j])) return false;
  return true;
}

}  // namespace koenig
