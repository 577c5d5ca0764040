#include "koenig/groebner.hpp"

#include "koenig/error.hpp"
#include "koenig/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

namespace koenig {

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::from_binomial(const Binomial& b) {
  Polynomial p;
  p.add_term(b.first, Rational(1));
  p.add_term(b.second, Rational(-1));
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

Polynomial Polynomial::scaled(const Rational& c, const Monomial& m) const {
  Polynomial p;
  if (c == 0) return p;
  for (const auto& [t, x] : terms_) p.terms_.emplace(t * m, x * c);
  return p;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(ErrorCode::PreconditionViolated, "zero polynomial has no leading monomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return best->first;
}

Rational Polynomial::leading_coefficient(const MonomialOrder& order) const {
  return terms_.at(leading_monomial(order));
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  const Rational lc = leading_coefficient(order);
  Polynomial p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, c / lc);
  return p;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (mag != 1 || m.is_one()) {
      os << koenig::to_string(mag);
      if (!m.is_one()) os << "*";
    }
    if (!m.is_one()) os << m.to_string(names);
    first = false;
  }
  return os.str();
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens)
    if (!contains(g)) gens_.push_back(std::move(g));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

namespace {

struct Reducer {
  const MonomialOrder& order;
  std::size_t budget;
  std::size_t& steps;

  Polynomial operator()(Polynomial p, const std::vector<Polynomial>& basis, const std::vector<Monomial>& lms,
                        std::size_t skip = SIZE_MAX) const {
    Polynomial r;
    while (!p.is_zero()) {
      const Monomial lm = p.leading_monomial(order);
      const Rational lc = p.coefficient(lm);
      std::size_t k = 0;
      for (; k < basis.size(); ++k)
        if (k != skip && lms[k].divides(lm)) break;
      if (k == basis.size()) {
        r.add_term(lm, lc);
        p.add_term(lm, -lc);
        continue;
      }
      if (budget != 0 && steps >= budget)
        throw Error(ErrorCode::BudgetExceeded,
                    "Groebner computation exceeded " + std::to_string(budget) + " reduction steps");
      ++steps;
      p -= basis[k].scaled(lc / basis[k].coefficient(lms[k]), lm.quotient(lms[k]));
    }
    return r;
  }
};

}  // namespace

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& order,
                  std::size_t* steps) {
  std::size_t local = 0;
  std::size_t& st = steps ? *steps : local;
  std::vector<Monomial> lms;
  std::vector<Polynomial> nonzero;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    nonzero.push_back(g);
    lms.push_back(g.leading_monomial(order));
  }
  return Reducer{order, 0, st}(p, nonzero, lms);
}

GroebnerResult buchberger(const std::vector<Polynomial>& gens, const MonomialOrderWitness& witness,
                          std::size_t budget) {
  const MonomialOrder order(witness);
  GroebnerResult out;
  Reducer red{order, budget, out.reductions};

  std::vector<Polynomial> g;
  std::vector<Monomial> lms;
  // Pending pairs keyed by (lcm degree, j, i) with i < j.
  std::set<std::tuple<std::uint32_t, std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add = [&](Polynomial p) {
    p = p.monic(order);
    const std::size_t j = g.size();
    g.push_back(std::move(p));
    lms.push_back(g.back().leading_monomial(order));
    for (std::size_t i = 0; i < j; ++i) {
      queue.emplace(Monomial::lcm(lms[i], lms[j]).degree(), j, i);
      pending.emplace(i, j);
    }
  };
  for (const auto& p : gens)
    if (!p.is_zero()) add(p);

  while (!queue.empty()) {
    const auto [deg, j, i] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    ++out.pairs_considered;
    if (lms[i].coprime(lms[j])) continue;
    const Monomial l = Monomial::lcm(lms[i], lms[j]);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j || !lms[k].divides(l)) continue;
      chain = !pending.count(std::minmax(i, k)) && !pending.count(std::minmax(j, k));
    }
    if (chain) continue;
    ++out.pairs_reduced;
    Polynomial s = g[i].scaled(Rational(1), l.quotient(lms[i])) - g[j].scaled(Rational(1), l.quotient(lms[j]));
    Polynomial r = red(std::move(s), g, lms);
    if (!r.is_zero()) add(std::move(r));
  }

  // Minimal basis, then interreduce tails.
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_lms;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool redundant = false;
    for (std::size_t q = 0; q < g.size() && !redundant; ++q) {
      if (q == k || !lms[q].divides(lms[k])) continue;
      redundant = lms[q] != lms[k] || q < k;
    }
    if (!redundant) {
      minimal.push_back(g[k]);
      minimal_lms.push_back(lms[k]);
    }
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Polynomial tail = minimal[k];
    const Rational lc = tail.coefficient(minimal_lms[k]);
    tail.add_term(minimal_lms[k], -lc);
    Polynomial p = red(std::move(tail), minimal, minimal_lms, k);
    p.add_term(minimal_lms[k], lc);
    minimal[k] = p.monic(order);
  }
  std::vector<std::size_t> idx(minimal.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return order.greater(minimal_lms[a], minimal_lms[b]); });
  for (auto k : idx) out.basis.push_back(std::move(minimal[k]));
  return out;
}

std::vector<Polynomial> to_polynomials(const IdealGenerators& gens) {
  std::vector<Polynomial> out;
  for (const auto& b : gens.binomials) out.push_back(Polynomial::from_binomial(b));
  return out;
}

MonomialOrderWitness rank_revlex_witness(const DistributiveLattice& l) {
  const auto rp = rank_profile(l);
  std::vector<VarId> ranking(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) ranking[i] = static_cast<VarId>(i);
  std::stable_sort(ranking.begin(), ranking.end(), [&](VarId a, VarId b) { return rp.rank[a] > rp.rank[b]; });
  return MonomialOrderWitness::degrevlex(std::move(ranking));
}

MonomialIdeal initial_ideal(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<Monomial> lms;
  for (const auto& p : basis)
    if (!p.is_zero()) lms.push_back(p.leading_monomial(order));
  return MonomialIdeal(std::move(lms));
}

namespace {

// Minimum number of variables meeting every support (a minimum transversal).
// Branches on the variable occurring in the most unhit supports: either it is
// taken, or it is excluded and every support left with one candidate forces
// that candidate.
class Transversal {
public:
  Transversal(std::vector<std::vector<VarId>> supports, std::size_t n)
      : supports_(std::move(supports)), state_(n, State::Free) {}

  std::size_t solve() {
    best_ = state_.size() + 1;
    recurse(0);
    return best_;
  }

private:
  enum class State : std::uint8_t { Free, Taken, Excluded };

  bool is_hit(const std::vector<VarId>& s) const {
    return std::any_of(s.begin(), s.end(), [&](VarId v) { return state_[v] == State::Taken; });
  }

  // Disjoint unhit supports each need their own variable.
  std::size_t lower_bound() const {
    std::vector<bool> used(state_.size(), false);
    std::size_t count = 0;
    for (const auto& s : supports_) {
      if (is_hit(s)) continue;
      bool clash = false;
      for (auto v : s)
        if (state_[v] == State::Free && used[v]) clash = true;
      if (clash) continue;
      for (auto v : s)
        if (state_[v] == State::Free) used[v] = true;
      ++count;
    }
    return count;
  }

  // Takes forced variables; false when some support has no candidate left.
  bool propagate(std::size_t& chosen, std::vector<VarId>& forced) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& s : supports_) {
        if (is_hit(s)) continue;
        std::size_t free = 0;
        VarId last = 0;
        for (auto v : s)
          if (state_[v] == State::Free) {
            ++free;
            last = v;
          }
        if (free == 0) return false;
        if (free == 1) {
          state_[last] = State::Taken;
          forced.push_back(last);
          ++chosen;
          changed = true;
        }
      }
    }
    return true;
  }

  void recurse(std::size_t chosen) {
    std::vector<VarId> forced;
    if (propagate(chosen, forced) && chosen + lower_bound() < best_) {
      std::vector<std::size_t> occurrences(state_.size(), 0);
      bool all_hit = true;
      for (const auto& s : supports_) {
        if (is_hit(s)) continue;
        all_hit = false;
        for (auto v : s)
          if (state_[v] == State::Free) ++occurrences[v];
      }
      if (all_hit) {
        best_ = chosen;
      } else {
        const auto v = static_cast<VarId>(std::max_element(occurrences.begin(), occurrences.end()) -
                                          occurrences.begin());
        state_[v] = State::Taken;
        recurse(chosen + 1);
        state_[v] = State::Excluded;
        recurse(chosen);
        state_[v] = State::Free;
      }
    }
    for (auto v : forced) state_[v] = State::Free;
  }

  std::vector<std::vector<VarId>> supports_;
  std::vector<State> state_;
  std::size_t best_ = 0;
};

}  // namespace

std::int64_t dimension_of_monomial_quotient(const MonomialIdeal& ideal, std::size_t num_vars) {
  std::vector<std::vector<VarId>> supports;
  for (const auto& g : ideal.minimal_generators()) {
    if (g.is_one()) return -1;
    auto s = g.support();
    for (auto v : s)
      if (v >= num_vars) throw Error(ErrorCode::PreconditionViolated, "generator uses a variable outside the ring");
    supports.push_back(std::move(s));
  }
  Transversal t(std::move(supports), num_vars);
  return static_cast<std::int64_t>(num_vars) - static_cast<std::int64_t>(t.solve());
}

HeightReport ideal_height(const std::vector<Polynomial>& gens, std::size_t num_vars,
                          const MonomialOrderWitness& witness, std::size_t budget) {
  const auto gb = buchberger(gens, witness, budget);
  const auto in = initial_ideal(gb.basis, MonomialOrder(witness));
  const auto dim = dimension_of_monomial_quotient(in, num_vars);
  HeightReport r;
  r.height = static_cast<std::size_t>(static_cast<std::int64_t>(num_vars) - dim);
  r.gb_size = gb.basis.size();
  r.steps = gb.reductions;
  return r;
}

HeightReport ideal_height(const IdealGenerators& gens, const MonomialOrderWitness& witness, std::size_t budget) {
  return ideal_height(to_polynomials(gens), gens.num_vars, witness, budget);
}

bool check_split_syzygy(const SplitSpec& s) {
  std::map<std::pair<std::int64_t, std::int64_t>, VarId> ids;
  auto x = [&](std::int64_t i, std::int64_t j) {
    auto key = s.transposed ? std::make_pair(j, i) : std::make_pair(i, j);
    auto [it, fresh] = ids.emplace(key, static_cast<VarId>(ids.size()));
    return Polynomial::term(Monomial::variable(it->second));
  };
  // 2-minor of the interval with lower-left (i,j) and upper-right (k,l).
  auto f = [&](std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l) {
    return x(i, j) * x(k, l) - x(k, j) * x(i, l);
  };
  const Polynomial f_cb = f(s.i2, s.j1, s.i3, s.j2);
  const Polynomial f_ab = f(s.i1, s.j1, s.i3, s.j2);
  const Polynomial f_ad = f(s.i1, s.j1, s.i2, s.j2);
  const Polynomial sum = x(s.i1, s.j2) * f_cb - x(s.i2, s.j2) * f_ab + x(s.i3, s.j2) * f_ad;
  return sum.is_zero();
}

bool is_zerodivisor_after(const std::vector<Monomial>& ms, const Monomial& m) {
  if (ms.empty()) return false;
  const MonomialIdeal ideal(ms);
  std::uint32_t max_deg = 0;
  std::vector<VarId> vars;
  for (const auto& u : ms) {
    max_deg = std::max(max_deg, u.degree());
    for (auto v : u.support()) vars.push_back(v);
  }
  for (auto v : m.support()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  // Every exponent vector over `vars` of total degree <= max_deg.
  std::vector<Monomial::Entry> current;
  std::function<bool(std::size_t, std::uint32_t)> search = [&](std::size_t k, std::uint32_t left) {
    if (k == vars.size()) {
      const Monomial g(current);
      return !ideal.contains(g) && ideal.contains(g * m);
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      if (e > 0) current.emplace_back(vars[k], e);
      const bool found = search(k + 1, left - e);
      if (e > 0) current.pop_back();
      if (found) return true;
    }
    return false;
  };
  return search(0, max_deg);
}

bool is_regular_sequence_oracle(const std::vector<Monomial>& ms) {
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (ms[k].is_one()) throw Error(ErrorCode::UnitMonomial, "the constant monomial cannot be part of a regular sequence");
    const std::vector<Monomial> before(ms.begin(), ms.begin() + static_cast<std::ptrdiff_t>(k));
    if (is_zerodivisor_after(before, ms[k])) return false;
  }
  return true;
}

}  // namespace koenig
