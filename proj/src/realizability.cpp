#include "koenig/realizability.hpp"

#include "koenig/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace koenig {

namespace {

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Scales a row so its first nonzero coefficient has magnitude one; returns
// false for the zero row.
bool normalize(std::vector<Rational>& c) {
  auto it = std::find_if(c.begin(), c.end(), [](const Rational& q) { return q != 0; });
  if (it == c.end()) return false;
  const Rational s = abs(*it);
  for (auto& q : c) q /= s;
  return true;
}

struct Bound {
  bool present = false;
  bool strict = false;
  Rational value;
};

// Picks a value inside (lo, hi) with the given strictness, preferring 0 and
// then integers near the bounds.
Rational choose_value(const Bound& lo, const Bound& hi) {
  auto fits = [&](const Rational& x) {
    if (lo.present && (lo.strict ? !(x > lo.value) : !(x >= lo.value))) return false;
    if (hi.present && (hi.strict ? !(x < hi.value) : !(x <= hi.value))) return false;
    return true;
  };
  if (fits(Rational(0))) return Rational(0);
  if (lo.present) {
    Rational cand(lo.strict ? Integer(floor_of(lo.value) + 1) : ceil_of(lo.value));
    if (fits(cand)) return cand;
  }
  if (hi.present) {
    Rational cand(hi.strict ? Integer(ceil_of(hi.value) - 1) : floor_of(hi.value));
    if (fits(cand)) return cand;
  }
  if (lo.present && hi.present) {
    Rational mid = (lo.value + hi.value) / 2;
    mid.canonicalize();
    if (fits(mid)) return mid;
  }
  throw Error(ErrorCode::PreconditionViolated, "Fourier-Motzkin back-substitution found an empty interval");
}

}  // namespace

std::optional<std::vector<Rational>> solve_homogeneous_system(const std::vector<LinearRow>& rows,
                                                              std::size_t num_vars,
                                                              std::size_t row_cap) {
  // Deduplicated working set: normalized coefficients -> strict flag.
  std::map<std::vector<Rational>, bool> work;
  auto insert = [&](std::vector<Rational> c, bool strict) -> bool {
    if (!normalize(c)) return !strict;  // 0 > 0 is infeasible, 0 >= 0 is vacuous
    auto [it, fresh] = work.emplace(std::move(c), strict);
    if (!fresh) it->second = it->second || strict;
    return true;
  };
  for (const auto& r : rows) {
    std::vector<Rational> c = r.coeffs;
    c.resize(num_vars, Rational(0));
    if (!insert(std::move(c), r.strict)) return std::nullopt;
  }

  struct Step {
    std::size_t var;
    std::vector<LinearRow> rows;  // rows mentioning var at elimination time
  };
  std::vector<Step> steps;
  std::vector<bool> eliminated(num_vars, false);

  for (std::size_t round = 0; round < num_vars; ++round) {
    // Variable with the smallest growth p*n - p - n.
    std::size_t best_var = num_vars;
    long long best_cost = 0;
    for (std::size_t v = 0; v < num_vars; ++v) {
      if (eliminated[v]) continue;
      long long p = 0, n = 0;
      for (const auto& [c, s] : work) {
        if (c[v] > 0) ++p;
        if (c[v] < 0) ++n;
      }
      const long long cost = p * n - p - n;
      if (best_var == num_vars || cost < best_cost) {
        best_var = v;
        best_cost = cost;
      }
    }
    const std::size_t v = best_var;
    eliminated[v] = true;
    Step step{v, {}};
    std::vector<std::pair<std::vector<Rational>, bool>> pos, neg;
    std::map<std::vector<Rational>, bool> rest;
    for (auto& [c, s] : work) {
      if (c[v] > 0)
        pos.emplace_back(c, s);
      else if (c[v] < 0)
        neg.emplace_back(c, s);
      else
        rest.emplace(c, s);
      if (c[v] != 0) step.rows.push_back({c, s});
    }
    work = std::move(rest);
    for (const auto& [pc, ps] : pos) {
      for (const auto& [nc, ns] : neg) {
        // pc[v] > 0, nc[v] < 0: combine to cancel v.
        std::vector<Rational> c(num_vars);
        const Rational a = pc[v], b = -nc[v];
        for (std::size_t k = 0; k < num_vars; ++k) c[k] = b * pc[k] + a * nc[k];
        c[v] = 0;
        if (!insert(std::move(c), ps || ns)) return std::nullopt;
        if (work.size() > row_cap)
          throw Error(ErrorCode::BudgetExceeded, "Fourier-Motzkin system exceeded " + std::to_string(row_cap) + " rows");
      }
    }
    steps.push_back(std::move(step));
  }
  // All variables gone; any surviving row is a zero row and was filtered.

  std::vector<Rational> w(num_vars, Rational(0));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const std::size_t v = it->var;
    Bound lo, hi;
    for (const auto& r : it->rows) {
      Rational rest = 0;
      for (std::size_t k = 0; k < num_vars; ++k)
        if (k != v) rest += r.coeffs[k] * w[k];
      const Rational bound = -rest / r.coeffs[v];
      if (r.coeffs[v] > 0) {
        if (!lo.present || bound > lo.value || (bound == lo.value && r.strict)) lo = {true, r.strict, bound};
      } else {
        if (!hi.present || bound < hi.value || (bound == hi.value && r.strict)) hi = {true, r.strict, bound};
      }
    }
    w[v] = choose_value(lo, hi);
  }
  return w;
}

std::optional<MonomialOrderWitness> marking_realizable(const IdealGenerators& gens,
                                                       const std::vector<MarkedGenerator>& marking) {
  const std::size_t n = gens.num_vars;
  MonomialOrderWitness witness;
  witness.tiebreak.resize(n);
  std::iota(witness.tiebreak.begin(), witness.tiebreak.end(), VarId{0});
  witness.flavor = OrderFlavor::Weight;

  // Rows over the variables actually touched.
  std::vector<VarId> touched;
  for (const auto& m : marking) {
    const auto& b = gens.binomials.at(m.index);
    for (auto v : b.first.support()) touched.push_back(v);
    for (auto v : b.second.support()) touched.push_back(v);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  std::vector<std::size_t> local(n, 0);
  for (std::size_t i = 0; i < touched.size(); ++i) local[touched[i]] = i;

  std::vector<LinearRow> rows;
  for (const auto& m : marking) {
    const auto& b = gens.binomials.at(m.index);
    LinearRow row{std::vector<Rational>(touched.size(), Rational(0)), true};
    for (const auto& [v, x] : b.term(m.side).entries()) row.coeffs[local[v]] += x;
    for (const auto& [v, x] : b.term(other(m.side)).entries()) row.coeffs[local[v]] -= x;
    rows.push_back(std::move(row));
  }

  // Indicator of the marked variables works whenever no partner term reuses them.
  {
    std::vector<Rational> guess(touched.size(), Rational(0));
    for (const auto& m : marking)
      for (auto v : gens.binomials[m.index].term(m.side).support()) guess[local[v]] = 1;
    bool ok = true;
    for (const auto& r : rows) {
      Rational s = 0;
      for (std::size_t k = 0; k < r.coeffs.size(); ++k) s += r.coeffs[k] * guess[k];
      if (!(s > 0)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      witness.weights.assign(n, Rational(0));
      for (std::size_t i = 0; i < touched.size(); ++i) witness.weights[touched[i]] = guess[i];
      return witness;
    }
  }

  auto solution = solve_homogeneous_system(rows, touched.size());
  if (!solution) return std::nullopt;
  // Quadratic binomials are homogeneous, so a constant shift keeps every
  // comparison and makes the weights non-negative.
  Rational lowest = 0;
  for (const auto& q : *solution) lowest = std::min(lowest, q);
  witness.weights.assign(n, Rational(0));
  for (std::size_t i = 0; i < touched.size(); ++i) witness.weights[touched[i]] = (*solution)[i] - lowest;
  return witness;
}

}  // namespace koenig
