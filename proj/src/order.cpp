#include "koenig/order.hpp"

#include "koenig/error.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace koenig {

std::string to_string(OrderFlavor f) {
  switch (f) {
    case OrderFlavor::Lex: return "lex";
    case OrderFlavor::Revlex: return "revlex";
    case OrderFlavor::Weight: return "weight";
  }
  return "weight";
}

OrderFlavor parse_order_flavor(const std::string& s) {
  if (s == "lex") return OrderFlavor::Lex;
  if (s == "revlex") return OrderFlavor::Revlex;
  if (s == "weight") return OrderFlavor::Weight;
  throw Error(ErrorCode::ParseError, "unknown order flavor '" + s + "'");
}

MonomialOrderWitness MonomialOrderWitness::lex(std::vector<VarId> ranking) {
  MonomialOrderWitness w;
  w.weights.assign(ranking.size(), Rational(0));
  w.tiebreak = std::move(ranking);
  w.flavor = OrderFlavor::Lex;
  return w;
}

MonomialOrderWitness MonomialOrderWitness::degrevlex(std::vector<VarId> ranking) {
  MonomialOrderWitness w;
  w.weights.assign(ranking.size(), Rational(1));
  w.tiebreak = std::move(ranking);
  w.flavor = OrderFlavor::Revlex;
  return w;
}

bool MonomialOrderWitness::tiebreak_is_permutation() const {
  if (tiebreak.size() != weights.size()) return false;
  std::vector<bool> seen(tiebreak.size(), false);
  for (auto v : tiebreak) {
    if (v >= seen.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool MonomialOrderWitness::weights_nonnegative() const {
  return std::all_of(weights.begin(), weights.end(), [](const Rational& q) { return q >= 0; });
}

Ordering compare(const MonomialOrderWitness& w, const Monomial& m1, const Monomial& m2) {
  if (m1 == m2) throw Error(ErrorCode::EqualMonomials, "cannot order " + m1.to_string() + " against itself");
  return MonomialOrder(w).cmp(m1, m2) > 0 ? Ordering::Greater : Ordering::Less;
}

MonomialOrder::MonomialOrder(const MonomialOrderWitness& w) : witness_(w) {
  Integer common = 1;
  for (const auto& q : w.weights) {
    Integer den = q.get_den();
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), den.get_mpz_t());
  }
  all_zero_ = true;
  small_ = true;
  for (const auto& q : w.weights) {
    Rational scaled = q * Rational(common);
    Integer v = scaled.get_num();
    if (v != 0) all_zero_ = false;
    if (!v.fits_sint_p() || abs(v) > Integer(1) << 24) small_ = false;
    int_weights_.push_back(v);
  }
  if (small_)
    for (const auto& v : int_weights_) small_weights_.push_back(v.get_si());
  std::size_t n = w.weights.size();
  for (auto v : w.tiebreak) n = std::max<std::size_t>(n, v + 1);
  position_.assign(n, SIZE_MAX);
  for (std::size_t i = 0; i < w.tiebreak.size(); ++i)
    if (w.tiebreak[i] < n) position_[w.tiebreak[i]] = i;
}

Integer MonomialOrder::weight(const Monomial& m) const {
  Integer s = 0;
  for (const auto& [v, x] : m.entries())
    if (v < int_weights_.size()) s += int_weights_[v] * x;
  return s;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  if (!all_zero_) {
    if (small_) {
      long long wa = 0, wb = 0;
      for (const auto& [v, x] : a.entries())
        if (v < small_weights_.size()) wa += small_weights_[v] * x;
      for (const auto& [v, x] : b.entries())
        if (v < small_weights_.size()) wb += small_weights_[v] * x;
      if (wa != wb) return wa > wb ? 1 : -1;
    } else {
      const Integer wa = weight(a), wb = weight(b);
      if (wa != wb) return wa > wb ? 1 : -1;
    }
  }
  if (witness_.flavor == OrderFlavor::Revlex) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
  }
  // Variables outside the tiebreak rank below it, in index order.
  auto pos = [&](VarId v) -> std::size_t {
    if (v < position_.size() && position_[v] != SIZE_MAX) return position_[v];
    return witness_.tiebreak.size() + v;
  };
  const bool revlex = witness_.flavor == OrderFlavor::Revlex;
  std::size_t best_pos = 0;
  int best = 0;
  bool found = false;
  auto consider = [&](VarId v, std::uint32_t ea, std::uint32_t eb) {
    if (ea == eb) return;
    const std::size_t p = pos(v);
    if (!found || (revlex ? p > best_pos : p < best_pos)) {
      found = true;
      best_pos = p;
      best = revlex ? (ea < eb ? 1 : -1) : (ea > eb ? 1 : -1);
    }
  };
  auto i = a.entries().begin();
  auto j = b.entries().begin();
  while (i != a.entries().end() || j != b.entries().end()) {
    if (j == b.entries().end() || (i != a.entries().end() && i->first < j->first)) {
      consider(i->first, i->second, 0);
      ++i;
    } else if (i == a.entries().end() || j->first < i->first) {
      consider(j->first, 0, j->second);
      ++j;
    } else {
      consider(i->first, i->second, j->second);
      ++i;
      ++j;
    }
  }
  return best;
}

}  // namespace koenig
