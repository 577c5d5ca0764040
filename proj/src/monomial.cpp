#include "koenig/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace koenig {

namespace {

std::vector<Monomial::Entry> normalize(std::vector<Monomial::Entry> e) {
  std::sort(e.begin(), e.end());
  std::vector<Monomial::Entry> out;
  for (const auto& [v, x] : e) {
    if (x == 0) continue;
    if (!out.empty() && out.back().first == v)
      out.back().second += x;
    else
      out.emplace_back(v, x);
  }
  return out;
}

}  // namespace

Monomial::Monomial(std::initializer_list<Entry> entries) : entries_(normalize(entries)) {}
Monomial::Monomial(std::vector<Entry> entries) : entries_(normalize(std::move(entries))) {}

Monomial Monomial::variable(VarId v, std::uint32_t exp) { return Monomial{{v, exp}}; }
Monomial Monomial::product(VarId a, VarId b) { return Monomial{{a, 1}, {b, 1}}; }

std::uint32_t Monomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

std::uint32_t Monomial::exponent(VarId v) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{v, 0});
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

std::vector<VarId> Monomial::support() const {
  std::vector<VarId> s;
  s.reserve(entries_.size());
  for (const auto& e : entries_) s.push_back(e.first);
  return s;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  auto it = other.entries_.begin();
  for (const auto& [v, x] : entries_) {
    while (it != other.entries_.end() && it->first < v) ++it;
    if (it == other.entries_.end() || it->first != v || it->second < x) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first == b->first) return false;
    if (a->first < b->first)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  Monomial out;
  auto j = divisor.entries_.begin();
  for (const auto& [v, x] : entries_) {
    std::uint32_t y = 0;
    if (j != divisor.entries_.end() && j->first == v) y = (j++)->second;
    if (x > y) out.entries_.emplace_back(v, x - y);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      out.entries_.emplace_back(i->first, std::min(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return out;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [v, x] : entries_) {
    if (!s.empty()) s += "*";
    s += "x";
    s += v < names.size() ? names[v] : std::to_string(v);
    if (x > 1) s += "^" + std::to_string(x);
  }
  return s;
}

}  // namespace koenig
