#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace koenig {

using VarId = std::uint32_t;

/// Sparse exponent vector: sorted (variable, exponent) pairs, no zero exponents.
class Monomial {
public:
  using Entry = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  /// Entries may be unsorted and repeat a variable; exponents add up.
  Monomial(std::initializer_list<Entry> entries);
  explicit Monomial(std::vector<Entry> entries);

  static Monomial variable(VarId v, std::uint32_t exp = 1);
  static Monomial product(VarId a, VarId b);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_one() const noexcept { return entries_.empty(); }
  std::uint32_t degree() const noexcept;
  std::uint32_t exponent(VarId v) const noexcept;
  std::vector<VarId> support() const;

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires divisor | *this.
  Monomial quotient(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  /// Structural order (not a monomial order); for containers only.
  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const noexcept { return entries_ < o.entries_; }

  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  std::vector<Entry> entries_;
};

}  // namespace koenig
