#pragma once

#include "koenig/ideal.hpp"
#include "koenig/order.hpp"
#include "koenig/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace koenig {

/// coeffs . w > 0 when strict, coeffs . w >= 0 otherwise.
struct LinearRow {
  std::vector<Rational> coeffs;
  bool strict = true;
};

/// Fourier-Motzkin elimination over exact rationals for a homogeneous system
/// of strict and non-strict inequalities. Returns a solution when one exists.
/// Throws BudgetExceeded if the intermediate system grows past `row_cap` rows.
std::optional<std::vector<Rational>> solve_homogeneous_system(const std::vector<LinearRow>& rows,
                                                              std::size_t num_vars,
                                                              std::size_t row_cap = 200000);

struct MarkedGenerator {
  std::size_t index = 0;
  Side side = Side::First;
  bool operator==(const MarkedGenerator&) const = default;
};

/// Weight vector w >= 0 with w . (marked - other) > 0 for every marked
/// generator, or nothing if the strict system is infeasible. The returned
/// witness uses the identity tiebreak and flavor Weight.
std::optional<MonomialOrderWitness> marking_realizable(const IdealGenerators& gens,
                                                       const std::vector<MarkedGenerator>& marking);

}  // namespace koenig
