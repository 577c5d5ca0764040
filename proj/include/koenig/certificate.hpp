#pragma once

#include "koenig/ideal.hpp"
#include "koenig/order.hpp"
#include "koenig/realizability.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace koenig {

/// Witness that an ideal is of Koenig type: `claimed_height` generators from
/// the generating list, which term of each is initial, and an order making
/// exactly those terms initial.
struct KoenigCertificate {
  std::vector<std::size_t> generator_ids;
  std::vector<Side> marking;
  MonomialOrderWitness witness;
  std::size_t claimed_height = 0;

  std::size_t size() const noexcept { return generator_ids.size(); }
  std::vector<MarkedGenerator> marked() const;
  std::vector<Monomial> initial_monomials(const IdealGenerators& gens) const;
};

/// Certificate for height 0 over `num_vars` variables.
KoenigCertificate empty_certificate(std::size_t num_vars);

enum class VerifyFailure {
  None,
  HeightMismatch,
  IndexOutOfRange,
  RepeatedGenerator,
  MarkingSizeMismatch,
  NotCoprime,
  MalformedWitness,
  WitnessDisagrees,
};
std::string to_string(VerifyFailure f);

struct VerificationResult {
  bool ok = false;
  VerifyFailure failure = VerifyFailure::None;
  std::string detail;
  /// The generating list is linearly independent, so any subset of it is part
  /// of a minimal generating system.
  bool minimal_generators = false;

  explicit operator bool() const noexcept { return ok; }
};

VerificationResult verify_certificate(const IdealGenerators& gens, const KoenigCertificate& cert,
                                      std::size_t expected_height);

/// Weights under which every marked term of `cert` is strictly heavier than
/// its partner, so no tiebreak is needed. Reuses the certificate's weights
/// when they already do this. Throws PreconditionViolated if the marking is
/// not realizable.
std::vector<Rational> strictly_realizing_weights(const IdealGenerators& gens, const KoenigCertificate& cert);

/// Shifts weights so the smallest is zero (valid for homogeneous generators).
void shift_nonnegative(std::vector<Rational>& weights);

struct SearchOptions {
  /// Variables no marked monomial may use.
  std::vector<VarId> forbidden;
  /// Abort with BudgetExceeded after this many nodes (0 = unlimited).
  std::size_t node_budget = 0;
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t realizability_checks = 0;
};

/// Exhaustive search for a certificate of size h. Branches on the smallest
/// undecided variable: it is either covered by one marked term (of an unused
/// generator, with its other variables still free) or left uncovered. Pruned
/// by the number of free variables and by realizability of the partial
/// marking. Deterministic; returns the first certificate found.
std::optional<KoenigCertificate> search_certificate(const IdealGenerators& gens, std::size_t h,
                                                    const SearchOptions& options = {},
                                                    SearchStats* stats = nullptr);

}  // namespace koenig
