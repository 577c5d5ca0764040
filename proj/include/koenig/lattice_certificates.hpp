#pragma once

#include "koenig/certificate.hpp"
#include "koenig/ideal.hpp"
#include "koenig/lattice.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace koenig {

/// |L| - (d + 1).
std::size_t join_meet_height(const DistributiveLattice& l);

struct BlockOrientation {
  std::size_t block = 0;
  bool uses_bottom = false;  // marked terms touch the lower apex
  bool uses_top = false;
  std::size_t size = 0;      // generators contributed
};

struct LatticeCertification {
  IdealGenerators generators;
  std::size_t height = 0;
  std::optional<KoenigCertificate> certificate;
  std::vector<BlockOrientation> orientation;
  std::size_t search_nodes = 0;
};

/// Builds a certificate block by block: each apex block gets an exhaustive
/// certificate search, optionally forbidden from using its lower and/or upper
/// apex, and a backtracking pass picks per-block certificates so that no
/// shared apex is used by two blocks. Weights are aligned at shared apexes.
LatticeCertification certify_lattice(const DistributiveLattice& l, std::size_t node_budget = 0);

/// Certificate search over the whole generating list, without the block
/// structure.
LatticeCertification search_lattice_certificate(const DistributiveLattice& l, std::size_t node_budget = 0);

enum class NightingaleVariant { Plain, Star, DualPlain, DualStar };
std::string to_string(NightingaleVariant v);
NightingaleVariant parse_nightingale_variant(const std::string& s);

/// Adds two elements c, e to L next to the generator at `cert_position` of
/// `cert` and returns the new lattice with a certificate for it.
///
/// Top variants need rank(a) = rank(b) = d - 1 and a v b = 1_L for the pair
/// (a, b) of that generator; they add e above 1_L and c with b < c < e. Dual
/// variants mirror this at 0_L. Plain expects the marked term x_a x_b, Star
/// the term x_{a^b} x_{avb}. By default b is the pair element with the larger
/// index; `swap_pair` exchanges the roles. Throws PreconditionViolated naming
/// the failed clause.
std::pair<DistributiveLattice, KoenigCertificate> extend_nightingale(const DistributiveLattice& l,
                                                                     const KoenigCertificate& cert,
                                                                     std::size_t cert_position,
                                                                     NightingaleVariant variant,
                                                                     bool swap_pair = false);

/// Rewrites a certificate along a lattice isomorphism or anti-isomorphism
/// given as an element map `phi` from `from` to `to`.
KoenigCertificate transport_certificate(const IdealGenerators& from, const IdealGenerators& to,
                                        const std::vector<std::size_t>& phi, const KoenigCertificate& cert);

}  // namespace koenig
