#include "koenig/lattice_certificates.hpp"

#include "koenig/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace koenig {

namespace {

using PairIndex = std::map<std::pair<VarId, VarId>, std::size_t>;

// Generators keyed by the (sorted) variables of their first term.
PairIndex index_by_pair(const IdealGenerators& gens) {
  PairIndex idx;
  for (std::size_t k = 0; k < gens.binomials.size(); ++k) {
    auto s = gens.binomials[k].first.support();
    idx.emplace(std::make_pair(s.front(), s.back()), k);
  }
  return idx;
}

std::size_t lookup(const PairIndex& idx, VarId a, VarId b) {
  auto it = idx.find(std::minmax(a, b));
  if (it == idx.end()) throw Error(ErrorCode::PreconditionViolated, "pair is not a generator of the target lattice");
  return it->second;
}

MonomialOrderWitness weight_witness(std::vector<Rational> weights) {
  MonomialOrderWitness w;
  shift_nonnegative(weights);
  w.tiebreak.resize(weights.size());
  std::iota(w.tiebreak.begin(), w.tiebreak.end(), VarId{0});
  w.weights = std::move(weights);
  w.flavor = OrderFlavor::Weight;
  return w;
}

}  // namespace

std::size_t join_meet_height(const DistributiveLattice& l) { return l.size() - (l.d() + 1); }

LatticeCertification search_lattice_certificate(const DistributiveLattice& l, std::size_t node_budget) {
  LatticeCertification out;
  out.generators = join_meet_generators(l);
  out.height = join_meet_height(l);
  SearchOptions opt;
  opt.node_budget = node_budget;
  SearchStats stats;
  out.certificate = search_certificate(out.generators, out.height, opt, &stats);
  out.search_nodes = stats.nodes;
  return out;
}

LatticeCertification certify_lattice(const DistributiveLattice& l, std::size_t node_budget) {
  LatticeCertification out;
  out.generators = join_meet_generators(l);
  out.height = join_meet_height(l);
  if (out.height == 0) {
    out.certificate = empty_certificate(l.size());
    out.certificate->claimed_height = 0;
    return out;
  }
  const auto dec = apex_decomposition(l);
  const auto global_pairs = index_by_pair(out.generators);

  struct BlockData {
    IdealGenerators gens;
    std::size_t height = 0;
    // Indexed by (forbid bottom) * 2 + (forbid top); computed lazily.
    std::array<std::optional<std::optional<KoenigCertificate>>, 4> cache;
  };
  std::vector<BlockData> blocks(dec.blocks.size());
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    blocks[i].gens = join_meet_generators(dec.blocks[i].lattice);
    blocks[i].height = join_meet_height(dec.blocks[i].lattice);
  }

  auto block_cert = [&](std::size_t i, bool forbid_bottom, bool forbid_top) -> const std::optional<KoenigCertificate>& {
    auto& slot = blocks[i].cache[(forbid_bottom ? 2 : 0) + (forbid_top ? 1 : 0)];
    if (!slot) {
      SearchOptions opt;
      opt.node_budget = node_budget;
      const auto& bl = dec.blocks[i].lattice;
      if (forbid_bottom) opt.forbidden.push_back(static_cast<VarId>(bl.bottom()));
      if (forbid_top) opt.forbidden.push_back(static_cast<VarId>(bl.top()));
      SearchStats stats;
      slot = search_certificate(blocks[i].gens, blocks[i].height, opt, &stats);
      out.search_nodes += stats.nodes;
    }
    return *slot;
  };
  auto uses = [&](std::size_t i, const KoenigCertificate& c, std::size_t var) {
    for (const auto& m : c.initial_monomials(blocks[i].gens))
      if (m.exponent(static_cast<VarId>(var)) > 0) return true;
    return false;
  };

  // Per block, whether its certificate may touch the lower apex.
  std::vector<const KoenigCertificate*> chosen(dec.blocks.size(), nullptr);
  auto solve = [&](auto&& self, std::size_t i, bool bottom_taken) -> bool {
    if (i == dec.blocks.size()) return true;
    const auto& bl = dec.blocks[i].lattice;
    for (bool forbid_top : {false, true}) {
      const auto& c = block_cert(i, bottom_taken, forbid_top);
      if (!c) continue;
      const bool top_used = uses(i, *c, bl.top());
      if (forbid_top && top_used) continue;
      chosen[i] = &*c;
      if (self(self, i + 1, top_used)) return true;
      if (!top_used) break;  // forbidding the top cannot help
    }
    chosen[i] = nullptr;
    return false;
  };
  if (!solve(solve, 0, false)) return out;

  KoenigCertificate cert;
  std::vector<Rational> weights(l.size(), Rational(0));
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const auto& block = dec.blocks[i];
    const auto& c = *chosen[i];
    const auto local = strictly_realizing_weights(blocks[i].gens, c);
    // Align at the shared lower apex, which the previous block already set.
    const Rational shift = i == 0 ? Rational(0) : weights[block.to_parent[block.lattice.bottom()]] - local[block.lattice.bottom()];
    for (std::size_t e = 0; e < block.lattice.size(); ++e) weights[block.to_parent[e]] = local[e] + shift;
    for (const auto& m : c.marked()) {
      auto s = blocks[i].gens.binomials[m.index].first.support();
      cert.generator_ids.push_back(lookup(global_pairs, static_cast<VarId>(block.to_parent[s.front()]),
                                          static_cast<VarId>(block.to_parent[s.back()])));
      cert.marking.push_back(m.side);
    }
    out.orientation.push_back({i, uses(i, c, block.lattice.bottom()), uses(i, c, block.lattice.top()), c.size()});
  }
  cert.witness = weight_witness(std::move(weights));
  cert.claimed_height = out.height;
  const auto check = verify_certificate(out.generators, cert, out.height);
  if (!check)
    throw Error(ErrorCode::PreconditionViolated, "assembled block certificate failed verification: " + check.detail);
  out.certificate = std::move(cert);
  return out;
}

std::string to_string(NightingaleVariant v) {
  switch (v) {
    case NightingaleVariant::Plain: return "plain";
    case NightingaleVariant::Star: return "star";
    case NightingaleVariant::DualPlain: return "dual_plain";
    case NightingaleVariant::DualStar: return "dual_star";
  }
  return "plain";
}

NightingaleVariant parse_nightingale_variant(const std::string& s) {
  if (s == "plain") return NightingaleVariant::Plain;
  if (s == "star") return NightingaleVariant::Star;
  if (s == "dual_plain") return NightingaleVariant::DualPlain;
  if (s == "dual_star") return NightingaleVariant::DualStar;
  throw Error(ErrorCode::ParseError, "unknown extension variant '" + s + "'");
}

KoenigCertificate transport_certificate(const IdealGenerators& from, const IdealGenerators& to,
                                        const std::vector<std::size_t>& phi, const KoenigCertificate& cert) {
  const auto pairs = index_by_pair(to);
  KoenigCertificate out;
  for (const auto& m : cert.marked()) {
    auto s = from.binomials.at(m.index).first.support();
    out.generator_ids.push_back(lookup(pairs, static_cast<VarId>(phi[s.front()]), static_cast<VarId>(phi[s.back()])));
    out.marking.push_back(m.side);
  }
  out.witness.flavor = cert.witness.flavor;
  out.witness.weights.assign(to.num_vars, Rational(0));
  for (std::size_t v = 0; v < cert.witness.weights.size(); ++v) out.witness.weights[phi[v]] = cert.witness.weights[v];
  for (auto v : cert.witness.tiebreak) out.witness.tiebreak.push_back(static_cast<VarId>(phi[v]));
  // Variables of `to` outside the image rank last.
  std::vector<bool> seen(to.num_vars, false);
  for (auto v : out.witness.tiebreak) seen[v] = true;
  for (std::size_t v = 0; v < to.num_vars; ++v)
    if (!seen[v]) out.witness.tiebreak.push_back(static_cast<VarId>(v));
  out.claimed_height = cert.claimed_height;
  return out;
}

namespace {

std::pair<DistributiveLattice, KoenigCertificate> extend_at_top(const DistributiveLattice& l,
                                                                const KoenigCertificate& cert,
                                                                std::size_t cert_position, bool star, bool swap_pair) {
  const auto gens = join_meet_generators(l);
  const auto h = join_meet_height(l);
  if (cert_position >= cert.size())
    throw Error(ErrorCode::PreconditionViolated, "certificate position out of range");
  if (auto v = verify_certificate(gens, cert, h); !v)
    throw Error(ErrorCode::PreconditionViolated, "input certificate does not verify: " + v.detail);

  const auto& f = gens.binomials[cert.generator_ids[cert_position]];
  auto pair = f.first.support();
  std::size_t a1 = pair.front(), b1 = pair.back();
  if (swap_pair) std::swap(a1, b1);
  const auto rp = rank_profile(l);
  if (rp.rank[a1] != l.d() - 1 || rp.rank[b1] != l.d() - 1)
    throw Error(ErrorCode::PreconditionViolated, "clause rank(a) = rank(b) = d - 1 fails for " + f.tag);
  if (l.join(a1, b1) != l.top())
    throw Error(ErrorCode::PreconditionViolated, "clause a v b = 1_L fails for " + f.tag);
  const Side marked = cert.marking[cert_position];
  if (marked != (star ? Side::Second : Side::First))
    throw Error(ErrorCode::PreconditionViolated,
                std::string("clause initial term = ") + (star ? "x_{a^b} x_{avb}" : "x_a x_b") + " fails for " + f.tag);
  const std::size_t m1 = l.meet(a1, b1);
  const std::size_t top = l.top();

  // New poset element z above everything in b1, so J(P + z) = L + {c, e}.
  Poset p = l.poset();
  std::string name = "z";
  for (std::size_t k = 1; std::find(p.labels().begin(), p.labels().end(), name) != p.labels().end(); ++k)
    name = "z" + std::to_string(k);
  const std::size_t z = p.add_element(name, l.element(b1).members);
  DistributiveLattice lp(std::move(p));
  std::vector<std::size_t> phi(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) phi[i] = *lp.index_of(l.element(i).members);
  const std::size_t c = *lp.index_of(l.element(b1).members | (ElementMask{1} << z));
  const std::size_t e = lp.top();

  const auto gens_p = join_meet_generators(lp);
  const auto pairs = index_by_pair(gens_p);
  const auto old_w = strictly_realizing_weights(gens, cert);

  KoenigCertificate out;
  for (std::size_t k = 0; k < cert.size(); ++k) {
    if (k == cert_position) continue;
    auto s = gens.binomials[cert.generator_ids[k]].first.support();
    out.generator_ids.push_back(
        lookup(pairs, static_cast<VarId>(phi[s.front()]), static_cast<VarId>(phi[s.back()])));
    out.marking.push_back(cert.marking[k]);
  }
  // f' = f_{a1,c} and f'' = -f_{1_L,c}.
  out.generator_ids.push_back(lookup(pairs, static_cast<VarId>(phi[a1]), static_cast<VarId>(c)));
  out.marking.push_back(star ? Side::Second : Side::First);
  out.generator_ids.push_back(lookup(pairs, static_cast<VarId>(phi[top]), static_cast<VarId>(c)));
  out.marking.push_back(star ? Side::First : Side::Second);

  // t = w(c) - w(e) must lie strictly between these two values.
  const Rational alpha = old_w[m1] - old_w[a1];
  const Rational beta = old_w[b1] - old_w[top];
  Rational t = (alpha + beta) / 2;
  t.canonicalize();
  std::vector<Rational> w(lp.size(), Rational(0));
  for (std::size_t i = 0; i < l.size(); ++i) w[phi[i]] = old_w[i];
  w[e] = old_w[top];
  w[c] = w[e] + t;
  out.witness = weight_witness(std::move(w));
  out.claimed_height = h + 1;
  if (auto v = verify_certificate(gens_p, out, join_meet_height(lp)); !v)
    throw Error(ErrorCode::PreconditionViolated, "extended certificate failed verification: " + v.detail);
  return {std::move(lp), std::move(out)};
}

// Element map to the dual lattice J(P^op): ideal I -> complement of I.
std::vector<std::size_t> dual_map(const DistributiveLattice& l, const DistributiveLattice& ld) {
  std::vector<std::size_t> phi(l.size());
  const ElementMask all = l.poset().all_elements();
  for (std::size_t i = 0; i < l.size(); ++i) phi[i] = *ld.index_of(all & ~l.element(i).members);
  return phi;
}

}  // namespace

std::pair<DistributiveLattice, KoenigCertificate> extend_nightingale(const DistributiveLattice& l,
                                                                     const KoenigCertificate& cert,
                                                                     std::size_t cert_position,
                                                                     NightingaleVariant variant, bool swap_pair) {
  switch (variant) {
    case NightingaleVariant::Plain: return extend_at_top(l, cert, cert_position, false, swap_pair);
    case NightingaleVariant::Star: return extend_at_top(l, cert, cert_position, true, swap_pair);
    case NightingaleVariant::DualPlain:
    case NightingaleVariant::DualStar: break;
  }
  const bool star = variant == NightingaleVariant::DualStar;
  const auto gens = join_meet_generators(l);
  if (auto v = verify_certificate(gens, cert, join_meet_height(l)); !v)
    throw Error(ErrorCode::PreconditionViolated, "input certificate does not verify: " + v.detail);
  const DistributiveLattice ld(l.poset().dual());
  const auto to_dual = dual_map(l, ld);
  const auto cert_d = transport_certificate(gens, join_meet_generators(ld), to_dual, cert);
  auto [ld_ext, cert_ext] = extend_at_top(ld, cert_d, cert_position, star, swap_pair);
  DistributiveLattice l_ext(ld_ext.poset().dual());
  const auto back = dual_map(ld_ext, l_ext);
  auto result = transport_certificate(join_meet_generators(ld_ext), join_meet_generators(l_ext), back, cert_ext);
  if (auto v = verify_certificate(join_meet_generators(l_ext), result, join_meet_height(l_ext)); !v)
    throw Error(ErrorCode::PreconditionViolated, "dual extension failed verification: " + v.detail);
  return {std::move(l_ext), std::move(result)};
}

}  // namespace koenig
