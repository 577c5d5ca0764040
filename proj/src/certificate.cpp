#include "koenig/certificate.hpp"

#include "koenig/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace koenig {

std::vector<MarkedGenerator> KoenigCertificate::marked() const {
  std::vector<MarkedGenerator> out;
  for (std::size_t i = 0; i < generator_ids.size() && i < marking.size(); ++i)
    out.push_back({generator_ids[i], marking[i]});
  return out;
}

std::vector<Monomial> KoenigCertificate::initial_monomials(const IdealGenerators& gens) const {
  std::vector<Monomial> out;
  for (const auto& m : marked()) out.push_back(gens.binomials.at(m.index).term(m.side));
  return out;
}

KoenigCertificate empty_certificate(std::size_t num_vars) {
  KoenigCertificate c;
  c.witness.weights.assign(num_vars, Rational(0));
  c.witness.tiebreak.resize(num_vars);
  std::iota(c.witness.tiebreak.begin(), c.witness.tiebreak.end(), VarId{0});
  c.witness.flavor = OrderFlavor::Weight;
  return c;
}

std::string to_string(VerifyFailure f) {
  switch (f) {
    case VerifyFailure::None: return "none";
    case VerifyFailure::HeightMismatch: return "height_mismatch";
    case VerifyFailure::IndexOutOfRange: return "index_out_of_range";
    case VerifyFailure::RepeatedGenerator: return "repeated_generator";
    case VerifyFailure::MarkingSizeMismatch: return "marking_size_mismatch";
    case VerifyFailure::NotCoprime: return "not_coprime";
    case VerifyFailure::MalformedWitness: return "malformed_witness";
    case VerifyFailure::WitnessDisagrees: return "witness_disagrees";
  }
  return "unknown";
}

VerificationResult verify_certificate(const IdealGenerators& gens, const KoenigCertificate& cert,
                                      std::size_t expected_height) {
  VerificationResult r;
  r.minimal_generators = gens.has_private_monomials();
  auto fail = [&](VerifyFailure f, std::string detail) {
    r.ok = false;
    r.failure = f;
    r.detail = std::move(detail);
    return r;
  };
  if (cert.claimed_height != expected_height || cert.generator_ids.size() != expected_height)
    return fail(VerifyFailure::HeightMismatch,
                "expected height " + std::to_string(expected_height) + ", certificate claims " +
                    std::to_string(cert.claimed_height) + " with " + std::to_string(cert.generator_ids.size()) +
                    " generators");
  if (cert.marking.size() != cert.generator_ids.size())
    return fail(VerifyFailure::MarkingSizeMismatch, "one marking per generator is required");
  std::set<std::size_t> seen;
  for (auto id : cert.generator_ids) {
    if (id >= gens.binomials.size())
      return fail(VerifyFailure::IndexOutOfRange, "generator index " + std::to_string(id) + " out of range");
    if (!seen.insert(id).second)
      return fail(VerifyFailure::RepeatedGenerator, "generator " + gens.binomials[id].tag + " repeated");
  }
  const auto initial = cert.initial_monomials(gens);
  for (std::size_t i = 0; i < initial.size(); ++i)
    for (std::size_t j = i + 1; j < initial.size(); ++j)
      if (!initial[i].coprime(initial[j]))
        return fail(VerifyFailure::NotCoprime, "initial terms of " + gens.binomials[cert.generator_ids[i]].tag +
                                                   " and " + gens.binomials[cert.generator_ids[j]].tag +
                                                   " share a variable");
  const auto& w = cert.witness;
  if (w.weights.size() != gens.num_vars || !w.tiebreak_is_permutation() || !w.weights_nonnegative())
    return fail(VerifyFailure::MalformedWitness,
                "witness must carry one non-negative weight per variable and a permutation tiebreak");
  const MonomialOrder order(w);
  for (const auto& m : cert.marked()) {
    const auto& b = gens.binomials[m.index];
    if (!order.greater(b.term(m.side), b.term(other(m.side))))
      return fail(VerifyFailure::WitnessDisagrees, "witness does not make the marked term of " + b.tag + " initial");
  }
  r.ok = true;
  return r;
}

std::vector<Rational> strictly_realizing_weights(const IdealGenerators& gens, const KoenigCertificate& cert) {
  const auto& w = cert.witness.weights;
  bool strict = w.size() == gens.num_vars;
  for (const auto& m : cert.marked()) {
    if (!strict) break;
    const auto& b = gens.binomials.at(m.index);
    Rational s = 0;
    for (const auto& [v, x] : b.term(m.side).entries()) s += w[v] * x;
    for (const auto& [v, x] : b.term(other(m.side)).entries()) s -= w[v] * x;
    strict = s > 0;
  }
  if (strict) return w;
  auto fresh = marking_realizable(gens, cert.marked());
  if (!fresh) throw Error(ErrorCode::PreconditionViolated, "certificate marking is not realizable by any order");
  return fresh->weights;
}

void shift_nonnegative(std::vector<Rational>& weights) {
  if (weights.empty()) return;
  const Rational lowest = *std::min_element(weights.begin(), weights.end());
  for (auto& q : weights) q -= lowest;
}

namespace {

struct Candidate {
  std::size_t gen;
  Side side;
  std::vector<VarId> support;
};

class CertificateSearch {
public:
  CertificateSearch(const IdealGenerators& gens, std::size_t h, const SearchOptions& opt, SearchStats& stats)
      : gens_(gens), h_(h), opt_(opt), stats_(stats), by_min_var_(gens.num_vars),
        covered_(gens.num_vars, false), forbidden_(gens.num_vars, false), used_(gens.binomials.size(), false) {
    for (auto v : opt.forbidden)
      if (v < gens.num_vars) forbidden_[v] = true;
    min_support_ = 2;
    for (std::size_t k = 0; k < gens.binomials.size(); ++k) {
      for (Side s : {Side::First, Side::Second}) {
        auto support = gens.binomials[k].term(s).support();
        min_support_ = std::min(min_support_, support.size());
        by_min_var_[support.front()].push_back({k, s, std::move(support)});
      }
    }
  }

  std::optional<std::vector<MarkedGenerator>> run() {
    if (recurse(0)) return chosen_;
    return std::nullopt;
  }

private:
  bool recurse(std::size_t v) {
    if (opt_.node_budget != 0 && stats_.nodes >= opt_.node_budget)
      throw Error(ErrorCode::BudgetExceeded, "certificate search exceeded " + std::to_string(opt_.node_budget) + " nodes");
    ++stats_.nodes;
    if (chosen_.size() == h_) return true;
    const std::size_t n = gens_.num_vars;
    while (v < n && (covered_[v] || forbidden_[v])) ++v;
    std::size_t free_vars = 0;
    for (std::size_t u = v; u < n; ++u)
      if (!covered_[u] && !forbidden_[u]) ++free_vars;
    if ((h_ - chosen_.size()) * min_support_ > free_vars) return false;

    for (const auto& c : by_min_var_[v]) {
      if (used_[c.gen]) continue;
      if (std::any_of(c.support.begin(), c.support.end(), [&](VarId u) { return covered_[u] || forbidden_[u]; }))
        continue;
      chosen_.push_back({c.gen, c.side});
      ++stats_.realizability_checks;
      if (marking_realizable(gens_, chosen_)) {
        used_[c.gen] = true;
        for (auto u : c.support) covered_[u] = true;
        if (recurse(v + 1)) return true;
        for (auto u : c.support) covered_[u] = false;
        used_[c.gen] = false;
      }
      chosen_.pop_back();
    }
    // Leave v uncovered.
    return recurse(v + 1);
  }

  const IdealGenerators& gens_;
  std::size_t h_;
  const SearchOptions& opt_;
  SearchStats& stats_;
  std::vector<std::vector<Candidate>> by_min_var_;
  std::vector<bool> covered_;
  std::vector<bool> forbidden_;
  std::vector<bool> used_;
  std::vector<MarkedGenerator> chosen_;
  std::size_t min_support_ = 2;
};

}  // namespace

std::optional<KoenigCertificate> search_certificate(const IdealGenerators& gens, std::size_t h,
                                                    const SearchOptions& options, SearchStats* stats) {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  if (h == 0) {
    auto c = empty_certificate(gens.num_vars);
    return c;
  }
  if (gens.num_vars == 0) return std::nullopt;
  CertificateSearch search(gens, h, options, st);
  auto chosen = search.run();
  if (!chosen) return std::nullopt;
  auto witness = marking_realizable(gens, *chosen);
  if (!witness) return std::nullopt;
  KoenigCertificate cert;
  for (const auto& m : *chosen) {
    cert.generator_ids.push_back(m.index);
    cert.marking.push_back(m.side);
  }
  cert.witness = std::move(*witness);
  cert.claimed_height = h;
  if (!verify_certificate(gens, cert, h))
    throw Error(ErrorCode::PreconditionViolated, "search produced a certificate that fails verification");
  return cert;
}

}  // namespace koenig
