#include "koenig/cli.hpp"

#include "koenig/error.hpp"
#include "koenig/groebner.hpp"
#include "koenig/io.hpp"
#include "koenig/lattice.hpp"
#include "koenig/lattice_certificates.hpp"
#include "koenig/polyomino.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace koenig::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  std::string format = "json";
  bool check_all = false;
  std::size_t budget = kDefaultReductionBudget;
  std::size_t threads = 1;
  std::uint64_t seed = 1;
  std::size_t max = 0;
  std::size_t count = 1000;
  bool trees_only = false;
  std::string log;
  bool timing = false;
};

std::string read_input(const Options& o) {
  if (o.input.empty() || o.input == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return io::read_file(o.input);
}

std::size_t resolve_budget(const CLI::Option* flag, std::size_t flag_value) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv("KOENIG_BUDGET")) {
    const std::string s(env);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw Error(ErrorCode::ParseError, "KOENIG_BUDGET is not a number: '" + s + "'");
    return static_cast<std::size_t>(v);
  }
  return kDefaultReductionBudget;
}

MonomialOrderWitness identity_degrevlex(std::size_t n) {
  std::vector<VarId> ranking(n);
  std::iota(ranking.begin(), ranking.end(), VarId{0});
  return MonomialOrderWitness::degrevlex(std::move(ranking));
}

// ---------------------------------------------------------------- reports

Json summary_json(const ClassificationResult& c) {
  Json blocks = Json::array();
  for (const auto& b : c.blocks)
    blocks.push_back({{"d", b.d}, {"size", b.size}, {"quasi_thin", b.quasi_thin}, {"theta", b.theta}});
  return {{"verdict", to_string(c.verdict)}, {"reason", c.reason}, {"blocks", blocks}, {"height", c.height}};
}

Json lattice_json(const DistributiveLattice& l) {
  const auto rp = rank_profile(l);
  Json apexes = Json::array();
  for (auto a : rp.apexes) apexes.push_back(l.label(a));
  return {{"size", l.size()},
          {"d", l.d()},
          {"rho", rp.rho},
          {"theta", rp.theta},
          {"apexes", apexes},
          {"simple", is_simple(l)},
          {"quasi_thin", is_quasi_thin(l)},
          {"simple_type", to_string(simple_type(l))}};
}

std::string poset_id(const Poset& p) {
  std::ostringstream s;
  s << "poset:n=" << p.size() << ":code=" << std::hex << p.canonical_code();
  return s.str();
}

std::string polyomino_id(const Polyomino& p) {
  std::string g = p.to_grid();
  while (!g.empty() && g.back() == '\n') g.pop_back();
  for (auto& ch : g)
    if (ch == '\n') ch = '/';
  return "polyomino:" + g;
}

Json certificate_section(const IdealGenerators& gens, const KoenigCertificate& cert, std::size_t expected) {
  const auto v = verify_certificate(gens, cert, expected);
  if (!v.ok)
    throw std::logic_error("emitted certificate does not verify: " + to_string(v.failure) + " " + v.detail);
  return io::certificate_to_json(gens, cert);
}

struct LatticeOracle {
  Json json;
  bool height_ok = false;
  bool gb_ok = false;
};

LatticeOracle lattice_oracle(const DistributiveLattice& l, const IdealGenerators& g, std::size_t budget,
                             const std::string& id) {
  const auto w = rank_revlex_witness(l);
  const MonomialOrder order(w);
  const auto gb = buchberger(to_polynomials(g), w, budget);
  const auto dim = dimension_of_monomial_quotient(initial_ideal(gb.basis, order), g.num_vars);
  const auto height = static_cast<std::int64_t>(g.num_vars) - dim;
  std::vector<Polynomial> expected;
  for (const auto& p : to_polynomials(g)) expected.push_back(p.monic(order));
  std::sort(expected.begin(), expected.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_monomial(order), b.leading_monomial(order));
  });
  LatticeOracle r;
  const auto formula = join_meet_height(l);
  r.height_ok = dim >= 0 && static_cast<std::size_t>(height) == formula;
  r.gb_ok = gb.basis == expected;
  r.json = {{"instance", id},
            {"nvars", g.num_vars},
            {"gb_size", gb.basis.size()},
            {"height", height},
            {"steps", gb.reductions},
            {"order", "rank_revlex"},
            {"formula_height", formula},
            {"height_matches_formula", r.height_ok},
            {"gb_equals_generators", r.gb_ok}};
  return r;
}

Verdict verdict_from_height(std::size_t height, std::size_t nvars) {
  // h pairwise coprime quadratic initial monomials need 2h distinct variables.
  return 2 * height > nvars ? Verdict::NotKoenig : Verdict::Unknown;
}

struct Outcome {
  Json report;
  int code = kExitOk;
};

Outcome cmd_lattice(const std::string& sub, const Options& o) {
  const auto poset = io::poset_from_json(io::parse_json(read_input(o), o.input.empty() ? "stdin" : o.input));
  const DistributiveLattice l(poset);
  const auto gens = join_meet_generators(l);
  const auto id = poset_id(poset);
  Json r = {{"kind", "lattice"}, {"command", sub}, {"instance", io::poset_to_json(poset)}, {"id", id},
            {"lattice", lattice_json(l)}, {"height", join_meet_height(l)}};
  Outcome out;
  const bool classify = sub == "classify" || o.check_all;
  const bool certify = sub == "certify" || o.check_all;
  const bool oracle = sub == "oracle" || o.check_all;
  std::optional<ClassificationResult> cls;
  std::optional<LatticeCertification> cert;
  std::optional<LatticeOracle> orc;
  if (classify) {
    cls = classify_koenig_lattice(l);
    r["classification"] = summary_json(*cls);
  }
  if (certify) {
    cert = certify_lattice(l);
    Json orient = Json::array();
    for (const auto& b : cert->orientation)
      orient.push_back({{"block", b.block}, {"uses_bottom", b.uses_bottom}, {"uses_top", b.uses_top}, {"size", b.size}});
    r["search"] = {{"nodes", cert->search_nodes}, {"orientation", orient}};
    if (cert->certificate) r["certificate"] = certificate_section(gens, *cert->certificate, cert->height);
  }
  if (oracle) {
    orc = lattice_oracle(l, gens, o.budget, id);
    r["oracle"] = orc->json;
  }
  if (sub == "classify") {
    r["verdict"] = to_string(cls->verdict);
    r["reason"] = cls->reason;
  } else if (sub == "certify") {
    r["verdict"] = to_string(cert->certificate ? Verdict::Koenig : Verdict::NotKoenig);
    r["reason"] = cert->certificate ? "certificate found and verified" : "exhaustive block search found no certificate";
  } else {
    const auto v = verdict_from_height(orc->json["height"].get<std::size_t>(), gens.num_vars);
    r["verdict"] = to_string(v);
    r["reason"] = v == Verdict::NotKoenig ? "height exceeds half the number of variables"
                                          : "oracle height alone does not decide Koenig type";
  }
  if (o.check_all) {
    const Verdict certified = cert->certificate ? Verdict::Koenig : Verdict::NotKoenig;
    Json checks = {{"classify_agrees_with_certify", cls->verdict == certified},
                   {"oracle_height_matches_formula", orc->height_ok},
                   {"groebner_basis_is_generators", orc->gb_ok}};
    bool all = true;
    for (const auto& [k, v] : checks.items()) all = all && v.get<bool>();
    r["checks"] = checks;
    r["agreement"] = all;
    if (!all) out.code = kExitFailure;
  }
  out.report = std::move(r);
  return out;
}

Json polyomino_json(const Polyomino& p) {
  const auto vs = vertices_and_edges(p);
  const auto prof = edge_interval_profile(p);
  const bool simple = is_simple(p);
  Json j = {{"cells", p.size()},
            {"vertices", vs.vertices.size()},
            {"inner_intervals", inner_intervals(p).size()},
            {"simple", simple},
            {"tree", is_tree(p)},
            {"h", prof.h()},
            {"v", prof.v()},
            {"leaves", leaves(p).size()},
            {"grid", p.to_grid()}};
  if (simple) j["formula_height"] = height_simple(p);
  return j;
}

Outcome cmd_polyomino(const std::string& sub, const Options& o) {
  const auto p = io::parse_polyomino_text(read_input(o));
  const auto gens = inner_minors(p);
  const auto id = polyomino_id(p);
  const bool simple = is_simple(p);
  Json r = {{"kind", "polyomino"}, {"command", sub}, {"instance", io::polyomino_to_json(p)}, {"id", id},
            {"polyomino", polyomino_json(p)}};
  Outcome out;
  std::optional<PolyominoClassification> cls;
  std::optional<HeightReport> orc;
  std::optional<TreeCertification> tree;

  if (sub == "classify" || sub == "certify" || o.check_all) {
    cls = classify_koenig_polyomino(p, o.budget);
    r["verdict"] = to_string(cls->verdict);
    r["reason"] = cls->reason;
    if (cls->height) r["height"] = *cls->height;
    r["height_source"] = cls->height_source;
    r["height_bound"] = {{"holds", cls->height_bound_holds}, {"conditional", cls->height_bound_conditional}};
    r["search"] = {{"nodes", cls->search_nodes}};
    if (cls->certificate && (sub == "certify" || o.check_all))
      r["certificate"] = certificate_section(gens, *cls->certificate, *cls->height);
  }
  if (sub == "oracle" || o.check_all) {
    orc = ideal_height(gens, identity_degrevlex(gens.num_vars), o.budget);
    Json oj = {{"instance", id}, {"nvars", gens.num_vars}, {"gb_size", orc->gb_size},
               {"height", orc->height}, {"steps", orc->steps}, {"order", "degrevlex"}};
    if (simple) oj["height_matches_formula"] = orc->height == height_simple(p);
    r["oracle"] = oj;
    if (sub == "oracle") {
      const auto v = verdict_from_height(orc->height, gens.num_vars);
      r["verdict"] = to_string(v);
      r["reason"] = v == Verdict::NotKoenig ? "height exceeds half the number of variables"
                                            : "oracle height alone does not decide Koenig type";
      r["height"] = orc->height;
    }
  }
  if (sub == "tree" || (o.check_all && is_tree(p))) {
    tree = tree_certificate(p);
    Json t = {{"extension_steps", tree->ittenbach_steps}, {"search_steps", tree->search_steps}};
    r["tree"] = t;
    if (sub == "tree") {
      r["verdict"] = to_string(Verdict::Koenig);
      r["reason"] = "tree certificate";
      r["height"] = p.size();
      r["certificate"] = certificate_section(gens, tree->certificate, p.size());
    }
  }
  if (o.check_all) {
    Json checks = Json::object();
    if (cls->height) checks["oracle_height_matches_classifier"] = *cls->height == orc->height;
    if (simple) checks["oracle_height_matches_formula"] = orc->height == height_simple(p);
    if (tree) {
      checks["tree_certificate_verifies"] = verify_certificate(gens, tree->certificate, orc->height).ok;
      checks["tree_classified_koenig"] = cls->verdict == Verdict::Koenig;
    }
    if (cls->certificate) checks["certificate_verifies_at_oracle_height"] =
        verify_certificate(gens, *cls->certificate, orc->height).ok;
    bool all = true;
    for (const auto& [k, v] : checks.items()) all = all && v.get<bool>();
    r["checks"] = checks;
    r["agreement"] = all;
    if (!all) out.code = kExitFailure;
  }
  out.report = std::move(r);
  return out;
}

Outcome cmd_verify(const Options& o) {
  const auto j = io::parse_json(read_input(o), o.input.empty() ? "stdin" : o.input);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorCode::ParseError, "field 'kind': expected \"lattice\" or \"polyomino\"");
  if (!j.contains("instance")) throw Error(ErrorCode::ParseError, "field 'instance': missing");
  if (!j.contains("certificate")) throw Error(ErrorCode::ParseError, "field 'certificate': missing");
  const auto kind = j["kind"].get<std::string>();
  IdealGenerators gens;
  std::size_t expected = 0;
  std::string height_source;
  if (kind == "lattice") {
    const DistributiveLattice l(io::poset_from_json(j["instance"]));
    gens = join_meet_generators(l);
    expected = join_meet_height(l);
    height_source = "formula";
  } else if (kind == "polyomino") {
    const auto p = io::polyomino_from_json(j["instance"]);
    gens = inner_minors(p);
    if (is_simple(p)) {
      expected = height_simple(p);
      height_source = "formula";
    } else {
      expected = ideal_height(gens, identity_degrevlex(gens.num_vars), o.budget).height;
      height_source = "oracle";
    }
  } else {
    throw Error(ErrorCode::ParseError, "field 'kind': expected \"lattice\" or \"polyomino\", got '" + kind + "'");
  }
  const auto cert = io::certificate_from_json(gens, j["certificate"]);
  const auto v = verify_certificate(gens, cert, expected);
  Outcome out;
  out.report = {{"kind", kind},
                {"command", "verify"},
                {"verified", v.ok},
                {"failure", to_string(v.failure)},
                {"detail", v.detail},
                {"minimal_generators", v.minimal_generators},
                {"expected_height", expected},
                {"height_source", height_source}};
  if (!v.ok) out.code = kExitFailure;
  return out;
}

// ----------------------------------------------------------------- sweeps

struct InstanceResult {
  Json line;
  bool ok = true;
  bool budget_exceeded = false;
};

template <class F>
std::vector<InstanceResult> run_pool(std::size_t count, std::size_t threads, F&& evaluate) {
  std::vector<InstanceResult> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        results[i] = evaluate(i);
      } catch (const Error& e) {
        // An exhausted budget is not a disagreement; it is counted separately.
        results[i].budget_exceeded = e.code() == ErrorCode::BudgetExceeded;
        results[i].ok = results[i].budget_exceeded;
        results[i].line = {{"index", i}, {"error", e.what()}};
      } catch (const std::exception& e) {
        results[i].ok = false;
        results[i].line = {{"index", i}, {"error", e.what()}};
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(threads, std::max<std::size_t>(count, 1)); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

bool all_true(const Json& checks) {
  for (const auto& [k, v] : checks.items())
    if (!v.get<bool>()) return false;
  return true;
}

InstanceResult sweep_lattice(const Poset& p, const std::string& id, std::size_t budget) {
  const DistributiveLattice l(p);
  const auto gens = join_meet_generators(l);
  const auto cls = classify_koenig_lattice(l);
  const auto cert = certify_lattice(l);
  const auto orc = lattice_oracle(l, gens, budget, id);
  const bool koenig = cert.certificate.has_value();
  Json checks = {
      {"height_formula", orc.height_ok},
      {"groebner_basis", orc.gb_ok},
      {"classify_vs_certify", (cls.verdict == Verdict::Koenig) == koenig},
      {"certificate_verifies", !koenig || verify_certificate(gens, *cert.certificate, cert.height).ok},
      {"size_bound", cls.verdict != Verdict::Koenig || l.size() <= 2 * (l.d() + 1)},
  };
  InstanceResult r;
  r.ok = all_true(checks);
  r.line = {{"id", id},
            {"instance", io::poset_to_json(p)},
            {"rho", rank_profile(l).rho},
            {"verdict", to_string(cls.verdict)},
            {"certificate_size", koenig ? cert.certificate->size() : 0},
            {"oracle", {{"height", orc.json["height"]}, {"gb_size", orc.json["gb_size"]}, {"steps", orc.json["steps"]}}},
            {"checks", checks},
            {"ok", r.ok}};
  return r;
}

InstanceResult sweep_polyomino(const Polyomino& p, const std::string& id, bool trees_only, std::size_t budget) {
  const auto gens = inner_minors(p);
  const bool simple = is_simple(p);
  const bool tree = is_tree(p);
  Json checks = Json::object();
  Json line = {{"id", id}, {"instance", io::polyomino_to_json(p)}, {"simple", simple}, {"tree", tree}};
  if (simple) line["formula_height"] = height_simple(p);

  std::size_t syz = 0;
  bool syz_ok = true;
  for (const auto& s : splittable_intervals(p)) {
    const auto [lo, hi] = split_halves(s);
    syz_ok = syz_ok && gens.find_tag(interval_tag(lo)) && gens.find_tag(interval_tag(hi)) &&
             gens.find_tag(interval_tag(s.outer)) && check_split_syzygy(split_spec(s));
    ++syz;
  }
  checks["split_syzygy"] = syz_ok;
  line["splits"] = syz;

  if (tree) {
    const auto t = tree_certificate(p);
    checks["tree_certificate_size"] = t.certificate.size() == p.size();
    checks["tree_certificate_verifies"] = verify_certificate(gens, t.certificate, p.size()).ok;
    checks["tree_height_formula"] = height_simple(p) == p.size();
    line["tree_steps"] = {{"extension", t.ittenbach_steps}, {"search", t.search_steps}};
  }
  if (!trees_only) {
    const auto h = ideal_height(gens, identity_degrevlex(gens.num_vars), budget);
    line["oracle"] = {{"height", h.height}, {"gb_size", h.gb_size}, {"steps", h.steps}};
    if (simple) checks["height_formula"] = h.height == height_simple(p);
    const auto cls = classify_koenig_polyomino(p, budget);
    line["verdict"] = to_string(cls.verdict);
    if (cls.certificate)
      checks["certificate_verifies"] = verify_certificate(gens, *cls.certificate, h.height).ok;
    if (tree) checks["tree_is_koenig"] = cls.verdict == Verdict::Koenig;
  }
  InstanceResult r;
  r.ok = all_true(checks);
  line["checks"] = checks;
  line["ok"] = r.ok;
  r.line = std::move(line);
  return r;
}

std::vector<Monomial> random_quadratics(std::mt19937_64& rng, std::size_t nvars) {
  std::uniform_int_distribution<std::size_t> len(1, 4);
  std::uniform_int_distribution<VarId> var(0, static_cast<VarId>(nvars - 1));
  std::vector<Monomial> ms;
  const auto k = len(rng);
  for (std::size_t i = 0; i < k; ++i) ms.push_back(Monomial::variable(var(rng)) * Monomial::variable(var(rng)));
  return ms;
}

Outcome cmd_sweep(const std::string& kind, const Options& o) {
  std::vector<std::function<InstanceResult()>> jobs;
  Json params = {{"kind", kind}};
  if (kind == "lattices") {
    const std::size_t max = o.max == 0 ? 4 : o.max;
    if (max > kMaxEnumeratedPosetSize)
      throw Error(ErrorCode::SizeLimit, "lattice sweeps go up to " + std::to_string(kMaxEnumeratedPosetSize));
    params["max"] = max;
    for (std::size_t n = 1; n <= max; ++n) {
      const auto posets = enumerate_posets(n);
      for (std::size_t k = 0; k < posets.size(); ++k) {
        const auto id = "n=" + std::to_string(n) + "#" + std::to_string(k);
        jobs.push_back([p = posets[k], id, b = o.budget] { return sweep_lattice(p, id, b); });
      }
    }
  } else if (kind == "polyominoes") {
    const std::size_t max = o.max == 0 ? 5 : o.max;
    if (max > kMaxEnumeratedPolyominoSize)
      throw Error(ErrorCode::SizeLimit, "polyomino sweeps go up to " + std::to_string(kMaxEnumeratedPolyominoSize));
    params["max"] = max;
    params["trees_only"] = o.trees_only;
    for (std::size_t n = 1; n <= max; ++n)
      for (const auto& p : enumerate_polyominoes(n)) {
        if (o.trees_only && !is_tree(p)) continue;
        jobs.push_back([p, id = polyomino_id(p), t = o.trees_only, b = o.budget] {
          return sweep_polyomino(p, id, t, b);
        });
      }
  } else {
    params["seed"] = o.seed;
    params["count"] = o.count;
    // Instances are drawn up front so the result does not depend on scheduling.
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> nv(2, 8);
    for (std::size_t k = 0; k < o.count; ++k) {
      const auto n = nv(rng);
      auto ms = random_quadratics(rng, n);
      jobs.push_back([ms, k, n] {
        const bool predicate = is_monomial_regular_sequence(ms);
        const bool reference = is_regular_sequence_oracle(ms);
        Json list = Json::array();
        for (const auto& m : ms) list.push_back(m.to_string());
        InstanceResult r;
        r.ok = predicate == reference;
        r.line = {{"id", "regseq#" + std::to_string(k)}, {"nvars", n}, {"monomials", list},
                  {"coprime", predicate}, {"zero_divisor_oracle", reference}, {"ok", r.ok}};
        return r;
      });
    }
  }

  const auto results = run_pool(jobs.size(), o.threads, [&](std::size_t i) { return jobs[i](); });

  std::size_t failures = 0, budget = 0;
  Json first_failure = nullptr;
  std::map<std::string, std::size_t> verdicts;
  for (const auto& r : results) {
    if (r.budget_exceeded) ++budget;
    if (!r.ok) {
      ++failures;
      if (first_failure.is_null()) first_failure = r.line;
    }
    if (r.line.contains("verdict")) ++verdicts[r.line["verdict"].get<std::string>()];
  }
  if (!o.log.empty()) {
    std::ofstream log(o.log, std::ios::binary);
    if (!log) throw Error(ErrorCode::ParseError, "cannot write log '" + o.log + "'");
    for (const auto& r : results) log << r.line.dump() << '\n';
  }
  Outcome out;
  out.report = params;
  out.report["instances"] = results.size();
  out.report["failures"] = failures;
  out.report["budget_exceeded"] = budget;
  out.report["first_failure"] = first_failure;
  out.report["verdicts"] = verdicts;
  out.report["ok"] = failures == 0 && budget == 0;
  if (failures > 0)
    out.code = kExitFailure;
  else if (budget > 0)
    out.code = kExitBudget;
  return out;
}

// ------------------------------------------------------------------ output

void render_text(const Json& j, std::ostream& out, const std::string& indent = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << indent << k << ":\n";
      render_text(v, out, indent + "  ");
    } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      out << indent << k << ":\n";
      std::istringstream lines(v.get<std::string>());
      for (std::string line; std::getline(lines, line);) out << indent << "  " << line << '\n';
    } else if (v.is_string()) {
      out << indent << k << ": " << v.get<std::string>() << '\n';
    } else {
      out << indent << k << ": " << v.dump() << '\n';
    }
  }
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Koenig type of join-meet and polyomino ideals", "koenig"};
  app.require_subcommand(1);
  Options o;
  std::size_t budget_flag = 0;
  std::vector<CLI::Option*> budget_opts;

  auto common = [&](CLI::App* c) {
    c->add_option("-i,--input", o.input, "Input file, '-' or absent for stdin");
    c->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    budget_opts.push_back(c->add_option("--budget", budget_flag, "Groebner reduction step budget"));
    c->add_flag("--timing", o.timing, "Add wall-clock time to the report");
  };

  auto* lattice = app.add_subcommand("lattice", "Join-meet ideal of J(P) for a poset P");
  lattice->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> lattice_subs;
  for (const char* name : {"classify", "certify", "oracle"}) {
    auto* s = lattice->add_subcommand(name);
    common(s);
    s->add_flag("--check-all", o.check_all, "Run classifier, certificate search and oracle; demand agreement");
    lattice_subs.emplace_back(name, s);
  }

  auto* poly = app.add_subcommand("polyomino", "Inner 2-minor ideal of a polyomino");
  poly->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> poly_subs;
  for (const char* name : {"classify", "certify", "oracle", "tree"}) {
    auto* s = poly->add_subcommand(name);
    common(s);
    s->add_flag("--check-all", o.check_all, "Cross-check classifier, oracle and tree construction");
    poly_subs.emplace_back(name, s);
  }

  auto* sweep = app.add_subcommand("sweep", "Exhaustive cross-checks over enumerated instances");
  sweep->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> sweep_subs;
  for (const char* name : {"lattices", "polyominoes", "regseq"}) {
    auto* s = sweep->add_subcommand(name);
    s->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    budget_opts.push_back(s->add_option("--budget", budget_flag, "Groebner reduction step budget"));
    s->add_flag("--timing", o.timing, "Add wall-clock time to the report");
    s->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    s->add_option("--log", o.log, "JSON-lines log, one instance per line");
    if (std::string(name) != "regseq") {
      s->add_option("--max", o.max, "Largest instance size")->check(CLI::PositiveNumber);
    } else {
      s->add_option("--seed", o.seed, "Random seed");
      s->add_option("--count", o.count, "Number of random lists");
    }
    if (std::string(name) == "polyominoes") s->add_flag("--trees-only", o.trees_only, "Only tree polyominoes");
    sweep_subs.emplace_back(name, s);
  }

  auto* verify = app.add_subcommand("verify", "Re-verify the certificate in a report");
  common(verify);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const auto given = std::find_if(budget_opts.begin(), budget_opts.end(),
                                    [](const CLI::Option* opt) { return opt->count() > 0; });
    o.budget = resolve_budget(given != budget_opts.end() ? *given : budget_opts.front(), budget_flag);

    Outcome result;
    if (lattice->parsed()) {
      for (const auto& [name, s] : lattice_subs)
        if (s->parsed()) result = cmd_lattice(name, o);
    } else if (poly->parsed()) {
      for (const auto& [name, s] : poly_subs)
        if (s->parsed()) result = cmd_polyomino(name, o);
    } else if (sweep->parsed()) {
      for (const auto& [name, s] : sweep_subs)
        if (s->parsed()) result = cmd_sweep(name, o);
    } else {
      result = cmd_verify(o);
    }
    if (o.timing)
      result.report["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.format == "text")
      render_text(result.report, out);
    else
      out << result.report.dump(2) << '\n';
    return result.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace koenig::cli
