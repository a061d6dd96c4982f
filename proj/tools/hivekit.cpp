// hivekit: compute, verify, certify and render hives of lattice pairs.
// Exit codes: 0 ok, 1 input error, 2 duality failure, 3 validation failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "hivekit/certify.hpp"
#include "hivekit/json_io.hpp"

using namespace hivekit;

namespace {

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write '" + out + "'");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// A matrix file may carry its own "ring"; it has to agree with --ring.
Lattice load_lattice(const std::string& path, const RingConfig& cfg) {
  json j = read_json_file(path);
  if (j.is_object() && j.contains("ring")) {
    RingConfig r = ring_from_json(j.at("ring"));
    if (!(r == cfg)) throw InputError(path + ": ring " + r.name() + " does not match --ring " + cfg.name());
  }
  return lattice_from_json(j, cfg);
}

json hive_record(const Hive& H, Variant v) {
  json j = hive_to_json(H);
  j["variant"] = variant_name(v);
  j["type"] = type_to_json(hive_boundary(H));
  return j;
}

int cmd_compute(const std::string& ring, const std::string& npath, const std::string& lpath,
                const std::string& variant, const std::string& out) {
  RingConfig cfg = parse_ring(ring);
  Lattice N = load_lattice(npath, cfg), L = load_lattice(lpath, cfg);
  if (N.n() != L.n()) throw InputError("N and Lambda have different sizes");
  std::vector<Variant> vs;
  if (variant == "both")
    vs = {Variant::primary, Variant::swapped};
  else
    vs = {parse_variant(variant)};
  json hives = json::array();
  for (Variant v : vs) hives.push_back(hive_record(build_hive(N, L, v), v));
  json doc = vs.size() == 1 ? hives[0] : json{{"hives", hives}};
  doc["ring"] = ring_to_json(cfg);
  emit(dump(doc), out);
  return 0;
}

json verify_one(const Hive& H, bool lr, bool& ok) {
  json rep;
  RhombusReport rr = check_rhombus(H);
  json vios = json::array();
  for (const auto& v : rr.violations) vios.push_back(v.str());
  rep["violations"] = vios;
  rep["rhombus_ok"] = rr.ok();
  rep["type"] = type_to_json(hive_boundary(H));
  ok = ok && rr.ok();
  if (lr) {
    LRFilling f = hive_to_lr_filling(H);
    LRCheck c = validate_lr(f);
    rep["filling"] = lr_to_json(f);
    rep["lr_ok"] = c.ok;
    if (!c.ok) rep["lr_diagnostic"] = c.diagnostic;
    ok = ok && c.ok;
  }
  return rep;
}

int cmd_verify(const std::string& path, bool lr, const std::string& out) {
  json j = read_json_file(path);
  std::vector<Hive> hs;
  if (j.is_object() && j.contains("hives"))
    for (const auto& x : j.at("hives")) hs.push_back(hive_from_json(x));
  else
    hs.push_back(hive_from_json(j));
  bool ok = true;
  json reps = json::array();
  for (const auto& H : hs) reps.push_back(verify_one(H, lr, ok));
  json doc = hs.size() == 1 ? reps[0] : json{{"hives", reps}};
  doc["ok"] = ok;
  emit(dump(doc), out);
  for (const auto& r : reps)
    for (const auto& v : r["violations"]) std::cerr << v.get<std::string>() << "\n";
  return ok ? 0 : 3;
}

InstanceSpec make_spec(std::size_t n, const std::string& ring, std::int64_t lo, std::int64_t hi, std::uint64_t seed,
                       std::size_t steps) {
  InstanceSpec s;
  s.n = n;
  s.ring = parse_ring(ring);
  s.lo = lo;
  s.hi = hi;
  s.seed = seed;
  s.mix_steps = steps;
  return s;
}

json entry_json(const EntryCertificate& e) {
  json j = {{"s", e.s},
            {"t", e.t},
            {"optimizer_min", e.opt_min},
            {"brute_min", e.brute_min},
            {"optimizer_max", e.opt_max},
            {"brute_max", e.brute_max},
            {"boundary_warning", e.boundary_warning},
            {"stable", e.stable}};
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

int cmd_oracle(std::uint64_t seed, std::size_t n, std::int64_t max_exp, std::size_t trials, std::int64_t bm,
               std::int64_t bd, bool identity, const std::string& out) {
  if (n == 0 || n > 3) throw InputError("oracle runs need 1 <= n <= 3");
  EnumerationBudget start;
  start.exponent_bound = bm;
  start.residue_depth = bd;
  bool all = true;
  json rows = json::array();
  // experimental tallies, never asserted: how much of each type's hive set is hit,
  // and whether one primary hive ever comes with two different swapped hives
  std::map<std::string, std::set<std::string>> swapped_of, hives_of_type;
  std::map<std::string, std::size_t> fillings_of_type;
  for (std::size_t k = 0; k < trials; ++k) {
    InstanceSpec spec = make_spec(n, "padic:2", 0, max_exp, seed + k, 6);
    RandomPair pr = random_pair(spec);
    if (identity) pr.N = pr.L = pr.M = Lattice(Matrix::identity(spec.ring, n));
    TrialCertificate c = certify_pair(pr.N, pr.L, start);
    if (c.error.empty()) {
      std::string p = hive_to_json(build_hive(pr.N, pr.L, Variant::primary)).dump();
      std::string q = hive_to_json(build_hive(pr.N, pr.L, Variant::swapped)).dump();
      std::string t = type_to_json(c.expected).dump();
      swapped_of[p].insert(q);
      if (!hives_of_type.count(t))
        fillings_of_type[t] = enumerate_lr_fillings(c.expected.lambda, c.expected.mu, c.expected.nu).size();
      hives_of_type[t].insert(p);
    }
    json ents = json::array();
    std::size_t warnings = 0;
    for (const auto& e : c.entries) {
      ents.push_back(entry_json(e));
      warnings += e.boundary_warning;
    }
    json row = {{"seed", spec.seed},
                {"type", type_to_json(c.expected)},
                {"certified", c.certified()},
                {"optimizer_matches_brute_force", c.optimizer_ok},
                {"duality", c.duality_ok},
                {"type_primary", c.type_primary_ok},
                {"type_swapped", c.type_swapped_ok},
                {"lr_valid", c.lr_valid},
                {"lr_member", c.lr_member},
                {"realizable", c.realizable},
                {"boundary_warnings", warnings},
                {"entries", ents}};
    if (!c.error.empty()) row["error"] = c.error;
    all = all && c.certified();
    rows.push_back(row);
  }
  Regression r = regression_instance();
  std::size_t seen = 0, available = 0, ambiguous = 0;
  for (const auto& [t, hs] : hives_of_type) {
    seen += hs.size();
    available += fillings_of_type[t];
  }
  for (const auto& [h, qs] : swapped_of) ambiguous += qs.size() > 1;
  json doc = {{"n", n},
              {"max_exp", max_exp},
              {"seed", seed},
              {"trials", rows},
              {"regression",
               {{"optimizer_min", r.optimizer}, {"brute_min", r.brute}, {"c_first_greedy", r.greedy}}},
              {"experimental",
               {{"types_seen", hives_of_type.size()},
                {"distinct_primary_hives", seen},
                {"hives_of_those_types", available},
                {"primary_hives_with_several_swapped", ambiguous}}},
              {"all_certified", all}};
  emit(dump(doc), out);
  return all ? 0 : 3;
}

int cmd_render(const std::string& path, const std::string& format, const std::string& out) {
  Hive H = hive_from_json(read_json_file(path));
  if (format == "ascii")
    emit(render_ascii(H), out);
  else if (format == "svg")
    emit(render_svg(H), out);
  else if (format == "json")
    emit(dump(hive_to_json(H)), out);
  else
    throw InputError("unknown format '" + format + "'");
  return 0;
}

int cmd_random(std::size_t n, const std::string& ring, std::int64_t lo, std::int64_t hi, std::uint64_t seed,
               std::size_t steps, const std::string& out) {
  InstanceSpec spec = make_spec(n, ring, lo, hi, seed, steps);
  emit(dump(instance_to_json(spec, random_pair(spec))), out);
  return 0;
}

int cmd_smith(const std::string& path, const std::string& ring, const std::string& out) {
  json j = read_json_file(path);
  RingConfig cfg = parse_ring(ring);
  if (j.is_object() && j.contains("ring")) cfg = ring_from_json(j.at("ring"));
  Matrix A = matrix_from_json(j, cfg);
  SmithDecomposition sd = smith_decompose(A);
  json doc = {{"P", matrix_to_json(sd.P)},
              {"D", matrix_to_json(sd.D)},
              {"Q", matrix_to_json(sd.Q)},
              {"invariants", invariant_partition(A)}};
  emit(dump(doc), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hives of lattice pairs over a discrete valuation ring"};
  app.require_subcommand(1);

  std::string ring = "padic:2", out, npath, lpath, variant = "primary", path, format = "ascii";
  bool lr = false, identity = false;
  std::uint64_t seed = 0;
  std::size_t n = 3, trials = 1, steps = 6;
  std::int64_t max_exp = 2, min_exp = 0, bm = 2, bd = 2;

  auto* compute = app.add_subcommand("compute", "build the hive of a pair (N, Lambda)");
  compute->add_option("--ring", ring);
  compute->add_option("--n-matrix", npath)->required();
  compute->add_option("--lambda-matrix", lpath)->required();
  compute->add_option("--variant", variant)->check(CLI::IsMember({"primary", "swapped", "both"}));
  compute->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "check rhombus inequalities and extract the type");
  verify->add_option("hive", path)->required();
  verify->add_flag("--lr", lr, "also convert to an LR filling and validate it");
  verify->add_option("--out", out);

  auto* oracle = app.add_subcommand("oracle", "certify optimizers against brute force on random pairs");
  oracle->add_option("--seed", seed);
  oracle->add_option("--n", n);
  oracle->add_option("--max-exp", max_exp);
  oracle->add_option("--trials", trials);
  oracle->add_option("--exponent-bound", bm, "starting enumeration bound M; -1 picks it from the invariants");
  oracle->add_option("--residue-depth", bd, "starting residue depth D; -1 means max(1, M)");
  oracle->add_flag("--identity", identity, "use N = L = identity in every trial");
  oracle->add_option("--out", out);

  auto* render = app.add_subcommand("render", "draw a hive");
  render->add_option("hive", path)->required();
  render->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg", "json"}));
  render->add_option("--out", out);

  auto* random = app.add_subcommand("random", "emit a seeded random pair");
  random->add_option("--n", n);
  random->add_option("--ring", ring);
  random->add_option("--min-exp", min_exp);
  random->add_option("--max-exp", max_exp);
  random->add_option("--seed", seed);
  random->add_option("--mix-steps", steps);
  random->add_option("--out", out);

  auto* smith = app.add_subcommand("smith", "Smith decomposition of a matrix");
  smith->add_option("matrix", path)->required();
  smith->add_option("--ring", ring);
  smith->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*compute) return cmd_compute(ring, npath, lpath, variant, out);
    if (*verify) return cmd_verify(path, lr, out);
    if (*oracle) return cmd_oracle(seed, n, max_exp, trials, bm, bd, identity, out);
    if (*render) return cmd_render(path, format, out);
    if (*random) return cmd_random(n, ring, min_exp, max_exp, seed, steps, out);
    if (*smith) return cmd_smith(path, ring, out);
  } catch (const DualityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
