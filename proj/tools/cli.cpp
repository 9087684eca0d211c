#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace okbody::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::InvalidInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, what + " is not valid JSON: " + e.what());
  }
}

std::string case_name(const JobConfig& cfg) {
  std::string t = cfg.type.empty() ? (cfg.matrix_file.empty() ? "?" : "matrix") : cfg.type;
  std::string s = t + " w=" + cfg.word;
  if (!cfg.bundle.empty()) s += " " + cfg.bundle;
  return s;
}

QVec parse_mu(const std::string& text) {
  require(!text.empty(), ErrorCode::InvalidInput, "--mu is required");
  QVec out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_rational(part));
  return out;
}

TorusProjection load_projection(const std::string& path) {
  if (path.empty()) return {};
  const json j = parse_json(read_file(path), path);
  require(j.is_array() && !j.empty(), ErrorCode::InvalidInput, "torus projection must be a nonempty matrix");
  TorusProjection p;
  for (const auto& row : j) {
    require(row.is_array(), ErrorCode::InvalidInput, "torus projection rows must be arrays");
    IVec r;
    for (const auto& x : row) {
      require(x.is_number_integer(), ErrorCode::InvalidInput, "torus projection entries must be integers");
      r.push_back(x.get<long long>());
    }
    p.push_back(std::move(r));
  }
  return p;
}

DivisorClass bundle_of(const JobConfig& cfg, const BottSamelson& bs) {
  require(!cfg.bundle.empty(), ErrorCode::InvalidInput, "--bundle is required");
  DivisorClass d = DivisorClass::parse(cfg.bundle);
  require(d.coords.size() == bs.n(), ErrorCode::InvalidInput,
          "bundle " + cfg.bundle + " has " + std::to_string(d.coords.size()) + " coordinates, word has " +
              std::to_string(bs.n()));
  require(is_effective(bs, d), ErrorCode::InvalidInput, "bundle " + cfg.bundle + " is not effective");
  return d;
}

json level_json(const VolumeReport& v) {
  json rows = json::array();
  for (const auto& l : v.levels)
    rows.push_back({{"level", l.level}, {"valuations", l.valuations}, {"dimension", l.dimension}});
  return rows;
}

void add(std::vector<ReportEntry>& report, const std::string& name, const std::string& invariant, bool ok,
         const std::string& details) {
  report.push_back({name, invariant, ok ? "pass" : "fail", details});
}

// Runs one invariant, turning engine errors into a failed entry.
template <class F>
void guarded(std::vector<ReportEntry>& report, const std::string& name, const std::string& invariant, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    add(report, name, invariant, false, e.what());
  }
}

GlobalConeApprox saturate_global(const BottSamelson& bs, long long kmax, long long box_cap) {
  GlobalConeApprox g;
  for (long long k = 1; k <= kmax; ++k) {
    g = global_cone(bs, k, std::min(k, box_cap));
    if (g.saturated) break;
  }
  return g;
}

json cone_output(const GlobalConeApprox& g) {
  return {{"cone", to_json(g.cone)},
          {"saturated", g.saturated},
          {"max_level", g.max_level},
          {"box", g.box},
          {"points", g.points}};
}

bool equivariance_holds(const BottSamelson& bs, const SectionBasis& basis, std::mt19937_64& rng, int samples,
                        std::string& why) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 5), sign(0, 1), pick(0, bs.cartan().rank() - 1);
  auto rnd = [&]() {
    Q q(Z(num(rng)), Z(den(rng)));
    q.canonicalize();
    return sign(rng) ? -q : q;
  };
  const size_t n = bs.n();
  const int rank = bs.cartan().rank();
  for (int s = 0; s < samples; ++s) {
    QVec t(n);
    for (auto& x : t) x = rnd();
    const PwPoint p = big_cell_point(bs, t);
    std::vector<BorelElement> b;
    for (size_t k = 0; k < n; ++k) {
      QVec torus(static_cast<size_t>(rank));
      for (auto& x : torus) x = rnd();
      b.push_back(borel_element(bs.group(), torus, {{static_cast<int>(pick(rng)), rnd()}, {static_cast<int>(pick(rng)), rnd()}}));
    }
    const PwPoint moved = right_action(p, b);
    QVec tau(static_cast<size_t>(rank));
    for (auto& x : tau) x = rnd();
    const GroupElem<Q> left = bs.group().torus(tau);
    PwPoint shifted = p;
    shifted[0] = left * shifted[0];
    for (const auto& sec : basis.members) {
      const Q at_p = section_value(bs, sec, p);
      if (at_p != sec.poly.evaluate(t)) {
        why = "value at a big-cell point differs from the polynomial for " + sec.poly.to_string();
        return false;
      }
      Q factor = 1;
      const IVec can = to_canonical(bs, sec.multidegree).coords;
      for (size_t k = 0; k < n; ++k) {
        const Q chi = borel_character(bs, k, b[k].g);
        for (long long e = 0; e < std::abs(can[k]); ++e) factor *= can[k] > 0 ? chi : 1 / chi;
      }
      if (section_value(bs, sec, moved) != factor * at_p) {
        why = "right Borel law fails for " + sec.poly.to_string();
        return false;
      }
      Q mu = 1;
      for (int i = 0; i < rank; ++i)
        for (long long e = 0; e < std::abs(sec.weight[i]); ++e) mu *= sec.weight[i] > 0 ? tau[i] : 1 / tau[i];
      if (section_value(bs, sec, shifted) != mu * at_p) {
        why = "left torus weight is wrong for " + sec.poly.to_string();
        return false;
      }
    }
  }
  return true;
}

struct Fixture {
  std::string type, word, bundle;
};

const std::vector<Fixture>& shipped_fixtures() {
  static const std::vector<Fixture> f{
      {"A1", "1", "can:2"}, {"A2", "1,2", "can:1,1"}, {"A2", "1,2,1", "can:0,1,1"}, {"B2", "1,2", "can:1,1"}};
  return f;
}

void verify_case(const JobConfig& cfg, std::vector<ReportEntry>& report) {
  const std::string name = case_name(cfg);
  BottSamelson bs = make_variety(cfg);
  const bool quick = cfg.quick;
  const size_t n = bs.n();
  std::mt19937_64 rng(cfg.seed);

  guarded(report, name, "basis_change", [&] {
    const BasisChange bc = compute_basis_change(bs, quick ? 1 : bs.probe_radius());
    std::string m;
    for (const auto& row : bc.m) {
      m += "[";
      for (size_t i = 0; i < row.size(); ++i) m += (i ? "," : "") + std::to_string(row[i]);
      m += "]";
    }
    add(report, name, "basis_change", true, "M = " + m);
  });

  guarded(report, name, "dimension_oracle", [&] {
    const long long cap = quick ? 1 : 2;
    IVec m(n, 0);
    long long checked = 0;
    std::string bad;
    while (true) {
      const DivisorClass d = DivisorClass::canonical(m);
      const SectionBasis nef = section_basis_nef(bs, d);
      const SectionBasis glue = section_basis_glue(bs, d);
      const long long ch = bs_character(bs.cartan(), bs.word(), m).dimension();
      const auto sz = static_cast<long long>(nef.members.size());
      if (sz != ch || static_cast<long long>(glue.members.size()) != ch ||
          joint_rank(nef, glue) != nef.members.size() || basis_character(nef) != basis_character(glue))
        bad += d.to_string() + " ";
      ++checked;
      size_t j = 0;
      while (j < n && m[j] == cap) m[j++] = 0;
      if (j == n) break;
      ++m[j];
    }
    add(report, name, "dimension_oracle", bad.empty(),
        bad.empty() ? std::to_string(checked) + " nef classes agree" : "disagreement at " + bad);
  });

  const DivisorClass d = bundle_of(cfg, bs);
  const long long kmax = quick ? std::min<long long>(cfg.max_level, 3) : cfg.max_level;

  guarded(report, name, "torus_grading", [&] {
    const SectionBasis b = section_basis(bs, d);
    const Character want = bs_character(bs.cartan(), bs.word(), to_canonical(bs, d).coords);
    add(report, name, "torus_grading", basis_character(b) == want, "weights of " + d.to_string());
  });

  if (is_nef(bs, d)) {
    guarded(report, name, "equivariance", [&] {
      std::string why;
      const bool ok = equivariance_holds(bs, section_basis(bs, d), rng, quick ? 5 : 20, why);
      add(report, name, "equivariance", ok, ok ? "law holds at all sampled points" : why);
    });
    guarded(report, name, "level_count", [&] {
      const VolumeReport v = volume_check(bs, d, kmax);
      add(report, name, "level_count", v.counts_match, "levels 1.." + std::to_string(kmax));
    });
    guarded(report, name, "volume_identity", [&] {
      const long long sat = saturation_level(bs, d, 8);
      add(report, name, "volume_identity", sat > 0,
          sat > 0 ? "hull volume equals volume(D)/n! from level " + std::to_string(sat)
                  : "no saturation up to level 8");
    });
    if (n >= 2)
      guarded(report, name, "restriction", [&] {
        const RestrictionReport r = restriction_check(bs, d, kmax);
        add(report, name, "restriction", r.equal, r.equal ? "tail body equals restricted body" : "bodies differ");
      });
  }

  guarded(report, name, "weight_affine", [&] {
    const WeightedSemigroup ws = weighted_semigroup(bs, d, kmax);
    weight_projection(ws);
    add(report, name, "weight_affine", true, std::to_string(ws.points.size()) + " weighted points fit exactly");
  });

  guarded(report, name, "polytope_roundtrip", [&] {
    const RationalPolytope p = body(bs, d, kmax).polytope;
    add(report, name, "polytope_roundtrip", RationalPolytope::from_json(p.to_json()) == p, "body JSON reloads");
  });

  if (!quick && n <= 2) {
    GlobalConeApprox g;
    guarded(report, name, "global_saturation", [&] {
      g = saturate_global(bs, 6, 3);
      add(report, name, "global_saturation", g.saturated,
          "K=" + std::to_string(g.max_level) + " box=" + std::to_string(g.box));
    });
    if (n == 2 && g.saturated)
      guarded(report, name, "surface_recipe", [&] {
        const SurfaceRecipe r = indok_generators_surface(bs);
        add(report, name, "surface_recipe", r.cone == g.cone, "recipe cone vs saturated global cone");
      });
  }
}

void verify_fixture(const JobConfig& cfg, std::vector<ReportEntry>& report) {
  const json fx = parse_json(read_file(cfg.fixture), cfg.fixture);
  JobConfig job = cfg;
  const std::string name = "fixture " + cfg.fixture;
  try {
    const json& c = fx.at("config");
    job.type = c.value("type", job.type);
    job.word = c.value("word", job.word);
    job.bundle = c.value("bundle", job.bundle);
    job.max_level = c.value("max_level", job.max_level);
    job.box = c.value("box", job.box);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, "fixture has no usable config: " + std::string(e.what()));
  }
  const std::string command = fx.value("command", "");
  if (command == "body") {
    guarded(report, name, "fixture_roundtrip", [&] {
      const RationalPolytope p = RationalPolytope::from_json(fx.at("result").at("polytope").dump());
      add(report, name, "fixture_roundtrip", true, "stored polytope revalidates");
      const RationalPolytope fresh = body(make_variety(job), DivisorClass::parse(job.bundle), job.max_level).polytope;
      add(report, name, "fixture_match", p == fresh, p == fresh ? "recomputed body matches" : "recomputed body differs");
    });
  } else if (command == "global") {
    guarded(report, name, "fixture_match", [&] {
      const json stored = fx.at("result").at("cone").at("rays");
      const GlobalConeApprox g = global_cone(make_variety(job), job.max_level, job.box);
      const json fresh = to_json(g.cone).at("rays");
      add(report, name, "fixture_match", stored == fresh, stored == fresh ? "recomputed rays match" : "rays differ");
    });
  } else {
    fail(ErrorCode::InvalidInput, "fixture command must be body or global");
  }
}

json config_json(const JobConfig& cfg) {
  json j{{"type", cfg.type},   {"word", cfg.word}, {"bundle", cfg.bundle},
         {"max_level", cfg.max_level}, {"box", cfg.box}, {"seed", cfg.seed}};
  if (!cfg.matrix_file.empty()) j["matrix_file"] = cfg.matrix_file;
  if (!cfg.mu.empty()) j["mu"] = cfg.mu;
  if (!cfg.torus_proj_file.empty()) j["torus_proj_file"] = cfg.torus_proj_file;
  return j;
}

json envelope(const std::string& command, const JobConfig& cfg, json result) {
  return {{"command", command}, {"config", config_json(cfg)}, {"result", std::move(result)}};
}

}  // namespace

int CommandResult::exit_code() const {
  for (const auto& r : report)
    if (r.status == "fail") return 4;
  return 0;
}

JobConfig load_config(const std::string& path) {
  const json j = parse_json(read_file(path), path);
  require(j.is_object(), ErrorCode::InvalidInput, "config must be a JSON object");
  JobConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      std::string k = key;
      for (auto& c : k)
        if (c == '-') c = '_';
      if (k == "type") cfg.type = value.get<std::string>();
      else if (k == "matrix_file") cfg.matrix_file = value.get<std::string>();
      else if (k == "word") {
        if (value.is_array()) {
          for (size_t i = 0; i < value.size(); ++i) cfg.word += (i ? "," : "") + std::to_string(value[i].get<int>());
        } else {
          cfg.word = value.get<std::string>();
        }
      } else if (k == "bundle") cfg.bundle = value.get<std::string>();
      else if (k == "max_level") cfg.max_level = value.get<long long>();
      else if (k == "box") cfg.box = value.get<long long>();
      else if (k == "mu") cfg.mu = value.get<std::string>();
      else if (k == "torus_proj_file") cfg.torus_proj_file = value.get<std::string>();
      else if (k == "out") cfg.out = value.get<std::string>();
      else if (k == "seed") cfg.seed = value.get<unsigned long>();
      else if (k == "quick") cfg.quick = value.get<bool>();
      else if (k == "fixture") cfg.fixture = value.get<std::string>();
      else fail(ErrorCode::InvalidInput, "unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, "bad config value: " + std::string(e.what()));
  }
  return cfg;
}

BottSamelson make_variety(const JobConfig& cfg) {
  require(!cfg.word.empty(), ErrorCode::InvalidInput, "--word is required");
  CartanDatum c;
  std::optional<GroupModel> group;
  if (!cfg.matrix_file.empty()) {
    const json j = parse_json(read_file(cfg.matrix_file), cfg.matrix_file);
    try {
      const json& m = j.is_object() ? j.at("cartan") : j;
      c = CartanDatum(m.get<std::vector<std::vector<int>>>());
      if (j.is_object() && j.contains("representations")) {
        std::vector<FundamentalRep> reps;
        for (const auto& r : j.at("representations")) reps.push_back(FundamentalRep::from_json(c, r.dump()));
        group.emplace(c, std::move(reps));
      }
    } catch (const json::exception& e) {
      fail(ErrorCode::InvalidInput, "bad matrix file: " + std::string(e.what()));
    }
  } else {
    require(!cfg.type.empty(), ErrorCode::InvalidInput, "--type or --matrix-file is required");
    c = CartanDatum::parse(cfg.type);
  }
  const WeylWord w = WeylWord::parse(cfg.word);
  for (int l : w.letters)
    require(l >= 1 && l <= c.rank(), ErrorCode::InvalidInput, "word letter " + std::to_string(l) + " out of range");
  require(is_reduced(c, w), ErrorCode::InvalidInput, "word " + cfg.word + " is not reduced");
  BottSamelson bs = group ? BottSamelson(c, w, std::move(*group)) : BottSamelson(c, w);
  bs.glue_options().seed = cfg.seed;
  return bs;
}

json to_json(const Q& q) { return q.get_str(); }

json to_json(const ZVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json to_json(const RationalPolytope& p) { return json::parse(p.to_json()); }

json to_json(const RationalCone& c) {
  json rays = json::array(), lin = json::array();
  for (const auto& r : c.rays()) rays.push_back(to_json(r));
  for (const auto& r : c.lineality()) lin.push_back(to_json(r));
  return {{"dimension", c.ambient_dim()}, {"rays", rays}, {"lineality", lin}, {"pointed", c.pointed()}};
}

json to_json(const std::vector<ReportEntry>& report) {
  json a = json::array();
  for (const auto& r : report)
    a.push_back({{"case", r.case_name}, {"invariant", r.invariant}, {"status", r.status}, {"details", r.details}});
  return a;
}

CommandResult cmd_body(const JobConfig& cfg) {
  const BottSamelson bs = make_variety(cfg);
  const DivisorClass d = bundle_of(cfg, bs);
  require(cfg.max_level >= 1, ErrorCode::InvalidInput, "--max-level must be at least 1");
  CommandResult res;
  const OkounkovBody b = body(bs, d, cfg.max_level);
  json result{{"polytope", to_json(b.polytope)}, {"volume", to_json(b.polytope.volume())}};
  const std::string name = case_name(cfg);
  if (is_nef(bs, d)) {
    const VolumeReport v = volume_check(bs, d, cfg.max_level);
    result["volume_check"] = {{"levels", level_json(v)},
                              {"hull_volume", to_json(v.hull_volume)},
                              {"expected", to_json(v.expected)},
                              {"gap", to_json(v.gap)},
                              {"stable", v.stable}};
    add(res.report, name, "level_count", v.counts_match, "distinct valuations vs character dimension");
    res.report.push_back({name, "volume_identity", v.gap == 0 ? "pass" : "info",
                          "hull " + v.hull_volume.get_str() + " vs volume(D)/n! " + v.expected.get_str()});
  } else {
    res.report.push_back({name, "volume_identity", "info", "class is not nef; volume identity not checked"});
  }
  res.output = envelope("body", cfg, std::move(result));
  return res;
}

CommandResult cmd_global(const JobConfig& cfg) {
  const BottSamelson bs = make_variety(cfg);
  CommandResult res;
  const GlobalConeApprox g = global_cone(bs, cfg.max_level, cfg.box);
  json result = cone_output(g);
  const std::string name = case_name(cfg);
  res.report.push_back({name, "global_saturation", g.saturated ? "pass" : "info",
                        g.saturated ? "rays agree with (K+1, box+1)" : "rays still change at (K+1, box+1)"});
  if (bs.n() == 2 && g.saturated) {
    const SurfaceRecipe r = indok_generators_surface(bs);
    json gens = json::array();
    for (const auto& v : r.generators) gens.push_back(to_json(v));
    result["surface_recipe"] = {{"generators", gens}, {"cone", to_json(r.cone)}};
    add(res.report, name, "surface_recipe", r.cone == g.cone, "recipe cone vs saturated global cone");
  }
  res.output = envelope("global", cfg, std::move(result));
  return res;
}

CommandResult cmd_weights(const JobConfig& cfg) {
  const BottSamelson bs = make_variety(cfg);
  const DivisorClass d = bundle_of(cfg, bs);
  const QVec mu = parse_mu(cfg.mu);
  const TorusProjection proj = load_projection(cfg.torus_proj_file);
  const MultiplicityReport rep = multiplicity_asymptotics(bs, d, mu, cfg.max_level, proj);
  CommandResult res;
  json rows = json::array();
  bool match = true, monotone = true;
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    rows.push_back({{"level", r.level},
                    {"sections", r.sections},
                    {"character", r.character},
                    {"lattice", r.lattice},
                    {"ratio", to_json(r.ratio)},
                    {"error", to_json(r.error)}});
    match = match && (r.character < 0 || r.character == r.sections);
    if (i > 0) monotone = monotone && rep.rows[i].error <= rep.rows[i - 1].error;
  }
  json q{{"a", json::array()}, {"b", json::array()}};
  for (const auto& row : rep.q.a) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    q["a"].push_back(r);
  }
  for (const auto& x : rep.q.b) q["b"].push_back(to_json(x));
  json result{{"table", rows},
              {"projection", q},
              {"slice", to_json(rep.slice)},
              {"slice_volume", to_json(rep.slice_volume)},
              {"body_dimension", rep.d},
              {"weight_polytope_dimension", rep.r},
              {"on_boundary", rep.on_boundary}};
  const std::string name = case_name(cfg) + " mu=" + cfg.mu;
  add(res.report, name, "character_match", match, "semigroup weight counts vs character multiplicities");
  res.report.push_back({name, "monotone_error", monotone ? "pass" : "info", "|ratio - slice volume| over levels"});
  if (rep.on_boundary)
    res.report.push_back({name, "interior", "info", "mu lies on the boundary of the weight polytope"});
  res.output = envelope("weights", cfg, std::move(result));
  return res;
}

CommandResult cmd_verify(const JobConfig& cfg) {
  CommandResult res;
  if (!cfg.fixture.empty()) {
    verify_fixture(cfg, res.report);
  } else if (!cfg.word.empty()) {
    JobConfig job = cfg;
    if (job.bundle.empty()) {
      const BottSamelson bs = make_variety(job);
      job.bundle = DivisorClass::canonical(IVec(bs.n(), 1)).to_string();
    }
    verify_case(job, res.report);
  } else {
    for (const auto& f : shipped_fixtures()) {
      JobConfig job = cfg;
      job.type = f.type;
      job.word = f.word;
      job.bundle = f.bundle;
      verify_case(job, res.report);
    }
  }
  long long passed = 0;
  for (const auto& r : res.report) passed += r.status == "pass";
  res.output = envelope("verify", cfg,
                        {{"passed", passed}, {"total", res.report.size()}, {"ok", res.exit_code() == 0}});
  return res;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Okounkov bodies of Bott-Samelson varieties"};
  app.require_subcommand(1);
  JobConfig flags;
  std::string config_path;
  std::vector<CLI::Option*> given;
  auto add_flags = [&](CLI::App* sub) {
    given.push_back(sub->add_option("--type", flags.type, "Cartan type, e.g. A2, B2, G2, A1xA1"));
    given.push_back(sub->add_option("--matrix-file", flags.matrix_file, "JSON Cartan matrix (optionally with representations)"));
    given.push_back(sub->add_option("--word", flags.word, "comma-separated word, letters 1-based"));
    given.push_back(sub->add_option("--bundle", flags.bundle, "divisor class, eff:... or can:..."));
    given.push_back(sub->add_option("--max-level", flags.max_level, "truncation level K"));
    given.push_back(sub->add_option("--box", flags.box, "class box for the global cone"));
    given.push_back(sub->add_option("--mu", flags.mu, "weight, comma-separated rationals"));
    given.push_back(sub->add_option("--torus-proj-file", flags.torus_proj_file, "JSON integer matrix for a sub-torus"));
    given.push_back(sub->add_option("--out", flags.out, "output file (default stdout)"));
    given.push_back(sub->add_option("--seed", flags.seed, "seed for randomised checks"));
    given.push_back(sub->add_flag("--quick", flags.quick, "smaller verification suite"));
    given.push_back(sub->add_option("--fixture", flags.fixture, "verify: re-check a saved body/global output"));
    sub->add_option("--config", config_path, "JSON config; flags win");
  };
  CLI::App* body_cmd = app.add_subcommand("body", "Okounkov body of a class with the volume check");
  CLI::App* global_cmd = app.add_subcommand("global", "global cone with saturation report");
  CLI::App* weights_cmd = app.add_subcommand("weights", "weight multiplicity asymptotics");
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  for (auto* sub : {body_cmd, global_cmd, weights_cmd, verify_cmd}) add_flags(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    JobConfig cfg = config_path.empty() ? JobConfig{} : load_config(config_path);
    // Flags override the config file only when given explicitly.
    auto pick = [&](size_t idx, auto& dst, const auto& src) {
      if (given[idx]->count() > 0 || given[idx + 12]->count() > 0 || given[idx + 24]->count() > 0 ||
          given[idx + 36]->count() > 0)
        dst = src;
    };
    pick(0, cfg.type, flags.type);
    pick(1, cfg.matrix_file, flags.matrix_file);
    pick(2, cfg.word, flags.word);
    pick(3, cfg.bundle, flags.bundle);
    pick(4, cfg.max_level, flags.max_level);
    pick(5, cfg.box, flags.box);
    pick(6, cfg.mu, flags.mu);
    pick(7, cfg.torus_proj_file, flags.torus_proj_file);
    pick(8, cfg.out, flags.out);
    pick(9, cfg.seed, flags.seed);
    pick(10, cfg.quick, flags.quick);
    pick(11, cfg.fixture, flags.fixture);

    CommandResult res;
    if (body_cmd->parsed()) res = cmd_body(cfg);
    else if (global_cmd->parsed()) res = cmd_global(cfg);
    else if (weights_cmd->parsed()) res = cmd_weights(cfg);
    else res = cmd_verify(cfg);
    res.output["report"] = to_json(res.report);
    const std::string text = res.output.dump(2) + "\n";
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      require(out.good(), ErrorCode::InvalidInput, "cannot write " + cfg.out);
      out << text;
    }
    for (const auto& r : res.report)
      if (r.status == "fail") std::cerr << "FAIL " << r.case_name << " " << r.invariant << ": " << r.details << "\n";
    return res.exit_code();
  } catch (const Error& e) {
    std::cerr << nlohmann::json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return exit_code(e.code());
  }
}

}  // namespace okbody::cli
