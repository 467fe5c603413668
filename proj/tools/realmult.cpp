#include <CLI11.hpp>

#include <iostream>
#include <set>

#include "realmult/errors.hpp"
#include "realmult/pipeline.hpp"

using namespace realmult;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Internal:
    case ErrorCode::CacheCorrupt:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

void emit(const Json& j, bool json, const std::string& text) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::vector<AlgebraicReal> parse_thetas(const std::vector<std::string>& items) {
  std::vector<AlgebraicReal> out;
  for (const auto& s : items) out.push_back(AlgebraicReal::parse(s));
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "--theta needs at least one value");
  return out;
}

// --- analyze -------------------------------------------------------------

struct AnalyzeArgs {
  std::vector<long> levels;
  Config cfg;
  bool json = false;
};

std::string analyze_summary(const LevelReport& r) {
  const Json& b = r.body;
  std::string s = "level " + std::to_string(r.level) + ": genus " + b.at("genus").dump();
  if (b.contains("construction")) {
    const Json& c = b.at("construction");
    if (c.value("applies", false)) {
      s += ", Anosov-Hecke orbit K_f = " + c.at("Kf").at("text").get<std::string>();
    } else {
      s += ", construction does not apply (" + c.value("reason", std::string()) + ")";
    }
  }
  s += "\n";
  if (b.contains("embeddings")) {
    for (const auto& e : b.at("embeddings")) {
      s += "  embedding " + e.at("index").dump() + ": ";
      if (!e.contains("jp")) {
        s += "no JP stage\n";
        continue;
      }
      const Json& jp = e.at("jp");
      s += "JP " + jp.value("status", std::string("?"));
      if (jp.contains("hecke_unit")) s += ", lambda_A ~ " + jp.at("hecke_unit").at("approx").get<std::string>() + " (" + jp.at("hecke_unit").at("min_poly").at("text").get<std::string>() + ")";
      s += "\n";
    }
  }
  if (b.contains("hR_vs_g") && b.at("hR_vs_g").contains("h")) {
    const Json& h = b.at("hR_vs_g");
    s += "  h = " + h.at("h").dump() + ", h+ = " + h.at("h_plus").dump() + ", g = " + h.at("g").dump() + ": h = g " + h.at("h_equals_g").get<std::string>() + "\n";
  }
  if (b.contains("galois_action") && b.at("galois_action").contains("mismatch"))
    s += "  ClassCountMismatch: " + b.at("galois_action").at("mismatch").at("provenance").get<std::string>() + "\n";
  return s;
}

int run_analyze(const AnalyzeArgs& a) {
  a.cfg.validate();
  for (long n : a.levels)
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "level must be at least 1, got " + std::to_string(n));
  std::vector<std::optional<LevelReport>> slots(a.levels.size());
  std::vector<long> todo;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    if (!a.cfg.cache_dir.empty()) slots[i] = cache_get(a.levels[i], a.cfg);
    if (!slots[i]) {
      todo.push_back(a.levels[i]);
      where.push_back(i);
    }
  }
  auto fresh = analyze_levels(todo, a.cfg);
  for (std::size_t k = 0; k < fresh.size(); ++k) {
    if (!a.cfg.cache_dir.empty()) cache_put(fresh[k], a.cfg);
    slots[where[k]] = std::move(fresh[k]);
  }
  if (a.json) {
    if (slots.size() == 1) {
      std::cout << slots[0]->dump(true) << "\n";
    } else {
      Json arr = Json::array();
      for (const auto& s : slots) arr.push_back(s->body);
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    for (const auto& s : slots) std::cout << analyze_summary(*s);
  }
  return kExitOk;
}

// --- jp ------------------------------------------------------------------

int run_jp(const std::vector<std::string>& thetas, std::size_t steps, bool json) {
  JPState state(parse_thetas(thetas));
  JacobiPerronExpansion e = jp_expand(state, steps);
  const Json ej = to_json(e);
  Json j{{"dimension", e.dimension},
         {"status", to_string(e.status)},
         {"steps", e.steps},
         {"preperiod", ej.at("preperiod_digits")},
         {"period", ej.at("period_digits")}};
  Json digits = ej.at("preperiod_digits");
  for (const auto& d : ej.at("period_digits")) digits.push_back(d);
  j["digits"] = digits;
  std::string text = "status " + std::string(to_string(e.status)) + " after " + std::to_string(e.steps) + " steps; preperiod " +
                     std::to_string(e.preperiod_digits.size()) + ", period " + std::to_string(e.period_digits.size()) + "\n";
  if (e.status == JPStatus::periodic) {
    HeckeUnit u = hecke_unit(e);
    j["A"] = to_json(e.period_matrix);
    j["charpoly"] = to_json(u.char_poly);
    j["lambdaA"] = u.value.to_canonical();
    j["lambdaA_approx"] = std::to_string(u.value.approx());
    text += "A = " + j["A"].dump() + "\nP(A) = " + to_string(u.char_poly) + "\nlambda_A = " + u.value.to_canonical() + " ~ " + std::to_string(u.value.approx()) + "\n";
  }
  if (!e.note.empty()) j["note"] = e.note;
  emit(j, json, text);
  return kExitOk;
}

// --- modsym --------------------------------------------------------------

int run_modsym(long level, const std::vector<long>& ns, bool json) {
  if (level < 1) throw Error(ErrorCode::InvalidArgument, "level must be at least 1");
  for (long n : ns)
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "Hecke index must be positive");
  const long bound = ns.empty() ? kDefaultHeckeBound : std::max(*std::max_element(ns.begin(), ns.end()), kDefaultSeparatingBound);
  ModularSymbolSpace space = build_space(level);
  Json j{{"level", level}, {"genus", space.genus()}, {"orbits", Json::array()}};
  std::string text = "level " + std::to_string(level) + ": genus " + std::to_string(space.genus()) + "\n";
  if (space.genus() > 0) {
    OrbitDecomposition dec = eigen_orbits(space, bound, kDefaultSeparatingBound);
    const std::set<long> keep(ns.begin(), ns.end());
    for (const auto& o : dec.orbits) {
      Json oj = to_json(o);
      Json ap = Json::object();
      for (const auto& [n, a] : o.eigenvalues)
        if (keep.empty() || keep.count(n)) ap[std::to_string(n)] = to_json(a);
      Json out{{"factor", oj.at("factor")}, {"Kf", oj.at("Kf")}, {"degree", o.degree}, {"multiplicity", o.multiplicity}, {"anosov", o.anosov_hecke}, {"ap", ap}};
      if (o.old_level) out["old_level"] = *o.old_level;
      j["orbits"].push_back(out);
      text += "  orbit " + to_string(o.factor) + (o.anosov_hecke ? " (Anosov-Hecke)" : "") + "\n";
    }
    if (!dec.diagnostic.empty()) j["diagnostic"] = dec.diagnostic;
  }
  emit(j, json, text);
  return kExitOk;
}

// --- classgroup ----------------------------------------------------------

int run_classgroup(const std::string& disc, bool json) {
  ClassGroup cg = class_group(order_from_disc(parse_integer(disc)));
  Json cycles = Json::array();
  for (const auto& c : cg.cycles) {
    Json cj = Json::array();
    for (const auto& f : c) cj.push_back(to_json(f));
    cycles.push_back(cj);
  }
  Json j{{"D", cg.order.D.get_str()},
         {"dK", cg.order.dK.get_str()},
         {"f", cg.order.f.get_str()},
         {"h", cg.h},
         {"hPlus", cg.h_plus},
         {"cycles", cycles},
         {"unit", cg.unit.epsilon.to_canonical()},
         {"unitNorm", cg.unit.norm}};
  std::string text = "D = " + cg.order.D.get_str() + " (dK = " + cg.order.dK.get_str() + ", f = " + cg.order.f.get_str() + "): h = " +
                     std::to_string(cg.h) + ", h+ = " + std::to_string(cg.h_plus) + ", unit (" + cg.unit.x.get_str() + " + " +
                     cg.unit.y.get_str() + " sqrt(D))/2 of norm " + std::to_string(cg.unit.norm) + "\n";
  emit(j, json, text);
  return kExitOk;
}

// --- endo ----------------------------------------------------------------

int run_endo(const std::string& theta) {
  RMCertificate c = rm_certificate(AlgebraicReal::parse(theta));
  Json j{{"minpoly", to_json(c.min_poly)}, {"D", c.D.get_str()}, {"dK", c.dK.get_str()}, {"f", c.f.get_str()}, {"canonical_form", to_json(c).at("canonical_form")}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact real-multiplication toolkit: modular symbols, Jacobi-Perron units, class groups"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Run the level pipeline and print a report");
  analyze->add_option("--level", an.levels, "Level N (repeatable)")->required()->expected(1, -1);
  analyze->add_option("--max-jp-steps", an.cfg.max_jp_steps, "JP step budget")->capture_default_str();
  analyze->add_option("--hecke-bound", an.cfg.hecke_bound, "Compute T_n for n up to this bound")->capture_default_str();
  analyze->add_option("--cache-dir", an.cfg.cache_dir, "Report cache directory");
  analyze->add_option("--jobs", an.cfg.jobs, "Levels analyzed in parallel")->capture_default_str();
  analyze->add_flag("--json", an.json, "Print the JSON report");

  std::vector<std::string> thetas;
  std::size_t jp_steps = kDefaultMaxJPSteps;
  bool jp_json = false;
  auto* jp = app.add_subcommand("jp", "Jacobi-Perron expansion of canonical algebraic reals");
  jp->add_option("--theta", thetas, "theta_1 ... theta_{n-1} in canonical form")->required()->expected(1, -1);
  jp->add_option("--max-steps,--max-jp-steps", jp_steps, "Step budget")->capture_default_str();
  jp->add_flag("--json", jp_json, "JSON output");

  long ms_level = 0;
  std::vector<long> ms_hecke;
  bool ms_json = false;
  auto* ms = app.add_subcommand("modsym", "Hecke eigen-orbits of the plus cuspidal space");
  ms->add_option("--level", ms_level, "Level N")->required();
  ms->add_option("--hecke", ms_hecke, "Report a_n for these n")->expected(1, -1);
  ms->add_flag("--json", ms_json, "JSON output");

  std::string disc;
  bool cg_json = false;
  auto* cg = app.add_subcommand("classgroup", "Narrow and wide class groups of a real quadratic order");
  cg->add_option("--disc", disc, "Discriminant D > 0, D = 0 or 1 mod 4, not a square")->required();
  cg->add_flag("--json", cg_json, "JSON output");

  std::string endo_theta;
  auto* endo = app.add_subcommand("endo", "Real-multiplication certificate of Z + Z theta");
  endo->add_option("--theta", endo_theta, "theta in canonical form")->required();
  endo->add_flag("--json", "Accepted for uniformity; output is always JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) return run_analyze(an);
    if (*jp) return run_jp(thetas, jp_steps, jp_json);
    if (*ms) return run_modsym(ms_level, ms_hecke, ms_json);
    if (*cg) return run_classgroup(disc, cg_json);
    if (*endo) return run_endo(endo_theta);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error [Internal]: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
