#include "realmult/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include "realmult/errors.hpp"

#ifndef REALMULT_VERSION
#define REALMULT_VERSION "unknown"
#endif

namespace realmult {

void Config::validate() const {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
  };
  need(max_jp_steps > 0, "max_jp_steps");
  need(hecke_bound > 0, "hecke_bound");
  need(separating_bound >= 3, "separating_bound (at least 3)");
  need(!positivity_bounds.empty(), "positivity_bounds");
  for (long b : positivity_bounds) need(b > 0, "positivity bound");
  need(max_relative_degree > 0, "max_relative_degree");
  need(convergence_periods > 0, "convergence_periods");
  need(jobs > 0, "jobs");
}

Json Config::to_json() const {
  return Json{{"max_jp_steps", max_jp_steps},
              {"hecke_bound", hecke_bound},
              {"separating_bound", separating_bound},
              {"positivity_bounds", positivity_bounds},
              {"max_relative_degree", max_relative_degree},
              {"convergence_periods", convergence_periods}};
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string Config::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(to_json().dump())));
  return buf;
}

std::string LevelReport::dump(bool with_timing) const {
  if (with_timing) return body.dump(2);
  Json b = body;
  b.erase("timing_seconds");
  return b.dump(2);
}

LevelReport LevelReport::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("schema") || j.at("schema") != kReportSchema)
    throw Error(ErrorCode::ParseError, "not a level report of schema " + std::to_string(kReportSchema));
  LevelReport r;
  r.level = j.at("level").get<long>();
  r.body = j;
  return r;
}

std::string version_string() {
  std::string s = std::string("realmult ") + REALMULT_VERSION;
#if defined(__clang__)
  s += " clang " __clang_version__;
#elif defined(__GNUC__)
  s += " gcc " __VERSION__;
#endif
  return s;
}

std::vector<JInvariant> j_invariants(const IntMatrix& A, const AlgebraicReal& lambda, const std::vector<PseudoLattice>& lattices) {
  if (lattices.empty()) throw Error(ErrorCode::InvalidArgument, "no lattices");
  const IntPolynomial P = charpoly(A);
  const auto roots = isolate_real_roots(P);
  if (roots.size() < lattices.size())
    throw Error(ErrorCode::InvalidArgument, "P(A) has " + std::to_string(roots.size()) + " real roots for " + std::to_string(lattices.size()) + " lattices");
  if (!evaluate(P, lambda).is_zero()) throw Error(ErrorCode::InvalidArgument, "lambda is not a root of P(A)");
  const FieldPtr f0 = lambda.field();
  std::vector<JInvariant> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    const FieldPtr fi = lattices[i].field();
    JInvariant j;
    j.lattice = i;
    if (f0->degree() == 1) {
      j.value = lambda;
    } else {
      if (fi->polynomial() != f0->polynomial())
        throw Error(ErrorCode::FieldMismatch, "lattice " + std::to_string(i) + " is not an embedding of the field of lambda");
      j.value = AlgebraicReal(fi, lambda.coords());
    }
    if (!evaluate(P, j.value).is_zero()) throw Error(ErrorCode::Internal, "conjugate of lambda is not a root of P(A)");
    bool located = false;
    for (std::size_t k = 0; k < roots.size() && !located; ++k) {
      const auto& iv = roots[k];
      const bool inside = iv.exact() ? compare(j.value, AlgebraicReal(iv.lo)) == Ordering::equal
                                     : compare(j.value, AlgebraicReal(iv.lo)) == Ordering::greater &&
                                           compare(j.value, AlgebraicReal(iv.hi)) == Ordering::less;
      if (inside) {
        j.root_index = k;
        located = true;
      }
    }
    if (!located) throw Error(ErrorCode::Internal, "conjugate of lambda not located among the real roots");
    if (used[j.root_index]) throw Error(ErrorCode::InvalidArgument, "two lattices map to the same root of P(A)");
    used[j.root_index] = true;
    j.perron = j.root_index + 1 == roots.size();
    out.push_back(std::move(j));
  }
  return out;
}

namespace {

const char* tri(bool b) { return b ? "verified" : "refuted"; }

struct EmbeddingResult {
  Json json;
  std::optional<PseudoLattice> projected;
  std::optional<RMCertificate> cert;
  std::optional<JacobiPerronExpansion> expansion;
  std::optional<HeckeUnit> unit;
};

EmbeddingResult analyze_embedding(const ModularSymbolSpace& space, const OrbitDecomposition& dec, std::size_t oi,
                                  std::size_t e, const std::map<long, IntMatrix>& hecke, const Config& cfg) {
  EmbeddingResult out;
  Json& emb = out.json;
  const EigenOrbit& orbit = dec.orbits[oi];
  emb["index"] = e;
  emb["field"] = to_json(orbit.embeddings[e]);
  EigenvectorResult ev;
  try {
    ev = eigenvector_lattice(space, dec, oi, e, cfg.positivity_bounds);
  } catch (const std::exception& ex) {
    emb["eigenvector"] = Json{{"status", "error"}, {"error", error_json(ex)}};
    return out;
  }
  Json evj{{"status", "ok"},
           {"lambda", to_json(ev.lambda)},
           {"raw", to_json(ev.raw)},
           {"basis_change", to_json(ev.basis_change)},
           {"search_bound", ev.search_bound}};
  std::map<long, IntMatrix> conj;
  std::size_t checked = 0;
  bool all_ok = true;
  for (const auto& [n, h] : hecke) {
    conj[n] = conjugate_by(h, ev.basis_change);
    if (!orbit.eigenvalues.count(n)) continue;
    const bool ok = is_eigenvector(conj[n], ev.lambda, eigenvalue_in(orbit, n, e));
    all_ok = all_ok && ok;
    ++checked;
  }
  evj["hecke_checked"] = checked;
  evj["exact_eigenvector"] = tri(all_ok);
  emb["eigenvector"] = evj;

  PseudoLattice m = from_periods(ev.lambda);
  emb["module"] = to_json(m);
  if (space.genus() == 1) {
    emb["jp"] = Json{{"status", "DegenerateRank"}, {"note", "g = 1 gives a rank-1 projection; no theta vector"}};
    return out;
  }

  try {
    PseudoLattice mh = hecke_project(m);
    out.projected = mh;
    emb["projection"] = to_json(mh);
    EndomorphismRing er = endomorphism_ring(mh);
    Json ej{{"real_multiplication", er.real_multiplication}, {"theta_degree", er.theta_degree}};
    if (er.certificate) {
      ej["certificate"] = to_json(*er.certificate);
      out.cert = er.certificate;
    }
    emb["endomorphism"] = ej;
  } catch (const std::exception& ex) {
    emb["projection"] = Json{{"status", "error"}, {"error", error_json(ex)}};
  }

  if (out.projected) {
    const AlgebraicReal theta = ev.lambda[1];
    Json tj = Json::object();
    for (long n : {2L, 3L}) {
      if (!conj.count(n)) continue;
      TauResult tr = tau_truncate(conj.at(n));
      RMQuadraticCheck chk = rm_quadratic_check(theta, tr.tau);
      tj[std::to_string(n)] = Json{{"tau", to_json(tr.tau)},
                                   {"asymmetric", tr.asymmetric},
                                   {"symmetrized", tr.symmetrized},
                                   {"quadratic", to_json(chk.quadratic)},
                                   {"holds", tri(chk.holds)}};
    }
    emb["tau"] = tj;
  }

  try {
    std::vector<AlgebraicReal> theta(ev.lambda.begin() + 1, ev.lambda.end());
    JacobiPerronExpansion exp = jp_expand(JPState(theta), cfg.max_jp_steps);
    out.expansion = exp;
    Json jj = to_json(exp);
    if (exp.status == JPStatus::periodic) {
      HeckeUnit u = hecke_unit(exp);
      out.unit = u;
      const Integer det = determinant(exp.period_matrix);
      const Integer c0 = u.char_poly.coeff(0);
      const bool perron = verify_perron_eigenvector(exp.period_matrix, JPState(exp.period_state), u);
      const IntPolynomial& mp = u.min_poly;
      const bool norm_one = mp.leading() == 1 && abs(mp.coeff(0)) == 1;
      Json uj = to_json(u);
      uj["certificate"] = Json{{"det_A", det.get_str()},
                               {"abs_det_is_one", tri(abs(det) == 1)},
                               {"constant_term", c0.get_str()},
                               {"constant_term_is_unit", tri(abs(c0) == 1)},
                               {"perron_eigenvector", tri(perron)},
                               {"norm_is_unit", tri(norm_one)}};
      uj["convergence"] = to_json(check_convergence(exp, cfg.convergence_periods));
      uj["lambda_in_state_field"] = to_json(lambda_in_state_field(exp));
      jj["hecke_unit"] = uj;
    }
    emb["jp"] = jj;
  } catch (const std::exception& ex) {
    emb["jp"] = Json{{"status", "error"}, {"error", error_json(ex)}};
  }
  return out;
}

template <class F>
void stage(Json& out, const std::string& key, F&& f) {
  try {
    out[key] = f();
  } catch (const std::exception& ex) {
    out[key] = Json{{"status", "error"}, {"error", error_json(ex)}};
  }
}

}  // namespace

LevelReport analyze_level(long N, const Config& cfg) {
  cfg.validate();
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "level must be at least 1, got " + std::to_string(N));
  const auto t0 = std::chrono::steady_clock::now();
  Json r;
  r["schema"] = kReportSchema;
  r["level"] = N;
  r["version"] = version_string();
  r["config"] = cfg.to_json();
  r["config_hash"] = cfg.hash();

  const GenusData gd = genus_data(N);
  r["genus_formula"] = to_json(gd);
  const ModularSymbolSpace space = build_space(N);
  const long g = space.genus();
  r["genus"] = g;
  r["space"] = Json{{"manin_symbols", space.manin_count()},
                    {"ambient_dimension", space.ambient_dimension()},
                    {"cuspidal_dimension", space.cuspidal_dimension()},
                    {"plus_dimension", g},
                    {"genus_check", tri(g == gd.genus)},
                    {"cusp_multiplicity_m", 1}};

  std::map<long, IntMatrix> hecke;
  Json hj = Json::object();
  for (long n = 1; n <= cfg.hecke_bound; ++n) {
    hecke[n] = space.hecke(n);
    hj[std::to_string(n)] = to_json(hecke[n]);
  }
  r["hecke"] = hj;

  auto finish = [&]() {
    r["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    LevelReport rep;
    rep.level = N;
    rep.body = std::move(r);
    return rep;
  };

  if (g == 0) {
    r["construction"] = Json{{"applies", false}, {"reason", "genus 0: no weight-2 cusp forms"}};
    return finish();
  }

  OrbitDecomposition dec;
  try {
    dec = eigen_orbits(space, cfg.hecke_bound, cfg.separating_bound);
  } catch (const std::exception& ex) {
    r["orbits"] = Json{{"status", "error"}, {"error", error_json(ex)}};
    r["construction"] = Json{{"applies", false}, {"reason", "orbit decomposition failed"}};
    return finish();
  }
  r["orbits"] = to_json(dec);
  std::optional<std::size_t> oi;
  for (std::size_t i = 0; i < dec.orbits.size(); ++i)
    if (dec.orbits[i].anosov_hecke) oi = i;
  if (!oi) {
    r["construction"] = Json{{"applies", false},
                             {"reason", "no Anosov-Hecke eigenform: " + std::to_string(dec.orbits.size()) + " orbits, none of degree g = " + std::to_string(g)}};
    return finish();
  }
  const EigenOrbit& orbit = dec.orbits[*oi];
  r["construction"] = Json{{"applies", true}, {"orbit", *oi}, {"Kf", to_json(orbit.factor)}, {"totally_real", orbit.totally_real}};

  std::vector<EmbeddingResult> embs;
  Json ejs = Json::array();
  for (std::size_t e = 0; e < orbit.embeddings.size(); ++e) {
    embs.push_back(analyze_embedding(space, dec, *oi, e, hecke, cfg));
    ejs.push_back(embs.back().json);
  }
  if (g == 1) {
    r["embeddings"] = ejs;
    r["galois_action"] = Json{{"status", "skipped"}, {"reason", "DegenerateRank: g = 1"}};
    return finish();
  }

  // Class group of the order found at the first embedding.
  std::optional<ClassGroup> cg;
  if (embs.front().cert) {
    stage(r, "class_group", [&] {
      cg = class_group(order_from_disc(embs.front().cert->D));
      return to_json(*cg);
    });
  } else {
    r["class_group"] = Json{{"status", "skipped"}, {"reason", "no real multiplication certificate"}};
  }

  if (cg) {
    for (std::size_t e = 0; e < embs.size(); ++e) {
      if (!embs[e].unit) continue;
      UnitCheck uc = is_unit_of(embs[e].unit->value, cg->order);
      ejs[e]["jp"]["hecke_unit"]["unit_of_order"] = Json{{"is_unit", tri(uc.is_unit)}, {"degree", uc.degree}, {"note", uc.note}};
    }
    r["hR_vs_g"] = Json{{"g", g},
                        {"h", cg->h},
                        {"h_plus", cg->h_plus},
                        {"h_equals_g", tri(static_cast<long>(cg->h) == g)},
                        {"h_plus_equals_g", tri(static_cast<long>(cg->h_plus) == g)}};
  }
  r["embeddings"] = ejs;

  const EmbeddingResult& first = embs.front();
  if (first.unit && cg) {
    stage(r, "field_diagnostics", [&] { return to_json(field_diagnostics(*first.unit, cg->order, cfg.max_relative_degree)); });
  } else {
    r["field_diagnostics"] = Json{{"status", "skipped"}, {"reason", first.unit ? "no class group" : "no Hecke unit (JP expansion not periodic)"}};
  }

  std::vector<PseudoLattice> lattices;
  for (const auto& e : embs)
    if (e.projected) lattices.push_back(*e.projected);
  std::vector<AlgebraicReal> labels;
  std::string label_source = "theta";
  if (first.unit && lattices.size() == embs.size()) {
    stage(r, "j_invariants", [&] {
      auto js = j_invariants(first.expansion->period_matrix, lambda_in_state_field(*first.expansion), lattices);
      Json a = Json::array();
      for (const auto& j : js) {
        a.push_back(Json{{"lattice", j.lattice}, {"lambda", to_json(j.value)}, {"approx", std::to_string(j.value.approx())},
                         {"root_index", j.root_index}, {"perron", j.perron}});
        labels.push_back(j.value);
      }
      label_source = "j_invariant";
      return a;
    });
  } else {
    r["j_invariants"] = Json{{"status", "skipped"}, {"reason", "needs a periodic expansion at the first embedding and every projection"}};
  }
  if (labels.size() != lattices.size()) {
    labels.clear();
    label_source = "theta";
    for (const auto& m : lattices) labels.push_back(m.basis()[1] / m.basis()[0]);
  }

  if (cg && !lattices.empty()) {
    stage(r, "galois_action", [&] {
      GaloisActionResult ga = galois_action_table(lattices, labels, *cg);
      Json j = to_json(ga);
      j["label_source"] = label_source;
      if (ga.mismatch) {
        j["mismatch"]["g"] = g;
        j["mismatch"]["provenance"] = ga.mismatch->provenance + "; g = " + std::to_string(g) + " is the plus-cuspidal dimension of level " + std::to_string(N);
      }
      return j;
    });
  } else {
    r["galois_action"] = Json{{"status", "skipped"}, {"reason", "needs a class group and the projected lattices"}};
  }
  return finish();
}

std::vector<LevelReport> analyze_levels(const std::vector<long>& levels, const Config& cfg) {
  cfg.validate();
  std::vector<LevelReport> out(levels.size());
  std::vector<std::exception_ptr> errs(levels.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < levels.size(); i = next++) {
      try {
        out[i] = analyze_level(levels[i], cfg);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  const unsigned width = std::min<unsigned>(cfg.jobs, static_cast<unsigned>(std::max<std::size_t>(1, levels.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace realmult
