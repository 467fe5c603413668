// One line per acceptance criterion: PASS/FAIL, elapsed time, limit.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sys/wait.h>

#include "oracles.hpp"
#include "realmult/realmult.hpp"

using namespace realmult;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Periodic expansions gathered by criterion 1, re-checked by criterion 2.
std::vector<JacobiPerronExpansion> g_periodic;

AlgebraicReal random_surd(std::mt19937_64& rng, std::string& poly_text) {
  std::uniform_int_distribution<long> mag(1, 50), sign(0, 1);
  for (;;) {
    long c[3];
    for (auto& x : c) x = mag(rng) * (sign(rng) ? 1 : -1);
    if (c[2] < 0)
      for (auto& x : c) x = -x;
    const long disc = c[1] * c[1] - 4 * c[0] * c[2];
    if (disc <= 0 || is_square(Integer(disc))) continue;
    IntPolynomial p({Integer(c[0]), Integer(c[1]), Integer(c[2])});
    auto roots = isolate_real_roots(p);
    FieldPtr f = RealNumberField::from_root(p, roots.back());
    AlgebraicReal t = AlgebraicReal::generator(f);
    if (t <= AlgebraicReal(1)) continue;
    poly_text = to_string(p);
    return t;
  }
}

Outcome c1_jp_cf() {
  Outcome o;
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 50; ++i) {
    std::string text;
    AlgebraicReal t = random_surd(rng, text);
    auto jp = jp_digit_stream(JPState({t}), 200);
    auto cf = cf_digits(t, 200);
    o.require(jp.size() == 200 && cf.size() == 200, "short stream for " + text);
    for (std::size_t k = 0; k < std::min(jp.size(), cf.size()); ++k)
      o.require(jp[k].size() == 1 && jp[k][0] == cf[k], "digit " + std::to_string(k) + " differs for " + text);
    auto e = jp_expand(JPState({t}), 2000);
    o.require(e.status == JPStatus::periodic, "no period detected for " + text);
    auto c = cf_expand(t);
    o.require(e.preperiod_digits.size() == c.preperiod.size() && e.period_digits.size() == c.period.size(),
              "JP and CF period structure differ for " + text);
    if (e.status == JPStatus::periodic) g_periodic.push_back(e);
  }
  return o;
}

bool unit_certificate(const JacobiPerronExpansion& e, std::string& why) {
  const Integer det = determinant(e.period_matrix);
  if (abs(det) != 1) return why = "|det A| != 1", false;
  HeckeUnit u = hecke_unit(e);
  if (abs(u.char_poly.coeff(0)) != 1) return why = "P(A)(0) is not +-1", false;
  if (!verify_perron_eigenvector(e.period_matrix, JPState(e.period_state), u)) return why = "A v != lambda v", false;
  return true;
}

Outcome c2_unit_certificate() {
  Outcome o;
  o.require(g_periodic.size() == 50, "criterion 1 did not supply 50 periodic expansions");
  for (const auto& e : g_periodic) {
    std::string why;
    o.require(unit_certificate(e, why), why);
  }
  // level pipeline
  auto r = analyze_level(23, Config{});
  for (const auto& emb : r.body["embeddings"]) {
    if (emb["jp"]["status"] != "periodic") continue;
    for (const auto& [k, v] : emb["jp"]["hecke_unit"]["certificate"].items())
      if (v == "refuted") o.require(false, "level 23 certificate field " + k + " refuted");
  }
  return o;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> k(-3, 3);
  for (int s = 0; s < 6; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    IntMatrix e = IntMatrix::identity(n);
    e(i, j) = k(rng);
    u = e * u;
  }
  if (rng() & 1) {
    IntMatrix swap = IntMatrix::identity(n);
    swap(0, 0) = 0;
    swap(0, n - 1) = 1;
    swap(n - 1, n - 1) = 0;
    swap(n - 1, 0) = 1;
    u = swap * u;
  }
  return u;
}

Outcome c3_basis_changes() {
  Outcome o;
  std::mt19937_64 rng(7);
  FieldPtr cubic = RealNumberField::from_root_index(IntPolynomial({Integer(-1), Integer(-1), Integer(-1), Integer(1)}), 0);
  AlgebraicReal l = AlgebraicReal::generator(cubic);
  const PseudoLattice mods[] = {
      from_periods({AlgebraicReal(1), AlgebraicReal::generator(quadratic_field(Integer(2)))}),
      from_periods({AlgebraicReal(1), AlgebraicReal::generator(quadratic_field(Integer(13))) / AlgebraicReal(3)}),
      from_periods({AlgebraicReal(1), l, l * l})};
  for (int i = 0; i < 100; ++i) {
    const PseudoLattice& m = mods[i % 3];
    IntMatrix u = random_unimodular(rng, m.rank());
    o.require(abs(determinant(u)) == 1, "generated change is not unimodular");
    o.require(equals(m, transform(from_periods(m.basis()), u)), "module changed under a unimodular basis change");
  }
  // n = 2: theta' = (c + d theta) / (a + b theta) with a positive-preserving change
  std::uniform_int_distribution<long> small(0, 4);
  int tested = 0;
  for (int i = 0; tested < 100 && i < 10000; ++i) {
    std::string text;
    AlgebraicReal t = random_surd(rng, text);
    const long a = small(rng) + 1, b = small(rng), c = small(rng), d0 = small(rng) + 1;
    // [[a, b], [c, d]] with det +-1 and nonnegative entries keeps (1, theta) positive
    long d = d0;
    if (a * d - b * c != 1 && a * d - b * c != -1) {
      if (b == 0) continue;
      if ((1 + b * c) % a == 0) d = (1 + b * c) / a;
      else continue;
      if (d < 0) continue;
    }
    AlgebraicReal t2 = (AlgebraicReal(Integer(c)) + AlgebraicReal(Integer(d)) * t) / (AlgebraicReal(Integer(a)) + AlgebraicReal(Integer(b)) * t);
    if (t2.sign() <= 0) continue;
    auto e1 = jp_expand(JPState({t}));
    auto e2 = jp_expand(JPState({t2}));
    if (e1.status != JPStatus::periodic || e2.status != JPStatus::periodic) {
      o.require(false, "quadratic expansion not periodic for " + text);
      continue;
    }
    auto u1 = hecke_unit(e1), u2 = hecke_unit(e2);
    o.require(u1.min_poly == u2.min_poly && compare(u1.value, u2.value) == Ordering::equal, "lambda_A changed for " + text);
    ++tested;
  }
  o.require(tested == 100, "only " + std::to_string(tested) + " positive changes generated");
  return o;
}

Outcome c4_class_groups() {
  Outcome o;
  for (long D = 2; D < 200; ++D) {
    if (!is_valid_discriminant(Integer(D))) continue;
    auto cg = class_group(order_from_disc(Integer(D)));
    auto br = oracle::indefinite_classes(D, std::max<long>(D, 30));
    const std::string tag = "D = " + std::to_string(D);
    o.require(cg.axioms_verified, tag + ": group axioms");
    o.require(static_cast<long>(cg.h_plus) == br.narrow, tag + ": h_plus " + std::to_string(cg.h_plus) + " vs brute force " + std::to_string(br.narrow));
    o.require(static_cast<long>(cg.h) == br.wide, tag + ": h " + std::to_string(cg.h) + " vs brute force " + std::to_string(br.wide));
    // pairwise: forms in one cycle share a component; distinct cycles do not
    std::vector<long> comp_of_cycle, wide_of_cycle;
    for (const auto& cyc : cg.cycles) {
      auto c0 = br.component(to_long(cyc[0].a), to_long(cyc[0].b), to_long(cyc[0].c));
      o.require(c0.has_value(), tag + ": reduced form outside the search box");
      for (const auto& f : cyc) o.require(br.component(to_long(f.a), to_long(f.b), to_long(f.c)) == c0, tag + ": cycle split by brute force");
      comp_of_cycle.push_back(c0.value_or(-1));
      wide_of_cycle.push_back(br.wide_component(to_long(cyc[0].a), to_long(cyc[0].b), to_long(cyc[0].c)).value_or(-1));
    }
    for (std::size_t i = 0; i < comp_of_cycle.size(); ++i)
      for (std::size_t j = i + 1; j < comp_of_cycle.size(); ++j) {
        o.require(comp_of_cycle[i] != comp_of_cycle[j], tag + ": two cycles are equivalent");
        o.require((cg.wide_of[i] == cg.wide_of[j]) == (wide_of_cycle[i] == wide_of_cycle[j]), tag + ": wide classes disagree");
      }
  }
  for (long D = 2; D < 500; ++D) {
    if (!is_valid_discriminant(Integer(D))) continue;
    auto u = fundamental_unit(order_from_disc(Integer(D)));
    o.require(u.x * u.x - Integer(D) * u.y * u.y == 4 * u.norm, "Pell identity fails at D = " + std::to_string(D));
    auto hit = oracle::pell_search(D, 100000);
    if (hit) o.require(u.y == hit->y && u.x == hit->x, "unit is not fundamental at D = " + std::to_string(D));
  }
  return o;
}

Outcome c5_genus() {
  Outcome o;
  for (long N = 1; N <= 100; ++N) {
    auto s = build_space(N);
    o.require(s.genus() == genus_formula(N), "genus mismatch at N = " + std::to_string(N));
    o.require(s.genus() == oracle::genus(N).genus, "oracle genus mismatch at N = " + std::to_string(N));
  }
  return o;
}

Outcome c6_hecke_laws() {
  Outcome o;
  for (long N : {11, 23, 29, 31, 37}) {
    auto s = build_space(N);
    std::vector<IntMatrix> T(13);
    for (long n = 1; n <= 12; ++n) T[n] = s.hecke(n);
    const std::string tag = "N = " + std::to_string(N);
    o.require(T[1] == IntMatrix::identity(T[1].rows()), tag + ": T1 != I");
    for (long m = 1; m <= 12; ++m)
      for (long n = 1; n <= 12; ++n) {
        o.require(T[m] * T[n] == T[n] * T[m], tag + ": T" + std::to_string(m) + " and T" + std::to_string(n) + " do not commute");
        if (m * n <= 12 && std::gcd(m, n) == 1) o.require(T[m * n] == T[m] * T[n], tag + ": multiplicativity at " + std::to_string(m * n));
      }
    for (long p : {2L, 3L}) {
      for (long q = p; q * p <= 12; q *= p) {
        IntMatrix expect = T[p] * T[q];
        if (N % p) expect = expect - Integer(p) * T[q / p];
        o.require(T[q * p] == expect, tag + ": recurrence at " + std::to_string(q * p));
      }
    }
  }
  return o;
}

Outcome c7_level23() {
  Outcome o;
  auto s = build_space(23);
  IntMatrix t2 = s.hecke(2), t4 = s.hecke(4);
  Integer tr2 = t2(0, 0) + t2(1, 1), tr4 = t4(0, 0) + t4(1, 1);
  mpq_class o2 = oracle::hecke_trace(23, 2), o4 = oracle::hecke_trace(23, 4);
  o.require(Rational(tr2) == o2 && Rational(tr4) == o4, "traces disagree with Eichler-Selberg");
  // T4 = T2^2 - 2 gives Tr T2^2 = Tr T4 + 2 g; det from Newton
  mpq_class sq = o4 + 4;
  mpq_class det = (o2 * o2 - sq) / 2;
  IntPolynomial expect({Integer(det.get_num()), Integer(-o2.get_num()), Integer(1)});
  o.require(det.get_den() == 1 && o2.get_den() == 1, "non-integral trace oracle");
  o.require(charpoly(t2) == expect, "T2 char poly differs from trace-formula prediction");
  o.require(expect == IntPolynomial({Integer(-1), Integer(1), Integer(1)}), "T2 char poly is not x^2 + x - 1");

  auto r = analyze_level(23, Config{});
  const Json& b = r.body;
  o.require(b["genus"] == 2, "g != 2");
  o.require(b["orbits"]["orbits"].size() == 1, "orbit count != 1");
  o.require(b["orbits"]["orbits"][0]["degree"] == 2 && b["orbits"]["orbits"][0]["anosov"] == true, "orbit not Anosov-Hecke of degree 2");
  for (const auto& e : b["embeddings"]) {
    o.require(e["eigenvector"]["exact_eigenvector"] == "verified", "eigenvector not exact");
    o.require(e["eigenvector"]["lambda"][1].get<std::string>().rfind("poly=-1,1,1;", 0) == 0, "eigenvector not over Q(sqrt 5)");
    o.require(e["endomorphism"]["real_multiplication"] == true && e["endomorphism"]["theta_degree"] == 2, "theta not quadratic");
    const std::string st = e["jp"]["status"];
    o.require(st == "periodic" || st == "not_periodic_within_bound", "JP status " + st);
    if (st == "periodic") {
      for (const auto& [k, v] : e["jp"]["hecke_unit"]["certificate"].items())
        if (v == "refuted") o.require(false, "unit certificate " + k);
    }
  }
  if (b["embeddings"][0]["jp"]["status"] == "periodic")
    o.require(b["field_diagnostics"].contains("galois_group") && !b["field_diagnostics"].contains("error"), "field_diagnostics did not complete");
  return o;
}

Outcome c8_level37() {
  Outcome o;
  auto r = analyze_level(37, Config{});
  const Json& b = r.body;
  o.require(b["genus"] == 2, "g != 2");
  o.require(b["construction"]["applies"] == false, "construction claimed to apply");
  o.require(b["construction"]["reason"].get<std::string>().find("no Anosov-Hecke eigenform") != std::string::npos, "reason text");
  o.require(b["orbits"]["orbits"].size() == 2, "orbit count != 2");
  for (const auto& orb : b["orbits"]["orbits"]) o.require(orb["degree"] == 1, "orbit not rational");
  return o;
}

void check_class_action(const Json& b, Outcome& o, const std::string& tag) {
  static const std::set<std::string> tri{"verified", "refuted", "undetermined"};
  if (b.contains("hR_vs_g")) {
    o.require(tri.count(b["hR_vs_g"]["h_equals_g"].get<std::string>()) == 1, tag + ": h = g not three-valued");
    o.require(tri.count(b["hR_vs_g"]["h_plus_equals_g"].get<std::string>()) == 1, tag + ": h+ = g not three-valued");
  }
  if (!b.contains("galois_action") || b["galois_action"].contains("status")) return;
  const Json& ga = b["galois_action"];
  const bool table = ga.contains("narrow_table") || ga.contains("wide_table");
  o.require(table != ga.contains("mismatch"), tag + ": need exactly one of table and mismatch");
  for (const char* k : {"narrow_table", "wide_table"})
    if (ga.contains(k)) o.require(ga[k]["axioms_verified"] == true, tag + ": action axioms fail");
  if (ga.contains("mismatch")) {
    const Json& m = ga["mismatch"];
    o.require(m.contains("h") && m.contains("h_plus") && m.contains("g") && !m["provenance"].get<std::string>().empty(), tag + ": mismatch lacks h, h_plus, g or provenance");
  }
}

Outcome c9_class_action() {
  Outcome o;
  for (long N : {23, 29, 31}) check_class_action(analyze_level(N, Config{}).body, o, "N = " + std::to_string(N));
  // the table path itself, on a case where classes are distinct
  auto cg = class_group(order_from_disc(Integer(40)));
  auto m0 = from_periods({AlgebraicReal(1), AlgebraicReal::generator(quadratic_field(Integer(10)))});
  auto m1 = from_periods({AlgebraicReal(1), AlgebraicReal::generator(quadratic_field(Integer(10))) / AlgebraicReal(2)});
  auto ga = galois_action_table({m0, m1}, {AlgebraicReal(1), AlgebraicReal(2)}, cg);
  o.require(ga.narrow && ga.narrow->axioms_verified && !ga.mismatch, "D = 40 table path");
  auto bad = galois_action_table({m0, m0}, {AlgebraicReal(1), AlgebraicReal(2)}, cg);
  o.require(bad.mismatch && bad.mismatch->h == 2 && !bad.mismatch->provenance.empty(), "D = 40 mismatch path");
  return o;
}

std::string strip_timing(const std::string& s) {
  Json j = Json::parse(s);
  j.erase("timing_seconds");
  return j.dump(2);
}

std::string run_cli(const std::string& args, int& code) {
  std::string out;
  FILE* p = ::popen((std::string(REALMULT_CLI) + " " + args).c_str(), "r");
  if (!p) {
    code = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = ::pclose(p);
  code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

Outcome c10_determinism() {
  Outcome o;
  int c1 = 0, c2 = 0;
  auto a = run_cli("analyze --level 23 --json", c1);
  auto b = run_cli("analyze --level 23 --json", c2);
  o.require(c1 == 0 && c2 == 0, "CLI exit code");
  if (c1 == 0 && c2 == 0) o.require(strip_timing(a) == strip_timing(b), "CLI runs differ");
  Config cfg;
  o.require(analyze_level(23, cfg).dump(false) == analyze_level(23, cfg).dump(false), "library runs differ");
  auto dir = std::filesystem::temp_directory_path() / ("realmult-accept-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  cfg.cache_dir = dir.string();
  auto r = analyze_level(23, cfg);
  cache_put(r, cfg);
  auto back = cache_get(23, cfg);
  o.require(back && back->dump(true) == r.dump(true), "cache round trip");
  int c3 = 0;
  auto cached = run_cli("analyze --level 23 --json --cache-dir " + dir.string(), c3);
  o.require(c3 == 0 && cached == r.dump(true) + "\n", "CLI did not serve the cached report byte-exactly");
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const Criterion all[] = {
      {1, "JP/CF agreement on 50 random quadratic surds", 10, c1_jp_cf},
      {2, "unit certificate on every periodic expansion", 10, c2_unit_certificate},
      {3, "module equality and lambda_A invariance under basis changes", 30, c3_basis_changes},
      {4, "class groups vs brute force; Pell identities", 60, c4_class_groups},
      {5, "plus-cuspidal dimension equals the genus for N <= 100", 120, c5_genus},
      {6, "Hecke algebra laws at 11, 23, 29, 31, 37", 60, c6_hecke_laws},
      {7, "level 23 pipeline", 60, c7_level23},
      {8, "level 37 negative control", 60, c8_level37},
      {9, "three-valued class action diagnostics", 60, c9_class_action},
      {10, "determinism and cache round trip", 120, c10_determinism},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.limit && o.ok) {
      o.ok = false;
      o.detail = "over the time limit";
    }
    std::printf("[%s] criterion %2d: %s (%.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, dt, c.limit,
                o.ok ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
