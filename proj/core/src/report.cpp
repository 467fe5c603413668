#include "realmult/report.hpp"

#include "realmult/errors.hpp"

namespace realmult {

Json to_json(const Integer& x) { return x.get_str(); }

Json to_json(const Rational& x) { return to_fraction_string(x); }

Json to_json(const IntPolynomial& p) {
  return Json{{"coefficients", coefficient_strings(p)}, {"text", to_string(p)}};
}

Json to_json(const IntMatrix& m) { return to_string_rows(m); }

Json to_json(const AlgebraicReal& x) { return x.to_canonical(); }

Json to_json(const std::vector<AlgebraicReal>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.to_canonical());
  return a;
}

Json to_json(const RootInterval& iv) { return Json::array({to_fraction_string(iv.lo), to_fraction_string(iv.hi)}); }

Json to_json(const FieldPtr& f) {
  return Json{{"polynomial", to_json(f->polynomial())}, {"root", to_json(f->interval())}, {"degree", f->degree()}};
}

namespace {

Json digits_json(const std::vector<Integer>& d) {
  Json a = Json::array();
  for (const auto& x : d) a.push_back(x.get_str());
  return a;
}

Json digit_rows(const std::vector<std::vector<Integer>>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(digits_json(r));
  return a;
}

}  // namespace

Json to_json(const CFExpansion& cf) {
  return Json{{"preperiod", digits_json(cf.preperiod)}, {"period", digits_json(cf.period)}};
}

Json to_json(const JacobiPerronExpansion& e) {
  Json j{{"dimension", e.dimension},
         {"status", to_string(e.status)},
         {"steps", e.steps},
         {"initial", to_json(e.initial)},
         {"preperiod_length", e.preperiod_digits.size()},
         {"period_length", e.period_digits.size()},
         {"preperiod_digits", digit_rows(e.preperiod_digits)},
         {"period_digits", digit_rows(e.period_digits)}};
  if (e.status == JPStatus::periodic) {
    j["period_matrix"] = to_json(e.period_matrix);
    j["period_state"] = to_json(e.period_state);
  }
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

Json to_json(const HeckeUnit& u) {
  Json conj = Json::array();
  for (const auto& iv : u.conjugates) conj.push_back(to_json(iv));
  return Json{{"lambda", to_json(u.value)},
              {"approx", std::to_string(u.value.approx())},
              {"char_poly", to_json(u.char_poly)},
              {"min_poly", to_json(u.min_poly)},
              {"real_roots", conj},
              {"perron_index", u.perron_index}};
}

Json to_json(const ConvergenceReport& r) {
  Json up = Json::array(), lo = Json::array();
  for (const auto& x : r.error_upper) up.push_back(std::to_string(x.get_d()));
  for (const auto& x : r.error_lower) lo.push_back(std::to_string(x.get_d()));
  return Json{{"error_upper", up}, {"error_lower", lo}, {"monotone", r.monotone}};
}

Json to_json(const RMCertificate& c) {
  return Json{{"theta", to_json(c.theta)},
              {"min_poly", to_json(c.min_poly)},
              {"canonical_theta", to_json(c.canonical_theta)},
              {"canonical_form", Json::array({c.canonical_form[0].get_str(), c.canonical_form[1].get_str(), c.canonical_form[2].get_str()})},
              {"D", c.D.get_str()},
              {"dK", c.dK.get_str()},
              {"f", c.f.get_str()}};
}

Json to_json(const PseudoLattice& m) {
  return Json{{"generators", to_json(m.generators())}, {"basis", to_json(m.basis())}, {"rank", m.rank()}};
}

Json to_json(const QuadOrder& o) { return Json{{"D", o.D.get_str()}, {"dK", o.dK.get_str()}, {"f", o.f.get_str()}}; }

Json to_json(const FundamentalUnit& u) {
  return Json{{"epsilon", to_json(u.epsilon)}, {"x", u.x.get_str()}, {"y", u.y.get_str()}, {"norm", u.norm}};
}

Json to_json(const Form& f) { return Json::array({f.a.get_str(), f.b.get_str(), f.c.get_str()}); }

Json to_json(const ClassGroup& cg) {
  Json reps = Json::array();
  for (const auto& c : cg.cycles) reps.push_back(to_json(c.front()));
  return Json{{"order", to_json(cg.order)},
              {"h", cg.h},
              {"h_plus", cg.h_plus},
              {"classes", reps},
              {"narrow_table", cg.table},
              {"wide_of", cg.wide_of},
              {"wide_table", cg.wide_table},
              {"negative_principal", cg.negative_principal},
              {"axioms_verified", cg.axioms_verified},
              {"fundamental_unit", to_json(cg.unit)}};
}

Json to_json(const FieldDiagnostics& d) {
  Json j{{"min_poly", to_json(d.min_poly)},
         {"degree_over_q", d.degree_over_q},
         {"k", "Q(sqrt(" + d.k_disc.get_str() + "))"},
         {"totally_real", to_string(d.totally_real)},
         {"normal", to_string(d.normal)},
         {"abelian", to_string(d.abelian)},
         {"notes", d.notes}};
  if (d.factored) {
    j["factors_over_k"] = d.factors_over_k;
    j["k_inside"] = d.k_inside;
    j["relative_degree"] = d.relative_degree;
  }
  if (!d.galois_group.empty()) j["galois_group"] = d.galois_group;
  if (d.skipped) j["skipped"] = d.skip_reason;
  return j;
}

namespace {

Json action_json(const ActionTable& t) {
  return Json{{"group", t.group}, {"order", t.order}, {"lattice_class", t.lattice_class}, {"permutations", t.perm}, {"axioms_verified", t.axioms_verified}};
}

}  // namespace

Json to_json(const GaloisActionResult& r) {
  Json j{{"narrow_classes", r.narrow_classes}, {"wide_classes", r.wide_classes}, {"unit_labels", r.unit_labels}};
  if (r.narrow) j["narrow_table"] = action_json(*r.narrow);
  if (r.wide) j["wide_table"] = action_json(*r.wide);
  if (r.mismatch) {
    const auto& m = *r.mismatch;
    j["mismatch"] = Json{{"code", "ClassCountMismatch"},
                         {"h", m.h},
                         {"h_plus", m.h_plus},
                         {"lattices", m.lattices},
                         {"distinct_narrow", m.distinct_narrow},
                         {"distinct_wide", m.distinct_wide},
                         {"provenance", m.provenance}};
  }
  return j;
}

Json to_json(const EigenOrbit& o) {
  Json ap = Json::object();
  for (const auto& [n, a] : o.eigenvalues) ap[std::to_string(n)] = to_json(a);
  Json emb = Json::array();
  for (const auto& f : o.embeddings) emb.push_back(to_json(f->interval()));
  Json j{{"factor", to_json(o.factor)},
         {"degree", o.degree},
         {"multiplicity", o.multiplicity},
         {"Kf", to_json(o.factor)},
         {"embeddings", emb},
         {"totally_real", o.totally_real},
         {"anosov", o.anosov_hecke},
         {"ap", ap}};
  if (o.old_level) j["old_level"] = *o.old_level;
  return j;
}

Json to_json(const OrbitDecomposition& d) {
  Json orbits = Json::array();
  for (const auto& o : d.orbits) orbits.push_back(to_json(o));
  Json j{{"level", d.level},
         {"genus", d.genus},
         {"separated", d.separated},
         {"separating_operator", d.separating_operator},
         {"separating_charpoly", to_json(d.separating_charpoly)},
         {"orbits", orbits}};
  if (!d.diagnostic.empty()) j["diagnostic"] = d.diagnostic;
  return j;
}

Json to_json(const GenusData& g) {
  return Json{{"mu", g.mu}, {"nu2", g.nu2}, {"nu3", g.nu3}, {"cusps", g.cusps}, {"genus", g.genus}};
}

Json error_json(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) return Json{{"code", to_string(err->code())}, {"message", err->what()}};
  return Json{{"code", "Internal"}, {"message", e.what()}};
}

}  // namespace realmult
