#include "realmult/quadorder.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "realmult/errors.hpp"
#include "realmult/quadratic_surd.hpp"

namespace realmult {

namespace {

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

bool is_valid_discriminant(const Integer& D) {
  if (D <= 0) return false;
  Integer r = mod_nonneg(D, 4);
  if (r != 0 && r != 1) return false;
  return !is_square(D);
}

QuadOrder order_from_disc(const Integer& D) {
  if (!is_valid_discriminant(D))
    throw Error(ErrorCode::InvalidDiscriminant, "D = " + D.get_str() + " is not a positive non-square 0 or 1 mod 4");
  QuadOrder o;
  o.D = D;
  o.dK = fundamental_discriminant(D, o.f);
  return o;
}

FundamentalUnit fundamental_unit(const QuadOrder& order) {
  const Integer& D = order.D;
  const Integer s = isqrt(D);
  Integer b = s;
  if (mod_nonneg(b - D, 2) != 0) b -= 1;
  // omega = (b + sqrt D)/2 is reduced, so its expansion is purely periodic.
  SurdExpansion e = expand_surd(QuadraticSurd{b, Integer(2), D});
  if (!e.preperiod.empty()) throw Error(ErrorCode::Internal, "reduced surd with a preperiod");
  Integer q2 = 1, q1 = 0;  // q_{i-2}, q_{i-1}
  for (const auto& a : e.period) {
    Integer q = a * q1 + q2;
    q2 = q1;
    q1 = q;
  }
  FundamentalUnit u;
  u.x = q1 * b + 2 * q2;
  u.y = q1;
  const Integer n4 = u.x * u.x - D * u.y * u.y;
  if (n4 == 4) u.norm = 1;
  else if (n4 == -4) u.norm = -1;
  else throw Error(ErrorCode::Internal, "unit norm check failed for D = " + D.get_str());
  Rational cx(u.x, 2), cy(u.y, 2);
  cx.canonicalize();
  cy.canonicalize();
  u.epsilon = AlgebraicReal(quadratic_field(D), std::vector<Rational>{cx, cy});
  return u;
}

bool Form::is_primitive() const {
  Integer g = realmult::gcd(realmult::gcd(a, b), c);
  return g == 1 || g == -1;
}

bool operator<(const Form& x, const Form& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.c < y.c;
}

std::string Form::to_string() const {
  return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

bool is_reduced(const Form& f) {
  const Integer D = f.discriminant();
  const Integer s = isqrt(D);
  const Integer a2 = 2 * abs(f.a);
  return f.b > 0 && f.b <= s && a2 + f.b > s && a2 - f.b <= s;
}

Form rho(const Form& f) {
  const Integer D = f.discriminant();
  const Integer s = isqrt(D);
  if (f.c == 0) throw Error(ErrorCode::InvalidArgument, "form represents zero");
  const Integer ac = abs(f.c);
  const Integer m = 2 * ac;
  const Integer t = -f.b;
  Integer b;
  if (ac > s) b = mod_nonneg(t + ac - 1, m) - ac + 1;
  else b = s - mod_nonneg(s - t, m);
  Form g{f.c, b, (b * b - D) / (4 * f.c)};
  return g;
}

Form reduce(const Form& f) {
  const Integer D = f.discriminant();
  if (!is_valid_discriminant(D)) throw Error(ErrorCode::InvalidDiscriminant, "form " + f.to_string() + " is not indefinite with non-square discriminant");
  Form g = f;
  for (int i = 0; i < 100000 && !is_reduced(g); ++i) g = rho(g);
  if (!is_reduced(g)) throw Error(ErrorCode::Internal, "reduction did not terminate for " + f.to_string());
  return g;
}

Form compose(const Form& f, const Form& g) {
  const Integer D = f.discriminant();
  if (g.discriminant() != D) throw Error(ErrorCode::InvalidArgument, "forms of different discriminant");
  const Integer s = (f.b + g.b) / 2;
  Integer x1, y1, x2, y2;
  const Integer g1 = gcdext(f.a, g.a, x1, y1);
  const Integer e = gcdext(g1, s, x2, y2);
  const Integer u = x2 * x1, v = x2 * y1, w = y2;
  Integer B = u * f.a * g.b + v * g.a * f.b + w * ((f.b * g.b + D) / 2);
  if (B % e != 0) throw Error(ErrorCode::Internal, "composition failed");
  B /= e;
  const Integer a3 = f.a * g.a / (e * e);
  const Integer m = 2 * abs(a3);
  B = mod_nonneg(B + abs(a3) - 1, m) - abs(a3) + 1;
  const Integer num = B * B - D;
  if (num % (4 * a3) != 0) throw Error(ErrorCode::Internal, "composition failed");
  return reduce(Form{a3, B, num / (4 * a3)});
}

Form principal_form(const Integer& D) {
  Integer b = mod_nonneg(D, 2);
  return Form{Integer(1), b, (b * b - D) / 4};
}

std::vector<Form> reduced_forms(const Integer& D) {
  if (!is_valid_discriminant(D)) throw Error(ErrorCode::InvalidDiscriminant, "D = " + D.get_str());
  const Integer s = isqrt(D);
  std::vector<Form> out;
  for (Integer b = 1; b <= s; ++b) {
    if (mod_nonneg(b - D, 2) != 0) continue;
    const Integer n = (D - b * b) / 4;  // -a c
    for (Integer a = 1; a * a <= n; ++a) {
      if (n % a != 0) continue;
      for (const Integer& d : {Integer(a), Integer(n / a)}) {
        const Integer c = n / d;
        for (int sg : {1, -1}) {
          Form f{sg * d, b, -sg * c};
          if (is_reduced(f) && f.is_primitive()) out.push_back(f);
        }
        if (a * a == n) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Form> rho_cycle(const Form& reduced) {
  std::vector<Form> out{reduced};
  Form g = rho(reduced);
  while (!(g == reduced)) {
    out.push_back(g);
    if (out.size() > 1000000) throw Error(ErrorCode::Internal, "cycle too long");
    g = rho(g);
  }
  return out;
}

namespace {

std::size_t lookup(const std::map<Form, std::size_t>& idx, const Form& f) {
  auto it = idx.find(reduce(f));
  if (it == idx.end()) throw Error(ErrorCode::Internal, "reduced form " + f.to_string() + " not in any cycle");
  return it->second;
}

}  // namespace

std::size_t ClassGroup::class_of(const Form& f) const {
  if (f.discriminant() != order.D) throw Error(ErrorCode::WrongOrder, "form " + f.to_string() + " has discriminant " + f.discriminant().get_str() + ", expected " + order.D.get_str());
  std::map<Form, std::size_t> idx;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (const auto& g : cycles[i]) idx[g] = i;
  return lookup(idx, f);
}

ClassGroup class_group(const QuadOrder& order) {
  ClassGroup cg;
  cg.order = order;
  const Integer& D = order.D;
  std::vector<Form> forms = reduced_forms(D);
  std::set<Form> seen;
  const Form principal = reduce(principal_form(D));
  std::vector<std::vector<Form>> cycles;
  for (const auto& f : forms) {
    if (seen.count(f)) continue;
    auto cyc = rho_cycle(f);
    for (const auto& g : cyc) seen.insert(g);
    auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn, cyc.end());
    cycles.push_back(std::move(cyc));
  }
  // Principal class first, the rest by smallest form.
  std::stable_sort(cycles.begin(), cycles.end(), [&](const auto& x, const auto& y) {
    bool px = std::find(x.begin(), x.end(), principal) != x.end();
    bool py = std::find(y.begin(), y.end(), principal) != y.end();
    if (px != py) return px;
    return x.front() < y.front();
  });
  cg.cycles = std::move(cycles);
  cg.h_plus = cg.cycles.size();
  cg.identity = 0;

  std::map<Form, std::size_t> idx;
  for (std::size_t i = 0; i < cg.cycles.size(); ++i)
    for (const auto& g : cg.cycles[i]) idx[g] = i;

  const std::size_t h = cg.h_plus;
  cg.table.assign(h, std::vector<std::size_t>(h, 0));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) cg.table[i][j] = lookup(idx, compose(cg.cycles[i].front(), cg.cycles[j].front()));
  cg.inverse.resize(h);
  for (std::size_t i = 0; i < h; ++i) {
    const Form& f = cg.cycles[i].front();
    cg.inverse[i] = lookup(idx, Form{f.a, -f.b, f.c});
  }
  const Form p0 = principal_form(D);
  cg.negative_principal = lookup(idx, Form{-p0.a, p0.b, -p0.c});

  bool ok = lookup(idx, principal) == cg.identity;
  for (std::size_t i = 0; i < h && ok; ++i) {
    ok = cg.table[cg.identity][i] == i && cg.table[i][cg.identity] == i && cg.table[i][cg.inverse[i]] == cg.identity;
    for (std::size_t j = 0; j < h && ok; ++j) {
      ok = cg.table[i][j] == cg.table[j][i];
      for (std::size_t k = 0; k < h && ok; ++k) ok = cg.table[cg.table[i][j]][k] == cg.table[i][cg.table[j][k]];
    }
  }

  // Wide classes: narrow classes modulo the class of the negated principal form.
  const std::size_t J = cg.negative_principal;
  cg.wide_of.assign(h, h);
  std::size_t nw = 0;
  for (std::size_t i = 0; i < h; ++i) {
    if (cg.wide_of[i] != h) continue;
    cg.wide_of[i] = nw;
    cg.wide_of[cg.table[i][J]] = nw;
    ++nw;
  }
  cg.h = nw;
  std::vector<std::size_t> rep(nw, h);
  for (std::size_t i = 0; i < h; ++i)
    if (rep[cg.wide_of[i]] == h) rep[cg.wide_of[i]] = i;
  cg.wide_table.assign(nw, std::vector<std::size_t>(nw, 0));
  for (std::size_t i = 0; i < nw; ++i)
    for (std::size_t j = 0; j < nw; ++j) cg.wide_table[i][j] = cg.wide_of[cg.table[rep[i]][rep[j]]];

  cg.unit = fundamental_unit(order);
  ok = ok && (h == nw || h == 2 * nw) && cg.table[J][J] == cg.identity;
  ok = ok && ((cg.unit.norm == -1) == (J == cg.identity));
  cg.axioms_verified = ok;
  if (!ok) throw Error(ErrorCode::Internal, "class group axioms failed for D = " + D.get_str());
  return cg;
}

IdealClass ideal_class_of(const PseudoLattice& m, const ClassGroup& cg) {
  EndomorphismRing er = endomorphism_ring(m);
  if (!er.real_multiplication)
    throw Error(ErrorCode::WrongOrder, "module has no real multiplication (slope degree " + std::to_string(er.theta_degree) + ")");
  const RMCertificate& cert = *er.certificate;
  if (cert.D != cg.order.D)
    throw Error(ErrorCode::WrongOrder, "module has discriminant " + cert.D.get_str() + ", class group has " + cg.order.D.get_str());
  IdealClass out;
  out.form = Form{cert.canonical_form[0], cert.canonical_form[1], cert.canonical_form[2]};
  out.narrow = cg.class_of(out.form);
  out.wide = cg.wide_of[out.narrow];
  return out;
}

UnitCheck is_unit_of(const AlgebraicReal& x, const QuadOrder& order) {
  UnitCheck r;
  IntPolynomial p = x.minimal_polynomial();
  r.degree = p.degree();
  if (r.degree == 1) {
    r.is_unit = x.is_rational() && (x.rational_value() == 1 || x.rational_value() == -1);
    return r;
  }
  if (r.degree > 2) {
    r.note = "degree " + std::to_string(r.degree) + " element is not in a quadratic order";
    return r;
  }
  if (p.coeff(2) != 1) {
    r.note = "not integral";
    return r;
  }
  const Integer c = p.coeff(0), b = p.coeff(1);
  if (c != 1 && c != -1) {
    r.note = "norm " + c.get_str();
    return r;
  }
  const Integer disc = b * b - 4 * c;
  if (disc % order.D != 0 || !is_square(disc / order.D)) {
    r.note = "not in the order of discriminant " + order.D.get_str();
    return r;
  }
  r.is_unit = true;
  return r;
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::verified: return "verified";
    case Tri::refuted: return "refuted";
    case Tri::undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

std::optional<ActionTable> build_action(const std::string& name, const std::vector<std::size_t>& cls,
                                        const std::vector<std::vector<std::size_t>>& table, std::size_t identity) {
  const std::size_t h = table.size();
  std::set<std::size_t> distinct(cls.begin(), cls.end());
  if (distinct.size() != cls.size() || cls.size() != h) return std::nullopt;
  std::vector<std::size_t> where(h);
  for (std::size_t i = 0; i < cls.size(); ++i) where[cls[i]] = i;
  ActionTable t;
  t.group = name;
  t.order = h;
  t.lattice_class = cls;
  t.perm.assign(h, std::vector<std::size_t>(cls.size()));
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t i = 0; i < cls.size(); ++i) t.perm[a][i] = where[table[a][cls[i]]];
  bool ok = true;
  for (std::size_t i = 0; i < cls.size(); ++i) ok = ok && t.perm[identity][i] == i;
  for (std::size_t a = 0; a < h && ok; ++a)
    for (std::size_t b = 0; b < h && ok; ++b)
      for (std::size_t i = 0; i < cls.size() && ok; ++i) ok = t.perm[table[a][b]][i] == t.perm[a][t.perm[b][i]];
  t.axioms_verified = ok;
  return t;
}

}  // namespace

GaloisActionResult galois_action_table(const std::vector<PseudoLattice>& lattices,
                                       const std::vector<AlgebraicReal>& units, const ClassGroup& cg) {
  if (lattices.size() != units.size())
    throw Error(ErrorCode::InvalidArgument, std::to_string(lattices.size()) + " lattices but " + std::to_string(units.size()) + " units");
  GaloisActionResult r;
  for (const auto& m : lattices) {
    IdealClass c = ideal_class_of(m, cg);
    r.narrow_classes.push_back(c.narrow);
    r.wide_classes.push_back(c.wide);
  }
  for (const auto& u : units) r.unit_labels.push_back(u.to_canonical());
  r.narrow = build_action("narrow", r.narrow_classes, cg.table, cg.identity);
  if (cg.h != cg.h_plus) r.wide = build_action("wide", r.wide_classes, cg.wide_table, cg.wide_of[cg.identity]);
  if (!r.narrow) {
    ClassCountMismatch mm;
    mm.h = cg.h;
    mm.h_plus = cg.h_plus;
    mm.lattices = lattices.size();
    mm.distinct_narrow = std::set<std::size_t>(r.narrow_classes.begin(), r.narrow_classes.end()).size();
    mm.distinct_wide = std::set<std::size_t>(r.wide_classes.begin(), r.wide_classes.end()).size();
    std::ostringstream os;
    os << "h_plus = " << cg.h_plus << " counts reduced-form cycles of discriminant " << cg.order.D
       << "; h = " << cg.h << " identifies classes differing by the negated principal form; "
       << mm.lattices << " lattices supplied, " << mm.distinct_narrow << " distinct narrow classes";
    mm.provenance = os.str();
    r.mismatch = mm;
  }
  return r;
}

}  // namespace realmult
