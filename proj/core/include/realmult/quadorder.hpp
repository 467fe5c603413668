#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realmult/contfrac.hpp"
#include "realmult/number_field.hpp"
#include "realmult/pseudolattice.hpp"

namespace realmult {

struct QuadOrder {
  Integer dK;
  Integer f;
  Integer D;
};

QuadOrder order_from_disc(const Integer& D);
bool is_valid_discriminant(const Integer& D);

struct FundamentalUnit {
  AlgebraicReal epsilon;  // (x + y sqrt D) / 2 in Q(sqrt D)
  Integer x;
  Integer y;
  int norm = 0;
};

FundamentalUnit fundamental_unit(const QuadOrder& order);

// Indefinite binary quadratic form a x^2 + b x y + c y^2.
struct Form {
  Integer a, b, c;

  Integer discriminant() const { return b * b - 4 * a * c; }
  bool is_primitive() const;
  friend bool operator==(const Form& x, const Form& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
  friend bool operator<(const Form& x, const Form& y);
  std::string to_string() const;
};

bool is_reduced(const Form& f);
// One rho step (proper equivalence).
Form rho(const Form& f);
// Reduced form properly equivalent to f.
Form reduce(const Form& f);
// Dirichlet composition followed by reduction.
Form compose(const Form& f, const Form& g);
Form principal_form(const Integer& D);
// All reduced primitive forms of discriminant D.
std::vector<Form> reduced_forms(const Integer& D);
std::vector<Form> rho_cycle(const Form& reduced);

struct ClassGroup {
  QuadOrder order;
  std::vector<std::vector<Form>> cycles;  // narrow classes
  std::size_t h_plus = 0;
  std::size_t h = 0;
  std::size_t identity = 0;
  std::size_t negative_principal = 0;  // class of -(principal form)
  std::vector<std::vector<std::size_t>> table;  // narrow composition
  std::vector<std::size_t> inverse;
  std::vector<std::size_t> wide_of;  // narrow class -> wide class index
  std::vector<std::vector<std::size_t>> wide_table;
  bool axioms_verified = false;
  FundamentalUnit unit;

  std::size_t class_of(const Form& f) const;
};

ClassGroup class_group(const QuadOrder& order);

struct IdealClass {
  std::size_t narrow = 0;
  std::size_t wide = 0;
  Form form;
};

IdealClass ideal_class_of(const PseudoLattice& m, const ClassGroup& cg);

struct UnitCheck {
  bool is_unit = false;
  int degree = 0;
  std::string note;
};

UnitCheck is_unit_of(const AlgebraicReal& x, const QuadOrder& order);

enum class Tri { verified, refuted, undetermined };
const char* to_string(Tri t);

struct FieldDiagnostics {
  IntPolynomial min_poly;
  int degree_over_q = 0;
  Integer k_disc;  // k = Q(sqrt k_disc)
  std::vector<std::string> factors_over_k;
  bool factored = false;
  bool k_inside = false;  // k is contained in Q(lambda)
  int relative_degree = 0;  // [K : k]
  Tri totally_real = Tri::undetermined;
  Tri normal = Tri::undetermined;
  Tri abelian = Tri::undetermined;  // K|k Galois with abelian group
  std::string galois_group;
  std::vector<std::string> notes;
  bool skipped = false;
  std::string skip_reason;
};

constexpr int kDefaultMaxRelativeDegree = 4;

FieldDiagnostics field_diagnostics(const HeckeUnit& unit, const QuadOrder& order,
                                   int max_relative_degree = kDefaultMaxRelativeDegree);

struct ActionTable {
  std::string group;  // "narrow" or "wide"
  std::size_t order = 0;
  std::vector<std::size_t> lattice_class;  // class index of each lattice
  std::vector<std::vector<std::size_t>> perm;  // perm[a][i] = j
  bool axioms_verified = false;
};

struct ClassCountMismatch {
  std::size_t h = 0;
  std::size_t h_plus = 0;
  std::size_t lattices = 0;
  std::size_t distinct_narrow = 0;
  std::size_t distinct_wide = 0;
  std::string provenance;
};

struct GaloisActionResult {
  std::vector<std::size_t> narrow_classes;
  std::vector<std::size_t> wide_classes;
  std::vector<std::string> unit_labels;
  std::optional<ActionTable> narrow;
  std::optional<ActionTable> wide;
  std::optional<ClassCountMismatch> mismatch;
};

GaloisActionResult galois_action_table(const std::vector<PseudoLattice>& lattices,
                                       const std::vector<AlgebraicReal>& units, const ClassGroup& cg);

}  // namespace realmult
