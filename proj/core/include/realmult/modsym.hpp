#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realmult/matrix.hpp"
#include "realmult/number_field.hpp"

namespace realmult {

// Genus of X0(N) from the index and the elliptic and cusp counts.
struct GenusData {
  long mu = 0;
  long nu2 = 0;
  long nu3 = 0;
  long cusps = 0;
  long genus = 0;
};
GenusData genus_data(long N);
long genus_formula(long N);

// Matrices [[a, b], [c, d]] with ad - bc = n, a > b >= 0, d > c >= 0.
std::vector<std::array<long, 4>> heilbronn_merel(long n);

// Weight-2 modular symbols for Gamma0(N) via Manin symbols (c : d) in P^1(Z/N).
// Elements of the ambient space are row vectors over the free Manin basis;
// a linear map is stored with row i holding the image of basis element i.
class ModularSymbolSpace {
 public:
  static ModularSymbolSpace build(long N);

  long level() const { return N_; }
  long genus() const { return static_cast<long>(lattice_.rows()); }
  std::size_t manin_count() const { return symbols_.size(); }
  const std::vector<std::pair<long, long>>& manin_symbols() const { return symbols_; }
  // Index of (c : d) or -1 when gcd(c, d, N) != 1.
  long symbol_index(long c, long d) const;
  std::size_t ambient_dimension() const { return basis_symbols_.size(); }
  const std::vector<std::size_t>& basis_symbols() const { return basis_symbols_; }
  // Image of Manin symbol i in the ambient basis.
  std::vector<Rational> symbol_coords(std::size_t i) const { return coords_.row(i); }
  std::size_t cusp_count() const { return cusps_.size(); }
  const std::vector<std::pair<Integer, Integer>>& cusps() const { return cusps_; }
  const RatMatrix& boundary() const { return boundary_; }
  const RatMatrix& star() const { return star_; }
  std::size_t cuspidal_dimension() const { return cuspidal_dim_; }
  // Z-basis (rows, ambient coordinates) of the integral cuspidal plus-subspace.
  const RatMatrix& lattice() const { return lattice_; }

  RatMatrix ambient_hecke(long n) const;
  // Rows of lattice() * ambient_hecke(n) written in the lattice basis.
  IntMatrix hecke(long n) const;

 private:
  long N_ = 1;
  std::vector<std::pair<long, long>> symbols_;
  std::vector<long> index_;
  RatMatrix coords_;
  std::vector<std::size_t> basis_symbols_;
  std::vector<std::pair<Integer, Integer>> cusps_;
  RatMatrix boundary_;
  RatMatrix star_;
  std::size_t cuspidal_dim_ = 0;
  RatMatrix lattice_;
  std::vector<std::size_t> lattice_pivots_;
  RatMatrix lattice_pivot_inverse_;
};

inline ModularSymbolSpace build_space(long N) { return ModularSymbolSpace::build(N); }
// Acts on period vectors as columns: T lambda = a lambda.
IntMatrix hecke_operator(const ModularSymbolSpace& space, long n);

struct EigenOrbit {
  IntPolynomial factor;  // irreducible, monic
  int degree = 0;
  int multiplicity = 1;
  std::vector<FieldPtr> embeddings;  // K_f at each real root of factor, increasing
  bool totally_real = false;
  bool anosov_hecke = false;
  // a_n in embeddings[0]; only n where the eigenvector is a T_n eigenvector.
  std::map<long, AlgebraicReal> eigenvalues;
  std::optional<long> old_level;
};

// a_n moved to another real embedding of K_f.
AlgebraicReal eigenvalue_in(const EigenOrbit& orbit, long n, std::size_t embedding);

struct OrbitDecomposition {
  long level = 0;
  long genus = 0;
  std::vector<EigenOrbit> orbits;
  std::string separating_operator;
  IntMatrix separating_matrix;
  IntPolynomial separating_charpoly;
  bool separated = false;
  std::string diagnostic;  // set when no candidate has a squarefree char poly
};

constexpr long kDefaultHeckeBound = 20;
constexpr long kDefaultSeparatingBound = 10;

OrbitDecomposition eigen_orbits(const ModularSymbolSpace& space, long hecke_bound = kDefaultHeckeBound,
                                long separating_bound = kDefaultSeparatingBound, bool detect_old = true);

struct EigenvectorResult {
  std::vector<AlgebraicReal> lambda;  // lambda_1 = 1, all positive
  std::vector<AlgebraicReal> raw;     // kernel vector before the basis change
  IntMatrix basis_change;             // U with lambda = U raw
  std::size_t embedding = 0;
  long search_bound = 0;              // bound at which positivity was reached
};

EigenvectorResult eigenvector_lattice(const ModularSymbolSpace& space, const OrbitDecomposition& dec,
                                      std::size_t orbit, std::size_t embedding,
                                      const std::vector<long>& positivity_bounds = {5, 10});

// U H U^-1 for a unimodular U.
IntMatrix conjugate_by(const IntMatrix& h, const IntMatrix& u);
// H v == a v exactly, entries of v and a in one field.
bool is_eigenvector(const IntMatrix& h, const std::vector<AlgebraicReal>& v, const AlgebraicReal& a);

}  // namespace realmult
