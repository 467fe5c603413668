#pragma once

#include <nlohmann/json.hpp>

#include "realmult/contfrac.hpp"
#include "realmult/modsym.hpp"
#include "realmult/pseudolattice.hpp"
#include "realmult/quadorder.hpp"

namespace realmult {

using Json = nlohmann::json;

// JSON views of library values. Algebraic numbers use their canonical text.
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntPolynomial& p);
Json to_json(const IntMatrix& m);
Json to_json(const AlgebraicReal& x);
Json to_json(const std::vector<AlgebraicReal>& xs);
Json to_json(const RootInterval& iv);
Json to_json(const FieldPtr& f);
Json to_json(const CFExpansion& cf);
Json to_json(const JacobiPerronExpansion& e);
Json to_json(const HeckeUnit& u);
Json to_json(const ConvergenceReport& r);
Json to_json(const RMCertificate& c);
Json to_json(const PseudoLattice& m);
Json to_json(const QuadOrder& o);
Json to_json(const FundamentalUnit& u);
Json to_json(const Form& f);
Json to_json(const ClassGroup& cg);
Json to_json(const FieldDiagnostics& d);
Json to_json(const GaloisActionResult& r);
Json to_json(const EigenOrbit& o);
Json to_json(const OrbitDecomposition& d);
Json to_json(const GenusData& g);

// {"code": ..., "message": ...} for a caught library error.
Json error_json(const std::exception& e);

}  // namespace realmult
