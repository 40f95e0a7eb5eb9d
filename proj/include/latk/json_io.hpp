#pragma once

#include <json.hpp>

#include "latk/hyperbolic.hpp"
#include "latk/niemeier.hpp"
#include "latk/surface.hpp"

namespace latk {

// Lattice file format: {"rank": n, "gram": [[...]]}; entries are JSON
// integers or "a/b" strings.
nlohmann::json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const nlohmann::json& j);

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);
nlohmann::json ratvec_to_json(const RatVec& v);
RatVec ratvec_from_json(const nlohmann::json& j);

// Model dump: lattice + named classes; the characteristic-2 model also
// carries "delta"/"base" so the file doubles as a chamber spec.
nlohmann::json model_to_json(const SurfaceLatticeModel& m, const ChamberSpec* chamber = nullptr);

// Chamber file format: {"lattice": {...}, "delta": [[...]], "base": [...]}.
nlohmann::json chamber_to_json(const ChamberSpec& c);
ChamberSpec chamber_from_json(const nlohmann::json& j);

// Niemeier construction data: root-sum lattice plus glue vectors.
nlohmann::json niemeier_to_json(const NiemeierLattice& n);
Lattice niemeier_from_json(const nlohmann::json& j);  // rebuilds the overlattice

}  // namespace latk
