#pragma once

// JSON renderings of the verifier reports. Element ids are rendered through
// the geometry's labels where a geometry is at hand.

#include "chamberlab/axioms.hpp"
#include "chamberlab/building_block.hpp"
#include "chamberlab/embedding.hpp"
#include "chamberlab/parabolic.hpp"
#include "chamberlab/positions.hpp"
#include "json.hpp"

namespace chamberlab {

nlohmann::json to_json(const GroupElement& g);
nlohmann::json to_json(const DoubleCosetRecord& r, bool with_members);
nlohmann::json to_json(const LemmaReport& r);
nlohmann::json to_json(const NgonReport& r);
nlohmann::json to_json(const MetasymplecticReport& r);
nlohmann::json to_json(const OvReport& r, const IncidenceGeometry& ambient);
nlohmann::json to_json(const EmbeddingReport& r, const IncidenceGeometry& ambient);
nlohmann::json to_json(const BuildingBlockReport& r);
nlohmann::json to_json(const AlternatingReport& r);

}  // namespace chamberlab
