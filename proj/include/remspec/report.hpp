#pragma once

#include <json.hpp>

#include "remspec/derivation.hpp"
#include "remspec/newton.hpp"
#include "remspec/spectrum.hpp"

namespace remspec {

// Stable machine-readable documents. Exact rational values are emitted as
// decimal strings ("p/q") so nothing is rounded.
using OrderedJson = nlohmann::ordered_json;

OrderedJson to_json(const LatticePolygon& polygon);
OrderedJson to_json(const NewtonReport& report);
OrderedJson to_json(const Derivation& derivation);
OrderedJson to_json(const SpectrumEntry& entry);
OrderedJson to_json(const PencilReport& report);
OrderedJson to_json(const IndecomposabilityReport& report);
OrderedJson to_json(const BoundsReport& report);

} // namespace remspec
