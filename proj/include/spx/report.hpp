#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spx/extremal.hpp"
#include "spx/spectral.hpp"
#include "spx/structure.hpp"

namespace spx {

using Json = nlohmann::ordered_json;

std::vector<int> vertex_list(VertexSet s);

Json to_json(const ForbiddenSpec& spec);
Json to_json(const SpectralResult& result);
Json to_json(const ExtremalReport& report);
Json to_json(const ExcessEstimate& estimate);
Json to_json(const PartitionReport& report);
Json to_json(const WLReport& report);
Json to_json(const Check& check);
Json to_json(const LemmaReport& report);

/// Aligned text table, one row per n.
std::string containment_table(const std::vector<ExtremalReport>& reports);
std::string extremal_text(const ExtremalReport& report);
std::string lemma_text(const LemmaReport& report);

}  // namespace spx
