#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcb/hc_model.hpp"
#include "hcb/principal_block.hpp"
#include "hcb/quiver_algebra.hpp"
#include "hcb/representation.hpp"
#include "hcb/symgroup.hpp"

namespace hcb {

using json = nlohmann::ordered_json;

struct QuiverSpec {
  Quiver quiver;
  std::vector<Relation> relations;
};

/// Throws InputError on malformed input (missing fields, unknown names, bad rationals).
QuiverSpec parse_quiver_spec(const json& j);
json to_json(const Quiver& quiver, const std::vector<Relation>& relations);

json read_json_file(const std::filesystem::path& path);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

/// {"dims": {vertex: d}, "maps": {arrow: rows}}. Missing arrows default to zero maps.
QuiverRep parse_rep(const Quiver& quiver, const json& j);
json rep_to_json(const Quiver& quiver, const QuiverRep& m);

json algebra_to_json(const FDAlgebra& algebra);
json serre_quotient_to_json(const SerreQuotient& q);

json to_json(const ParameterClass& cls);
json to_json(const IdealChain& chain);
json to_json(const LeafDescriptor& leaf);
json to_json(const K0Vector& v);
json block_to_json(const BlockModel& block);

std::string quiver_to_dot(const Quiver& quiver, const std::vector<std::string>& vertex_labels = {});
std::string block_to_dot(const BlockModel& block);

}  // namespace hcb
