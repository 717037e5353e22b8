#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "descentlab/descent.hpp"
#include "descentlab/hfe.hpp"

namespace descentlab {

using json = nlohmann::json;

// Canonical JSON: nlohmann objects keep keys sorted; dumping without
// indentation makes serialize-parse-serialize byte identical.
std::string canonical_dump(const json& j);
std::uint64_t fnv1a(const std::string& s);

json field_to_json(const Field& f);
std::shared_ptr<const Field> field_from_json(const json& j);

json unipoly_to_json(const UniPoly& f);
UniPoly unipoly_from_json(const json& j, const Field* k);

json multipoly_to_json(const MultiPoly& g);
MultiPoly multipoly_from_json(const json& j, const Field* f, std::uint32_t nvars);

json affine_to_json(const AffineMap& m);
AffineMap affine_from_json(const json& j, const Field* f);

json system_to_json(const PolySystem& sys);
PolySystem system_from_json(const json& j);

std::uint64_t system_hash(const PolySystem& sys);

json keypair_to_json(const HfeKeyPair& kp);
HfeKeyPair keypair_from_json(const json& j);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace descentlab
