#pragma once

#include <json.hpp>

#include "hivekit/hive.hpp"
#include "hivekit/instance.hpp"
#include "hivekit/oracle.hpp"

namespace hivekit {

using json = nlohmann::json;

json ring_to_json(const RingConfig& cfg);
RingConfig ring_from_json(const json& j);

// {"rows":n,"cols":k,"data":[[scalar,...],...]}; integers are accepted in data.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const RingConfig& cfg);

json lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const json& j, const RingConfig& cfg);  // lattice object or bare matrix
json submodule_to_json(const Submodule& V);

json hive_to_json(const Hive& H);
Hive hive_from_json(const json& j);
json type_to_json(const HiveType& t);
json lr_to_json(const LRFilling& f);
LRFilling lr_from_json(const json& j);

json oracle_to_json(const OracleResult& r);
json instance_to_json(const InstanceSpec& spec, const RandomPair& pair);

json parse_json_text(const std::string& text);  // throws InputError
json read_json_file(const std::string& path);   // throws InputError

}  // namespace hivekit
