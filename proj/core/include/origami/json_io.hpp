#pragma once

#include <memory>

#include <json.hpp>

#include "origami/congruence.hpp"
#include "origami/cylinders.hpp"
#include "origami/origami.hpp"
#include "origami/sl2.hpp"
#include "origami/veech.hpp"

namespace origami {

// Serialization conventions: permutations as arrays of 1-based cycles,
// matrices as [[a,b],[c,d]], words as strings over {S,T,s,t} with lowercase
// meaning inverse.

nlohmann::json perm_to_json(const Perm& p);
Perm perm_from_json(const nlohmann::json& j, int degree);

nlohmann::json group_to_json(const PermGroup& g);
std::shared_ptr<const PermGroup> group_from_json(const nlohmann::json& j);

nlohmann::json origami_to_json(const RegularOrigami& o);
RegularOrigami origami_from_json(const nlohmann::json& j);

nlohmann::json perm_origami_to_json(const PermOrigami& p);
PermOrigami perm_origami_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Sl2Matrix& m);
Sl2Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const CylinderDecomposition& d);

nlohmann::json witness_to_json(const TncgWitness& w);
TncgWitness witness_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const TncgCertificate& c);
TncgCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json orbit_to_json(const OrbitGraph& g);
OrbitGraph orbit_from_json(const nlohmann::json& j);

nlohmann::json veech_to_json(const VeechGroup& v, const OrbitGraph& g);
// Reconstructs both from a cache entry written by veech_to_json.
std::pair<VeechGroup, OrbitGraph> veech_from_json(const nlohmann::json& j);

}  // namespace origami
