#ifndef OVERSCHUR_SERIALIZE_HPP
#define OVERSCHUR_SERIALIZE_HPP

#include <json.hpp>

#include <overschur/bijection.hpp>
#include <overschur/construction.hpp>
#include <overschur/identities.hpp>
#include <overschur/partition.hpp>

namespace overschur
{

// Canonical JSON forms:
//   overpartition  [{"value": int, "overlined": bool}, ...]
//   d-modular      [{"length": int, "label": "r"|"d-r"|"dbar"|"d"}, ...]
//   triple         {"alpha": [int], "beta": [int], "gamma": [int]}   (row lengths)
//   bounded triple {"m": int, "alpha": [int], "beta": [int], "gamma": [int]}   (part values)
//   report         {"identity", "d", "r", "order", "status", "at"?, "at_m"?, "lhs_coeff"?, "rhs_coeff"?}
// from_json throws nlohmann::json::exception on malformed input.

void to_json(nlohmann::json &j, const OverPart &p);
void from_json(const nlohmann::json &j, OverPart &p);
void to_json(nlohmann::json &j, const Overpartition &lambda);
void from_json(const nlohmann::json &j, Overpartition &lambda);

void to_json(nlohmann::json &j, const DModularPart &p);
void from_json(const nlohmann::json &j, DModularPart &p);
void to_json(nlohmann::json &j, const DModularOverpartition &mu);
void from_json(const nlohmann::json &j, DModularOverpartition &mu);

void to_json(nlohmann::json &j, const PartitionTriple &t);
void from_json(const nlohmann::json &j, PartitionTriple &t);

void to_json(nlohmann::json &j, const BoundedTriple &t);
void from_json(const nlohmann::json &j, BoundedTriple &t);

void to_json(nlohmann::json &j, const VerificationReport &rep);

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json bigint_to_json(const BigInt &v);

} // namespace overschur

#endif
