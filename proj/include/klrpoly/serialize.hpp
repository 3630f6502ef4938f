#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and DOT renderings shared by the CLI and the Python module.
 *
 * Every top-level JSON document carries "schema": "kl-rpoly/1".
 */

#include <string>

#include <json.hpp>

#include "klrpoly/bruhat.hpp"
#include "klrpoly/involution.hpp"
#include "klrpoly/paths.hpp"
#include "klrpoly/poly.hpp"

namespace klrpoly {

inline constexpr const char *kSchema = "kl-rpoly/1";

/// {"3": 1, "1": 1} for q^3 + q; {} for zero.
nlohmann::json to_json(const IntPolynomial &p);
/// [i, j]
nlohmann::json to_json(const Transposition &t);
/// {"start": "...", "labels": [[i,j],...], "nodes": ["...", ...]}
nlohmann::json to_json(const BruhatPath &p);
/// {"bottom", "sign", "total_length", "leg1", "leg2"}
nlohmann::json to_json(const VPath &p);
nlohmann::json to_json(const SIntervalReport &r);
nlohmann::json to_json(const RefinementReport &r);
/// {"schema", "n", "nodes": [...], "edges": [{"source","target","label"}]}
nlohmann::json to_json(const BruhatGraph &g);

/// digraph with one quoted node per permutation and label="(i,j)" edges.
std::string to_dot(const BruhatGraph &g);

} // namespace klrpoly
