#pragma once

#include <optional>
#include <string>

#include "torspect/ideal.hpp"

#include <json.hpp>

namespace torspect {

/* JSON ideal format:
 *   {"prime": p, "vars": ["x","y","z"], "truncation": D (optional),
 *    "generators": [[{"c": coeff, "e": [a,b,c]}, ...], ...]}
 * Coefficients are arbitrary integers, reduced modulo p on load; every
 * generator must be homogeneous of degree >= 2. */

struct IdealFile {
    uint32_t prime = 0;
    std::optional<int> truncation;
    std::vector<HPoly> generators;  // reduced mod prime
};

IdealFile parse_ideal_json(const nlohmann::json& j, std::optional<uint32_t> prime_override);
IdealFile load_ideal_file(const std::string& path, std::optional<uint32_t> prime_override);
GradedIdeal build_ideal(const IdealFile& file);

nlohmann::json ideal_to_json(const GradedIdeal& I);

}  // namespace torspect
