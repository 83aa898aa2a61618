#pragma once

// Batch commands behind the CLI. Each returns a Report holding both the
// text and the JSON rendering, so output is independent of the caller.

#include <string>
#include <string_view>

#include <json.hpp>

#include "series.hpp"
#include "theta.hpp"

namespace tmirror::cli {

inline constexpr int kSchemaVersion = 1;

struct Report {
    std::string command;
    bool passed = true;
    nlohmann::ordered_json json;
    std::string text;
};

// order_x is in x = y^4 units; throws InvalidArgument if order_x < 1.
Exponent y_order(std::int64_t order_x);

Report run_theta(theta::Family family, std::int64_t index, std::int64_t order_x);

// which: products, commutativity, associativity, mumford, oracle, matrix, relation.
Report run_verify(std::string_view which, std::int64_t order_x);

// Throws PrecisionError naming the required order when order_x cannot
// certify n_terms coefficients.
Report run_jcheck(std::int64_t order_x, int n_terms);

Report run_matrix(std::int64_t order_x);
Report run_relation(std::int64_t order_x);

// Smallest order_x for which run_jcheck certifies n_terms coefficients.
std::int64_t required_order_x(int n_terms);

} // namespace tmirror::cli
