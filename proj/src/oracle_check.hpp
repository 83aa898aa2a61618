#pragma once

// Cross-check of the triangle counter against the closed-form products.

#include <cstdint>
#include <string>
#include <vector>

#include "torus.hpp"

namespace tmirror::torus {

enum class Configuration {
    XX, // slopes 0, 3, 6: X_i X_j in Y
    YX, // slopes 0, 6, 9: Y_i X_j in Z
    XY, // slopes 0, 3, 9: X_i Y_j in Z, compared with Y_j X_i
};

struct OracleComparison {
    Configuration configuration = Configuration::XX;
    std::int64_t base_index = 0;
    bool match = false;
    std::string detail; // first mismatching bin, empty on success
};

// One comparison per (configuration, base point): 3 + 6 + 3 in total.
std::vector<OracleComparison> oracle_comparisons(Exponent truncation, OracleOptions options = {});

bool oracle_vs_theta(Exponent truncation, OracleOptions options = {});

std::string configuration_name(Configuration c);

} // namespace tmirror::torus
