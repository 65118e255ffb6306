#pragma once

#include <string>

#include <json.hpp>

#include "wkl/fock.hpp"
#include "wkl/pkn.hpp"

namespace wkl::cli {

using Json = nlohmann::ordered_json;

// Serializes with 17 significant digits for doubles; key order is insertion order.
std::string dump(const Json& j, int indent = 2);

Json to_json(Complex z);
Json to_json(const CMatrix& m);  // row-major nested arrays of {re, im}
Json to_json(const CVector& v);
Json to_json(const FockVector& v);
Json to_json(const NCCoords& c);

// Parses "1", "-2.5", "i", "-i", "3i", "1+2i", "0.5-1e-3i".
Complex parse_complex(const std::string& text);
// Parses a nested array such as [[1,0],[i,1]]; entries are complex literals or {"re":..,"im":..}.
CMatrix parse_matrix(const std::string& text);
CVector parse_vector(const std::string& text);

struct GroupArg {
    BlockSpec spec;
    bool sl2 = false;  // SL(2,C) elements in the SU(1,1) realization
};
// "sl2", "su11", "su21", "su22", "su31", ...
GroupArg parse_group(const std::string& text);

}  // namespace wkl::cli
