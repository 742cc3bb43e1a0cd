#ifndef TRANSMUTE_PARSE_HPP
#define TRANSMUTE_PARSE_HPP

#include <stdexcept>
#include <string>

#include "transmute/base_dist.hpp"
#include "transmute/rtm.hpp"

namespace transmute {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Base grammar: `uniform`, `exp:beta=<r>`, `normal`, `cauchy`.
BaseDistPtr parse_base_spec(const std::string& spec);

enum class MapKind { quadratic, symmetric_cubic, polynomial };

// Parsed map spec. p1 is lambda/gamma/alpha1; p2 is alpha2.
struct MapSpec {
    MapKind kind;
    double p1 = 0.0;
    double p2 = 0.0;
    bool clip = false;
};

// Map grammar: `quad:lambda=<r>[,clip]`, `cubic:gamma=<r>`,
// `poly:a1=<r>,a2=<r>[,clip]`.
MapSpec parse_map_spec(const std::string& spec);

// Validity of a parsed spec without constructing the map.
ValidityReport check_map(const MapSpec& spec);

// Instantiates the map; throws InvalidMapError for inadmissible parameters.
MapPtr make_map(const MapSpec& spec);

}  // namespace transmute

#endif
