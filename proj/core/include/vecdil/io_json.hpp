#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "vecdil/ehrhart.hpp"
#include "vecdil/polytope.hpp"

namespace vecdil {

// Raised on structurally invalid input (bad JSON, wrong shapes, bad rationals).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HRep parse_hrep(const std::string& text);
VRep parse_vrep(const std::string& text);

// Accepts either an H-representation or a V-representation object and
// returns the vertex form (enumerating vertices if needed).
VRep parse_polytope(const std::string& text, bool check_bounded = true);

std::string hrep_json(const HRep& h);
std::string vrep_json(const VRep& v);
std::string coeffs_json(const CoeffVector& cv);
std::string quasipoly_json(const MultiQuasiPoly& qp);
std::string chamber_json(const Chamber& ch);

}  // namespace vecdil
