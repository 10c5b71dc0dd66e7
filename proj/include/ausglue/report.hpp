#pragma once

#include <map>
#include <string>
#include <vector>

#include "ausglue/ar.hpp"
#include "ausglue/glue.hpp"
#include "ausglue/tower.hpp"

namespace ausglue {

// Extra key/value pairs recorded under "parameters".
using Parameters = std::vector<std::pair<std::string, std::string>>;

// {input, parameters, summary, claims, passed}; keys keep a fixed order so
// output is byte-stable.
std::string report_json(const TowerReport& r, const Parameters& params = {});

std::string ar_json(const ARQuiver& q);
std::string ar_dot(const ARQuiver& q);

// Gabriel quiver of the glued category with one rank per copy; vertices are
// labelled X[j] with the dimension vector of X.
std::string glued_json(const Glued& s);
std::string glued_dot(const Glued& s);

std::string angles_json(const std::vector<Angle>& angles);

}  // namespace ausglue
