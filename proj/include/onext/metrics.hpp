#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "onext/graph.hpp"
#include "onext/limits.hpp"

namespace onext {

using Rational = boost::multiprecision::cpp_rational;

// CSMA access proportions. `p[v]` is the theta-weighted share of independent
// sets (the empty set included) that contain v; `limit_p[v]` is its value as
// theta grows, #MIS containing v over #MIS.
struct AccessProfile {
    Rational theta;
    std::vector<Rational> p;
    std::vector<Rational> limit_p;
    VertexSet starved; // limit_p[v] == 0
};

// Throws InputError for theta <= 0 and ResourceError above
// limits.independent_set_family_vertices.
AccessProfile access_proportion(const Graph& g, const Rational& theta,
                                const Limits& limits = default_limits());

// Vertices in no maximum independent set.
VertexSet starvation_set(const Graph& g);

// Parses "50", "3/2" or "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

} // namespace onext
