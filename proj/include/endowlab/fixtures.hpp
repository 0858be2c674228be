#pragma once

#include "endowlab/instance.hpp"

// Small hand-checkable instances shared by the self-test and the test suites.
namespace endowlab::fixtures {

// X = {x, y}, base {{x}, {x,y}}.
FiniteSpace two_point_space();

// Over Fn({0,1},2): {((0:0),{x}), ((0:0),{x,y}), ((0:1),{x,y})}.
CoverName i1_name(const ForcingNotion& cohen, const FiniteSpace& space);

// The I1 name repeated `copies` times over Fn({0,1},2).
Scenario i1_scenario(Property property, std::size_t copies = 3);

// Measure algebra k=1 with {({0},{x}), ({0},{x,y}), ({1},{x,y})}.
Scenario measure_analog_scenario(Property property, std::size_t copies = 3);

// Fn({0,1},2), X = {x, y} with base {{x}, {y}} and only
// stabilization_index many names: no level at or above the floor.
Scenario no_headroom_scenario();

// Fn({0,1},2), X = {x, y, z}, base {{x,y}, {z}}, name {(∅,{x,y}), (∅,{z})}.
// Nothing in the name contains {y, z}.
Scenario tamper_scenario();

}  // namespace endowlab::fixtures
