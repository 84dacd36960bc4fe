#pragma once

#include <string>

#include "liecat/categories.hpp"

namespace liecat {

/// Realization spec files are `key = value` text:
///
///   family = matrix | algebra | halfspace | trivial | order | entropy | action
///   n = <count>                      matrix, halfspace, entropy, inner matrix/halfspace
///   dim = <count>                    algebra
///   structure_constants = c,c,...    algebra, flattened c[i][j][k]
///   unit_coords = u,u,...            algebra
///   dim_X = <count>                  trivial, action
///   monoid = matrix|algebra|halfspace  inner monoid of trivial / action
///   action = linear | scale | translate
///
/// Reals are written with 17 significant digits so a write/parse round
/// trip is bit-exact. Parsing validates the result (algebra associativity
/// and unit laws included) and throws InvalidSpec on any failure.
Realization parse_realization_spec(const std::string& text);
std::string write_realization_spec(const Realization& c);

/// Reads a file; throws InvalidSpec if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace liecat
