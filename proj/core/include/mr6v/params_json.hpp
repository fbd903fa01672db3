#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mr6v/boundary.hpp"
#include "mr6v/params.hpp"
#include "mr6v/rational.hpp"

namespace mr6v {

/// The JSON parameter-file schema shared by the CLI subcommands. Rationals
/// travel as strings in the core text format (JSON numbers cannot hold them):
///
///   { "c": "1", "u": ["1"], "v": ["0"],
///     "boundary": { "north": ["1","2"], "south": ["1","1"],
///                   "east":  ["1","0"], "west":  ["1","1"] } }
///
/// "c" is required; "u", "v" and "boundary" are required by the subcommands
/// that consume them.
struct ParamsFile {
  Rational c;
  std::vector<Rational> u, v;
  std::optional<Boundary> boundary;

  InhomParams make_params() const {
    if (u.empty() || v.empty())
      throw Error(Violation::ParseError, "parameter file lacks \"u\" or \"v\"");
    return InhomParams(u, v, c);
  }
  const Boundary& require_boundary() const {
    if (!boundary) throw Error(Violation::ParseError, "parameter file lacks \"boundary\"");
    return *boundary;
  }
};

ParamsFile parse_params_json(const std::string& text);
ParamsFile load_params_file(const std::string& path);

}  // namespace mr6v
