#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace camoforge {

/// One product term: an input pattern over {0,1,-} and an output
/// pattern over {0,1}. A '1' in the output part means the cube asserts
/// that output (ON-set semantics).
struct Cube {
  std::string inputs;
  std::string outputs;

  bool operator==(const Cube&) const = default;
};

/// A two-level sum-of-products table in the espresso .pla dialect.
struct PlaTable {
  std::size_t num_inputs = 0;
  std::size_t num_outputs = 0;
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  std::vector<Cube> cubes;
  std::size_t declared_terms = 0;

  bool operator==(const PlaTable&) const = default;
};

/// Parses espresso-style PLA text. Supported directives: .i .o .p .ilb
/// .ob .type .e; only ON-set tables (".type f") are accepted. Cube rows
/// use {0,1,-} for inputs and {0,1} for outputs. '#' starts a comment.
/// Throws ParseError (with line number) on malformed input.
PlaTable parse_pla(const std::string& text);

/// Emits the table back as PLA text. parse_pla(serialize_pla(t)) == t.
std::string serialize_pla(const PlaTable& table);

} // namespace camoforge
