#include "camoforge/pla.hpp"

#include <optional>
#include <sstream>

#include "camoforge/errors.hpp"

namespace camoforge {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::size_t parse_count(const std::string& tok, int line_no, const char* what) {
  std::size_t pos = 0;
  long value = -1;
  try {
    value = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string(what) + " expects a number, got '" + tok + "'");
  }
  if (pos != tok.size() || value < 0)
    throw ParseError(line_no, std::string(what) + " expects a non-negative number, got '" + tok + "'");
  return static_cast<std::size_t>(value);
}

} // namespace

PlaTable parse_pla(const std::string& text) {
  PlaTable table;
  std::optional<std::size_t> num_inputs;
  std::optional<std::size_t> num_outputs;
  std::optional<std::size_t> declared_terms;
  bool saw_end = false;
  bool saw_cube = false;

  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);

    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (saw_end)
      throw ParseError(line_no, "content after .e");

    const std::string& head = tokens[0];
    if (head[0] == '.') {
      if (head == ".i") {
        if (tokens.size() != 2) throw ParseError(line_no, ".i expects one argument");
        if (num_inputs) throw ParseError(line_no, "duplicate .i");
        if (saw_cube) throw ParseError(line_no, ".i after cube rows");
        num_inputs = parse_count(tokens[1], line_no, ".i");
        if (*num_inputs == 0) throw ParseError(line_no, ".i must be at least 1");
      } else if (head == ".o") {
        if (tokens.size() != 2) throw ParseError(line_no, ".o expects one argument");
        if (num_outputs) throw ParseError(line_no, "duplicate .o");
        if (saw_cube) throw ParseError(line_no, ".o after cube rows");
        num_outputs = parse_count(tokens[1], line_no, ".o");
        if (*num_outputs == 0) throw ParseError(line_no, ".o must be at least 1");
      } else if (head == ".p") {
        if (tokens.size() != 2) throw ParseError(line_no, ".p expects one argument");
        if (declared_terms) throw ParseError(line_no, "duplicate .p");
        declared_terms = parse_count(tokens[1], line_no, ".p");
      } else if (head == ".ilb") {
        if (!num_inputs) throw ParseError(line_no, ".ilb before .i");
        if (tokens.size() - 1 != *num_inputs)
          throw ParseError(line_no, ".ilb expects " + std::to_string(*num_inputs) + " names");
        table.input_labels.assign(tokens.begin() + 1, tokens.end());
      } else if (head == ".ob") {
        if (!num_outputs) throw ParseError(line_no, ".ob before .o");
        if (tokens.size() - 1 != *num_outputs)
          throw ParseError(line_no, ".ob expects " + std::to_string(*num_outputs) + " names");
        table.output_labels.assign(tokens.begin() + 1, tokens.end());
      } else if (head == ".type") {
        if (tokens.size() != 2) throw ParseError(line_no, ".type expects one argument");
        if (tokens[1] != "f")
          throw ParseError(line_no, "unsupported PLA type '" + tokens[1] + "' (only ON-set '.type f' tables)");
      } else if (head == ".e") {
        saw_end = true;
      } else {
        throw ParseError(line_no, "unknown directive '" + head + "'");
      }
      continue;
    }

    // Cube row.
    if (!num_inputs || !num_outputs)
      throw ParseError(line_no, "cube row before .i/.o");
    if (tokens.size() != 2)
      throw ParseError(line_no, "cube row expects an input part and an output part");
    const std::string& in = tokens[0];
    const std::string& out = tokens[1];
    if (in.size() != *num_inputs)
      throw ParseError(line_no, "input part has width " + std::to_string(in.size()) +
                                    ", expected " + std::to_string(*num_inputs));
    if (out.size() != *num_outputs)
      throw ParseError(line_no, "output part has width " + std::to_string(out.size()) +
                                    ", expected " + std::to_string(*num_outputs));
    for (char c : in)
      if (c != '0' && c != '1' && c != '-')
        throw ParseError(line_no, std::string("invalid input character '") + c + "'");
    for (char c : out)
      if (c != '0' && c != '1')
        throw ParseError(line_no, std::string("invalid output character '") + c + "'");
    table.cubes.push_back({in, out});
    saw_cube = true;
  }

  if (!num_inputs) throw ParseError("missing .i directive");
  if (!num_outputs) throw ParseError("missing .o directive");
  if (declared_terms && *declared_terms != table.cubes.size())
    throw ParseError(".p declares " + std::to_string(*declared_terms) + " terms but " +
                     std::to_string(table.cubes.size()) + " cube rows found");

  table.num_inputs = *num_inputs;
  table.num_outputs = *num_outputs;
  table.declared_terms = declared_terms.value_or(table.cubes.size());
  if (table.input_labels.empty())
    for (std::size_t i = 0; i < table.num_inputs; ++i)
      table.input_labels.push_back("in" + std::to_string(i));
  if (table.output_labels.empty())
    for (std::size_t i = 0; i < table.num_outputs; ++i)
      table.output_labels.push_back("out" + std::to_string(i));
  return table;
}

std::string serialize_pla(const PlaTable& table) {
  std::ostringstream out;
  out << ".i " << table.num_inputs << "\n";
  out << ".o " << table.num_outputs << "\n";
  out << ".ilb";
  for (const auto& name : table.input_labels) out << ' ' << name;
  out << "\n.ob";
  for (const auto& name : table.output_labels) out << ' ' << name;
  out << "\n.p " << table.cubes.size() << "\n";
  for (const auto& cube : table.cubes) out << cube.inputs << ' ' << cube.outputs << "\n";
  out << ".e\n";
  return out.str();
}

} // namespace camoforge
