#pragma once

#include <stdexcept>
#include <string>

#include "legknot/front_diagram.hpp"
#include "legknot/foliation_graph.hpp"
#include "legknot/movie.hpp"

namespace legknot::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parsers accept any key order; serializers emit the canonical order with
// two-space indentation, so serialize(parse(text)) is byte-stable on
// canonical documents.

front::TorusFrontDiagram parse_diagram(const std::string& text);
std::string serialize(const front::TorusFrontDiagram& d);

foliation::FoliationState parse_foliation(const std::string& text);
std::string serialize(const foliation::FoliationState& s);

movie::Movie parse_movie(const std::string& text);
std::string serialize(const movie::Movie& m);

movie::BifurcationGrid parse_grid(const std::string& text);
std::string serialize(const movie::BifurcationGrid& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace legknot::io
