#pragma once

#include <string>

#include "geoclique/graph.hpp"

namespace geoclique {

// {"n":int,"edges":[[u,v],...],"weights":[...]}; weights omitted when unweighted.
std::string save_graph_json(const Graph& g);
Graph load_graph_json(const std::string& text);

// "p edge n m" header, "e u v" lines with 1-based ids, optional "n v w" weights.
std::string save_dimacs(const Graph& g);
Graph load_dimacs(const std::string& text);

// Picks the format from the first non-space character.
Graph load_graph(const std::string& text);

}  // namespace geoclique
