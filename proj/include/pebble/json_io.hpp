#pragma once

#include "pebble/graph.hpp"
#include "pebble/reduction.hpp"
#include "pebble/solvability.hpp"

#include <string>

namespace pebble {

// File formats:
//   graph        {"n": 3, "edges": [[0,1],[1,2]]}
//   config       {"pebbles": [c0, ..., c_{n-1}]}
//   certificate  {"moves": [[i, j, count], ...]}
//   instance     {"ground_set_size": 8, "sets": [[0,1,2,3], ...]}
// Readers throw InputError on malformed documents.

Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

Configuration config_from_json(const std::string& text);
std::string config_to_json(const Configuration& c);

MoveCertificate certificate_from_json(const std::string& text);
std::string certificate_to_json(const MoveCertificate& m);

X4CInstance instance_from_json(const std::string& text);
std::string instance_to_json(const X4CInstance& x);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace pebble
