#ifndef CLUSTERFORGE_JSON_IO_HPP
#define CLUSTERFORGE_JSON_IO_HPP

#include <string>

#include "clusterforge/exchange_matrix.hpp"
#include "clusterforge/ice_quiver.hpp"
#include "clusterforge/quiver_rep.hpp"
#include "clusterforge/seed.hpp"

namespace clusterforge {

/*
 * JSON formats (writers emit compact text with keys in the order shown;
 * parse-then-write reproduces such text byte for byte):
 *
 *   matrix  {"n": 5, "r": 2, "rows": [[0,-1],[1,0],[-1,0],[0,-1],[0,1]]}
 *   quiver  {"vertices": 3, "frozen": [3], "arrows": [[1,2],[3,1]]}
 *   rep     {"quiver": {...}, "dim": [1,1],
 *            "arrows": [{"from":1,"to":2,"matrix":[[1]]}]}
 *
 * A seed file holds a matrix or a quiver object, optionally with a
 * "variables" array naming the initial cluster for display.  Every loader
 * validates the result and throws schema_error naming the offending field.
 */

ExchangeMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const ExchangeMatrix& m);

IceQuiver quiver_from_json(const std::string& text);
std::string quiver_to_json(const IceQuiver& q);

Seed seed_from_json(const std::string& text);

QuiverRep rep_from_json(const std::string& text);
std::string rep_to_json(const QuiverRep& rep);

// whole-file helpers; reading a missing file throws cluster_error
std::string load_text_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

} // namespace clusterforge

#endif
