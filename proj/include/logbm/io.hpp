#ifndef LOGBM_IO_HPP
#define LOGBM_IO_HPP

#include <string>

#include "logbm/measure.hpp"
#include "logbm/polytope.hpp"
#include "logbm/zonoid.hpp"

namespace logbm {

// JSON formats (IEEE doubles throughout):
//   body:     { "dim": n, "normals": [[...],...], "supports": [...] }
//   zonotope: { "dim": n, "generators": [[...],...] }
//   measure:  { "dim": n, "directions": [[...],...], "weights": [...] }
// Loaders re-canonicalize directions and merge duplicates (bodies keep the
// binding support, measures add weights).

SymmetricPolytope load_body(const std::string& path);
void save_body(const SymmetricPolytope& body, const std::string& path);

EvenDiscreteMeasure load_measure(const std::string& path);
void save_measure(const EvenDiscreteMeasure& measure, const std::string& path);

Zonotope load_zonotope(const std::string& path);
void save_zonotope(const Zonotope& z, const std::string& path);

std::string body_to_json(const SymmetricPolytope& body);
std::string measure_to_json(const EvenDiscreteMeasure& measure);

}  // namespace logbm

#endif  // LOGBM_IO_HPP
