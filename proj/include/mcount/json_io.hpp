#ifndef MCOUNT_JSON_IO_HPP
#define MCOUNT_JSON_IO_HPP

/*
 * JSON (de)serialization for polynomials and Schur vectors.
 *
 * Schemas:
 *   TruncatedQPoly: {"variable":"q",
 *                    "coefficients":[[degree,"num/den"],...],   (descending)
 *                    "trusted_min_degree": int | null}
 *   SchurVector:    {"n":int, "terms":{"2,1": <poly>, ...}}
 */

#include "mcount/qpoly.hpp"
#include "mcount/schur.hpp"

#include <json.hpp>

namespace mcount {

nlohmann::json qpoly_to_json(const TruncatedQPoly& p);
TruncatedQPoly qpoly_from_json(const nlohmann::json& j);

nlohmann::json schur_to_json(const SchurVector& v);
SchurVector schur_from_json(const nlohmann::json& j);

}  // namespace mcount

#endif  // MCOUNT_JSON_IO_HPP
