// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of the library's value types (schema version 1).
 *
 * Conventions:
 *  - ring element: [a, b] with each coefficient a JSON number when it fits
 *    in 53 bits, otherwise a decimal string;
 *  - projective point: {"p": ring, "q": ring};
 *  - matrix: [[m11, m12], [m21, m22]];
 *  - path: {"base_index", "mode", "vertices"};
 *  - angle word: {"base_index", "values"};
 *  - window: {"mode", "row_offset", "col_offset", "entries"};
 *  - triple: {"a", "b", "x"}.
 * Decoding throws std::invalid_argument with a message naming the offending
 * field.  Encoders use insertion-ordered objects so equal inputs serialise
 * byte-identically.
 */

#include "farey3d/friezes.hpp"
#include "farey3d/lambda.hpp"
#include "farey3d/tilings.hpp"

#include <json.hpp>

namespace farey3d {

using Json = nlohmann::ordered_json;

Json encode(const Int& n);
Json encode(const EInt& x);
Json encode(const ProjPoint& f);
Json encode(const Mat2& m);
Json encode(const PathRep& p);
Json encode(const AngleSeq& a);
Json encode(const TilingWindow& w);
Json encode(const TilingTriple& t);
Json encode(const FriezeBand& b);

Int decode_int(const Json& j);
EInt decode_eint(const Json& j);
ProjPoint decode_point(const Json& j);
Mat2 decode_mat2(const Json& j);
PathRep decode_path(const Json& j);
AngleSeq decode_angles(const Json& j);
TilingWindow decode_window(const Json& j);
TilingTriple decode_triple(const Json& j);

std::vector<ProjPoint> decode_points(const Json& j);

}  // namespace farey3d
