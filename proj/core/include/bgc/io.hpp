#pragma once

#include <string>
#include <string_view>

#include "bgc/double_complex.hpp"
#include "bgc/flat_model.hpp"

namespace bgc {

// Document formats. Scalars are string literals ("3/4", "1/2-1i") or JSON integers.
//
// complex: {"spaces":   [{"p":0,"q":0,"dim":1}, ...],
//           "dprime":   [{"p":0,"q":0,"matrix":[["1"]]}, ...],
//           "dsecond":  [...]}
// model:   {"n":1, "J1":[[...]], "J2":[[...]], "G":[[...]] | "auto:-J1J2", "label":"..."}
//
// Malformed JSON, missing keys, wrong types and bad literals throw ParseError.
// Shapes and the differential identities are left to validate()/validateModel().

DoubleComplex parseComplex(std::string_view json);
std::string complexToJson(const DoubleComplex& c);

FlatBiGcModel parseModel(std::string_view json);
std::string modelToJson(const FlatBiGcModel& m);

/// Reads a whole file; throws Error if it cannot be opened.
std::string readFile(const std::string& path);

}  // namespace bgc
