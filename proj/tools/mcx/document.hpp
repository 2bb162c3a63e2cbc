#pragma once

// JSON interchange documents.
//
//   NumberDocument  {"n": 3, "rep": "standard",   "coeffs": [x_0, x_1, ...]}
//                   {"n": 3, "rep": "idempotent", "coeffs": [[re, im], ...]}
//   MatrixDocument  {"n": 2, "m": 2, "rep": ..., "entries": [payload, ...]}  (row-major)
//   KetDocument     {"n": 2, "m": 2, "rep": ..., "entries": [payload, ...]}
//
// A payload is the "coeffs" array of a NumberDocument. Standard coefficients
// are in bitmask order; idempotent components are in ε order. "rep" defaults
// to "standard" in matrix and ket documents.

#include <string>

#include "json.hpp"
#include "mcx/hilbert.hpp"

namespace mcx::cli {

using Json = nlohmann::ordered_json;

/// Schema violation in an input document.
class DocumentError : public Error {
 public:
  using Error::Error;
};

enum class Rep { standard, idempotent };

Rep parse_rep(const std::string& name);
const char* rep_name(Rep rep);

struct NumberDoc {
  Rep rep = Rep::standard;
  Multicomplex value;
};

NumberDoc number_from_json(const Json& doc);
Json number_to_json(const Multicomplex& value, Rep rep);
Json number_to_json(const IdempotentRep& value, Rep rep);

/// Payload ("coeffs") only.
Json payload(const IdempotentRep& value, Rep rep);
IdempotentRep payload_to_idempotent(const Json& payload, int level, Rep rep);
Multicomplex payload_to_standard(const Json& payload, int level, Rep rep);

struct MatrixDoc {
  Rep rep = Rep::standard;
  McMatrix value;
};

MatrixDoc matrix_from_json(const Json& doc);
Json matrix_to_json(const McMatrix& value, Rep rep);

struct KetDoc {
  Rep rep = Rep::standard;
  Ket value;
};

KetDoc ket_from_json(const Json& doc);
Json ket_to_json(const Ket& value, Rep rep);

/// Parses JSON text; syntax errors become DocumentError.
Json parse_json(const std::string& text);

}  // namespace mcx::cli
