#include "document.hpp"

#include <cmath>

namespace mcx::cli {

namespace {

// Turns -0.0 into 0.0 so output does not depend on the sign of zero.
double clean(double x) { return x + 0.0; }

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  const auto it = doc.find(name);
  if (it == doc.end()) throw DocumentError(std::string("missing field \"") + name + "\"");
  return *it;
}

int read_level(const Json& doc) {
  const Json& n = field(doc, "n");
  if (!n.is_number_integer()) throw DocumentError("\"n\" must be an integer");
  const auto level = n.get<long long>();
  if (level < 1 || level > kMaxLevel) {
    throw DocumentError("\"n\" = " + std::to_string(level) + " outside [1, " +
                        std::to_string(kMaxLevel) + "]");
  }
  return static_cast<int>(level);
}

std::size_t read_dim(const Json& doc) {
  const Json& m = field(doc, "m");
  if (!m.is_number_integer() || m.get<long long>() < 1) {
    throw DocumentError("\"m\" must be a positive integer");
  }
  return m.get<std::size_t>();
}

Rep read_rep(const Json& doc, bool required) {
  const auto it = doc.find("rep");
  if (it == doc.end()) {
    if (required) throw DocumentError("missing field \"rep\"");
    return Rep::standard;
  }
  if (!it->is_string()) throw DocumentError("\"rep\" must be a string");
  return parse_rep(it->get<std::string>());
}

double read_real(const Json& x) {
  if (!x.is_number()) throw DocumentError("coefficient must be a number");
  const double v = x.get<double>();
  if (!std::isfinite(v)) throw DocumentError("coefficient must be finite");
  return v;
}

const Json& entries_of(const Json& doc, std::size_t expected) {
  const Json& entries = field(doc, "entries");
  if (!entries.is_array() || entries.size() != expected) {
    throw DocumentError("\"entries\" must be an array of " + std::to_string(expected) + " payloads");
  }
  return entries;
}

}  // namespace

Rep parse_rep(const std::string& name) {
  if (name == "standard" || name == "std") return Rep::standard;
  if (name == "idempotent" || name == "idem") return Rep::idempotent;
  throw DocumentError("unknown rep \"" + name + "\"");
}

const char* rep_name(Rep rep) { return rep == Rep::standard ? "standard" : "idempotent"; }

Multicomplex payload_to_standard(const Json& payload, int level, Rep rep) {
  if (rep == Rep::idempotent) return from_idempotent(payload_to_idempotent(payload, level, rep));
  if (!payload.is_array() || payload.size() != basis_size(level)) {
    throw DocumentError("standard payload needs " + std::to_string(basis_size(level)) +
                        " coefficients");
  }
  std::vector<double> coeffs;
  for (const Json& x : payload) coeffs.push_back(read_real(x));
  return {level, std::move(coeffs)};
}

IdempotentRep payload_to_idempotent(const Json& payload, int level, Rep rep) {
  if (level < 2) throw DocumentError("idempotent representation needs n >= 2");
  if (rep == Rep::standard) return to_idempotent(payload_to_standard(payload, level, rep));
  if (!payload.is_array() || payload.size() != idempotent_size(level)) {
    throw DocumentError("idempotent payload needs " + std::to_string(idempotent_size(level)) +
                        " [re, im] pairs");
  }
  std::vector<Complex> comps;
  for (const Json& z : payload) {
    if (!z.is_array() || z.size() != 2) throw DocumentError("idempotent component must be [re, im]");
    comps.emplace_back(read_real(z[0]), read_real(z[1]));
  }
  return {level, std::move(comps)};
}

Json payload(const IdempotentRep& value, Rep rep) {
  Json out = Json::array();
  if (rep == Rep::idempotent) {
    for (const Complex& z : value.comps()) out.push_back({clean(z.real()), clean(z.imag())});
  } else {
    const Multicomplex standard = from_idempotent(value);
    for (double x : standard.coeffs()) out.push_back(clean(x));
  }
  return out;
}

NumberDoc number_from_json(const Json& doc) {
  const int level = read_level(doc);
  const Rep rep = read_rep(doc, true);
  return {rep, payload_to_standard(field(doc, "coeffs"), level, rep)};
}

Json number_to_json(const Multicomplex& value, Rep rep) {
  Json coeffs = Json::array();
  if (rep == Rep::idempotent) {
    coeffs = payload(to_idempotent(value), rep);
  } else {
    for (double x : value.coeffs()) coeffs.push_back(clean(x));
  }
  return Json{{"n", value.level()}, {"rep", rep_name(rep)}, {"coeffs", std::move(coeffs)}};
}

Json number_to_json(const IdempotentRep& value, Rep rep) {
  return Json{{"n", value.level()}, {"rep", rep_name(rep)}, {"coeffs", payload(value, rep)}};
}

MatrixDoc matrix_from_json(const Json& doc) {
  const int level = read_level(doc);
  const std::size_t m = read_dim(doc);
  const Rep rep = read_rep(doc, false);
  const Json& entries = entries_of(doc, m * m);
  std::vector<IdempotentRep> values;
  for (const Json& e : entries) values.push_back(payload_to_idempotent(e, level, rep));
  return {rep, McMatrix(level, m, std::move(values))};
}

Json matrix_to_json(const McMatrix& value, Rep rep) {
  Json entries = Json::array();
  for (const IdempotentRep& e : value.entries()) entries.push_back(payload(e, rep));
  return Json{{"n", value.level()}, {"m", value.dim()}, {"rep", rep_name(rep)}, {"entries", std::move(entries)}};
}

KetDoc ket_from_json(const Json& doc) {
  const int level = read_level(doc);
  const std::size_t m = read_dim(doc);
  const Rep rep = read_rep(doc, false);
  const Json& entries = entries_of(doc, m);
  std::vector<IdempotentRep> values;
  for (const Json& e : entries) values.push_back(payload_to_idempotent(e, level, rep));
  return {rep, Ket(std::move(values))};
}

Json ket_to_json(const Ket& value, Rep rep) {
  Json entries = Json::array();
  for (const IdempotentRep& e : value.entries()) entries.push_back(payload(e, rep));
  return Json{{"n", value.level()}, {"m", value.dim()}, {"rep", rep_name(rep)}, {"entries", std::move(entries)}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace mcx::cli
