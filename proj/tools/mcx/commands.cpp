#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "document.hpp"
#include "expression.hpp"
#include "mcx/ideal.hpp"
#include "render.hpp"

namespace mcx::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

/// Domain result that still produced output (a singular determinant).
class FlaggedResult : public Error {
 public:
  using Error::Error;
};

enum class Format { standard, idempotent, json };

struct Options {
  int level = 2;
  bool level_given = false;
  std::string format;
  std::optional<double> tol;
  std::string in_path;
  std::string out_path;
  std::vector<std::string> exprs;
  std::string mask;
  std::string to;
};

std::string read_input(const Options& o, std::istream& in) {
  if (!o.in_path.empty()) {
    std::ifstream f(o.in_path, std::ios::binary);
    if (!f) throw IoError("cannot open input file '" + o.in_path + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::optional<Format> parse_format(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "std" || s == "standard") return Format::standard;
  if (s == "idem" || s == "idempotent") return Format::idempotent;
  return Format::json;
}

void check_doc_level(const Options& o, int level) {
  if (o.level_given && o.level != level) {
    throw DocumentError("document level " + std::to_string(level) + " differs from --n " +
                        std::to_string(o.level));
  }
}

std::string emit_number(const Multicomplex& v, Format format, Rep json_rep, double tol) {
  switch (format) {
    case Format::standard:
      return render_standard(v, tol);
    case Format::idempotent:
      return render_idempotent(to_idempotent(v), tol);
    case Format::json:
      break;
  }
  return number_to_json(v, json_rep).dump();
}

/// Output follows the input: idempotent when the expression is written over ε.
Format natural_format(const Expr& expr) {
  return mentions_epsilon(expr) ? Format::idempotent : Format::standard;
}

/// Single number input: a positional expression or a NumberDocument.
struct NumberInput {
  Multicomplex value;
  Format default_format;
  Rep rep;
};

NumberInput read_number(const Options& o, std::istream& in, const EvalOptions& eval) {
  if (!o.exprs.empty()) {
    if (o.exprs.size() != 1) throw DocumentError("expected a single expression");
    const Expr expr = parse(o.exprs.front(), o.level);
    return {evaluate(expr, o.level, eval), natural_format(expr), Rep::standard};
  }
  NumberDoc doc = number_from_json(parse_json(read_input(o, in)));
  check_doc_level(o, doc.value.level());
  return {std::move(doc.value), Format::json, doc.rep};
}

std::string cmd_eval(const Options& o, std::istream& in) {
  const double tol = o.tol.value_or(kDefaultTol);
  const EvalOptions eval{tol};
  const std::optional<Format> format = parse_format(o.format);
  std::vector<std::string> sources = o.exprs;
  if (sources.empty()) {
    std::istringstream lines(read_input(o, in));
    for (std::string line; std::getline(lines, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      sources.push_back(line);
    }
  }
  std::string out;
  for (const std::string& s : sources) {
    const Expr expr = parse(s, o.level);
    out += emit_number(evaluate(expr, o.level, eval), format.value_or(natural_format(expr)), Rep::standard, tol) +
           "\n";
  }
  return out;
}

std::string cmd_convert(const Options& o, std::istream& in) {
  NumberDoc doc = number_from_json(parse_json(read_input(o, in)));
  check_doc_level(o, doc.value.level());
  Rep target = doc.rep == Rep::standard ? Rep::idempotent : Rep::standard;
  if (!o.to.empty()) target = parse_rep(o.to);
  return number_to_json(doc.value, target).dump() + "\n";
}

/// "1,3" -> {1, 3}
std::vector<int> parse_mask(const std::string& text) {
  std::vector<int> units;
  std::istringstream items(text);
  for (std::string item; std::getline(items, item, ',');) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used == 0 || used != item.size()) throw DocumentError("bad --mask entry '" + item + "'");
    units.push_back(k);
  }
  return units;
}

std::string cmd_conj(const Options& o, std::istream& in) {
  const double tol = o.tol.value_or(kDefaultTol);
  const NumberInput input = read_number(o, in, EvalOptions{tol});
  std::uint32_t mask = 0;
  for (int k : parse_mask(o.mask)) {
    if (k < 1 || k > input.value.level()) {
      throw IndexError("mask unit " + std::to_string(k) + " outside [1, " +
                       std::to_string(input.value.level()) + "]");
    }
    mask ^= 1U << (k - 1);
  }
  const Multicomplex result = conjugate(input.value, ConjugationMask(input.value.level(), mask));
  return emit_number(result, parse_format(o.format).value_or(input.default_format), input.rep, tol) + "\n";
}

std::string cmd_norm(const Options& o, std::istream& in) {
  const double tol = o.tol.value_or(kDefaultTol);
  const NumberInput input = read_number(o, in, EvalOptions{tol});
  const Multicomplex result = from_idempotent(mnorm(to_idempotent(input.value)).to_rep());
  return emit_number(result, parse_format(o.format).value_or(input.default_format), input.rep, tol) + "\n";
}

std::vector<std::size_t> read_index_list(const Json& query, const char* name, int level) {
  const auto it = query.find(name);
  if (it == query.end() || !it->is_array()) {
    throw DocumentError(std::string("\"") + name + "\" must be an array of 1-based indices");
  }
  std::vector<std::size_t> out;
  for (const Json& k : *it) {
    if (!k.is_number_integer()) throw DocumentError("ideal indices must be integers");
    const long long v = k.get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > idempotent_size(level)) {
      throw IndexError("ideal index " + std::to_string(v) + " outside [1, " +
                       std::to_string(idempotent_size(level)) + "]");
    }
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

Json index_list(const IdealSpec& ideal) {
  Json out = Json::array();
  for (std::size_t p : ideal.indices()) out.push_back(p + 1);
  return out;
}

std::string cmd_ideal(const Options& o, std::istream& in) {
  const double tol = o.tol.value_or(kDefaultTol);
  const Json query = parse_json(read_input(o, in));
  if (!query.is_object()) throw DocumentError("ideal query must be a JSON object");
  if (!query.contains("op") || !query["op"].is_string()) throw DocumentError("missing \"op\"");
  if (!query.contains("n") || !query["n"].is_number_integer()) throw DocumentError("missing \"n\"");
  const std::string op = query["op"].get<std::string>();
  const int level = query["n"].get<int>();
  check_idempotent_level(level);
  check_doc_level(o, level);

  Flavor flavor = Flavor::multicomplex;
  if (query.contains("flavor")) {
    const std::string f = query["flavor"].get<std::string>();
    if (f == "multiperplex") {
      flavor = Flavor::multiperplex;
    } else if (f != "multicomplex") {
      throw DocumentError("unknown flavor \"" + f + "\"");
    }
  }
  auto ideal = [&](const char* name) { return IdealSpec(level, read_index_list(query, name, level), flavor); };
  auto operand = [&]() {
    if (!query.contains("x")) throw DocumentError("missing operand \"x\"");
    NumberDoc x = number_from_json(query["x"]);
    detail::require_same_level(level, x.value.level(), "ideal operand");
    return x;
  };

  Json result;
  if (op == "generator") {
    const Rep rep = query.contains("rep") ? parse_rep(query["rep"].get<std::string>()) : Rep::standard;
    result = number_to_json(generator(ideal("J")), rep);
  } else if (op == "contains") {
    result = contains(ideal("J"), to_idempotent(operand().value), tol);
  } else if (op == "meet") {
    result = index_list(meet(ideal("J"), ideal("K")));
  } else if (op == "join") {
    result = index_list(join(ideal("J"), ideal("K")));
  } else if (op == "quotient") {
    const NumberDoc x = operand();
    result = number_to_json(quotient_rep(to_idempotent(x.value), ideal("J")), x.rep);
  } else if (op == "classify") {
    const IdealSpec i = ideal("J");
    result = Json{{"minimal", is_minimal(i)}, {"maximal", is_maximal(i)}};
  } else if (op == "complexify" || op == "realize") {
    const IdealSpec i = op == "complexify" ? complexify(ideal("J")) : realize(ideal("J"));
    result = Json{{"flavor", flavor_name(i.flavor())}, {"J", index_list(i)}};
  } else {
    throw DocumentError("unknown ideal op \"" + op + "\"");
  }
  return Json{{"op", op}, {"result", std::move(result)}}.dump() + "\n";
}

MatrixDoc read_matrix(const Options& o, std::istream& in) {
  MatrixDoc doc = matrix_from_json(parse_json(read_input(o, in)));
  check_doc_level(o, doc.value.level());
  return doc;
}

std::string cmd_det(const Options& o, std::istream& in, std::string& warning) {
  const MatrixDoc doc = read_matrix(o, in);
  const auto bad = singular_components(doc.value, o.tol.value_or(1e-10));
  if (!bad.empty()) {
    warning = "matrix is singular: determinant vanishes in component(s) " + format_components(bad);
  }
  return number_to_json(det(doc.value), doc.rep).dump() + "\n";
}

std::string cmd_inv(const Options& o, std::istream& in) {
  const MatrixDoc doc = read_matrix(o, in);
  return matrix_to_json(invert_matrix(doc.value, o.tol.value_or(1e-10)), doc.rep).dump() + "\n";
}

std::string cmd_eig(const Options& o, std::istream& in) {
  const MatrixDoc doc = read_matrix(o, in);
  const SpectralResult s = spectral_decompose(doc.value, o.tol.value_or(1e-10));
  Json values = Json::array();
  Json kets = Json::array();
  for (const Multiperplex& v : s.eigenvalues) values.push_back(number_to_json(v.to_rep(), doc.rep));
  for (const Ket& k : s.eigenkets) kets.push_back(ket_to_json(k, doc.rep));
  return Json{{"eigenvalues", std::move(values)}, {"eigenkets", std::move(kets)}, {"residual", s.residual}}
             .dump() +
         "\n";
}

void add_common(CLI::App* sub, Options& o, bool positional) {
  sub->add_option("--n", o.level, "Level n of M_n")->check(CLI::Range(1, kMaxLevel));
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"std", "standard", "idem", "idempotent", "json"}));
  sub->add_option("--tol", o.tol, "Null-cone / comparison tolerance")->check(CLI::NonNegativeNumber);
  sub->add_option("--in", o.in_path, "Input file (default: stdin)");
  sub->add_option("--out", o.out_path, "Output file (default: stdout)");
  if (positional) sub->add_option("expr", o.exprs, "Expression(s)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Multicomplex algebra toolkit", "mcx"};
  app.require_subcommand(1);
  Options o;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate expressions");
  add_common(eval, o, true);
  CLI::App* convert = app.add_subcommand("convert", "Convert a NumberDocument between representations");
  add_common(convert, o, false);
  convert->add_option("--to", o.to, "Target representation")
      ->check(CLI::IsMember({"std", "standard", "idem", "idempotent"}));
  CLI::App* conj = app.add_subcommand("conj", "Apply a composition of conjugations");
  add_common(conj, o, true);
  conj->add_option("--mask", o.mask, "Units to conjugate, e.g. 1,3");
  CLI::App* norm = app.add_subcommand("norm", "Multiperplex-valued norm");
  add_common(norm, o, true);
  CLI::App* ideal = app.add_subcommand("ideal", "Ideal lattice query");
  add_common(ideal, o, false);
  CLI::App* det_cmd = app.add_subcommand("det", "Determinant of a MatrixDocument");
  add_common(det_cmd, o, false);
  CLI::App* inv = app.add_subcommand("inv", "Inverse of a MatrixDocument");
  add_common(inv, o, false);
  CLI::App* eig = app.add_subcommand("eig", "Spectral decomposition of a self-adjoint MatrixDocument");
  add_common(eig, o, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.level_given = false;
  for (CLI::App* sub : app.get_subcommands()) o.level_given = sub->count("--n") > 0;

  std::string result;
  std::string warning;
  try {
    if (eval->parsed()) result = cmd_eval(o, in);
    else if (convert->parsed()) result = cmd_convert(o, in);
    else if (conj->parsed()) result = cmd_conj(o, in);
    else if (norm->parsed()) result = cmd_norm(o, in);
    else if (ideal->parsed()) result = cmd_ideal(o, in);
    else if (det_cmd->parsed()) result = cmd_det(o, in, warning);
    else if (inv->parsed()) result = cmd_inv(o, in);
    else if (eig->parsed()) result = cmd_eig(o, in);

    if (!o.out_path.empty()) {
      std::ofstream f(o.out_path, std::ios::binary);
      if (!(f << result)) throw IoError("cannot write output file '" + o.out_path + "'");
    } else {
      out << result;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DocumentError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  if (!warning.empty()) {
    err << "error: " << warning << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace mcx::cli
