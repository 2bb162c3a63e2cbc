#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"
#include "document.hpp"
#include "expression.hpp"
#include "mcx/ideal.hpp"
#include "render.hpp"
#include "support/generators.hpp"

using namespace mcx;
using namespace mcx::cli;
using mcx::testing::Gen;

namespace {

Multicomplex unit(int level, std::initializer_list<int> ks) { return Multicomplex::unit(level, UnitSet::of(ks)); }

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parser: reference expressions") {
  CHECK(eval_string("i1*i2*i1*i2", 2) == Multicomplex::real(2, 1.0));
  CHECK(eval_string("(1 + i1i2)/2", 2) == gamma(2, 2));
  CHECK(eval_string("i1i2", 3) == mul_standard(unit(3, {1}), unit(3, {2})));
  CHECK(eval_string("i2i1", 3) == unit(3, {1, 2}));
  CHECK(eval_string("gamma(2) * gammap(2)", 2).is_zero());
  CHECK(eval_string("eps(1) + eps(2)", 2) == Multicomplex::real(2, 1.0));
  CHECK(eval_string("ε1", 2) == gamma(2, 2));
  CHECK(eval_string("2.5e1", 1) == Multicomplex::real(1, 25.0));
  CHECK(eval_string("i1^2", 1) == Multicomplex::real(1, -1.0));
  CHECK(eval_string("(1 + i1)^-1 * (1 + i1)", 1) == Multicomplex::real(1, 1.0));
  CHECK(eval_string("lambda(i1 + i2)", 2) == -(unit(2, {1}) + unit(2, {2})));
  CHECK(eval_string("proj(i2, 2)", 2) == unit(2, {1}));
}

TEST_CASE("parser: precedence") {
  CHECK(eval_string("1 + 2 * 3", 1) == Multicomplex::real(1, 7.0));
  CHECK(eval_string("2 - 3 - 4", 1) == Multicomplex::real(1, -5.0));
  CHECK(eval_string("8 / 2 / 2", 1) == Multicomplex::real(1, 2.0));
  CHECK(eval_string("-2^2", 1) == Multicomplex::real(1, -4.0));
  CHECK(eval_string("2^3^2", 1) == Multicomplex::real(1, 64.0));
  CHECK(eval_string("2 · 3", 1) == Multicomplex::real(1, 6.0));
  CHECK(eval_string("−1", 1) == Multicomplex::real(1, -1.0));
}

TEST_CASE("parser: errors") {
  CHECK_THROWS_AS(parse("i3", 2), ParseError);
  CHECK_THROWS_AS(parse("1 +", 2), ParseError);
  CHECK_THROWS_AS(parse("(1", 2), ParseError);
  CHECK_THROWS_AS(parse("foo(1)", 2), ParseError);
  CHECK_THROWS_AS(parse("1 1", 2), ParseError);
  CHECK_THROWS_AS(parse("", 2), ParseError);
  try {
    parse("1 + i3", 2);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(eval_string("inv(eps(1))", 2), NullConeError);
  CHECK_THROWS_AS(eval_string("1 / gamma(2)", 2), NullConeError);
  CHECK_THROWS_AS(eval_string("eps(3)", 2), IndexError);
  CHECK_THROWS_AS(eval_string("conj(i1, [4])", 3), ParseError);
}

TEST_CASE("rendering") {
  CHECK(render_standard(Multicomplex::real(2, 1.0)) == "1");
  CHECK(render_standard(Multicomplex(2)) == "0");
  CHECK(render_standard(gamma(2, 2)) == "0.5 + 0.5·i1i2");
  CHECK(render_standard(Multicomplex(2, {1, -1, 0, 0.25})) == "1 - 1·i1 + 0.25·i1i2");
  CHECK(render_idempotent(IdempotentRep(2, {3, 4})) == "3·ε1 + 4·ε2");
  CHECK(render_idempotent(to_idempotent(unit(2, {2}))) == "(-1·i1)·ε1 + (1·i1)·ε2");
  CHECK(render_idempotent(IdempotentRep(2, {Complex(1, 2), 0})) == "(1 + 2·i1)·ε1");
  CHECK(render_idempotent(IdempotentRep(2)) == "0");
  CHECK(unit_name(UnitSet::of({1, 3})) == "i1i3");
  CHECK(format_short(1.0 / 3.0) == "0.333333");
}

TEST_CASE("rendered output re-parses to the same value") {
  Gen g(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = g.dyadic_multicomplex(3);
    CHECK(eval_string(render_standard(x), 3) == x);
    CHECK(approx_eq(eval_string(render_idempotent(to_idempotent(x)), 3), x, 1e-14));
  }
}

TEST_CASE("documents roundtrip") {
  Gen g(62);
  const auto x = g.multicomplex(3);
  for (Rep rep : {Rep::standard, Rep::idempotent}) {
    const auto doc = number_to_json(x, rep);
    const auto back = number_from_json(parse_json(doc.dump()));
    CHECK(back.rep == rep);
    CHECK(approx_eq(back.value, x, 1e-14));
  }
  CHECK(number_from_json(number_to_json(x, Rep::standard)).value == x);

  const auto a = g.matrix(2, 3);
  const auto ma = matrix_from_json(parse_json(matrix_to_json(a, Rep::idempotent).dump()));
  CHECK(ma.value == a);
  const auto k = g.ket(2, 3);
  CHECK(ket_from_json(parse_json(ket_to_json(k, Rep::idempotent).dump())).value == k);
}

TEST_CASE("document schema errors") {
  CHECK_THROWS_AS(parse_json("{"), DocumentError);
  CHECK_THROWS_AS(number_from_json(parse_json(R"({"n":2,"coeffs":[1,2,3]})")), Error);
  CHECK_THROWS_AS(number_from_json(parse_json(R"({"n":2,"rep":"polar","coeffs":[1,0,0,0]})")), DocumentError);
  CHECK_THROWS_AS(number_from_json(parse_json(R"({"rep":"standard","coeffs":[1,0,0,0]})")), DocumentError);
  CHECK_THROWS_AS(number_from_json(parse_json(R"({"n":2,"rep":"standard","coeffs":[1,"a",0,0]})")), DocumentError);
  CHECK_THROWS_AS(number_from_json(parse_json(R"({"n":2,"rep":"idempotent","coeffs":[[1],[0,0]]})")), DocumentError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"n":2,"m":2,"entries":[[1,0,0,0]]})")), Error);
}

TEST_CASE("exit codes") {
  CHECK(run({"eval", "--n", "2", "i1*i2*i1*i2"}).code == kExitOk);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"eval", "--bogus"}).code == kExitUsage);
  CHECK(run({"eval", "--n", "2", "i3"}).code == kExitParse);
  CHECK(run({"convert"}, "{not json").code == kExitParse);
  const auto inv = run({"eval", "--n", "2", "inv(eps(1))"});
  CHECK(inv.code == kExitDomain);
  CHECK(inv.err.find("ε2") != std::string::npos);
  CHECK(run({"eval", "--in", "/nonexistent/dir/file"}).code == kExitIo);
  CHECK(run({"eval", "--n", "2", "--out", "/nonexistent/dir/file", "1"}).code == kExitIo);
}

TEST_CASE("batch evaluation reads one expression per line") {
  const auto r = run({"eval", "--n", "2"}, "1 + 1\n\n# comment\ni1*i1\n");
  CHECK(r.code == 0);
  CHECK(r.out == "2\n-1\n");
}

TEST_CASE("rendered output of a fixed corpus re-parses to an equal value") {
  const char* corpus[] = {
      "0", "1", "-1", "2.5", "1e-3", "i1", "-i1", "i2", "i3", "i1i2",
      "i1i3", "i2i3", "i1i2i3", "1 + i1", "1 - i1i2", "(1 + i1i2)/2", "(1 - i1i2)/2", "i1*i2*i3", "i1^3", "i1i2^2",
      "(1 + i1)^4", "(2 + i2)^-1", "1/(1 + i3)", "3*i1 - 4*i2 + 5*i3", "-(i1 - i2)", "gamma(2)", "gammap(2)", "gamma(3)",
      "gammap(3)", "gamma(2)*gammap(3)", "eps(1)", "eps(2)", "eps(3)", "eps(4)", "eps(1) + 2*eps(4)",
      "3*eps(1) + 4*i1*eps(2)", "norm(i2)", "norm(1 + i1 + i2)", "lambda(1 + i1 + i2i3)", "conj(i1 + i2 + i3, [1])",
      "conj(i1i2 + i2i3, [2,3])", "conj(1 + i1i2i3, [1,2,3])", "proj(i2, 1)", "proj(1 + i1i2, 2)", "inv(2 + i1)",
      "inv(3*eps(1) + eps(2) + eps(3) + eps(4))", "0.125*i1 - 0.375*i2i3", "(i1 + i2)*(i1 - i2)", "i3*i2*i1",
      "1/8 + 1/4*i1 + 1/2*i1i2i3"};
  int count = 0;
  for (const char* src : corpus) {
    const std::string source = src;
    CAPTURE(source);
    const auto v = eval_string(src, 3);
    const auto back_std = eval_string(render_standard(v), 3);
    const auto back_idem = eval_string(render_idempotent(to_idempotent(v)), 3);
    // the human form keeps 6 significant digits
    CHECK(approx_eq(back_std, v, 1e-5));
    CHECK(approx_eq(back_idem, v, 1e-5));
    ++count;
  }
  CHECK(count == 50);
}

TEST_CASE("JSON documents round-trip bit-exactly on dyadic input") {
  Gen g(63);
  for (int n = 2; n <= 6; ++n) {
    const auto x = g.dyadic_multicomplex(n);
    for (Rep rep : {Rep::standard, Rep::idempotent}) {
      const std::string text = number_to_json(x, rep).dump();
      const auto back = number_from_json(parse_json(text));
      CHECK(back.value == x);
      CHECK(number_to_json(back.value, rep).dump() == text);
    }
  }
}

TEST_CASE("convert twice is the identity") {
  Gen g(64);
  for (int n = 2; n <= 6; ++n) {
    const auto x = g.multicomplex(n);
    const std::string doc = number_to_json(x, Rep::standard).dump();
    const auto once = run({"convert", "--to", "idem"}, doc);
    REQUIRE(once.code == 0);
    const auto twice = run({"convert", "--to", "std"}, once.out);
    REQUIRE(twice.code == 0);
    CHECK(approx_eq(number_from_json(parse_json(twice.out)).value, x, 1e-12));
    const auto d = g.dyadic_multicomplex(n);
    const std::string exact = number_to_json(d, Rep::standard).dump() + "\n";
    CHECK(run({"convert"}, run({"convert"}, exact).out).out == exact);
  }
}
