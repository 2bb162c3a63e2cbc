#include "expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "mcx/idempotent.hpp"

namespace mcx::cli {

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";  // ·
constexpr std::string_view kEpsilon = "\xCE\xB5";    // ε
constexpr std::string_view kMinusSign = "\xE2\x88\x92";  // −

class Parser {
 public:
  Parser(std::string_view src, int level) : src_(src), level_(level) {}

  Expr parse_all() {
    Expr e = parse_sum();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (src_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  bool accept_minus() { return accept("-") || accept(kMinusSign); }

  static Expr node(Expr::Kind kind, std::size_t at, std::vector<Expr> children = {}) {
    Expr e;
    e.kind = kind;
    e.position = at;
    e.children = std::move(children);
    return e;
  }

  Expr parse_sum() {
    Expr lhs = parse_term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept("+")) {
        lhs = node(Expr::Kind::add, at, {std::move(lhs), parse_term()});
      } else if (accept_minus()) {
        lhs = node(Expr::Kind::sub, at, {std::move(lhs), parse_term()});
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept("*") || accept(kMiddleDot)) {
        lhs = node(Expr::Kind::mul, at, {std::move(lhs), parse_unary()});
      } else if (accept("/")) {
        lhs = node(Expr::Kind::div, at, {std::move(lhs), parse_unary()});
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept_minus()) return node(Expr::Kind::neg, at, {parse_unary()});
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept("^")) return base;
      const bool negative = accept_minus();
      skip_space();
      Expr p = node(Expr::Kind::pow, at, {std::move(base)});
      const int e = parse_integer("integer exponent");
      p.exponent = negative ? -e : e;
      base = std::move(p);
    }
  }

  int parse_integer(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc{}) fail_at(std::string(what) + " too large", start);
    (void)ptr;
    return value;
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    if (text == ".") fail_at("malformed number", start);
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(value)) {
      fail_at("malformed number '" + text + "'", start);
    }
    Expr e = node(Expr::Kind::number, start);
    e.number = value;
    return e;
  }

  Expr parse_unit() {
    const std::size_t start = pos_;
    std::uint32_t bits = 0;
    double sign = 1.0;
    while (pos_ + 1 < src_.size() && src_[pos_] == 'i' &&
           std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      const std::size_t at = pos_;
      ++pos_;
      const int k = parse_integer("unit number");
      if (k < 1 || k > level_) {
        fail_at("unit i" + std::to_string(k) + " exceeds level " + std::to_string(level_), at);
      }
      const std::uint32_t u = 1U << (k - 1);
      sign *= unit_product_sign(UnitSet{bits}, UnitSet{u});
      bits ^= u;
    }
    Expr e = node(Expr::Kind::unit, start);
    e.unit_bits = bits;
    if (sign < 0) return node(Expr::Kind::neg, start, {std::move(e)});
    return e;
  }

  std::string parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Expr parse_call(const std::string& name, std::size_t at) {
    static const std::pair<const char*, Func> kFuncs[] = {
        {"conj", Func::conj},     {"norm", Func::norm},   {"proj", Func::proj},
        {"inv", Func::inv},       {"lambda", Func::lambda}, {"gamma", Func::gamma},
        {"gammap", Func::gammap}, {"eps", Func::eps},
    };
    Expr e = node(Expr::Kind::call, at);
    bool known = false;
    for (const auto& [fname, f] : kFuncs) {
      if (name == fname) {
        e.func = f;
        known = true;
      }
    }
    if (!known) fail_at("unknown function '" + name + "'", at);

    expect("(");
    switch (e.func) {
      case Func::conj:
        e.children.push_back(parse_sum());
        expect(",");
        expect("[");
        if (!accept("]")) {
          do {
            skip_space();
            const std::size_t k_at = pos_;
            const int k = parse_integer("unit number");
            if (k < 1 || k > level_) {
              fail_at("unit i" + std::to_string(k) + " exceeds level " + std::to_string(level_), k_at);
            }
            e.indices.push_back(k);
          } while (accept(","));
          expect("]");
        }
        break;
      case Func::proj:
        e.children.push_back(parse_sum());
        expect(",");
        e.indices.push_back(parse_integer("component number"));
        break;
      case Func::gamma:
      case Func::gammap:
      case Func::eps:
        e.indices.push_back(parse_integer("index"));
        break;
      default:
        e.children.push_back(parse_sum());
        break;
    }
    expect(")");
    return e;
  }

  Expr parse_atom() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const std::size_t at = pos_;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (accept("(")) {
      Expr inner = parse_sum();
      expect(")");
      return inner;
    }
    if (accept(kEpsilon)) {
      Expr e = node(Expr::Kind::call, at);
      e.func = Func::eps;
      e.indices.push_back(parse_integer("ε index"));
      return e;
    }
    if (c == 'i' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      return parse_unit();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = parse_identifier();
      return parse_call(name, at);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  int level_;
  std::size_t pos_ = 0;
};

class Evaluator {
 public:
  Evaluator(int level, const EvalOptions& options) : level_(level), options_(options) {}

  Multicomplex eval(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::number:
        return Multicomplex::real(level_, e.number);
      case Expr::Kind::unit:
        return Multicomplex::unit(level_, UnitSet{e.unit_bits});
      case Expr::Kind::neg:
        return -eval(e.children[0]);
      case Expr::Kind::add:
        return eval(e.children[0]) + eval(e.children[1]);
      case Expr::Kind::sub:
        return eval(e.children[0]) - eval(e.children[1]);
      case Expr::Kind::mul:
        return multiply(eval(e.children[0]), eval(e.children[1]));
      case Expr::Kind::div:
        return multiply(eval(e.children[0]), reciprocal(eval(e.children[1])));
      case Expr::Kind::pow:
        return power(eval(e.children[0]), e.exponent);
      case Expr::Kind::call:
        return call(e);
    }
    return Multicomplex(level_);
  }

 private:
  Multicomplex multiply(const Multicomplex& a, const Multicomplex& b) const {
    if (level_ == 1) return mul_standard(a, b);
    return from_idempotent(mul_fast(to_idempotent(a), to_idempotent(b)));
  }

  Multicomplex reciprocal(const Multicomplex& a) const {
    if (level_ == 1) {
      const Complex z{a[0], a[1]};
      if (std::abs(z) <= options_.tol) {
        throw NullConeError("division by zero", {0});
      }
      const Complex w = 1.0 / z;
      return Multicomplex::complex(1, w.real(), w.imag());
    }
    return from_idempotent(invert(to_idempotent(a), options_.tol));
  }

  Multicomplex power(const Multicomplex& base, int exponent) const {
    Multicomplex b = exponent < 0 ? reciprocal(base) : base;
    unsigned e = static_cast<unsigned>(exponent < 0 ? -static_cast<long>(exponent) : exponent);
    Multicomplex acc = Multicomplex::real(level_, 1.0);
    while (e != 0) {
      if (e & 1U) acc = multiply(acc, b);
      e >>= 1U;
      if (e != 0) b = multiply(b, b);
    }
    return acc;
  }

  void check_range(const Expr& e, int value, int lo, int hi, const char* what) const {
    if (value < lo || value > hi) {
      throw IndexError(std::string(what) + " " + std::to_string(value) + " outside [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "] at offset " +
                       std::to_string(e.position));
    }
  }

  Multicomplex call(const Expr& e) const {
    const int components = static_cast<int>(std::size_t{1} << (level_ - 1));
    switch (e.func) {
      case Func::conj: {
        std::uint32_t mask = 0;
        for (int k : e.indices) mask ^= 1U << (k - 1);
        return conjugate(eval(e.children[0]), ConjugationMask(level_, mask));
      }
      case Func::norm: {
        const Multicomplex a = eval(e.children[0]);
        if (level_ == 1) return Multicomplex::real(1, std::hypot(a[0], a[1]));
        return from_idempotent(mnorm(to_idempotent(a)).to_rep());
      }
      case Func::proj: {
        check_range(e, e.indices[0], 1, components, "component");
        const Multicomplex a = eval(e.children[0]);
        if (level_ == 1) return a;
        const Complex z = project(to_idempotent(a), static_cast<std::size_t>(e.indices[0] - 1));
        return Multicomplex::complex(level_, z.real(), z.imag());
      }
      case Func::inv:
        return reciprocal(eval(e.children[0]));
      case Func::lambda:
        return conjugate(eval(e.children[0]), ConjugationMask::lambda(level_));
      case Func::gamma:
        check_range(e, e.indices[0], 2, level_, "gamma index");
        return mcx::gamma(level_, e.indices[0]);
      case Func::gammap:
        check_range(e, e.indices[0], 2, level_, "gamma index");
        return gamma_prime(level_, e.indices[0]);
      case Func::eps:
        if (level_ < 2) throw LevelError("eps needs level >= 2");
        check_range(e, e.indices[0], 1, components, "ε index");
        return epsilon(level_, static_cast<std::size_t>(e.indices[0] - 1));
    }
    return Multicomplex(level_);
  }

  int level_;
  EvalOptions options_;
};

}  // namespace

Expr parse(std::string_view source, int level) {
  check_level(level);
  return Parser(source, level).parse_all();
}

Multicomplex evaluate(const Expr& expr, int level, const EvalOptions& options) {
  check_level(level);
  return Evaluator(level, options).eval(expr);
}

bool mentions_epsilon(const Expr& expr) {
  if (expr.kind == Expr::Kind::call && expr.func == Func::eps) return true;
  for (const Expr& child : expr.children)
    if (mentions_epsilon(child)) return true;
  return false;
}

Multicomplex eval_string(std::string_view source, int level, const EvalOptions& options) {
  return evaluate(parse(source, level), level, options);
}

}  // namespace mcx::cli
