#pragma once

// Surface syntax for multicomplex expressions.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '·' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' ['-'] digits)*
//   atom    := number | unit | 'ε' digits | '(' expr ')' | call
//   unit    := ('i' digits)+            e.g. i1i2 == i1*i2
//   call    := conj(expr, [k, ...]) | norm(expr) | proj(expr, k) | inv(expr)
//            | lambda(expr) | gamma(j) | gammap(j) | eps(k)
//
// Indices in calls are 1-based: conj takes unit numbers, proj/eps take ε
// numbers, gamma/gammap take the level j of γ_j.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mcx/core.hpp"

namespace mcx::cli {

/// Syntax error, or a unit beyond the declared level. `position` is a byte
/// offset into the source.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class Func { conj, norm, proj, inv, lambda, gamma, gammap, eps };

struct Expr {
  enum class Kind { number, unit, neg, add, sub, mul, div, pow, call };

  Kind kind = Kind::number;
  std::size_t position = 0;
  double number = 0.0;           // number
  std::uint32_t unit_bits = 0;   // unit
  int exponent = 0;              // pow
  Func func = Func::conj;        // call
  std::vector<int> indices;      // call: conj units, proj/gamma/eps index
  std::vector<Expr> children;
};

Expr parse(std::string_view source, int level);

/// True when the source mentions ε_k (eps(k) or εk), i.e. it was written in
/// the idempotent basis.
bool mentions_epsilon(const Expr& expr);

/// Evaluation settings. `tol` is the null-cone tolerance used by inv and '/'.
struct EvalOptions {
  double tol = kDefaultTol;
};

Multicomplex evaluate(const Expr& expr, int level, const EvalOptions& options = {});

/// parse + evaluate.
Multicomplex eval_string(std::string_view source, int level, const EvalOptions& options = {});

}  // namespace mcx::cli
