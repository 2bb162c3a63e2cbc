#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace mcx::cli {

namespace {

constexpr const char* kDot = "\xC2\xB7";

struct Term {
  bool negative;
  std::string body;  // magnitude with its unit/basis suffix
};

std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t == 0) {
      out += terms[t].negative ? "-" : "";
    } else {
      out += terms[t].negative ? " - " : " + ";
    }
    out += terms[t].body;
  }
  return out;
}

std::string complex_factor(Complex z, double cut) {
  const bool has_re = std::abs(z.real()) > cut;
  const bool has_im = std::abs(z.imag()) > cut;
  std::string im_part = format_short(std::abs(z.imag())) + kDot + "i1";
  if (!has_im) return format_short(z.real());
  if (!has_re) return "(" + std::string(z.imag() < 0 ? "-" : "") + im_part + ")";
  return "(" + format_short(z.real()) + (z.imag() < 0 ? " - " : " + ") + im_part + ")";
}

}  // namespace

std::string format_short(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x + 0.0);
  return buf;
}

std::string unit_name(UnitSet a) {
  std::string out;
  for (int k = 1; k <= 32; ++k) {
    if ((a.bits >> (k - 1)) & 1U) out += "i" + std::to_string(k);
  }
  return out;
}

std::string render_standard(const Multicomplex& value, double tol) {
  const double cut = tol * std::max(1.0, value.max_abs());
  std::vector<Term> terms;
  for (std::uint32_t a = 0; a < value.size(); ++a) {
    const double x = value[a];
    if (std::abs(x) <= cut) continue;
    std::string body = format_short(std::abs(x));
    if (a != 0) body += kDot + unit_name(UnitSet{a});
    terms.push_back({x < 0, std::move(body)});
  }
  return join(terms);
}

std::string render_idempotent(const IdempotentRep& value, double tol) {
  const double cut = tol * std::max(1.0, value.max_abs());
  std::vector<Term> terms;
  for (std::size_t p = 0; p < value.size(); ++p) {
    const Complex z = value[p];
    if (std::abs(z) <= cut) continue;
    const std::string basis = std::string(kDot) + "\xCE\xB5" + std::to_string(p + 1);
    if (std::abs(z.imag()) <= cut) {
      terms.push_back({z.real() < 0, format_short(std::abs(z.real())) + basis});
    } else {
      terms.push_back({false, complex_factor(z, cut) + basis});
    }
  }
  return join(terms);
}

}  // namespace mcx::cli
