#include "mcx/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mcx {

namespace {

void require_same_shape(const Ket& a, const Ket& b, const char* op) {
  detail::require_same_level(a.level(), b.level(), op);
  if (a.dim() != b.dim()) throw MismatchError(std::string(op) + ": dimension mismatch");
}

void require_operator_shape(const McMatrix& a, const Ket& v, const char* op) {
  detail::require_same_level(a.level(), v.level(), op);
  if (a.dim() != v.dim()) throw MismatchError(std::string(op) + ": dimension mismatch");
}

double vector_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

// One two-sided complex Jacobi rotation annihilating h(p, q).
void jacobi_rotate(ComplexMatrix& h, ComplexMatrix& q_acc, std::size_t p, std::size_t q) {
  const Complex hpq = h(p, q);
  const double mag = std::abs(hpq);
  if (mag == 0.0) return;
  const Complex phase = std::conj(hpq) / mag;  // e^{-iφ}
  const double tau = (h(q, q).real() - h(p, p).real()) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const double new_pp = h(p, p).real() - t * mag;
  const double new_qq = h(q, q).real() + t * mag;

  const Complex vpp = c, vpq = s, vqp = -s * phase, vqq = c * phase;
  const std::size_t m = h.rows();
  for (std::size_t k = 0; k < m; ++k) {
    const Complex hkp = h(k, p), hkq = h(k, q);
    h(k, p) = hkp * vpp + hkq * vqp;
    h(k, q) = hkp * vpq + hkq * vqq;
  }
  for (std::size_t k = 0; k < m; ++k) {
    const Complex hpk = h(p, k), hqk = h(q, k);
    h(p, k) = std::conj(vpp) * hpk + std::conj(vqp) * hqk;
    h(q, k) = std::conj(vpq) * hpk + std::conj(vqq) * hqk;
  }
  for (std::size_t k = 0; k < m; ++k) {
    const Complex qkp = q_acc(k, p), qkq = q_acc(k, q);
    q_acc(k, p) = qkp * vpp + qkq * vqp;
    q_acc(k, q) = qkp * vpq + qkq * vqq;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = new_pp;
  h(q, q) = new_qq;
}

double off_diagonal_norm(const ComplexMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

bool lex_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

bool slice_is_hermitian(const ComplexMatrix& h, double tol) {
  const double cut = tol * (1.0 + h.max_abs());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i; j < h.cols(); ++j)
      if (std::abs(h(i, j) - std::conj(h(j, i))) > cut) return false;
  return true;
}

}  // namespace

Ket::Ket(int level, std::size_t m) : level_(level), entries_(m, IdempotentRep(level)) {
  if (m == 0) throw MismatchError("ket dimension must be positive");
}

Ket::Ket(std::vector<IdempotentRep> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw MismatchError("ket dimension must be positive");
  level_ = entries_.front().level();
  for (const IdempotentRep& e : entries_) detail::require_same_level(level_, e.level(), "Ket");
}

Ket Ket::basis(int level, std::size_t m, std::size_t l) {
  if (l >= m) throw IndexError("basis index out of range");
  Ket out(level, m);
  out.entries_[l] = IdempotentRep::scalar(level, 1.0);
  return out;
}

Ket Ket::from_slices(int level, const std::vector<std::vector<Complex>>& slices) {
  check_idempotent_level(level);
  if (slices.size() != idempotent_size(level)) {
    throw MismatchError("need one ket slice per idempotent component");
  }
  const std::size_t m = slices.front().size();
  std::vector<IdempotentRep> entries;
  std::vector<Complex> comps(slices.size());
  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t p = 0; p < slices.size(); ++p) {
      if (slices[p].size() != m) throw MismatchError("ket slices must share one dimension");
      comps[p] = slices[p][l];
    }
    entries.emplace_back(level, comps);
  }
  return Ket(std::move(entries));
}

Ket operator+(const Ket& a, const Ket& b) {
  require_same_shape(a, b, "ket add");
  std::vector<IdempotentRep> out;
  for (std::size_t l = 0; l < a.dim(); ++l) out.push_back(a[l] + b[l]);
  return Ket(std::move(out));
}

Ket operator-(const Ket& a, const Ket& b) {
  require_same_shape(a, b, "ket sub");
  std::vector<IdempotentRep> out;
  for (std::size_t l = 0; l < a.dim(); ++l) out.push_back(a[l] - b[l]);
  return Ket(std::move(out));
}

Ket operator*(const IdempotentRep& alpha, const Ket& v) {
  detail::require_same_level(alpha.level(), v.level(), "ket scale");
  std::vector<IdempotentRep> out;
  for (std::size_t l = 0; l < v.dim(); ++l) out.push_back(alpha * v[l]);
  return Ket(std::move(out));
}

double max_abs_diff(const Ket& a, const Ket& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t l = 0; l < a.dim(); ++l)
    for (std::size_t p = 0; p < a[l].size(); ++p) m = std::max(m, std::abs(a[l][p] - b[l][p]));
  return m;
}

std::vector<Complex> ket_project(const Ket& v, std::size_t p) {
  if (p >= idempotent_size(v.level())) throw IndexError("ket slice index out of range");
  std::vector<Complex> out(v.dim());
  for (std::size_t l = 0; l < v.dim(); ++l) out[l] = v[l][p];
  return out;
}

std::vector<std::size_t> null_cone_components(const Ket& v, double tol) {
  const std::size_t count = idempotent_size(v.level());
  std::vector<double> norms(count);
  for (std::size_t p = 0; p < count; ++p) norms[p] = vector_norm(ket_project(v, p));
  const double cut = tol * (1.0 + *std::max_element(norms.begin(), norms.end()));
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < count; ++p)
    if (norms[p] <= cut) out.push_back(p);
  return out;
}

bool is_null_cone_ket(const Ket& v, double tol) { return !null_cone_components(v, tol).empty(); }

IdempotentRep scalar_product(const Ket& u, const Ket& v) {
  require_same_shape(u, v, "scalar_product");
  std::vector<Complex> comps(idempotent_size(u.level()));
  for (std::size_t p = 0; p < comps.size(); ++p) {
    Complex s{};
    for (std::size_t l = 0; l < u.dim(); ++l) s += std::conj(u[l][p]) * v[l][p];
    comps[p] = s;
  }
  return {u.level(), std::move(comps)};
}

Ket normalize(const Ket& v, double tol) {
  auto bad = null_cone_components(v, tol);
  if (!bad.empty()) {
    const std::string what = "ket is in the null cone: vanishing component(s) " + format_components(bad);
    throw NullConeError(what, std::move(bad));
  }
  const IdempotentRep self = scalar_product(v, v);
  std::vector<Complex> factor(self.size());
  for (std::size_t p = 0; p < factor.size(); ++p) factor[p] = 1.0 / std::sqrt(self[p].real());
  return IdempotentRep(v.level(), std::move(factor)) * v;
}

Ket riesz_vector(const std::vector<IdempotentRep>& f_values) {
  if (f_values.empty()) throw MismatchError("functional needs at least one basis value");
  std::vector<IdempotentRep> coords;
  for (const IdempotentRep& f : f_values) coords.push_back(lambda_conjugate(f));
  return Ket(std::move(coords));
}

IdempotentRep apply_functional(const std::vector<IdempotentRep>& f_values, const Ket& phi) {
  if (f_values.size() != phi.dim()) throw MismatchError("functional: dimension mismatch");
  IdempotentRep out(phi.level());
  for (std::size_t l = 0; l < phi.dim(); ++l) out = out + f_values[l] * phi[l];
  return out;
}

Ket matvec(const McMatrix& a, const Ket& v) {
  require_operator_shape(a, v, "matvec");
  std::vector<IdempotentRep> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    IdempotentRep s(a.level());
    for (std::size_t j = 0; j < a.dim(); ++j) s = s + a(i, j) * v[j];
    out.push_back(std::move(s));
  }
  return Ket(std::move(out));
}

Ket apply_operator(const McMatrix& a, const Ket& v) {
  require_operator_shape(a, v, "apply_operator");
  std::vector<std::vector<Complex>> out;
  for (std::size_t p = 0; p < idempotent_size(a.level()); ++p) {
    out.push_back(project_matrix(a, p) * std::span<const Complex>(ket_project(v, p)));
  }
  return Ket::from_slices(a.level(), out);
}

ComplexMatrix operator_project(const McMatrix& a, std::size_t p) { return project_matrix(a, p); }

bool is_self_adjoint(const McMatrix& a, double tol) {
  for (std::size_t p = 0; p < idempotent_size(a.level()); ++p) {
    if (!slice_is_hermitian(project_matrix(a, p), tol)) return false;
  }
  return true;
}

McMatrix outer_product(const Ket& u, const Ket& v) {
  require_same_shape(u, v, "outer_product");
  const std::size_t m = u.dim();
  std::vector<IdempotentRep> entries;
  entries.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) entries.push_back(u[i] * lambda_conjugate(v[j]));
  return {u.level(), m, std::move(entries)};
}

HermitianEigen hermitian_eig_slice(const ComplexMatrix& h_in, double tol) {
  if (!h_in.is_square()) throw MismatchError("eigenproblem needs a square matrix");
  if (!slice_is_hermitian(h_in, tol)) throw NotSelfAdjointError("slice is not Hermitian");
  const std::size_t m = h_in.rows();

  ComplexMatrix h(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) h(i, j) = 0.5 * (h_in(i, j) + std::conj(h_in(j, i)));
  ComplexMatrix q = ComplexMatrix::identity(m);

  const double scale = std::max(h.frobenius_norm(), 1e-300);
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(h) <= 1e-15 * scale) break;
    for (std::size_t p = 0; p + 1 < m; ++p)
      for (std::size_t r = p + 1; r < m; ++r) jacobi_rotate(h, q, p, r);
  }

  std::vector<double> values(m);
  std::vector<std::vector<Complex>> vecs(m, std::vector<Complex>(m));
  for (std::size_t l = 0; l < m; ++l) {
    values[l] = h(l, l).real();
    for (std::size_t i = 0; i < m; ++i) vecs[l][i] = q(i, l);
    const double nrm = vector_norm(vecs[l]);
    for (Complex& z : vecs[l]) z /= nrm;
    for (Complex& z : vecs[l]) {
      if (std::abs(z) > 1e-10) {
        const double mag = std::abs(z);
        const Complex rot = std::conj(z) / mag;
        for (Complex& w : vecs[l]) w *= rot;
        z = mag;  // exactly real, free of rounding in the rotation
        break;
      }
    }
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  const double tie = tol * (1.0 + scale);
  for (std::size_t begin = 0; begin < m;) {
    std::size_t end = begin + 1;
    while (end < m && values[order[end]] - values[order[end - 1]] <= tie) ++end;
    std::sort(order.begin() + begin, order.begin() + end,
              [&](std::size_t a, std::size_t b) { return lex_less(vecs[a], vecs[b]); });
    begin = end;
  }

  HermitianEigen out{std::vector<double>(m), ComplexMatrix(m, m)};
  for (std::size_t l = 0; l < m; ++l) {
    out.values[l] = values[order[l]];
    for (std::size_t i = 0; i < m; ++i) out.vectors(i, l) = vecs[order[l]][i];
  }
  return out;
}

SpectralResult spectral_decompose(const McMatrix& a, double tol) {
  if (!is_self_adjoint(a, tol)) throw NotSelfAdjointError("operator is not self-adjoint");
  const int level = a.level();
  const std::size_t m = a.dim();
  const std::size_t count = idempotent_size(level);

  std::vector<std::vector<double>> lambdas(m, std::vector<double>(count));
  std::vector<std::vector<std::vector<Complex>>> kets(
      m, std::vector<std::vector<Complex>>(count, std::vector<Complex>(m)));
  for (std::size_t p = 0; p < count; ++p) {
    const HermitianEigen e = hermitian_eig_slice(project_matrix(a, p), tol);
    for (std::size_t l = 0; l < m; ++l) {
      lambdas[l][p] = e.values[l];
      for (std::size_t i = 0; i < m; ++i) kets[l][p][i] = e.vectors(i, l);
    }
  }

  SpectralResult out;
  for (std::size_t l = 0; l < m; ++l) {
    out.eigenvalues.emplace_back(level, lambdas[l]);
    out.eigenkets.push_back(Ket::from_slices(level, kets[l]));
  }
  out.residual = max_abs_diff(reconstruct(out), a);
  return out;
}

McMatrix reconstruct(const SpectralResult& s) {
  if (s.eigenkets.empty()) throw MismatchError("empty spectral result");
  const Ket& first = s.eigenkets.front();
  McMatrix sum(first.level(), first.dim());
  for (std::size_t l = 0; l < s.eigenkets.size(); ++l) {
    const McMatrix proj = outer_product(s.eigenkets[l], s.eigenkets[l]);
    std::vector<IdempotentRep> scaled;
    const IdempotentRep lambda = s.eigenvalues[l].to_rep();
    for (const IdempotentRep& e : proj.entries()) scaled.push_back(lambda * e);
    sum = matadd(sum, McMatrix(first.level(), first.dim(), std::move(scaled)));
  }
  return sum;
}

}  // namespace mcx
