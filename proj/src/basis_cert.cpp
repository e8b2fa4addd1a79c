#include "qcpn/basis_cert.hpp"

#include <utility>

#include "qcpn/corep.hpp"
#include "qcpn/errors.hpp"

namespace qcpn {
namespace {

void require_range(int n, int m, int lo) {
  if (n < 1) throw DomainError("n must be >= 1, got n=" + std::to_string(n));
  if (m < lo || m > n)
    throw DomainError("m=" + std::to_string(m) + " out of range " +
                      std::to_string(lo) + ".." + std::to_string(n));
}

void exact_divide(BigInt& value, const BigInt& divisor) {
  mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
}

// Index of the first row r >= k with a nonzero entry in column k, or rows().
std::size_t find_pivot(const IntMatrix& a, std::size_t k) {
  std::size_t p = k;
  while (p < a.rows() && a(p, k) == 0) ++p;
  return p;
}

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

// Fraction-free Gauss-Jordan on [m | I]. Returns the final common pivot d
// (= +-det m) and leaves d * m^{-1} in `adj`.
BigInt gauss_jordan_fraction_free(const IntMatrix& m, IntMatrix& adj) {
  const std::size_t size = m.rows();
  IntMatrix a(size, 2 * size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) a(r, c) = m(r, c);
    a(r, size + r) = 1;
  }
  BigInt prev = 1;
  BigInt scratch;
  for (std::size_t k = 0; k < size; ++k) {
    const std::size_t p = find_pivot(a, k);
    if (p == size) throw UnimodularityViolated("matrix is singular");
    if (p != k) swap_rows(a, p, k);
    for (std::size_t i = 0; i < size; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * size; ++j) {
        if (j == k) continue;
        scratch = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        exact_divide(scratch, prev);
        a(i, j) = scratch;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  adj = IntMatrix(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) adj(r, c) = a(r, size + c);
  return prev;
}

}  // namespace

KClass e_class(int n, int m) {
  require_range(n, m, 0);
  if (m == 0) return KClass::one(n);
  if (m == 1) return line_class(n, 1) - KClass::one(n);
  return associated_class(n, pi_weights(m)) - BigInt(m) * KClass::one(n);
}

KClass e_class_formula(int n, int m) {
  require_range(n, m, 2);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (int k = 2; k <= n; ++k) {
    BigInt b = binomial(m - 1, k);
    coeffs[static_cast<std::size_t>(k)] = BigInt(m - 1) + (k % 2 == 0 ? b : BigInt(-b));
  }
  return KClass(TruncatedPoly(n, std::move(coeffs)));
}

IntMatrix basis_matrix(int n) {
  if (n < 1) throw DomainError("basis_matrix requires n >= 1");
  const auto size = static_cast<std::size_t>(n) + 1;
  IntMatrix out(size, size);
  for (int j = 0; j <= n; ++j) {
    const KClass e = e_class(n, j);
    const auto& row = e.coeffs();
    for (std::size_t k = 0; k < size; ++k) out(static_cast<std::size_t>(j), k) = row[k];
  }
  return out;
}

BigInt det_exact(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t size = m.rows();
  if (size == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  BigInt scratch;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    const std::size_t p = find_pivot(a, k);
    if (p == size) return 0;
    if (p != k) {
      swap_rows(a, p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        scratch = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        exact_divide(scratch, prev);
        a(i, j) = scratch;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt det = a(size - 1, size - 1);
  return negate ? BigInt(-det) : det;
}

BasisCertificate certify_basis(int n) {
  BasisCertificate cert;
  cert.n = n;
  cert.matrix = basis_matrix(n);
  cert.det = det_exact(cert.matrix);
  if (abs(cert.det) != 1)
    throw UnimodularityViolated("det(M_" + std::to_string(n) + ") = " + to_decimal(cert.det));

  BigInt pivot = gauss_jordan_fraction_free(cert.matrix, cert.inverse);
  // pivot is +-1 here, so dividing is a sign flip.
  if (abs(pivot) != 1) throw UnimodularityViolated("elimination pivot " + to_decimal(pivot));
  if (pivot == -1)
    for (std::size_t r = 0; r < cert.inverse.rows(); ++r)
      for (std::size_t c = 0; c < cert.inverse.cols(); ++c)
        cert.inverse(r, c) = -cert.inverse(r, c);

  if (!(cert.matrix * cert.inverse == IntMatrix::identity(cert.matrix.rows())))
    throw UnimodularityViolated("inverse witness failed for n=" + std::to_string(n));
  return cert;
}

std::vector<BigInt> expand_in_e_basis(const KClass& c) {
  return expand_in_e_basis(c, certify_basis(c.n()));
}

std::vector<BigInt> expand_in_e_basis(const KClass& c, const BasisCertificate& cert) {
  if (c.n() != cert.n) throw OrderMismatch(c.n(), cert.n);
  // Row vector x with x * M = c, hence x = c * M^{-1}.
  const auto size = static_cast<std::size_t>(cert.n) + 1;
  std::vector<BigInt> x(size, BigInt(0));
  const auto& coeffs = c.coeffs();
  for (std::size_t k = 0; k < size; ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t j = 0; j < size; ++j) x[j] += coeffs[k] * cert.inverse(k, j);
  }
  return x;
}

bool nesting_check(int n) {
  const IntMatrix small = basis_matrix(n);
  const IntMatrix large = basis_matrix(n + 1);
  return large.block(small.rows(), small.cols()) == small;
}

}  // namespace qcpn
