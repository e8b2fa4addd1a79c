#pragma once

#include <vector>

#include "qcpn/int_matrix.hpp"
#include "qcpn/kring.hpp"

namespace qcpn {

/// E^n_0 = [1], E^n_1 = [L^n_1] - [1], E^n_m = [F^n_m] - m[1] for m >= 2,
/// built from line-bundle and associated-bundle primitives.
KClass e_class(int n, int m);

/// Closed form of E^n_m for 2 <= m <= n: the t^k coefficient is
/// (m-1) + (-1)^k binom(m-1, k) for k >= 2, zero below.
KClass e_class_formula(int n, int m);

/// Row j holds the t-coefficients of E^n_j.
IntMatrix basis_matrix(int n);

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. Every division is exact.
BigInt det_exact(const IntMatrix& m);

struct BasisCertificate {
  int n = 0;
  IntMatrix matrix;
  BigInt det;
  IntMatrix inverse;  // matrix * inverse == identity over Z
};

/// Builds M_n, checks |det| = 1 and produces an integer inverse via
/// fraction-free Gauss-Jordan (adjugate / det). The product with M_n is
/// checked before returning. Throws UnimodularityViolated otherwise.
BasisCertificate certify_basis(int n);

/// Integer coordinates x with sum_j x_j E^n_j = c.
std::vector<BigInt> expand_in_e_basis(const KClass& c);
std::vector<BigInt> expand_in_e_basis(const KClass& c, const BasisCertificate& cert);

/// True iff M_n is the upper-left (n+1)x(n+1) block of M_{n+1}.
bool nesting_check(int n);

}  // namespace qcpn
