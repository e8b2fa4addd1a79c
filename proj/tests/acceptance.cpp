// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "qcpn/basis_cert.hpp"
#include "qcpn/corep.hpp"
#include "qcpn/pairing.hpp"
#include "qcpn/qsphere.hpp"

using namespace qcpn;

namespace {

int failures = 0;

void report(int id, const std::string& title, const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!ok) ++failures;
  std::printf("%s [%2d] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              detail.empty() ? "" : " : ", detail.c_str());
}

NCPoly sphere_sum(int n) {
  NCPoly s(n);
  for (int m = 0; m <= n; ++m) s += NCPoly::monomial(n, {{m, false}, {m, true}});
  return s;
}

}  // namespace

int main() {
  report(1, "|det M_n| = 1 with exact inverse, n = 1..64, under 10 s", [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 64; ++n) {
      const auto cert = certify_basis(n);
      const auto id = IntMatrix::identity(static_cast<std::size_t>(n) + 1);
      if (abs(cert.det) != 1 || cert.matrix * cert.inverse != id || cert.inverse * cert.matrix != id) {
        detail = "n = " + std::to_string(n);
        return false;
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail = "elapsed " + std::to_string(secs) + " s";
    return secs < 10.0;
  });

  report(2, "closed-form E-classes match the decomposition, 2 <= m <= n <= 32", [](std::string& detail) {
    for (int n = 2; n <= 32; ++n)
      for (int m = 2; m <= n; ++m)
        if (e_class_formula(n, m) != e_class(n, m)) {
          detail = "n = " + std::to_string(n) + ", m = " + std::to_string(m);
          return false;
        }
    return true;
  });

  report(3, "n = 2 ground truth", [](std::string&) {
    const std::map<std::int64_t, std::int64_t> labels{{-1, 1}, {1, 1}};
    const auto m = basis_matrix(2);
    const auto expected = IntMatrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
    return fundamental_decomposition(2, 2) == labels &&
           e_class(2, 2) == KClass(TruncatedPoly::monomial(2, 2)) && m == expected && det_exact(m) == -1;
  });

  report(4, "pairing identities", [](std::string& detail) {
    for (int n = 0; n <= 16; ++n)
      for (int m = 0; m <= 30; ++m)
        for (int k = 0; k <= n; ++k)
          if (pair_mu(k, line_class(n, m)) != oracle::pascal_binomial(m, k)) {
            detail = "binomial at n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
            return false;
          }
    for (int n = 1; n <= 16; ++n)
      for (int k = 0; k <= n; ++k) {
        if (pair_mu(k, line_class(n, -1)) != (k % 2 ? -1 : 1)) {
          detail = "tautological bundle at k=" + std::to_string(k);
          return false;
        }
        for (int j = 0; j <= n; ++j)
          if (pair_mu(k, KClass(TruncatedPoly::monomial(n, j))) != (j == k ? (j % 2 ? -1 : 1) : 0)) {
            detail = "t-basis at j=" + std::to_string(j) + " k=" + std::to_string(k);
            return false;
          }
      }
    return true;
  });

  report(5, "pairing(k, j) = (-1)^k M(j, k), n <= 16", [](std::string& detail) {
    for (int n = 1; n <= 16; ++n) {
      std::vector<KClass> e;
      for (int j = 0; j <= n; ++j) e.push_back(e_class(n, j));
      const auto p = pairing_matrix(e);
      const auto m = basis_matrix(n);
      for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k)
        for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j)
          if (p(k, j) != (k % 2 ? BigInt(-m(j, k)) : m(j, k))) {
            detail = "n = " + std::to_string(n);
            return false;
          }
    }
    return true;
  });

  report(6, "line bundles pairwise distinct, |m|, |k| <= 20, n <= 16", [](std::string& detail) {
    for (int n = 1; n <= 16; ++n)
      for (int m = -20; m <= 20; ++m)
        for (int k = m + 1; k <= 20; ++k)
          if (line_class(n, m) == line_class(n, k)) {
            detail = "collision at n=" + std::to_string(n);
            return false;
          }
    return true;
  });

  report(7, "nesting holds for n <= 32", [](std::string& detail) {
    for (int n = 1; n <= 32; ++n)
      if (!nesting_check(n)) {
        detail = "n = " + std::to_string(n);
        return false;
      }
    return true;
  });

  report(8, "defining relations, phi and the sphere relation, n <= 4", [](std::string& detail) {
    for (int n = 1; n <= 4; ++n) {
      if (!verify_defining_relations(n).passed()) {
        detail = "relations at n = " + std::to_string(n);
        return false;
      }
      for (const auto& [lhs, rhs] : defining_relations(n))
        if (!phi(lhs - rhs).is_zero()) {
          detail = "phi image of " + lhs.to_string() + " = " + rhs.to_string();
          return false;
        }
      if (normal_form(sphere_sum(n)) != NCPoly::constant(n, 1)) {
        detail = "sphere sum at n = " + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  report(9, "two-letter words agree (n <= 2); 10k-word fuzz per n <= 4", [](std::string& detail) {
    for (int n = 1; n <= 2; ++n)
      if (!exhaustive_confluence(n, 2).passed()) {
        detail = "two-letter words at n = " + std::to_string(n);
        return false;
      }
    std::size_t max_steps = 0;
    for (int n = 1; n <= 4; ++n) {
      const auto r = fuzz_confluence(n, 6, 10000, 42);
      max_steps = std::max(max_steps, r.max_steps);
      if (!r.passed()) {
        detail = "n = " + std::to_string(n) + ": " + std::to_string(r.mismatches.size()) + " mismatches, " +
                 std::to_string(r.step_cap_hits) + " cap hits, " + std::to_string(r.degree_violations) +
                 " degree violations";
        return false;
      }
    }
    detail = "max steps " + std::to_string(max_steps);
    return true;
  });

  report(10, "sphere rule derived from the other relations, n <= 6", [](std::string& detail) {
    RewriteOptions no_sphere;
    no_sphere.sphere_rule = false;
    for (int n = 0; n <= 6; ++n) {
      NCPoly expected(n);
      for (int k = 0; k <= n; ++k) expected += NCPoly::monomial(n, {{k, true}, {k, false}}, LaurentQ::q(-2 * k));
      if (normal_form(sphere_sum(n), no_sphere) != expected) {
        detail = "n = " + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
