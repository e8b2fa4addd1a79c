#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qcpn/laurent.hpp"

namespace qcpn {

/// z_i (starred == false) or z*_i.
struct Generator {
  int index = 0;
  bool starred = false;

  friend bool operator==(const Generator&, const Generator&) = default;
  std::string to_string() const;
};

using Word = std::vector<Generator>;

/// Degree-lexicographic order with letters z*_0 < ... < z*_n < z_0 < ... < z_n.
/// Used for iteration and serialization only; the rewrite orientation has
/// its own letter order.
struct CanonicalWordLess {
  bool operator()(const Word& a, const Word& b) const;
};

std::string word_to_string(const Word& w);  // "z0s*z1", "1" for the empty word

/**
 * Element of the free *-algebra on z_0..z_n, z*_0..z*_n over Z[q, q^-1].
 *
 * Nothing here knows about the sphere relations; see normal_form. Zero
 * coefficients are never stored, and every generator index is checked
 * against the ambient n.
 */
class NCPoly {
 public:
  using Terms = std::map<Word, LaurentQ, CanonicalWordLess>;

  explicit NCPoly(int n);

  static NCPoly constant(int n, const LaurentQ& c);
  static NCPoly monomial(int n, Word word, const LaurentQ& c = 1);
  static NCPoly generator(int n, int index, bool starred = false);

  int n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentQ coefficient(const Word& w) const;

  void add_term(const Word& w, const LaurentQ& c);

  NCPoly& operator+=(const NCPoly& rhs);
  NCPoly& operator-=(const NCPoly& rhs);
  NCPoly& operator*=(const LaurentQ& scalar);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const LaurentQ& s) { return a *= s; }
  friend NCPoly operator*(const LaurentQ& s, NCPoly a) { return a *= s; }
  /// Concatenation product.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly operator-() const;

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Canonical text, re-readable by parse_nc: e.g. "1 - z1s*z1",
  /// "q^-1*z0*z1", "(q^-2 - 1)*z1*z1s". Zero is "0".
  std::string to_string() const;

 private:
  void check_word(const Word& w) const;

  int n_;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Parsing
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ('^' int)*
//   primary:= int | 'q' ('^' ['-'] int)? | 'z' index ('s')? | '(' expr ')'
//
// Whitespace is insignificant. Errors are ParseError carrying the 0-based
// character offset.

NCPoly parse_nc(std::string_view text, int n);
/// Ambient n inferred as the largest generator index that occurs (0 if none).
NCPoly parse_nc(std::string_view text);

// ---------------------------------------------------------------------------
// Rewriting

/// Letter order the rewrite rules sort towards.
enum class Orientation {
  /// z*_1 < ... < z*_n < z*_0 < z_0 < z_1 < ... < z_n. Keeps z*_0 and z_0
  /// adjacent so the sphere rule sees every occurrence. Default.
  kZeroAdjacent,
  /// z*_0 < ... < z*_n < z_0 < ... < z_n. Not confluent for n >= 1:
  /// z*_0 z_0 z*_1 has two distinct normal forms.
  kStarsAscending,
};

enum class RedexStrategy { kLeftmost, kRightmost, kRandom };

inline constexpr std::size_t kDefaultStepCap = 1'000'000;

struct RewriteOptions {
  Orientation orientation = Orientation::kZeroAdjacent;
  /// z*_0 z_0 -> 1 - sum_{k>=1} q^{-2k} z*_k z_k. Off gives the system
  /// generated by the q-commutation and z_i z*_i relations alone.
  bool sphere_rule = true;
  /// Rewrite steps allowed per input word before StepCapExceeded.
  std::size_t step_cap = kDefaultStepCap;
};

/**
 * Oriented rewrite system for the Vaksman-Soibelman sphere algebra.
 *
 * Every rule has a two-letter left-hand side:
 *   q-commutation   ab -> q^e ba          (distinct indices, a after b in the orientation)
 *   z_i z*_i        -> z*_i z_i + (q^-2 - 1) sum_{m>i} z_m z*_m
 *   z*_0 z_0        -> 1 - sum_{k=1..n} q^{-2k} z*_k z_k   (sphere rule)
 */
class RewriteSystem {
 public:
  RewriteSystem(int n, RewriteOptions options = {});

  int n() const noexcept { return n_; }
  const RewriteOptions& options() const noexcept { return options_; }

  /// Right-hand side for the redex ab, or nullptr when ab is irreducible.
  const NCPoly* rule(const Generator& a, const Generator& b) const;

  /// Reduce to a fixed point. `rng` is required for kRandom. `max_steps`
  /// receives the largest per-word step count.
  NCPoly reduce(const NCPoly& p, RedexStrategy strategy = RedexStrategy::kLeftmost,
                std::mt19937_64* rng = nullptr, std::size_t* max_steps = nullptr) const;

  bool is_normal(const Word& w) const;

 private:
  int letter_id(const Generator& g) const {
    return g.starred ? g.index : n_ + 1 + g.index;
  }

  int n_;
  RewriteOptions options_;
  std::vector<std::optional<NCPoly>> table_;  // (2n+2)^2 entries
};

/// Leftmost-innermost reduction with the default system.
NCPoly normal_form(const NCPoly& p, const RewriteOptions& options = {});

/// Reverse each word and toggle stars; coefficients are fixed.
NCPoly adjoint(const NCPoly& p);

/// #unstarred - #starred of every word, or nullopt when the words disagree.
/// The zero polynomial has degree 0.
std::optional<int> u1_degree(const NCPoly& p);
int word_degree(const Word& w);

NCPoly spectral_component(const NCPoly& p, int m);
std::map<int, NCPoly> spectral_components(const NCPoly& p);

/// z_0 -> z_0, z_1 -> z_1, z_i -> 0 for i >= 2, then normal form in the n = 1
/// algebra.
NCPoly phi(const NCPoly& p, const RewriteOptions& options = {});

/// Evaluate every coefficient at q = 1.
std::map<Word, BigInt, CanonicalWordLess> specialize_at_one(const NCPoly& p);

// ---------------------------------------------------------------------------
// Verification reports

struct Mismatch {
  std::string input;
  std::string form_a;
  std::string form_b;
};

struct ReductionReport {
  std::size_t inputs = 0;
  std::size_t max_steps = 0;
  std::vector<Mismatch> mismatches;
  std::size_t step_cap_hits = 0;
  std::size_t degree_violations = 0;

  bool passed() const {
    return mismatches.empty() && step_cap_hits == 0 && degree_violations == 0;
  }
};

/// The defining relations of the sphere algebra as (lhs, rhs) pairs, adjoints
/// of the q-commutation relations included.
std::vector<std::pair<NCPoly, NCPoly>> defining_relations(int n);

/// Every defining relation must reduce to lhs == rhs, and phi must send it to
/// a relation of the n = 1 algebra.
ReductionReport verify_defining_relations(int n, const RewriteOptions& options = {});

/// Random words of length 2..max_len, each reduced leftmost and with random
/// redex selection. Deterministic for a fixed seed.
ReductionReport fuzz_confluence(int n, int max_len, std::size_t trials, std::uint64_t seed,
                                const RewriteOptions& options = {});

/// All words of exactly `length` letters, reduced leftmost, rightmost and
/// randomly.
ReductionReport exhaustive_confluence(int n, int length, const RewriteOptions& options = {},
                                      std::uint64_t seed = 0);

}  // namespace qcpn
