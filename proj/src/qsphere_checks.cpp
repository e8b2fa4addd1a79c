#include <algorithm>

#include "qcpn/errors.hpp"
#include "qcpn/qsphere.hpp"

namespace qcpn {
namespace {

NCPoly word_poly(int n, std::initializer_list<Generator> letters) {
  return NCPoly::monomial(n, Word(letters));
}

std::string relation_text(const NCPoly& lhs, const NCPoly& rhs) {
  return lhs.to_string() + " = " + rhs.to_string();
}

// Reduces `p` under `system`, folding step statistics and cap hits into the
// report. Returns nullopt on a cap hit.
std::optional<NCPoly> tracked_reduce(const RewriteSystem& system, const NCPoly& p,
                                     RedexStrategy strategy, std::mt19937_64* rng,
                                     ReductionReport& report) {
  try {
    std::size_t steps = 0;
    NCPoly out = system.reduce(p, strategy, rng, &steps);
    report.max_steps = std::max(report.max_steps, steps);
    return out;
  } catch (const StepCapExceeded&) {
    ++report.step_cap_hits;
    return std::nullopt;
  }
}

bool degree_preserved(const Word& w, const NCPoly& nf) {
  if (nf.is_zero()) return true;
  auto d = u1_degree(nf);
  return d && *d == word_degree(w);
}

// Reduce one word by every strategy in `strategies` and record disagreements.
void compare_strategies(const RewriteSystem& system, const Word& w,
                        std::initializer_list<RedexStrategy> strategies, std::mt19937_64& rng,
                        ReductionReport& report) {
  ++report.inputs;
  const NCPoly input = NCPoly::monomial(system.n(), w);
  std::optional<NCPoly> reference;
  for (auto strategy : strategies) {
    auto nf = tracked_reduce(system, input, strategy, &rng, report);
    if (!nf) return;
    if (!degree_preserved(w, *nf)) ++report.degree_violations;
    if (!reference) {
      reference = std::move(nf);
    } else if (!(*reference == *nf)) {
      report.mismatches.push_back({word_to_string(w), reference->to_string(), nf->to_string()});
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<NCPoly, NCPoly>> defining_relations(int n) {
  if (n < 0) throw DomainError("ambient n must be nonnegative");
  std::vector<std::pair<NCPoly, NCPoly>> out;
  const LaurentQ q = LaurentQ::q(1);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      // z_i z_j = q z_j z_i and its adjoint z*_j z*_i = q z*_i z*_j
      out.emplace_back(word_poly(n, {{i, false}, {j, false}}), q * word_poly(n, {{j, false}, {i, false}}));
      out.emplace_back(word_poly(n, {{j, true}, {i, true}}), q * word_poly(n, {{i, true}, {j, true}}));
    }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j)
        out.emplace_back(word_poly(n, {{i, false}, {j, true}}), q * word_poly(n, {{j, true}, {i, false}}));
  const LaurentQ deformation = LaurentQ::q(-2) - LaurentQ(1);
  for (int i = 0; i <= n; ++i) {
    NCPoly rhs = word_poly(n, {{i, true}, {i, false}});
    for (int m = i + 1; m <= n; ++m) rhs += deformation * word_poly(n, {{m, false}, {m, true}});
    out.emplace_back(word_poly(n, {{i, false}, {i, true}}), rhs);
  }
  NCPoly sphere(n);
  for (int m = 0; m <= n; ++m) sphere += word_poly(n, {{m, false}, {m, true}});
  out.emplace_back(sphere, NCPoly::constant(n, 1));
  return out;
}

ReductionReport verify_defining_relations(int n, const RewriteOptions& options) {
  if (n < 1) throw DomainError("verify_defining_relations requires n >= 1");
  ReductionReport report;
  const RewriteSystem source(n, options);
  const RewriteSystem target(1, options);
  for (const auto& [lhs, rhs] : defining_relations(n)) {
    ++report.inputs;
    auto a = tracked_reduce(source, lhs, RedexStrategy::kLeftmost, nullptr, report);
    auto b = tracked_reduce(source, rhs, RedexStrategy::kLeftmost, nullptr, report);
    if (a && b && !(*a == *b))
      report.mismatches.push_back({relation_text(lhs, rhs), a->to_string(), b->to_string()});

    // phi must carry the relation to one that holds in the n = 1 algebra.
    NCPoly lhs_image(1), rhs_image(1);
    for (const auto& [w, c] : lhs.terms())
      if (std::none_of(w.begin(), w.end(), [](const Generator& g) { return g.index >= 2; }))
        lhs_image.add_term(w, c);
    for (const auto& [w, c] : rhs.terms())
      if (std::none_of(w.begin(), w.end(), [](const Generator& g) { return g.index >= 2; }))
        rhs_image.add_term(w, c);
    auto pa = tracked_reduce(target, lhs_image, RedexStrategy::kLeftmost, nullptr, report);
    auto pb = tracked_reduce(target, rhs_image, RedexStrategy::kLeftmost, nullptr, report);
    if (pa && pb && !(*pa == *pb))
      report.mismatches.push_back({"phi: " + relation_text(lhs, rhs), pa->to_string(), pb->to_string()});
  }
  return report;
}

ReductionReport fuzz_confluence(int n, int max_len, std::size_t trials, std::uint64_t seed,
                                const RewriteOptions& options) {
  if (max_len < 2) throw DomainError("fuzz_confluence requires max_len >= 2");
  const RewriteSystem system(n, options);
  ReductionReport report;
  std::mt19937_64 words(seed);
  std::uniform_int_distribution<int> length(2, max_len);
  std::uniform_int_distribution<int> letter(0, 2 * n + 1);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Word w(static_cast<std::size_t>(length(words)));
    for (auto& g : w) {
      const int id = letter(words);
      g = Generator{id % (n + 1), id <= n};
    }
    // Redex choices get their own stream so each trial replays in isolation.
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 redex_rng(seq);
    compare_strategies(system, w, {RedexStrategy::kLeftmost, RedexStrategy::kRandom}, redex_rng,
                       report);
  }
  return report;
}

ReductionReport exhaustive_confluence(int n, int length, const RewriteOptions& options,
                                      std::uint64_t seed) {
  if (length < 0) throw DomainError("word length must be nonnegative");
  const RewriteSystem system(n, options);
  ReductionReport report;
  std::mt19937_64 rng(seed);
  const int letters = 2 * (n + 1);
  std::vector<int> digits(static_cast<std::size_t>(length), 0);
  for (;;) {
    Word w;
    w.reserve(digits.size());
    for (int id : digits) w.push_back(Generator{id % (n + 1), id <= n});
    compare_strategies(system, w,
                       {RedexStrategy::kLeftmost, RedexStrategy::kRightmost, RedexStrategy::kRandom},
                       rng, report);
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == letters) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return report;
}

}  // namespace qcpn
