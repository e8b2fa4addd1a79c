#include <algorithm>

#include "qcpn/errors.hpp"
#include "qcpn/qsphere.hpp"

namespace qcpn {
namespace {

// Position of each letter in the order the rules sort towards.
int orientation_rank(const Generator& g, int n, Orientation o) {
  if (!g.starred) return n + 1 + g.index;
  if (o == Orientation::kStarsAscending) return g.index;
  return g.index == 0 ? n : g.index - 1;
}

// Exponent e with a*b = q^e * b*a, for letters of distinct index.
int swap_exponent(const Generator& a, const Generator& b) {
  if (!a.starred && !b.starred) return a.index < b.index ? 1 : -1;  // z_i z_j = q z_j z_i, i<j
  if (a.starred && b.starred) return a.index > b.index ? 1 : -1;    // z*_j z*_i = q z*_i z*_j, i<j
  if (!a.starred) return 1;                                         // z_i z*_j = q z*_j z_i
  return -1;
}

// z_i z*_i -> z*_i z_i + (q^-2 - 1) sum_{m>i} z_m z*_m
NCPoly same_index_rule(int n, int i) {
  NCPoly rhs = NCPoly::monomial(n, {Generator{i, true}, Generator{i, false}});
  const LaurentQ deformation = LaurentQ::q(-2) - LaurentQ(1);
  for (int m = i + 1; m <= n; ++m)
    rhs.add_term({Generator{m, false}, Generator{m, true}}, deformation);
  return rhs;
}

// z*_0 z_0 -> 1 - sum_{k=1..n} q^{-2k} z*_k z_k
NCPoly sphere_rule(int n) {
  NCPoly rhs = NCPoly::constant(n, 1);
  for (int k = 1; k <= n; ++k)
    rhs.add_term({Generator{k, true}, Generator{k, false}}, -LaurentQ::q(-2 * k));
  return rhs;
}

}  // namespace

RewriteSystem::RewriteSystem(int n, RewriteOptions options) : n_(n), options_(options) {
  if (n < 0) throw DomainError("ambient n must be nonnegative");
  const int letters = 2 * (n + 1);
  table_.resize(static_cast<std::size_t>(letters * letters));
  std::vector<Generator> alphabet;
  for (int i = 0; i <= n; ++i) alphabet.push_back({i, true});
  for (int i = 0; i <= n; ++i) alphabet.push_back({i, false});

  for (const auto& a : alphabet)
    for (const auto& b : alphabet) {
      auto& slot = table_[static_cast<std::size_t>(letter_id(a) * letters + letter_id(b))];
      if (a.index != b.index) {
        if (orientation_rank(a, n, options.orientation) > orientation_rank(b, n, options.orientation))
          slot = NCPoly::monomial(n, {b, a}, LaurentQ::q(swap_exponent(a, b)));
      } else if (!a.starred && b.starred) {
        slot = same_index_rule(n, a.index);
      } else if (a.starred && !b.starred && a.index == 0 && options.sphere_rule) {
        slot = sphere_rule(n);
      }
    }
}

const NCPoly* RewriteSystem::rule(const Generator& a, const Generator& b) const {
  const int letters = 2 * (n_ + 1);
  const auto& slot = table_[static_cast<std::size_t>(letter_id(a) * letters + letter_id(b))];
  return slot ? &*slot : nullptr;
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (rule(w[i], w[i + 1])) return false;
  return true;
}

NCPoly RewriteSystem::reduce(const NCPoly& p, RedexStrategy strategy, std::mt19937_64* rng,
                             std::size_t* max_steps) const {
  if (p.n() != n_) throw OrderMismatch(n_, p.n());
  if (strategy == RedexStrategy::kRandom && rng == nullptr)
    throw DomainError("random redex selection needs a generator");

  NCPoly result(n_);
  std::vector<std::size_t> redexes;
  std::size_t worst = 0;

  // Each input word is reduced on its own so the step budget is per word.
  for (const auto& [word, coeff] : p.terms()) {
    std::size_t steps = 0;
    std::map<Word, LaurentQ, CanonicalWordLess> frontier{{word, coeff}};
    while (!frontier.empty()) {
      std::map<Word, LaurentQ, CanonicalWordLess> next;
      for (const auto& [w, c] : frontier) {
        redexes.clear();
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
          if (rule(w[i], w[i + 1])) redexes.push_back(i);
        if (redexes.empty()) {
          result.add_term(w, c);
          continue;
        }
        if (++steps > options_.step_cap) throw StepCapExceeded(options_.step_cap);

        std::size_t at = redexes.front();
        if (strategy == RedexStrategy::kRightmost) {
          at = redexes.back();
        } else if (strategy == RedexStrategy::kRandom) {
          std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
          at = redexes[pick(*rng)];
        }

        for (const auto& [rep, rc] : rule(w[at], w[at + 1])->terms()) {
          Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
          out.insert(out.end(), rep.begin(), rep.end());
          out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(at) + 2, w.end());
          LaurentQ contribution = c * rc;
          auto [it, inserted] = next.try_emplace(std::move(out), contribution);
          if (!inserted) {
            it->second += contribution;
            if (it->second.is_zero()) next.erase(it);
          }
        }
      }
      frontier = std::move(next);
    }
    worst = std::max(worst, steps);
  }
  if (max_steps) *max_steps = worst;
  return result;
}

NCPoly normal_form(const NCPoly& p, const RewriteOptions& options) {
  return RewriteSystem(p.n(), options).reduce(p);
}

NCPoly adjoint(const NCPoly& p) {
  NCPoly out(p.n());
  for (const auto& [w, c] : p.terms()) {
    Word r(w.rbegin(), w.rend());
    for (auto& g : r) g.starred = !g.starred;
    out.add_term(r, c);
  }
  return out;
}

int word_degree(const Word& w) {
  int d = 0;
  for (const auto& g : w) d += g.starred ? -1 : 1;
  return d;
}

std::optional<int> u1_degree(const NCPoly& p) {
  std::optional<int> degree;
  for (const auto& [w, c] : p.terms()) {
    const int d = word_degree(w);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree.value_or(0);
}

NCPoly spectral_component(const NCPoly& p, int m) {
  NCPoly out(p.n());
  for (const auto& [w, c] : p.terms())
    if (word_degree(w) == m) out.add_term(w, c);
  return out;
}

std::map<int, NCPoly> spectral_components(const NCPoly& p) {
  std::map<int, NCPoly> out;
  for (const auto& [w, c] : p.terms())
    out.try_emplace(word_degree(w), p.n()).first->second.add_term(w, c);
  return out;
}

NCPoly phi(const NCPoly& p, const RewriteOptions& options) {
  if (p.n() < 1) throw DomainError("phi needs ambient n >= 1");
  NCPoly image(1);
  for (const auto& [w, c] : p.terms()) {
    const bool killed =
        std::any_of(w.begin(), w.end(), [](const Generator& g) { return g.index >= 2; });
    if (!killed) image.add_term(w, c);
  }
  return normal_form(image, options);
}

std::map<Word, BigInt, CanonicalWordLess> specialize_at_one(const NCPoly& p) {
  std::map<Word, BigInt, CanonicalWordLess> out;
  for (const auto& [w, c] : p.terms()) {
    BigInt v = c.at_one();
    if (v != 0) out.emplace(w, v);
  }
  return out;
}

}  // namespace qcpn
