#include "stone/random.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace stone {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

namespace {

Ordinal random_polynomial(Rng& rng) {
  std::vector<Ordinal::Term> terms;
  std::uint64_t e = uniform(rng, 0, 4);
  const std::uint64_t count = uniform(rng, 1, 3);
  for (std::uint64_t k = 0; k < count; ++k) {
    terms.push_back(Ordinal::Term{Ordinal(e), uniform(rng, 1, 5)});
    if (e == 0) break;
    e = uniform(rng, 0, e - 1);
  }
  return Ordinal::from_terms(std::move(terms));
}

// Random ordinal below w^e.
Ordinal random_below_omega_pow(Rng& rng, const Ordinal& e, int depth) {
  if (e.is_zero() || uniform(rng, 0, 4) == 0) return Ordinal(0);
  const Ordinal f = depth > 4 ? Ordinal(0) : random_below(rng, e);
  Ordinal head = Ordinal::omega_pow(f, uniform(rng, 1, 6));
  return head + random_below_omega_pow(rng, f, depth + 1);
}

}  // namespace

Ordinal random_ordinal(Rng& rng) {
  std::vector<Ordinal> exps;
  const std::uint64_t count = uniform(rng, 0, 4);
  for (std::uint64_t k = 0; k < count; ++k) exps.push_back(random_polynomial(rng));
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Ordinal::Term> terms;
  for (auto& e : exps) terms.push_back(Ordinal::Term{std::move(e), uniform(rng, 1, 9)});
  return Ordinal::from_terms(std::move(terms));
}

Ordinal random_below(Rng& rng, const Ordinal& x) {
  if (x.is_zero()) throw std::invalid_argument("random_below(0)");
  const auto& terms = x.terms();
  // Keep a random prefix of x, then undercut the next term.
  const std::size_t keep = uniform(rng, 0, terms.size() - 1);
  std::vector<Ordinal::Term> prefix(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(keep));
  const auto& t = terms[keep];
  Ordinal base = Ordinal::from_terms(std::move(prefix));
  const std::uint64_t c = uniform(rng, 0, t.coef - 1);
  base = base + Ordinal::omega_pow(t.exponent, c);
  return base + random_below_omega_pow(rng, t.exponent, 0);
}

Ordinal random_point(Rng& rng, const Interval& iv) {
  const std::uint64_t pick = uniform(rng, 0, 9);
  if (pick == 0) return iv.hi;
  if (!iv.lo) return random_below(rng, successor(iv.hi));
  const Ordinal len = left_sub(*iv.lo, iv.hi);
  if (pick == 1) return successor(*iv.lo);
  // {1 + s : s < len} covers every offset in (0, len) and misses only len itself.
  return *iv.lo + (Ordinal(1) + random_below(rng, len));
}

Ordinal random_point(Rng& rng, const ClopenSet& a) {
  if (a.is_empty()) throw std::invalid_argument("random_point of the empty set");
  const auto& ivs = a.intervals();
  return random_point(rng, ivs[uniform(rng, 0, ivs.size() - 1)]);
}

Ordinal random_rank_point(Rng& rng, const Interval& iv, const Ordinal& gamma) {
  const Ordinal q_hi = divmod_omega_pow(iv.hi, gamma).quotient;
  const Ordinal q_lo = iv.lo ? divmod_omega_pow(*iv.lo, gamma).quotient : Ordinal(0);
  // 0 is isolated and is the only rank-0 point of [0, 0].
  if (!iv.lo && gamma.is_zero() && (q_hi.is_zero() || uniform(rng, 0, 7) == 0)) return Ordinal(0);
  if (!(q_lo < q_hi)) throw std::invalid_argument("interval has no point of the requested rank");
  // y = q_lo + 1 + s with q_lo + 1 + s <= q_hi.
  const Ordinal room = left_sub(successor(q_lo), q_hi);
  const Ordinal s = uniform(rng, 0, 3) == 0 ? Ordinal(0) : random_below(rng, successor(room));
  Ordinal y = successor(q_lo) + s;
  if (!is_successor(y)) y = successor(y);
  if (y > q_hi) y = successor(q_lo);
  return mul_omega_pow(gamma, y);
}

ClopenSet random_clopen(Rng& rng, const Space& space, int max_intervals) {
  const ClopenSet full = ClopenSet::full(space);
  std::vector<Interval> ivs;
  const auto count = uniform(rng, 0, static_cast<std::uint64_t>(max_intervals));
  for (std::uint64_t k = 0; k < count; ++k) {
    Ordinal a = random_point(rng, full);
    Ordinal b = random_point(rng, full);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    if (uniform(rng, 0, 9) == 0) {
      ivs.push_back(Interval{std::nullopt, b});
    } else {
      ivs.push_back(Interval{a, b});
    }
  }
  return ClopenSet::from_intervals(space, std::move(ivs));
}

}  // namespace stone
