#include "incexc/random_family.hpp"

#include <random>

#include "incexc/error.hpp"

namespace incexc {

namespace {

std::vector<Rat> random_weights(std::mt19937_64& rng, std::size_t count, std::uint64_t max_weight) {
  std::vector<BigInt> raw(count);
  BigInt total = 0;
  for (auto& w : raw) {
    w = static_cast<unsigned long>(rng() % (max_weight + 1));
    total += w;
  }
  if (total == 0) {
    raw[rng() % count] = 1;
    total = 1;
  }
  std::vector<Rat> out;
  out.reserve(count);
  for (const auto& w : raw) out.emplace_back(w, total);
  return out;
}

}  // namespace

EventFamily random_family(std::size_t atoms, std::size_t events, std::uint64_t seed) {
  if (atoms == 0) throw Error(ErrorCode::InvalidParameter, "a space needs at least one atom");
  std::mt19937_64 rng(seed);
  auto space = std::make_shared<const FiniteSpace>(FiniteSpace::make(random_weights(rng, atoms, 9)));
  std::vector<AtomSet> sets;
  sets.reserve(events);
  for (std::size_t i = 0; i < events; ++i) {
    AtomSet s(atoms);
    for (std::size_t a = 0; a < atoms; ++a) {
      if (rng() & 1U) s.set(a);
    }
    sets.push_back(std::move(s));
  }
  return EventFamily(std::move(space), std::move(sets));
}

ZPlusPmf random_explicit_pmf(std::size_t max_support, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t m = static_cast<std::size_t>(rng() % (max_support + 1));
  return ZPlusPmf::explicit_weights(random_weights(rng, m + 1, 9));
}

}  // namespace incexc
