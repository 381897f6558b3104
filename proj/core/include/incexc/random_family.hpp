#pragma once

#include <cstddef>
#include <cstdint>

#include "incexc/pmf.hpp"
#include "incexc/space.hpp"

namespace incexc {

/// Reproducible random instances. Draws come straight from std::mt19937_64
/// (no std distributions), so output is identical across standard libraries.

/// `atoms` atoms with small random integer weights (some may be zero),
/// normalized exactly; `events` events, each atom included with probability 1/2.
EventFamily random_family(std::size_t atoms, std::size_t events, std::uint64_t seed);

/// Explicit pmf with support drawn uniformly from {0..max_support}.
ZPlusPmf random_explicit_pmf(std::size_t max_support, std::uint64_t seed);

}  // namespace incexc
