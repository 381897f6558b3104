#include <doctest.h>

#include <algorithm>

#include "incexc/atoms.hpp"
#include "incexc/moments.hpp"
#include "incexc/random_family.hpp"
#include "oracles.hpp"

using namespace incexc;

namespace {

Rat r(long n, long d = 1) { return Rat(BigInt(n), BigInt(d)); }

EventFamily two_events() {
  auto space = std::make_shared<const FiniteSpace>(FiniteSpace::make({r(1, 3), r(1, 3), r(1, 3)}, {"a", "b", "c"}));
  return EventFamily::from_indices(space, {{0, 1}, {1, 2}});
}

using Sig = std::vector<std::size_t>;

}  // namespace

TEST_CASE("decompose examples") {
  const auto dec = decompose_finite_family(two_events());
  REQUIRE(dec.cells.size() == 3);
  CHECK(dec.cell_weight(Sig{0}) == r(1, 3));
  CHECK(dec.cell_weight(Sig{0, 1}) == r(1, 3));
  CHECK(dec.cell_weight(Sig{1}) == r(1, 3));
  CHECK(dec.cell_weight(Sig{}) == r(0));
  CHECK(dec.cells[2].signature == Sig{0, 1});
  CHECK(dec.cells[2].atoms == std::vector<std::size_t>{1});

  auto space = std::make_shared<const FiniteSpace>(make_space({r(1, 4), r(3, 4)}));
  const auto empty = decompose_finite_family(EventFamily::from_indices(space, {}));
  REQUIRE(empty.cells.size() == 1);
  CHECK(empty.cells[0].signature.empty());
  CHECK(empty.cells[0].weight == r(1));

  auto half = std::make_shared<const FiniteSpace>(FiniteSpace::make({r(1, 2), r(1, 2)}, {"a", "b"}));
  const auto dup = decompose_finite_family(EventFamily::from_indices(half, {{0}, {0}}));
  REQUIRE(dup.cells.size() == 2);
  CHECK(dup.cell_weight(Sig{0, 1}) == r(1, 2));
  CHECK(dup.cell_weight(Sig{}) == r(1, 2));
}

TEST_CASE("compute_tj examples") {
  CHECK(compute_tj(decompose_finite_family(two_events())) == std::vector<Rat>{r(0), r(2, 3), r(1, 3)});
  auto space = std::make_shared<const FiniteSpace>(make_space({r(1)}));
  CHECK(compute_tj(decompose_finite_family(EventFamily::from_indices(space, {}))) == std::vector<Rat>{r(1)});
  auto half = std::make_shared<const FiniteSpace>(make_space({r(1, 2), r(1, 2)}));
  CHECK(compute_tj(decompose_finite_family(EventFamily::from_indices(half, {{0}, {0}}))) ==
        std::vector<Rat>{r(1, 2), r(0), r(1, 2)});
}

TEST_CASE("verify_sk_tk_identity examples") {
  const auto rep = verify_sk_tk_identity(two_events(), 3);
  REQUIRE(rep.checks.size() == 3);
  CHECK(rep.checks[0].sieve_value == r(4, 3));
  CHECK(rep.checks[0].occupancy_value == r(4, 3));
  CHECK(rep.checks[1].sieve_value == r(1, 3));
  CHECK(rep.checks[1].occupancy_value == r(1, 3));
  CHECK(rep.checks[2].sieve_value == r(0));
  CHECK(rep.all_equal());

  auto space = std::make_shared<const FiniteSpace>(make_space({r(1)}));
  const auto empty = verify_sk_tk_identity(EventFamily::from_indices(space, {}), 4);
  CHECK(empty.all_equal());
  for (const auto& c : empty.checks) CHECK(c.sieve_value == r(0));
}

TEST_CASE("decomposition properties on random families") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto fam = random_family(1 + seed % 14, seed % 11, seed + 500);
    const auto dec = decompose_finite_family(fam);

    // partition: every atom in exactly one cell, weights add up to 1
    std::vector<int> hits(fam.atom_count(), 0);
    Rat total;
    Rat nonempty;
    for (const auto& c : dec.cells) {
      for (auto a : c.atoms) ++hits[a];
      total += c.weight;
      if (!c.signature.empty()) nonempty += c.weight;
      // every atom of the cell is in exactly the events of its signature
      for (auto a : c.atoms) {
        for (std::size_t i = 0; i < fam.size(); ++i) {
          const bool listed = std::binary_search(c.signature.begin(), c.signature.end(), i);
          CHECK(fam.event(i).test(a) == listed);
        }
      }
    }
    for (int h : hits) CHECK(h == 1);
    CHECK(total == Rat(1));
    CHECK(nonempty == union_prob_bruteforce(fam));

    CHECK(dec.t == oracle::occupancy(fam));
    Rat tsum;
    for (const auto& t : dec.t) tsum += t;
    CHECK(tsum == Rat(1));

    CHECK(verify_sk_tk_identity(fam, std::max<std::size_t>(fam.size(), 1) + 1).all_equal());

    // occupancy pushforward: moments of the occupancy pmf equal the sieve sums
    const auto s = sk_from_pmf(occupancy_pmf(dec), fam.size() + 1);
    const auto skn = compute_all_skn(fam);
    for (std::size_t k = 1; k <= fam.size(); ++k) CHECK(s[k].exact() == skn[k]);
    CHECK(s[fam.size() + 1].exact() == r(0));

    // A_U recovered from the cells
    if (fam.size() >= 2) {
      const Sig u{0, 1};
      CHECK(dec.intersection_weight(u) == fam.space().measure(fam.event(0) & fam.event(1)));
    }
  }
}
