#include <doctest.h>

#include "incexc/error.hpp"
#include "incexc/random_family.hpp"
#include "incexc/sieve.hpp"
#include "oracles.hpp"

using namespace incexc;

namespace {

Rat r(long n, long d = 1) { return Rat(BigInt(n), BigInt(d)); }

// uniform {a, b, c}, A1 = {a, b}, A2 = {b, c}
EventFamily two_events() {
  auto space = std::make_shared<const FiniteSpace>(FiniteSpace::make({r(1, 3), r(1, 3), r(1, 3)}, {"a", "b", "c"}));
  return EventFamily::from_indices(space, {{0, 1}, {1, 2}});
}

EventFamily empty_family() {
  auto space = std::make_shared<const FiniteSpace>(make_space({r(1, 2), r(1, 2)}));
  return EventFamily::from_indices(space, {});
}

}  // namespace

TEST_CASE("compute_skn examples") {
  const auto fam = two_events();
  CHECK(compute_skn(fam, 3) == r(0));
  CHECK(compute_skn(fam, 1) == r(4, 3));
  CHECK(compute_skn(fam, 2) == r(1, 3));
  CHECK(compute_skn(fam, 0) == r(1));
  CHECK(compute_all_skn(fam) == std::vector<Rat>{r(1), r(4, 3), r(1, 3)});
}

TEST_CASE("union_prob_bruteforce examples") {
  CHECK(union_prob_bruteforce(empty_family()) == r(0));
  CHECK(union_prob_bruteforce(two_events()) == r(1));
  auto space = std::make_shared<const FiniteSpace>(make_space({r(1, 2), r(1, 2)}));
  CHECK(union_prob_bruteforce(EventFamily::from_indices(space, {{1}})) == r(1, 2));
}

TEST_CASE("union_of_k_intersections examples") {
  const auto fam = two_events();
  CHECK(union_of_k_intersections(fam, 1) == r(1));
  CHECK(union_of_k_intersections(fam, 2) == r(1, 3));
  CHECK(union_of_k_intersections(fam, 3) == r(0));
  CHECK_THROWS_AS(union_of_k_intersections(fam, 0), Error);
}

TEST_CASE("verify_finite_identity examples") {
  const auto rep = verify_finite_identity(two_events());
  CHECK(rep.lhs == r(1));
  CHECK(rep.rhs == r(1));
  CHECK(rep.equal);

  const auto empty = verify_finite_identity(empty_family());
  CHECK(empty.lhs == r(0));
  CHECK(empty.rhs == r(0));
  CHECK(empty.equal);

  // 5 events over 10 uniform atoms; value frozen from the brute-force oracle
  std::vector<Rat> uniform(10, r(1, 10));
  auto space = std::make_shared<const FiniteSpace>(make_space(uniform));
  auto seeded = random_family(10, 5, 42);
  const auto fam = EventFamily(space, seeded.events());
  const auto rep5 = verify_finite_identity(fam);
  CHECK(rep5.equal);
  CHECK(rep5.lhs == oracle::union_of_k_intersections(fam, 1));
  CHECK(rep5.lhs == r(1));
}

TEST_CASE("bonferroni_bracket_finite examples") {
  const auto fam = two_events();
  const auto b = bonferroni_bracket_finite(fam, 1, 0, 0);
  CHECK(b.lower.exact() == r(1));
  CHECK(b.upper.exact() == r(4, 3));
  CHECK(b.contains(r(1)));

  const auto b2 = bonferroni_bracket_finite(fam, 2, 0, 0);
  CHECK(b2.lower.exact() == r(1, 3));
  CHECK(b2.upper.exact() == r(1, 3));

  const auto full = bonferroni_bracket_finite(fam, 1, 1, 1);
  CHECK(full.lower.exact() == full.upper.exact());
  CHECK(full.lower.exact() == r(1));

  CHECK_THROWS_AS(bonferroni_bracket_finite(fam, 3, 0, 0), Error);
  CHECK_THROWS_AS(bonferroni_bracket_finite(fam, 0, 0, 0), Error);
  try {
    bonferroni_bracket_finite(empty_family(), 1, 0, 0);
  } catch (const Error& e) {
    CHECK(e.name() == "BadK");
  }
}

TEST_CASE("sieve agrees with the bitmask oracle on random families") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t atoms = 1 + seed % 14;
    const std::size_t events = seed % 11;
    const auto fam = random_family(atoms, events, seed);
    const auto all = compute_all_skn(fam);
    REQUIRE(all.size() == events + 1);
    Rat alternating;
    for (std::size_t k = 1; k <= events + 1; ++k) {
      const Rat s = compute_skn(fam, k);
      CHECK(s == oracle::skn_bruteforce(fam, k));
      if (k <= events) {
        CHECK(s == all[k]);
        alternating += (k % 2 == 1) ? s : -s;
      }
      CHECK(s.sign() >= 0);
      CHECK(s <= Rat(binom(events, k)));
      CHECK(union_of_k_intersections(fam, k) == oracle::union_of_k_intersections(fam, k));
    }
    CHECK(alternating == union_prob_bruteforce(fam));
    CHECK(verify_finite_identity(fam).equal);
  }
}

TEST_CASE("generalized finite identity and bracket nesting") {
  for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
    const auto fam = random_family(1 + seed % 14, 1 + seed % 10, seed);
    const std::size_t n = fam.size();
    const auto s = compute_all_skn(fam);
    for (std::size_t k = 1; k <= n; ++k) {
      const Rat target = union_of_k_intersections(fam, k);
      Rat full;
      for (std::size_t j = 0; j + k <= n; ++j) {
        const Rat term = Rat(binom(j + k - 1, k - 1)) * s[j + k];
        full += (j % 2 == 0) ? term : -term;
      }
      CHECK(full == target);

      for (std::size_t d = 0; 2 * d + k <= n + 1; ++d) {
        for (std::size_t rr = 0; 2 * rr + k <= n + 1; ++rr) {
          CHECK(bonferroni_bracket_finite(s, k, d, rr).contains(target));
        }
      }
    }
  }
}

TEST_CASE("partial sums are nondecreasing along nested prefixes") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto fam = random_family(12, 10, seed + 77);
    for (std::size_t k = 1; k <= 4; ++k) {
      Rat prev;
      for (std::size_t n = 0; n <= fam.size(); ++n) {
        const Rat cur = compute_skn(fam.prefix(n), k);
        CHECK(cur >= prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("repeated and empty events are distinct indices") {
  auto space = std::make_shared<const FiniteSpace>(make_space({r(1, 2), r(1, 2)}));
  const auto fam = EventFamily::from_indices(space, {{0}, {0}, {}});
  CHECK(compute_skn(fam, 1) == r(1));
  CHECK(compute_skn(fam, 2) == r(1, 2));
  CHECK(compute_skn(fam, 3) == r(0));
  CHECK(verify_finite_identity(fam).equal);
}

TEST_CASE("event cap") {
  const auto fam = random_family(6, 26, 3);
  SieveOptions opts;
  try {
    compute_skn(fam, 2, opts);
    FAIL("expected EventCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EventCapExceeded);
    CHECK(e.category() == ErrorCategory::Resource);
  }
  opts.max_events = 26;
  CHECK(compute_skn(fam, 2, opts) == oracle::skn_bruteforce(fam.prefix(26), 2));
}

TEST_CASE("parallel enumeration matches sequential") {
  const auto fam = random_family(40, 20, 99);
  SieveOptions seq;
  seq.threads = 1;
  SieveOptions par;
  par.threads = 4;
  CHECK(compute_skn(fam, 10, seq) == compute_skn(fam, 10, par));
  CHECK(compute_all_skn(fam, seq) == compute_all_skn(fam, par));
  CHECK(union_of_k_intersections(fam, 9, seq) == union_of_k_intersections(fam, 9, par));
}

TEST_CASE("large denominators take the arbitrary-precision path") {
  // weights with a common denominator far beyond 64 bits
  const BigInt big("340282366920938463463374607431768211507");  // prime > 2^128
  std::vector<Rat> w = {Rat(BigInt(1), big), Rat(BigInt(2), big)};
  w.push_back(Rat(1) - w[0] - w[1]);
  auto space = std::make_shared<const FiniteSpace>(make_space(w));
  const auto fam = EventFamily::from_indices(space, {{0, 1}, {1, 2}, {0, 2}, {1}});
  for (std::size_t k = 1; k <= 4; ++k) CHECK(compute_skn(fam, k) == oracle::skn_bruteforce(fam, k));
  CHECK(verify_finite_identity(fam).equal);
}

TEST_CASE("run_sieve summary") {
  const auto res = run_sieve(two_events(), 1);
  CHECK(res.n == 2);
  CHECK(res.skn_prefix == std::vector<Rat>{r(4, 3), r(1, 3)});
  CHECK(res.union_prob == r(1));
  CHECK(run_sieve(two_events(), 3).skn_prefix.empty());
}

TEST_CASE("truncation depth does not order the bounds") {
  // ten copies of a sure event: S_j = C(10, j), union = 1
  std::vector<std::vector<std::size_t>> ev(10, std::vector<std::size_t>{0});
  const auto fam = EventFamily::from_indices(std::make_shared<const FiniteSpace>(make_space({r(1)})), ev);
  const auto s = compute_all_skn(fam);
  const std::vector<Rat> lower = {r(-35), r(-125), r(-83), r(-8)};
  const std::vector<Rat> upper = {r(10), r(85), r(127), r(37)};
  for (std::size_t d = 0; d < 4; ++d) {
    const auto b = bonferroni_bracket_finite(s, 1, d, d);
    CHECK(b.lower.exact() == lower[d]);
    CHECK(b.upper.exact() == upper[d]);
    CHECK(b.contains(r(1)));
  }
  CHECK(bonferroni_bracket_finite(s, 1, 5, 5).width() == r(0));
}
