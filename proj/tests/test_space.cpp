#include <doctest.h>

#include "incexc/error.hpp"
#include "incexc/pmf.hpp"
#include "incexc/random_family.hpp"
#include "incexc/space.hpp"
#include "oracles.hpp"

using namespace incexc;

namespace {

Rat r(long n, long d = 1) { return Rat(BigInt(n), BigInt(d)); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an incexc::Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("make_space") {
  CHECK(make_space({r(1, 2), r(1, 2)}).size() == 2);
  CHECK(code_of([] { make_space({r(1, 3), r(1, 3), r(1, 2)}); }) == ErrorCode::NotNormalized);
  CHECK(make_space({r(1, 3), r(1, 3), r(1, 3)}).size() == 3);
  CHECK(code_of([] { make_space({r(3, 2), r(-1, 2)}); }) == ErrorCode::NegativeWeight);
  CHECK(code_of([] { FiniteSpace::make({r(1, 2), r(1, 2)}, {"a", "a"}); }) == ErrorCode::InvalidParameter);

  const auto s = FiniteSpace::make({r(1, 6), r(1, 3), r(1, 2)}, {"x", "y", "z"});
  CHECK(s.common_denominator() == 6);
  CHECK(s.atoms()[1].label == "y");
  AtomSet set(3);
  set.set(0);
  set.set(2);
  CHECK(s.measure(set) == r(2, 3));
}

TEST_CASE("event family validation") {
  auto space = std::make_shared<const FiniteSpace>(make_space({r(1, 2), r(1, 2)}));
  CHECK(code_of([&] { EventFamily::from_indices(space, {{0, 2}}); }) == ErrorCode::IndexOutOfRange);
  const auto fam = EventFamily::from_indices(space, {{0}, {}, {0}, {0, 1}});
  CHECK(fam.size() == 4);
  CHECK(fam.event(1).none());
  CHECK(fam.prefix(2).size() == 2);
  CHECK(EventFamily::from_indices(space, {}).size() == 0);
}

TEST_CASE("AtomSet words and iteration") {
  AtomSet s(130);
  s.set(0);
  s.set(64);
  s.set(129);
  CHECK(s.count() == 3);
  CHECK(s.indices() == std::vector<std::size_t>{0, 64, 129});
  const AtomSet f = AtomSet::full(130);
  CHECK(f.count() == 130);
  CHECK((f & s) == s);
  AtomSet out;
  AtomSet::intersect_into(f, s, out);
  CHECK(out == s);
}

TEST_CASE("pmf_weight") {
  const auto ex = ZPlusPmf::explicit_weights({r(1, 2), r(0), r(0), r(1, 2)});
  CHECK(pmf_weight(ex, 3).exact() == r(1, 2));
  CHECK(pmf_weight(ex, 7).exact() == r(0));

  // (1 - p) p^j; normalization oracle: sum_{j <= 200} T_j + p^201 = 1 exactly
  const auto geo = ZPlusPmf::geometric(r(2, 5));
  CHECK(pmf_weight(geo, 2).exact() == r(12, 125));
  Rat partial;
  for (std::size_t j = 0; j <= 200; ++j) partial += pmf_weight(geo, j).exact();
  CHECK(partial + pow(r(2, 5), 201) == Rat(1));

  // e^{-1} against a Taylor enclosure
  const auto poi = ZPlusPmf::poisson(r(1));
  const Scalar t0 = pmf_weight(poi, 0);
  CHECK_FALSE(t0.is_exact());
  CHECK(t0.width() <= r(1, 100000) * r(1, 1000000000000000LL));
  const auto taylor = oracle::exp_neg(r(1), 40);
  CHECK(taylor.hi - taylor.lo < r(1, 1000000000) * r(1, 1000000000) * r(1, 1000000000));
  CHECK(t0.lower() <= taylor.hi);
  CHECK(taylor.lo <= t0.upper());
  CHECK(t0.decimal(7) == "[0.3678794, 0.3678794]");

  CHECK(code_of([] { ZPlusPmf::geometric(r(1)); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { ZPlusPmf::poisson(r(-1)); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { ZPlusPmf::explicit_weights({r(1, 2)}); }) == ErrorCode::NotNormalized);
  CHECK(code_of([] { ZPlusPmf::explicit_weights({r(3, 2), r(-1, 2)}); }) == ErrorCode::NegativeWeight);
}

TEST_CASE("truncate_conditional") {
  const auto ex = ZPlusPmf::explicit_weights({r(1, 2), r(0), r(0), r(1, 2)});
  const auto t1 = truncate_conditional(ex, 1);
  CHECK(t1.weights() == std::vector<Rat>{r(1), r(0)});

  const auto geo = ZPlusPmf::geometric(r(1, 2));
  CHECK(truncate_conditional(geo, 1).weights() == std::vector<Rat>{r(2, 3), r(1, 3)});

  const auto shifted = ZPlusPmf::explicit_weights({r(0), r(1)});
  CHECK(shifted.first_positive_index() == 1);
  CHECK(code_of([&] { truncate_conditional(shifted, 0); }) == ErrorCode::ZeroMass);
  CHECK(truncate_conditional(shifted, 1).weights() == std::vector<Rat>{r(0), r(1)});

  // poisson conditioning is exact: the e^{-lambda} factor cancels
  const auto poi = ZPlusPmf::poisson(r(1));
  CHECK(truncate_conditional(poi, 2).weights() == std::vector<Rat>{r(2, 5), r(2, 5), r(1, 5)});
}

TEST_CASE("truncation invariants") {
  const std::vector<ZPlusPmf> pmfs = {ZPlusPmf::geometric(r(2, 5)), ZPlusPmf::geometric(r(9, 10)),
                                      ZPlusPmf::poisson(r(3)), random_explicit_pmf(12, 5)};
  for (const auto& pmf : pmfs) {
    for (std::size_t n = pmf.first_positive_index(); n < 40; ++n) {
      const auto t = truncate_conditional(pmf, n);
      Rat sum;
      for (const auto& w : t.weights()) sum += w;
      CHECK(sum == Rat(1));
    }
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto pmf = random_explicit_pmf(12, seed);
    const std::size_t m = pmf.support_max().value();
    for (std::size_t n = m; n <= m + 3; ++n) {
      const auto t = truncate_conditional(pmf, n);
      for (std::size_t j = 0; j <= n; ++j) CHECK(t.relative_weight(j) == pmf.relative_weight(j));
    }
  }
}

TEST_CASE("parametric partial sums approach 1 from below") {
  const auto geo = ZPlusPmf::geometric(r(3, 5));
  Rat prev = r(-1);
  Rat partial;
  for (std::size_t j = 0; j <= 60; ++j) {
    partial += pmf_weight(geo, j).exact();
    CHECK(partial > prev);
    CHECK(partial < Rat(1));
    CHECK(partial + pow(r(3, 5), j + 1) == Rat(1));  // exact geometric tail
    prev = partial;
  }

  // poisson: sum_{j <= J} T_j plus the ratio-test tail bound encloses 1
  const Rat lambda = r(3);
  const auto poi = ZPlusPmf::poisson(lambda);
  Scalar sum(Rat(0));
  Rat prev_upper = r(-1);
  for (std::size_t j = 0; j <= 60; ++j) {
    sum += pmf_weight(poi, j);
    CHECK(sum.upper() > prev_upper);
    CHECK(sum.lower() < Rat(1));
    prev_upper = sum.upper();
    if (j + 2 >= 6) {
      // T_{i+1}/T_i = lambda/(i+1) <= 1/2 for i > j, tail <= 2 T_{j+1} <= 2 lambda^{j+1}/(j+1)!
      const Rat tail = Rat(2) * pow(lambda, j + 1) / Rat(factorial(j + 1));
      CHECK(sum.lower() <= Rat(1));
      CHECK(Rat(1) <= sum.upper() + tail);
    }
  }
}
