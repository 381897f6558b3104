#include "incexc/sieve.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <thread>

#include "incexc/error.hpp"

namespace incexc {

namespace {

using u128 = unsigned __int128;

BigInt to_bigint(u128 v) {
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), hi.get_mpz_t(), 64);
  return r + lo;
}

void check_cap(const EventFamily& fam, const SieveOptions& opts) {
  if (fam.size() > opts.max_events) {
    throw Error(ErrorCode::EventCapExceeded, std::to_string(fam.size()) + " events exceed the sieve cap of " +
                                                 std::to_string(opts.max_events));
  }
}

// Atom weights as integers over the space's common denominator. When every
// subset measure fits in 63 bits the enumeration accumulates in __int128.
struct WeightTable {
  bool fast = false;
  std::vector<std::uint64_t> small;
  const std::vector<BigInt>* big = nullptr;
  BigInt denominator;

  explicit WeightTable(const FiniteSpace& space)
      : big(&space.scaled_weights()), denominator(space.common_denominator()) {
    fast = mpz_sizeinbase(denominator.get_mpz_t(), 2) <= 62;
    if (fast) {
      small.reserve(big->size());
      for (const auto& w : *big) small.push_back(static_cast<std::uint64_t>(w.get_ui()));
    }
  }
};

// Per-depth sums of subset measures. Depth-indexed so one traversal can serve
// either a single k or every k at once.
struct Accumulator {
  std::vector<u128> fast;
  std::vector<BigInt> big;

  explicit Accumulator(std::size_t depths) : fast(depths, 0), big(depths, 0) {}

  void add(const WeightTable& wt, std::size_t depth, const AtomSet& s) {
    if (wt.fast) {
      std::uint64_t m = 0;
      s.for_each([&](std::size_t i) { m += wt.small[i]; });
      fast[depth] += m;
    } else {
      s.for_each([&](std::size_t i) { big[depth] += (*wt.big)[i]; });
    }
  }

  void merge(const Accumulator& o) {
    for (std::size_t i = 0; i < fast.size(); ++i) {
      fast[i] += o.fast[i];
      big[i] += o.big[i];
    }
  }

  Rat value(const WeightTable& wt, std::size_t depth) const {
    return Rat(BigInt(to_bigint(fast[depth]) + big[depth]), wt.denominator);
  }
};

// Depth-first walk over index subsets in lexicographic order, reusing the
// running intersection of the chosen prefix. Subtrees whose intersection is
// already empty contribute nothing and are skipped.
class SubsetWalker {
 public:
  SubsetWalker(const std::vector<AtomSet>& events, std::size_t atoms, std::size_t max_depth)
      : events_(events), levels_(max_depth + 1, AtomSet(atoms)) {
    levels_[0] = AtomSet::full(atoms);
  }

  // Visits every nonempty subset of size <= max_depth whose smallest index is
  // `lead`. `visit(depth, intersection)` is called for each; when
  // `leaves_only` is set only subsets of size exactly max_depth are visited.
  template <class Visit>
  void walk_from(std::size_t lead, bool leaves_only, Visit&& visit) {
    const std::size_t max_depth = levels_.size() - 1;
    if (max_depth == 0 || lead + (leaves_only ? max_depth : 1) > events_.size()) return;
    AtomSet::intersect_into(levels_[0], events_[lead], levels_[1]);
    if (levels_[1].none()) return;
    descend(1, lead + 1, leaves_only, visit);
  }

 private:
  template <class Visit>
  void descend(std::size_t depth, std::size_t start, bool leaves_only, Visit& visit) {
    const std::size_t max_depth = levels_.size() - 1;
    if (!leaves_only || depth == max_depth) visit(depth, levels_[depth]);
    if (depth == max_depth) return;
    const std::size_t n = events_.size();
    const std::size_t need = leaves_only ? max_depth - depth : 1;
    for (std::size_t i = start; i + need <= n; ++i) {
      AtomSet::intersect_into(levels_[depth], events_[i], levels_[depth + 1]);
      if (levels_[depth + 1].none()) continue;
      descend(depth + 1, i + 1, leaves_only, visit);
    }
  }

  const std::vector<AtomSet>& events_;
  std::vector<AtomSet> levels_;
};

unsigned worker_count(const SieveOptions& opts, std::size_t n, std::size_t work) {
  unsigned t = opts.threads != 0 ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  if (work < (std::size_t{1} << 16)) t = 1;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(n, 1)));
}

// Runs `body(worker_state, lead)` for every leading index, partitioned
// round-robin across workers; returns the per-worker states for merging.
template <class State, class MakeState, class Body>
std::vector<State> partition_by_lead(std::size_t n, unsigned workers, MakeState make_state, Body body) {
  std::vector<State> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.push_back(make_state());
  if (workers == 1) {
    for (std::size_t lead = 0; lead < n; ++lead) body(states[0], lead);
    return states;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t lead = w; lead < n; lead += workers) body(states[w], lead);
    });
  }
  for (auto& t : pool) t.join();
  return states;
}

std::size_t subset_work(std::size_t n, std::size_t k) {
  const BigInt c = binom(n, k);
  return c.fits_ulong_p() ? static_cast<std::size_t>(c.get_ui()) : std::numeric_limits<std::size_t>::max();
}

}  // namespace

Rat compute_skn(const EventFamily& fam, std::size_t k, const SieveOptions& opts) {
  check_cap(fam, opts);
  const std::size_t n = fam.size();
  if (k == 0) return Rat(1);
  if (k > n) return Rat(0);
  const WeightTable wt(fam.space());
  struct State {
    SubsetWalker walker;
    Accumulator acc;
  };
  auto states = partition_by_lead<State>(
      n, worker_count(opts, n, subset_work(n, k)),
      [&] { return State{SubsetWalker(fam.events(), fam.atom_count(), k), Accumulator(k + 1)}; },
      [&](State& s, std::size_t lead) {
        s.walker.walk_from(lead, true, [&](std::size_t depth, const AtomSet& set) { s.acc.add(wt, depth, set); });
      });
  for (std::size_t i = 1; i < states.size(); ++i) states[0].acc.merge(states[i].acc);
  return states[0].acc.value(wt, k);
}

std::vector<Rat> compute_all_skn(const EventFamily& fam, const SieveOptions& opts) {
  check_cap(fam, opts);
  const std::size_t n = fam.size();
  const WeightTable wt(fam.space());
  struct State {
    SubsetWalker walker;
    Accumulator acc;
  };
  auto states = partition_by_lead<State>(
      n, worker_count(opts, n, std::size_t{1} << n),
      [&] { return State{SubsetWalker(fam.events(), fam.atom_count(), n), Accumulator(n + 1)}; },
      [&](State& s, std::size_t lead) {
        s.walker.walk_from(lead, false, [&](std::size_t depth, const AtomSet& set) { s.acc.add(wt, depth, set); });
      });
  for (std::size_t i = 1; i < states.size(); ++i) states[0].acc.merge(states[i].acc);
  std::vector<Rat> out;
  out.reserve(n + 1);
  out.emplace_back(1);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(states[0].acc.value(wt, k));
  return out;
}

Rat union_prob_bruteforce(const EventFamily& fam) {
  AtomSet u(fam.atom_count());
  for (const auto& e : fam.events()) u |= e;
  return fam.space().measure(u);
}

Rat union_of_k_intersections(const EventFamily& fam, std::size_t k, const SieveOptions& opts) {
  if (k == 0) throw Error(ErrorCode::BadK, "k must be >= 1");
  check_cap(fam, opts);
  const std::size_t n = fam.size();
  if (k > n) return Rat(0);
  struct State {
    SubsetWalker walker;
    AtomSet covered;
  };
  auto states = partition_by_lead<State>(
      n, worker_count(opts, n, subset_work(n, k)),
      [&] { return State{SubsetWalker(fam.events(), fam.atom_count(), k), AtomSet(fam.atom_count())}; },
      [&](State& s, std::size_t lead) {
        s.walker.walk_from(lead, true, [&](std::size_t, const AtomSet& set) { s.covered |= set; });
      });
  for (std::size_t i = 1; i < states.size(); ++i) states[0].covered |= states[i].covered;
  return fam.space().measure(states[0].covered);
}

IdentityReport verify_finite_identity(const EventFamily& fam, const SieveOptions& opts) {
  const auto s = compute_all_skn(fam, opts);
  IdentityReport rep;
  rep.lhs = union_prob_bruteforce(fam);
  for (std::size_t k = 1; k < s.size(); ++k) rep.rhs += (k % 2 == 1) ? s[k] : -s[k];
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

Bracket bonferroni_bracket_finite(const std::vector<Rat>& all_skn, std::size_t k, std::size_t d, std::size_t r) {
  const std::size_t n = all_skn.empty() ? 0 : all_skn.size() - 1;
  if (k < 1 || k > n) {
    throw Error(ErrorCode::BadK, "need 1 <= k <= n, got k = " + std::to_string(k) + ", n = " + std::to_string(n));
  }
  // S_{j,n} = 0 for j > n
  const std::size_t deepest = k + std::max(2 * d + 1, 2 * r);
  std::vector<Scalar> moments;
  moments.reserve(deepest + 1);
  for (std::size_t j = 0; j <= deepest; ++j) moments.emplace_back(j <= n ? all_skn[j] : Rat(0));
  return make_bracket(moments, k, d, r, BracketTarget::UnionOfIntersections);
}

Bracket bonferroni_bracket_finite(const EventFamily& fam, std::size_t k, std::size_t d, std::size_t r,
                                  const SieveOptions& opts) {
  const std::size_t n = fam.size();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::BadK, "need 1 <= k <= n, got k = " + std::to_string(k) + ", n = " + std::to_string(n));
  }
  check_cap(fam, opts);
  std::vector<Rat> s(n + 1);
  s[0] = Rat(1);
  const std::size_t deepest = std::min(n, k + std::max(2 * d + 1, 2 * r));
  for (std::size_t j = k; j <= deepest; ++j) s[j] = compute_skn(fam, j, opts);
  return bonferroni_bracket_finite(s, k, d, r);
}

SieveResult run_sieve(const EventFamily& fam, std::size_t k, const SieveOptions& opts) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be >= 1");
  const auto all = compute_all_skn(fam, opts);
  SieveResult res;
  res.k = k;
  res.n = fam.size();
  for (std::size_t j = k; j <= res.n; ++j) res.skn_prefix.push_back(all[j]);
  res.union_prob = union_prob_bruteforce(fam);
  return res;
}

}  // namespace incexc
