#include "incexc/atoms.hpp"

#include <algorithm>
#include <unordered_map>

#include "incexc/error.hpp"

namespace incexc {

namespace {

bool signature_less(const AtomCell& a, const AtomCell& b) {
  if (a.signature.size() != b.signature.size()) return a.signature.size() < b.signature.size();
  return a.signature < b.signature;
}

}  // namespace

Rat AtomDecomposition::cell_weight(const std::vector<std::size_t>& signature) const {
  for (const auto& c : cells) {
    if (c.signature == signature) return c.weight;
  }
  return Rat(0);
}

Rat AtomDecomposition::intersection_weight(const std::vector<std::size_t>& signature) const {
  Rat total;
  for (const auto& c : cells) {
    if (std::includes(c.signature.begin(), c.signature.end(), signature.begin(), signature.end())) total += c.weight;
  }
  return total;
}

AtomDecomposition decompose_finite_family(const EventFamily& fam) {
  const std::size_t n = fam.size();
  const auto& space = fam.space();

  std::unordered_map<AtomSet, std::size_t, AtomSetHash> index;
  AtomDecomposition dec;
  dec.events = n;
  for (std::size_t a = 0; a < space.size(); ++a) {
    AtomSet sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (fam.event(i).test(a)) sig.set(i);
    }
    auto [it, inserted] = index.try_emplace(sig, dec.cells.size());
    if (inserted) dec.cells.push_back(AtomCell{sig.indices(), {}, Rat(0)});
    auto& cell = dec.cells[it->second];
    cell.atoms.push_back(a);
    cell.weight += space.weight(a);
  }
  std::sort(dec.cells.begin(), dec.cells.end(), signature_less);
  dec.t = compute_tj(dec);
  return dec;
}

std::vector<Rat> compute_tj(const AtomDecomposition& dec) {
  std::vector<Rat> t(dec.events + 1);
  for (const auto& c : dec.cells) t.at(c.signature.size()) += c.weight;
  return t;
}

ZPlusPmf occupancy_pmf(const AtomDecomposition& dec) { return ZPlusPmf::explicit_weights(dec.t); }

bool SkTkReport::all_equal() const {
  return std::all_of(checks.begin(), checks.end(), [](const SkTkCheck& c) { return c.equal; });
}

SkTkReport verify_sk_tk_identity(const EventFamily& fam, std::size_t k_max, const SieveOptions& opts) {
  if (k_max < 1) throw Error(ErrorCode::BadK, "k_max must be >= 1");
  const auto dec = decompose_finite_family(fam);
  const auto skn = compute_all_skn(fam, opts);
  const std::size_t n = fam.size();
  SkTkReport rep;
  for (std::size_t k = 1; k <= k_max; ++k) {
    SkTkCheck c;
    c.k = k;
    c.sieve_value = k <= n ? skn[k] : Rat(0);
    for (std::size_t j = 0; j + k <= n; ++j) c.occupancy_value += Rat(binom(j + k, k)) * dec.t[j + k];
    c.equal = c.sieve_value == c.occupancy_value;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace incexc
