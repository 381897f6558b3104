#include "incexc/space.hpp"

#include <set>

#include "incexc/error.hpp"

namespace incexc {

FiniteSpace FiniteSpace::make(std::vector<Rat> weights, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != weights.size()) {
    throw Error(ErrorCode::InvalidParameter, "label count does not match weight count");
  }
  FiniteSpace s;
  s.atoms_.reserve(weights.size());
  std::set<std::string> seen;
  Rat total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].sign() < 0) {
      throw Error(ErrorCode::NegativeWeight, "atom " + std::to_string(i) + " has weight " + weights[i].str());
    }
    std::string label = labels.empty() ? std::to_string(i) : labels[i];
    if (!seen.insert(label).second) throw Error(ErrorCode::InvalidParameter, "duplicate atom label '" + label + "'");
    total += weights[i];
    s.atoms_.push_back({std::move(label), std::move(weights[i])});
  }
  if (total != Rat(1)) throw Error(ErrorCode::NotNormalized, "atom weights sum to " + total.str());

  BigInt lcm = 1;
  for (const auto& a : s.atoms_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.weight.den().get_mpz_t());
  s.denominator_ = lcm;
  s.scaled_.reserve(s.atoms_.size());
  for (const auto& a : s.atoms_) s.scaled_.push_back(a.weight.num() * (lcm / a.weight.den()));
  return s;
}

Rat FiniteSpace::measure(const AtomSet& set) const {
  BigInt acc = 0;
  set.for_each([&](std::size_t i) { acc += scaled_[i]; });
  return Rat(acc, denominator_);
}

FiniteSpace make_space(std::vector<Rat> weights) { return FiniteSpace::make(std::move(weights)); }

EventFamily::EventFamily(std::shared_ptr<const FiniteSpace> space, std::vector<AtomSet> events)
    : space_(std::move(space)), events_(std::move(events)) {
  if (!space_) throw Error(ErrorCode::InvalidParameter, "event family needs a space");
  for (const auto& e : events_) {
    if (e.size() != space_->size()) {
      throw Error(ErrorCode::IndexOutOfRange, "event bitset size does not match the space");
    }
  }
}

EventFamily EventFamily::from_indices(std::shared_ptr<const FiniteSpace> space,
                                      const std::vector<std::vector<std::size_t>>& events) {
  if (!space) throw Error(ErrorCode::InvalidParameter, "event family needs a space");
  std::vector<AtomSet> sets;
  sets.reserve(events.size());
  for (const auto& idx : events) sets.push_back(AtomSet::from_indices(space->size(), idx));
  return EventFamily(std::move(space), std::move(sets));
}

EventFamily EventFamily::prefix(std::size_t n) const {
  if (n > events_.size()) throw Error(ErrorCode::IndexOutOfRange, "prefix longer than family");
  return EventFamily(space_, std::vector<AtomSet>(events_.begin(), events_.begin() + static_cast<std::ptrdiff_t>(n)));
}

}  // namespace incexc
