#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "incexc/atom_set.hpp"
#include "incexc/numerics.hpp"

namespace incexc {

struct Atom {
  std::string label;
  Rat weight;
};

/// Finite sample space with exact atom weights summing to 1. Every subset is
/// an event, so Pr is determined by the atom weights.
class FiniteSpace {
 public:
  /// Throws NegativeWeight, NotNormalized, or InvalidParameter (duplicate or
  /// mis-sized labels). Missing labels default to the atom index.
  static FiniteSpace make(std::vector<Rat> weights, std::vector<std::string> labels = {});

  std::size_t size() const { return atoms_.size(); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const Rat& weight(std::size_t i) const { return atoms_.at(i).weight; }

  Rat measure(const AtomSet& s) const;

  // Weights as integers over one common denominator; measure() and the
  // sieve accumulate in this representation.
  const BigInt& common_denominator() const { return denominator_; }
  const std::vector<BigInt>& scaled_weights() const { return scaled_; }

 private:
  FiniteSpace() = default;
  std::vector<Atom> atoms_;
  BigInt denominator_ = 1;
  std::vector<BigInt> scaled_;
};

FiniteSpace make_space(std::vector<Rat> weights);

/// Events A_1..A_n over a finite space, each stored as a bitset of atoms.
/// Repeated and empty events are allowed.
class EventFamily {
 public:
  EventFamily(std::shared_ptr<const FiniteSpace> space, std::vector<AtomSet> events);
  /// Throws IndexOutOfRange for an atom index >= space size.
  static EventFamily from_indices(std::shared_ptr<const FiniteSpace> space,
                                  const std::vector<std::vector<std::size_t>>& events);

  const FiniteSpace& space() const { return *space_; }
  const std::shared_ptr<const FiniteSpace>& space_ptr() const { return space_; }
  const std::vector<AtomSet>& events() const { return events_; }
  const AtomSet& event(std::size_t i) const { return events_.at(i); }
  std::size_t size() const { return events_.size(); }
  std::size_t atom_count() const { return space_->size(); }

  /// The family restricted to its first n events.
  EventFamily prefix(std::size_t n) const;

 private:
  std::shared_ptr<const FiniteSpace> space_;
  std::vector<AtomSet> events_;
};

}  // namespace incexc
