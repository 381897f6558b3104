#include "incexc/bracket.hpp"

#include <optional>

#include "incexc/error.hpp"

namespace incexc {

std::string_view to_string(BracketTarget target) {
  switch (target) {
    case BracketTarget::Tail: return "tail";
    case BracketTarget::Point: return "point";
    case BracketTarget::UnionOfIntersections: return "union";
  }
  return "unknown";
}

std::size_t first_moment_index(BracketTarget target, std::size_t k) {
  return target == BracketTarget::Point ? k - 1 : k;
}

Scalar alternating_partial_sum(std::span<const Scalar> moments, std::size_t k, std::size_t first,
                               std::size_t last) {
  if (first + last >= moments.size()) {
    throw Error(ErrorCode::InsufficientPrefix, "need S_" + std::to_string(first + last) + ", have up to S_" +
                                                   std::to_string(moments.size() - 1));
  }
  // exact terms are summed exactly, enclosures are summed separately so the
  // exact part is rounded only once
  Rat exact;
  std::optional<Scalar> inexact;
  for (std::size_t j = 0; j <= last; ++j) {
    const Rat w(binom(j + k - 1, k - 1));
    const Scalar& s = moments[first + j];
    const bool negative = (j % 2) == 1;
    if (s.is_exact()) {
      exact += negative ? -(w * s.exact()) : w * s.exact();
    } else {
      Scalar term = Scalar(w) * s;
      if (negative) term = -term;
      inexact = inexact ? *inexact + term : term;
    }
  }
  return inexact ? *inexact + Scalar(exact) : Scalar(exact);
}

Bracket make_bracket(std::span<const Scalar> moments, std::size_t k, std::size_t d, std::size_t r,
                     BracketTarget target) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be >= 1");
  const std::size_t first = first_moment_index(target, k);
  Bracket b;
  b.k = k;
  b.d = d;
  b.r = r;
  b.target = target;
  b.lower = alternating_partial_sum(moments, k, first, 2 * d + 1);
  b.upper = alternating_partial_sum(moments, k, first, 2 * r);
  return b;
}

}  // namespace incexc
