#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "incexc/atoms.hpp"
#include "incexc/bracket.hpp"
#include "incexc/moments.hpp"
#include "incexc/pmf.hpp"
#include "incexc/sieve.hpp"
#include "incexc/space.hpp"

namespace incexc::io {

using json = nlohmann::ordered_json;

/// Parsed input document: either a space with events, or a pmf.
///   {"space": {"weights": ["1/3", ...], "labels": [...]}, "events": [[0, 1], [1, 2]]}
///   {"pmf": {"kind": "geometric", "p": "2/5"}}
///   {"pmf": {"kind": "poisson", "lambda": "1"}}
///   {"pmf": {"kind": "explicit", "weights": ["1/2", "0", "0", "1/2"]}}
struct InputDocument {
  std::optional<EventFamily> family;
  std::optional<ZPlusPmf> pmf;
};

/// Throws Error{ParseError} naming the offending field, or the validation
/// errors of the underlying constructors.
InputDocument parse_input(const json& doc, unsigned precision_bits = Interval::kDefaultPrecision);
InputDocument parse_input_text(const std::string& text, unsigned precision_bits = Interval::kDefaultPrecision);

Rat parse_rat(const json& value, const std::string& field);
Scalar parse_scalar(const json& value, const std::string& field,
                    unsigned precision_bits = Interval::kDefaultPrecision);

json to_json(const Rat& x);
json to_json(const Scalar& x);
json to_json(const Interval& x);
json to_json(const TailCertificate& c);
json to_json(const FiniteSpace& space);
json to_json(const EventFamily& fam);
json to_json(const ZPlusPmf& pmf);
json to_json(const SieveResult& r);
json to_json(const IdentityReport& r);
json to_json(const AtomDecomposition& dec);
json to_json(const SkTkReport& r);
json to_json(const BinomialMomentSeq& s);
json to_json(const Bracket& b, bool certified);
json to_json(const ConvergenceVerdict& v);
json to_json(const FinitenessReport& r);

}  // namespace incexc::io
