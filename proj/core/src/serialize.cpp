#include "incexc/serialize.hpp"

#include "incexc/error.hpp"

namespace incexc::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(path + "." + key, "unknown key");
  }
}

std::vector<Rat> parse_rat_list(const json& arr, const std::string& path) {
  if (!arr.is_array()) fail(path, "expected an array of rationals");
  std::vector<Rat> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(parse_rat(arr[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::size_t parse_index(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

ZPlusPmf parse_pmf(const json& p, unsigned precision_bits) {
  const std::string path = "pmf";
  const json& kind = require(p, "kind", path);
  if (!kind.is_string()) fail(path + ".kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "explicit") {
    reject_unknown_keys(p, {"kind", "weights"}, path);
    return ZPlusPmf::explicit_weights(parse_rat_list(require(p, "weights", path), path + ".weights"));
  }
  if (k == "geometric") {
    reject_unknown_keys(p, {"kind", "p"}, path);
    return ZPlusPmf::geometric(parse_rat(require(p, "p", path), path + ".p"));
  }
  if (k == "poisson") {
    reject_unknown_keys(p, {"kind", "lambda"}, path);
    return ZPlusPmf::poisson(parse_rat(require(p, "lambda", path), path + ".lambda"), precision_bits);
  }
  fail(path + ".kind", "expected 'explicit', 'geometric', or 'poisson', got '" + k + "'");
}

}  // namespace

Rat parse_rat(const json& value, const std::string& field) {
  if (value.is_number_integer()) return Rat(BigInt(std::to_string(value.get<long long>())));
  if (!value.is_string()) fail(field, "expected a rational string like \"p/q\"");
  try {
    return Rat::parse(value.get<std::string>());
  } catch (const Error& e) {
    fail(field, e.what());
  }
}

Scalar parse_scalar(const json& value, const std::string& field, unsigned precision_bits) {
  if (value.is_object()) {
    const auto& lo = require(value, "lo", field);
    const auto& hi = require(value, "hi", field);
    if (!lo.is_string() || !hi.is_string()) fail(field, "interval endpoints must be decimal strings");
    return Scalar(Interval::from_strings(lo.get<std::string>(), hi.get<std::string>(), precision_bits));
  }
  return Scalar(parse_rat(value, field));
}

InputDocument parse_input(const json& doc, unsigned precision_bits) {
  if (!doc.is_object()) fail("<root>", "expected an object");
  InputDocument in;
  if (doc.contains("pmf")) {
    reject_unknown_keys(doc, {"pmf"}, "<root>");
    in.pmf = parse_pmf(doc["pmf"], precision_bits);
    return in;
  }
  reject_unknown_keys(doc, {"space", "events"}, "<root>");
  const json& sp = require(doc, "space", "<root>");
  reject_unknown_keys(sp, {"weights", "labels"}, "space");
  auto weights = parse_rat_list(require(sp, "weights", "space"), "space.weights");
  std::vector<std::string> labels;
  if (sp.contains("labels")) {
    const json& ls = sp["labels"];
    if (!ls.is_array()) fail("space.labels", "expected an array of strings");
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (!ls[i].is_string()) fail("space.labels[" + std::to_string(i) + "]", "expected a string");
      labels.push_back(ls[i].get<std::string>());
    }
  }
  auto space = std::make_shared<const FiniteSpace>(FiniteSpace::make(std::move(weights), std::move(labels)));

  std::vector<std::vector<std::size_t>> events;
  if (doc.contains("events")) {
    const json& ev = doc["events"];
    if (!ev.is_array()) fail("events", "expected an array of atom-index arrays");
    for (std::size_t i = 0; i < ev.size(); ++i) {
      const std::string path = "events[" + std::to_string(i) + "]";
      if (!ev[i].is_array()) fail(path, "expected an array of atom indices");
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < ev[i].size(); ++j) {
        const std::size_t a = parse_index(ev[i][j], path + "[" + std::to_string(j) + "]");
        if (a >= space->size()) {
          fail(path + "[" + std::to_string(j) + "]",
               "atom index " + std::to_string(a) + " out of range (space has " + std::to_string(space->size()) +
                   " atoms)");
        }
        idx.push_back(a);
      }
      events.push_back(std::move(idx));
    }
  }
  in.family = EventFamily::from_indices(std::move(space), events);
  return in;
}

InputDocument parse_input_text(const std::string& text, unsigned precision_bits) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return parse_input(doc, precision_bits);
}

json to_json(const Rat& x) { return x.str(); }

json to_json(const Interval& x) { return json{{"lo", x.lower_string()}, {"hi", x.upper_string()}}; }

json to_json(const Scalar& x) {
  if (x.is_exact()) return to_json(x.exact());
  return to_json(x.enclosure(x.precision()));
}

json to_json(const TailCertificate& c) {
  return json{{"J", c.cutoff}, {"C", to_json(c.scale)}, {"rho", to_json(c.ratio)}, {"alpha", c.exponent}};
}

json to_json(const FiniteSpace& space) {
  json weights = json::array();
  json labels = json::array();
  for (const auto& a : space.atoms()) {
    weights.push_back(to_json(a.weight));
    labels.push_back(a.label);
  }
  return json{{"weights", weights}, {"labels", labels}};
}

json to_json(const EventFamily& fam) {
  json events = json::array();
  for (const auto& e : fam.events()) events.push_back(e.indices());
  return json{{"space", to_json(fam.space())}, {"events", events}};
}

json to_json(const ZPlusPmf& pmf) {
  json p{{"kind", std::string(to_string(pmf.kind()))}};
  switch (pmf.kind()) {
    case PmfKind::Explicit: {
      json w = json::array();
      for (const auto& x : pmf.weights()) w.push_back(to_json(x));
      p["weights"] = w;
      break;
    }
    case PmfKind::Geometric: p["p"] = to_json(pmf.param()); break;
    case PmfKind::Poisson: p["lambda"] = to_json(pmf.param()); break;
  }
  return json{{"pmf", p}};
}

json to_json(const SieveResult& r) {
  json skn = json::array();
  for (const auto& x : r.skn_prefix) skn.push_back(to_json(x));
  return json{{"k", r.k}, {"n", r.n}, {"skn", skn}, {"union", to_json(r.union_prob)}};
}

json to_json(const IdentityReport& r) {
  return json{{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"equal", r.equal}};
}

json to_json(const AtomDecomposition& dec) {
  json cells = json::array();
  for (const auto& c : dec.cells) {
    json sig = json::array();
    for (auto i : c.signature) sig.push_back(i + 1);
    cells.push_back(json{{"signature", sig}, {"weight", to_json(c.weight)}});
  }
  json t = json::array();
  for (const auto& x : dec.t) t.push_back(to_json(x));
  return json{{"cells", cells}, {"t", t}};
}

json to_json(const SkTkReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(json{{"k", c.k},
                          {"sieve", to_json(c.sieve_value)},
                          {"occupancy", to_json(c.occupancy_value)},
                          {"equal", c.equal}});
  }
  return json{{"checks", checks}, {"all_equal", r.all_equal()}};
}

json to_json(const BinomialMomentSeq& s) {
  json values = json::array();
  for (const auto& v : s.values()) values.push_back(to_json(v));
  json out{{"s", values}};
  out["certificate"] = s.certificate() ? to_json(*s.certificate()) : json(nullptr);
  out["divergence_witness"] = s.divergence_witness() ? to_json(*s.divergence_witness()) : json(nullptr);
  return out;
}

json to_json(const Bracket& b, bool certified) {
  return json{{"k", b.k},
              {"d", b.d},
              {"r", b.r},
              {"target", std::string(to_string(b.target))},
              {"lower", to_json(b.lower)},
              {"upper", to_json(b.upper)},
              {"width", to_json(b.width())},
              {"certified", certified}};
}

json to_json(const ConvergenceVerdict& v) {
  json out{{"k", v.k}, {"status", std::string(to_string(v.status))}, {"witness", v.witness}};
  out["diagnostic"] = v.diagnostic ? json(*v.diagnostic) : json(nullptr);
  return out;
}

json to_json(const FinitenessReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j{{"k", e.k}, {"finite", e.finite}, {"value", to_json(e.value)}};
    j["comparison_bound"] = e.comparison_bound ? to_json(*e.comparison_bound) : json(nullptr);
    entries.push_back(j);
  }
  return json{{"l", r.l}, {"entries", entries}, {"all_finite", r.all_finite()}};
}

}  // namespace incexc::io
