#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "incexc/atoms.hpp"
#include "incexc/error.hpp"
#include "incexc/moments.hpp"
#include "incexc/random_family.hpp"
#include "incexc/serialize.hpp"
#include "incexc/sieve.hpp"

namespace incexc::cli {

namespace {

using io::json;

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Sieve: return "sieve";
    case Command::Atoms: return "atoms";
    case Command::Moments: return "moments";
    case Command::Bracket: return "bracket";
    case Command::Check: return "check";
    case Command::Gen: return "gen";
  }
  return "?";
}

const std::set<std::string>& allowed_params(Command c) {
  static const std::map<Command, std::set<std::string>> table = {
      {Command::Sieve, {"k", "d", "r"}},
      {Command::Atoms, {"k_max"}},
      {Command::Moments, {"k_max", "l"}},
      {Command::Bracket, {"k", "d", "r", "target", "eps"}},
      {Command::Check, {"k"}},
      {Command::Gen, {"atoms", "events", "seed"}},
  };
  return table.at(c);
}

void validate_params(const JobSpec& spec) {
  const auto& allowed = allowed_params(spec.command);
  for (const auto& [key, _] : spec.params) {
    if (!allowed.count(key)) {
      throw Error(ErrorCode::InvalidParameter,
                  "unknown parameter '" + key + "' for command '" + std::string(command_name(spec.command)) + "'");
    }
  }
  if (spec.command == Command::Bracket && spec.params.count("eps") &&
      (spec.params.count("d") || spec.params.count("r"))) {
    throw Error(ErrorCode::InvalidParameter, "--eps chooses the depth itself; do not combine it with --d/--r");
  }
  if (spec.precision_bits < 16) throw Error(ErrorCode::InvalidParameter, "--precision-bits must be >= 16");
}

std::optional<std::size_t> get_size(const JobSpec& spec, const std::string& key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) return std::nullopt;
  const std::string& s = it->second;
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) {
    throw Error(ErrorCode::InvalidParameter, "--" + key + " expects a nonnegative integer, got '" + s + "'");
  }
  return static_cast<std::size_t>(std::stoull(s));
}

std::size_t get_size_or(const JobSpec& spec, const std::string& key, std::size_t fallback) {
  return get_size(spec, key).value_or(fallback);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

io::InputDocument load_input(const JobSpec& spec) {
  if (spec.input_path.empty()) throw Error(ErrorCode::ParseError, "missing input file");
  return io::parse_input_text(read_file(spec.input_path), spec.precision_bits);
}

std::string approx(const Scalar& x) { return "~ " + x.decimal(12); }

void print_row(std::ostream& out, const std::string& name, const Scalar& value) {
  out << "  " << std::left << std::setw(14) << name << std::setw(32) << value.str() << " " << approx(value) << "\n";
}

// Tail and point queries on a family go through its occupancy count.
ZPlusPmf pmf_of(const io::InputDocument& in) {
  if (in.pmf) return *in.pmf;
  return occupancy_pmf(decompose_finite_family(*in.family));
}

const EventFamily& require_family(const io::InputDocument& in, Command c) {
  if (!in.family) {
    throw Error(ErrorCode::InvalidParameter,
                "command '" + std::string(command_name(c)) + "' needs a {\"space\", \"events\"} input");
  }
  return *in.family;
}

int run_sieve_cmd(const JobSpec& spec, std::ostream& out) {
  const auto in = load_input(spec);
  const EventFamily& fam = require_family(in, spec.command);
  SieveOptions opts;
  opts.max_events = spec.max_events;
  const std::size_t k = get_size_or(spec, "k", 1);
  const auto result = run_sieve(fam, k, opts);
  const auto identity = verify_finite_identity(fam, opts);
  std::optional<Bracket> bonf;
  if (spec.params.count("d") || spec.params.count("r")) {
    bonf = bonferroni_bracket_finite(fam, k, get_size_or(spec, "d", 0), get_size_or(spec, "r", 0), opts);
  }
  if (spec.json) {
    json j{{"sieve", io::to_json(result)}, {"identity", io::to_json(identity)}};
    if (bonf) j["bracket"] = io::to_json(*bonf, true);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "sieve: n = " << result.n << " events over " << fam.atom_count() << " atoms\n";
  out << "  " << std::left << std::setw(14) << "quantity" << std::setw(32) << "exact" << " approx (12 sig. digits)\n";
  for (std::size_t i = 0; i < result.skn_prefix.size(); ++i) {
    print_row(out, "S_" + std::to_string(k + i) + "," + std::to_string(result.n), Scalar(result.skn_prefix[i]));
  }
  print_row(out, "union", Scalar(result.union_prob));
  out << "  identity      lhs = " << identity.lhs.str() << ", rhs = " << identity.rhs.str() << ": "
      << (identity.equal ? "OK" : "MISMATCH") << "\n";
  if (bonf) {
    out << "  bonferroni    k = " << bonf->k << ", d = " << bonf->d << ", r = " << bonf->r << "\n";
    print_row(out, "lower", bonf->lower);
    print_row(out, "upper", bonf->upper);
  }
  return identity.equal ? kExitOk : kExitComputation;
}

int run_atoms_cmd(const JobSpec& spec, std::ostream& out) {
  const auto in = load_input(spec);
  const EventFamily& fam = require_family(in, spec.command);
  SieveOptions opts;
  opts.max_events = spec.max_events;
  const auto dec = decompose_finite_family(fam);
  const std::size_t k_max = get_size_or(spec, "k_max", std::max<std::size_t>(fam.size(), 1));
  const auto report = verify_sk_tk_identity(fam, k_max, opts);
  if (spec.json) {
    json j = io::to_json(dec);
    j["sk_tk"] = io::to_json(report);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "atoms: " << dec.cells.size() << " realized cells, n = " << dec.events << " events\n";
  for (const auto& c : dec.cells) {
    std::string sig = "{";
    for (std::size_t i = 0; i < c.signature.size(); ++i) sig += (i ? "," : "") + std::to_string(c.signature[i] + 1);
    sig += "}";
    print_row(out, "B_" + sig, Scalar(c.weight));
  }
  for (std::size_t j = 0; j < dec.t.size(); ++j) print_row(out, "T_" + std::to_string(j), Scalar(dec.t[j]));
  for (const auto& c : report.checks) {
    out << "  S_" << c.k << " = " << c.sieve_value.str() << " vs sum C(j+k,k) T_{j+k} = " << c.occupancy_value.str()
        << ": " << (c.equal ? "OK" : "MISMATCH") << "\n";
  }
  return report.all_equal() ? kExitOk : kExitComputation;
}

int run_moments_cmd(const JobSpec& spec, std::ostream& out) {
  const auto in = load_input(spec);
  const ZPlusPmf pmf = pmf_of(in);
  const std::size_t k_max = get_size_or(spec, "k_max", 10);
  const auto s = sk_from_pmf(pmf, k_max);
  const std::size_t l = get_size_or(spec, "l", std::max<std::size_t>(k_max, 1));
  const auto cascade = finiteness_cascade(s, l);
  if (spec.json) {
    json j = io::to_json(s);
    j["finiteness"] = io::to_json(cascade);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "moments: " << to_string(pmf.kind()) << " pmf, S_0..S_" << k_max << "\n";
  for (std::size_t j = 0; j < s.size(); ++j) print_row(out, "S_" + std::to_string(j), s[j]);
  if (const auto& c = s.certificate()) {
    out << "  certificate   S_l <= " << c->scale.str() << " * (" << c->ratio.str() << ")^l * l^" << c->exponent
        << " for l > " << c->cutoff << "\n";
  }
  out << "  finiteness    S_" << l << " finite implies S_1..S_" << (l > 0 ? l - 1 : 0) << " finite: "
      << (cascade.all_finite() ? "OK" : "FAILED") << "\n";
  return kExitOk;
}

BracketTarget parse_target(const JobSpec& spec, bool family_input) {
  const auto it = spec.params.find("target");
  if (it == spec.params.end()) return family_input ? BracketTarget::UnionOfIntersections : BracketTarget::Tail;
  if (it->second == "tail") return BracketTarget::Tail;
  if (it->second == "point") return BracketTarget::Point;
  if (it->second == "union") {
    if (!family_input) throw Error(ErrorCode::InvalidParameter, "--target union needs an event-family input");
    return BracketTarget::UnionOfIntersections;
  }
  throw Error(ErrorCode::InvalidParameter, "--target must be tail, point, or union; got '" + it->second + "'");
}

int run_bracket_cmd(const JobSpec& spec, std::ostream& out) {
  const auto in = load_input(spec);
  const BracketTarget target = parse_target(spec, in.family.has_value());
  const std::size_t k = get_size_or(spec, "k", 1);
  Bracket b;
  if (target == BracketTarget::UnionOfIntersections) {
    if (spec.params.count("eps")) throw Error(ErrorCode::InvalidParameter, "--eps applies to tail/point targets");
    SieveOptions opts;
    opts.max_events = spec.max_events;
    b = bonferroni_bracket_finite(*in.family, k, get_size_or(spec, "d", 0), get_size_or(spec, "r", 0), opts);
  } else {
    const ZPlusPmf pmf = pmf_of(in);
    if (const auto it = spec.params.find("eps"); it != spec.params.end()) {
      const Rat eps = Rat::parse(it->second);
      const std::size_t first = first_moment_index(target, k);
      SeriesOptions opts;
      opts.max_terms = spec.max_terms;
      b = evaluate_series(sk_from_pmf(pmf, first + 1), k, target, eps, opts);
    } else {
      const std::size_t d = get_size_or(spec, "d", 0);
      const std::size_t r = get_size_or(spec, "r", 0);
      const std::size_t deepest = first_moment_index(target, k) + std::max(2 * d + 1, 2 * r);
      if (deepest > spec.max_terms) {
        throw Error(ErrorCode::WidthNotAchievable, "bracket needs S_" + std::to_string(deepest) + ", beyond --max-terms");
      }
      b = bracket(sk_from_pmf(pmf, deepest), k, d, r, target);
    }
  }
  if (spec.json) {
    out << io::to_json(b, true).dump(2) << "\n";
    return kExitOk;
  }
  out << "bracket: target " << to_string(b.target) << ", k = " << b.k << ", d = " << b.d << ", r = " << b.r << "\n";
  print_row(out, "lower", b.lower);
  print_row(out, "upper", b.upper);
  print_row(out, "width", Scalar(b.width()));
  return kExitOk;
}

int run_check_cmd(const JobSpec& spec, std::ostream& out) {
  const auto in = load_input(spec);
  const ZPlusPmf pmf = pmf_of(in);
  const std::size_t k = get_size_or(spec, "k", 1);
  const auto s = sk_from_pmf(pmf, std::max<std::size_t>(2 * k + 10, 20));
  const auto exact = check_exact_condition(s, k);
  const auto takacs = check_takacs(s);
  if (spec.json) {
    out << json{{"exact_condition", io::to_json(exact)}, {"takacs", io::to_json(takacs)}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "check: k = " << k << "\n";
  out << "  status        " << to_string(exact.status) << "\n";
  out << "  witness       " << exact.witness << "\n";
  if (exact.diagnostic) {
    out << "  trend         l^" << (k - 1) << " S_l at l = " << s.max_index() << ": " << *exact.diagnostic
        << " (non-rigorous)\n";
  }
  out << "  takacs        " << to_string(takacs.status) << "\n";
  if (takacs.diagnostic) out << "  root estimate " << *takacs.diagnostic << " (non-rigorous)\n";
  return kExitOk;
}

int run_gen_cmd(const JobSpec& spec, std::ostream& out) {
  const auto atoms = get_size(spec, "atoms");
  const auto events = get_size(spec, "events");
  if (!atoms || !events) throw Error(ErrorCode::InvalidParameter, "gen needs --atoms and --events");
  const auto seed = get_size_or(spec, "seed", 0);
  const auto fam = random_family(*atoms, *events, seed);
  json j = io::to_json(fam);
  out << j.dump(2) << "\n";
  return kExitOk;
}

int exit_code_for(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Validation: return kExitValidation;
    case ErrorCategory::Computation: return kExitComputation;
    case ErrorCategory::Resource: return kExitResource;
  }
  return kExitComputation;
}

}  // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    validate_params(spec);
    switch (spec.command) {
      case Command::Sieve: return run_sieve_cmd(spec, out);
      case Command::Atoms: return run_atoms_cmd(spec, out);
      case Command::Moments: return run_moments_cmd(spec, out);
      case Command::Bracket: return run_bracket_cmd(spec, out);
      case Command::Check: return run_check_cmd(spec, out);
      case Command::Gen: return run_gen_cmd(spec, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.category());
  }
  return kExitComputation;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact inclusion-exclusion sums, Bonferroni brackets, and binomial-moment series"};
  app.require_subcommand(1);
  app.fallthrough();

  JobSpec spec;
  app.add_flag("--json", spec.json, "Emit machine-readable JSON");
  app.add_option("--precision-bits", spec.precision_bits, "Interval precision in bits")->capture_default_str();
  app.add_option("--max-events", spec.max_events, "Event cap for full-sieve operations")->capture_default_str();
  app.add_option("--max-terms", spec.max_terms, "Index bound for series evaluation")->capture_default_str();

  std::map<std::string, std::string> raw;
  struct Sub {
    Command command;
    CLI::App* app;
  };
  std::vector<Sub> subs;
  auto add_sub = [&](Command c, const char* help, bool needs_input) {
    CLI::App* s = app.add_subcommand(std::string(command_name(c)), help);
    if (needs_input) s->add_option("input", spec.input_path, "Input JSON file")->required();
    for (const auto& key : allowed_params(c)) {
      std::string flag = "--" + key;
      if (key == "k_max") flag += ",--k-max";
      s->add_option(flag, raw[std::string(command_name(c)) + ":" + key]);
    }
    subs.push_back({c, s});
  };
  add_sub(Command::Sieve, "Partial sums S_{k,n}, union probability, and the finite identity", true);
  add_sub(Command::Atoms, "Atom decomposition, occupancy weights T_j, and the S_k/T_j identity", true);
  add_sub(Command::Moments, "Binomial moments S_0..S_kmax of a pmf (or of a family's occupancy count)", true);
  add_sub(Command::Bracket, "Bonferroni bracket, or a certified enclosure with --eps", true);
  add_sub(Command::Check, "Convergence verdicts: exact condition at level k and the Takacs condition", true);
  add_sub(Command::Gen, "Seeded random event family in the input JSON schema", false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  for (const auto& sub : subs) {
    if (!sub.app->parsed()) continue;
    spec.command = sub.command;
    for (const auto& key : allowed_params(sub.command)) {
      const std::string name = "--" + key;
      if (sub.app->get_option(name)->count() > 0) spec.params[key] = raw[std::string(command_name(sub.command)) + ":" + key];
    }
  }
  return run(spec, out, err);
}

}  // namespace incexc::cli
