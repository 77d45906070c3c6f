#include "octo/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "octo/errors.hpp"
#include "octo/json_io.hpp"

namespace octo::cli {

namespace {

struct Options {
  RunConfig cfg;
  bool level_given = false;
  std::string property = "alternative";
  std::string space = "OP2";
  std::string coeffs = "Z";
  std::optional<int> degree;
  std::string mode = "bidegree";
  std::size_t segments = 256;
  std::size_t pairs = 10;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// chart-roundtrip and equiv-check take the algebra dimension d in {1,2,4,8}.
int level_from_dimension(int d) {
  switch (d) {
    case 1:
      return 0;
    case 2:
      return 1;
    case 4:
      return 2;
    case 8:
      return 3;
    default:
      throw UsageError("--level must be one of 1, 2, 4, 8 for this subcommand");
  }
}

void emit(const Options& o, std::ostream& out, const Json& j, const std::string& text) {
  if (o.cfg.format == OutputFormat::json) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

std::string coords_text(const CDNumber<Rational>& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i].get_str();
  os << ')';
  return os.str();
}

int cmd_table(const Options& o, std::ostream& out) {
  const int level = o.level_given ? o.cfg.level : 3;
  const auto t = build_table(level);
  std::ostringstream text;
  text << "level " << level << " multiplication table (row i, column j: e_i * e_j)\n";
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const auto& e = t.at(i, j);
      text << std::setw(5) << ((e.sign < 0 ? "-e" : "+e") + std::to_string(e.index));
    }
    text << '\n';
  }
  Json j = to_json(t);
  j["seed"] = o.cfg.seed;
  emit(o, out, j, text.str());
  return t.level() <= 3 && !t.is_signed_permutation() ? kExitMismatch : kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Property p = property_from_name(o.property);
  const int level = o.level_given ? o.cfg.level : 3;
  Rng rng(o.cfg.seed);
  const auto report = check_property(p, level, o.cfg.samples, rng);
  const bool match = report.verdict == expected_verdict(p, level) && (report.verdict == Verdict::holds || recheck(report));
  Json j = to_json(report);
  j["seed"] = o.cfg.seed;
  j["match"] = match;
  std::ostringstream text;
  text << property_name(p) << " at level " << level << ": " << verdict_name(report.verdict) << " (expected "
       << verdict_name(expected_verdict(p, level)) << ", seed " << o.cfg.seed << ")\n";
  for (const auto& x : report.counterexample) text << "  counterexample " << coords_text(x) << '\n';
  emit(o, out, j, text.str());
  return match ? kExitOk : kExitMismatch;
}

int cmd_zero_divisors(const Options& o, std::ostream& out) {
  const int level = o.level_given ? o.cfg.level : 4;
  const auto pairs = find_zero_divisors(level);
  const bool expect_nonempty = level >= 4;
  const bool match = pairs.empty() != expect_nonempty;
  Json list = Json::array();
  for (const auto& p : pairs) list.push_back(to_json(p));
  Json j = {{"level", level}, {"seed", o.cfg.seed}, {"count", pairs.size()}, {"match", match}, {"pairs", list}};
  std::ostringstream text;
  text << pairs.size() << " zero-divisor pairs of the form (e_i +- e_j, e_k +- e_l) at level " << level << '\n';
  for (std::size_t i = 0; i < std::min<std::size_t>(pairs.size(), 8); ++i) {
    text << "  " << coords_text(pairs[i].left) << " * " << coords_text(pairs[i].right) << " = 0\n";
  }
  emit(o, out, j, text.str());
  return match ? kExitOk : kExitMismatch;
}

int cmd_chart_roundtrip(const Options& o, std::ostream& out) {
  const int level = level_from_dimension(o.level_given ? o.cfg.level : 8);
  const auto r = chart_roundtrip(level, o.cfg.samples, o.cfg.seed, o.cfg.tolerance);
  std::ostringstream text;
  text << "chart round trip, dimension " << Real::dim(level) << ", " << r.samples << " samples per chart, seed "
       << r.seed << ": max_error " << r.max_error() << " -> " << (r.passed() ? "pass" : "fail") << '\n';
  emit(o, out, to_json(r), text.str());
  return r.passed() ? kExitOk : kExitMismatch;
}

int cmd_equiv_check(const Options& o, std::ostream& out) {
  const int level = level_from_dimension(o.level_given ? o.cfg.level : 8);
  const auto r = equivalence_check(level, o.cfg.samples, o.cfg.seed, o.cfg.tolerance);
  std::ostringstream text;
  text << "equivalence check, dimension " << Real::dim(level) << ", " << r.samples << " samples, seed " << r.seed
       << ": max_error " << r.max_error << ", false positives " << r.false_positives << " -> "
       << (r.passed() ? "pass" : "fail") << '\n';
  emit(o, out, to_json(r), text.str());
  return r.passed() ? kExitOk : kExitMismatch;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  const CWDescription cw = builtin_cw(o.space);
  const CoefficientSpec a = CoefficientSpec::parse(o.coeffs);
  std::vector<int> degrees;
  if (o.degree) {
    degrees.push_back(*o.degree);
  } else {
    for (int k = 0; k <= cw.max_dim(); ++k) degrees.push_back(k);
  }
  Json groups = Json::array();
  std::ostringstream text;
  text << "H^*(" << cw.name() << "; " << a.to_string() << "), seed " << o.cfg.seed << '\n';
  for (int k : degrees) {
    const auto g = cohomology(cw, k, a);
    groups.push_back({{"degree", k}, {"group", to_json(g)}});
    if (o.degree || !g.is_trivial()) text << "  H^" << k << " = " << g.to_string() << '\n';
  }
  if (!o.degree) text << "  all other degrees vanish\n";
  Json j = {{"space", cw.name()}, {"coeffs", a.to_string()}, {"seed", o.cfg.seed}, {"groups", std::move(groups)}};
  emit(o, out, j, text.str());
  return kExitOk;
}

int cmd_hopf(const Options& o, std::ostream& out) {
  std::ostringstream text;
  if (o.mode == "bidegree") {
    const int level = o.level_given ? o.cfg.level : 3;
    const auto b = multiplication_bidegree(level, o.cfg.samples, o.cfg.seed);
    Json j = to_json(b);
    j["level"] = level;
    j["seed"] = o.cfg.seed;
    text << "bidegree proxy at level " << level << ": (" << b.left << ", " << b.right << "), Hopf invariant "
         << b.left * b.right << " (seed " << o.cfg.seed << ", max |det| deviation " << b.max_det_deviation << ")\n";
    emit(o, out, j, text.str());
    return std::abs(b.left * b.right) == 1 ? kExitOk : kExitMismatch;
  }
  if (o.mode == "linking") {
    const auto r = linking_hopf_invariant(o.pairs, o.segments, o.cfg.seed);
    Json j = to_json(r);
    j["seed"] = o.cfg.seed;
    text << "linking proxy (complex Hopf map), " << r.pairs.size() << " fiber pairs, " << r.segments
         << " segments: Hopf invariant " << r.hopf_invariant << " (seed " << o.cfg.seed << ")\n";
    emit(o, out, j, text.str());
    return std::abs(r.hopf_invariant) == 1 ? kExitOk : kExitMismatch;
  }
  throw UsageError("--mode must be 'bidegree' or 'linking'");
}

// Expectation matrix. Every entry records its verdict and the
// expected one; the run passes iff all match.
int cmd_audit_all(const Options& o, std::ostream& out) {
  Rng rng(o.cfg.seed);
  Json results = Json::array();
  std::ostringstream text;
  bool all = true;
  auto record = [&](Json entry, bool match, const std::string& line) {
    entry["match"] = match;
    results.push_back(std::move(entry));
    all = all && match;
    text << (match ? "[ok]   " : "[FAIL] ") << line << '\n';
  };

  const std::size_t heavy = std::min<std::size_t>(o.cfg.samples, 100);
  for (int level = 0; level <= 4; ++level) {
    for (auto p : {Property::commutative, Property::associative, Property::alternative, Property::flexible,
                   Property::norm_multiplicative, Property::two_generated_associative}) {
      const bool costly = level >= 4 || p == Property::two_generated_associative;
      const auto r = check_property(p, level, costly ? heavy : o.cfg.samples, rng);
      const bool match = r.verdict == expected_verdict(p, level) && (r.verdict == Verdict::holds || recheck(r));
      record(to_json(r), match,
             std::string(property_name(p)) + " level " + std::to_string(level) + ": " +
                 std::string(verdict_name(r.verdict)));
    }
  }
  {
    const auto r = check_flexible(5, heavy, rng);
    record(to_json(r), r.verdict == Verdict::holds, "flexible level 5: " + std::string(verdict_name(r.verdict)));
  }
  {
    const auto e = [](std::size_t i) { return basis_element<Rational>(3, i); };
    const auto a = check_associator_identity(3, e(1), e(2), e(4));
    const bool match = a == e(7) * Rational(2) || a == e(7) * Rational(-2);
    record({{"check", "associator_witness"}, {"level", 3}, {"associator", to_json(a)}}, match,
           "associator (e1, e2, e4) = " + coords_text(a));
  }
  for (int level = 1; level <= 4; ++level) {
    const auto z = find_zero_divisors(level);
    const bool match = z.empty() == (level <= 3);
    record({{"check", "zero_divisors"}, {"level", level}, {"count", z.size()}}, match,
           "zero divisors level " + std::to_string(level) + ": " + std::to_string(z.size()));
  }
  {
    const auto cw = builtin_cw("OP2");
    for (const auto* spec : {"Z", "Zmod:2", "Zmod:3", "Q"}) {
      const auto a = CoefficientSpec::parse(spec);
      bool match = true;
      Json groups = Json::array();
      for (int k = 0; k <= cw.max_dim(); ++k) {
        const auto g = cohomology(cw, k, a);
        const bool expect_a = k == 0 || k == 8 || k == 16;
        match = match && (expect_a ? g == AbelianGroup::of(a) : g.is_trivial());
        if (!g.is_trivial()) groups.push_back({{"degree", k}, {"group", to_json(g)}});
      }
      record({{"check", "cohomology"}, {"space", "OP2"}, {"coeffs", spec}, {"groups", std::move(groups)}}, match,
             std::string("H^*(OP2; ") + spec + ") = A in degrees 0, 8, 16");
    }
  }
  for (int level = 1; level <= 3; ++level) {
    const auto b = multiplication_bidegree(level, heavy, o.cfg.seed + static_cast<std::uint64_t>(level));
    Json j = to_json(b);
    j["check"] = "hopf_bidegree";
    j["level"] = level;
    record(std::move(j), b.left == 1 && b.right == 1,
           "bidegree proxy level " + std::to_string(level) + ": (" + std::to_string(b.left) + ", " +
               std::to_string(b.right) + ")");
  }
  {
    const auto r = linking_hopf_invariant(10, 256, o.cfg.seed);
    Json j = to_json(r);
    j["check"] = "hopf_linking";
    record(std::move(j), std::abs(r.hopf_invariant) == 1,
           "linking proxy (complex Hopf map): " + std::to_string(r.hopf_invariant));
  }
  for (int level = 0; level <= 3; ++level) {
    const auto r = chart_roundtrip(level, heavy, o.cfg.seed, o.cfg.tolerance);
    Json j = to_json(r);
    j["check"] = "chart_roundtrip";
    record(std::move(j), r.passed(),
           "chart round trip dimension " + std::to_string(Real::dim(level)) + ": " + (r.passed() ? "pass" : "fail"));
  }

  Json j = {{"seed", o.cfg.seed},
            {"samples", o.cfg.samples},
            {"tolerance", o.cfg.tolerance},
            {"all_match", all},
            {"results", std::move(results)}};
  text << (all ? "all verdicts match" : "MISMATCH") << " (seed " << o.cfg.seed << ")\n";
  emit(o, out, j, text.str());
  return all ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cayley-Dickson algebra, projective plane and cohomology toolkit", "octo-tool"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", o.cfg.seed, "PRNG seed (echoed in every report)");
  app.add_option("--samples", o.cfg.samples, "Random samples per check")->check(CLI::PositiveNumber);
  app.add_option("--tol", o.cfg.tolerance, "Absolute tolerance for floating comparisons")->check(CLI::PositiveNumber);
  auto* level_opt = app.add_option("--level", o.cfg.level, "Algebra level (dimension d for chart commands)");
  app.add_flag("--json", [&](std::int64_t) { o.cfg.format = OutputFormat::json; }, "Emit JSON");

  auto* table = app.add_subcommand("table", "Print the basis multiplication table");
  auto* check = app.add_subcommand("check", "Audit one algebraic property at one level");
  check->add_option("--property", o.property,
                    "commutative|associative|alternative|flexible|norm|two-generated");
  auto* zero = app.add_subcommand("zero-divisors", "Search two-term zero divisors");
  auto* chart = app.add_subcommand("chart-roundtrip", "Chart round trips on the projective plane");
  auto* equiv = app.add_subcommand("equiv-check", "Equivalence-relation checks on representatives");
  auto* coh = app.add_subcommand("cohomology", "Cellular cohomology of a built-in CW complex");
  coh->add_option("--space", o.space, "RP2|CP2|HP2|OP2|OP1|hypothetical-OP3");
  coh->add_option("--coeffs", o.coeffs, "Z|Zmod:m|Q");
  coh->add_option("--degree", o.degree, "Single degree (default: all)");
  auto* hopf = app.add_subcommand("hopf", "Hopf invariant proxies");
  hopf->add_option("--mode", o.mode, "bidegree|linking");
  hopf->add_option("--segments", o.segments, "Polygon segments per fiber (linking)");
  hopf->add_option("--pairs", o.pairs, "Regular-value pairs (linking)")->check(CLI::PositiveNumber);
  auto* audit = app.add_subcommand("audit-all", "Run the full expectation matrix");

  std::vector<std::string> argv_storage{"octo-tool"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.level_given = level_opt->count() > 0;

  try {
    if (table->parsed()) return cmd_table(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (zero->parsed()) return cmd_zero_divisors(o, out);
    if (chart->parsed()) return cmd_chart_roundtrip(o, out);
    if (equiv->parsed()) return cmd_equiv_check(o, out);
    if (coh->parsed()) return cmd_cohomology(o, out);
    if (hopf->parsed()) return cmd_hopf(o, out);
    if (audit->parsed()) return cmd_audit_all(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceGuard& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LookupError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace octo::cli
