#include "trioscan/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "trioscan/error.hpp"
#include "trioscan/group.hpp"
#include "trioscan/literals.hpp"
#include "trioscan/setops.hpp"
#include "trioscan/transform.hpp"
#include "trioscan/trio.hpp"
#include "trioscan/verify.hpp"

namespace trioscan {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapability = 3;

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string fmt_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

void render_verdict_lines(std::ostream& out, const std::string& group, const Verdict& v) {
  out << "kind=verdict property=" << property_name(v.property) << " group=" << group
      << " inputs=" << v.inputs << " lhs=" << v.lhs << " rhs=" << v.rhs
      << " pass=" << bool_str(v.pass) << " tight=" << bool_str(v.tight)
      << " vacuous=" << bool_str(v.vacuous) << " reason=" << v.reason << "\n";
}

void render_verdict_text(std::ostream& out, const Verdict& v) {
  out << property_name(v.property) << " " << (v.inputs.empty() ? "-" : v.inputs) << ": "
      << (v.pass ? "pass" : "FAIL");
  if (v.tight) out << " tight";
  if (v.vacuous) out << " vacuous(" << v.reason << ")";
  out << " lhs=" << v.lhs << " rhs=" << v.rhs << "\n";
}

void render_report_lines(std::ostream& out, const ScanReport& rep) {
  for (const auto& [index, v] : rep.violations) {
    out << "kind=witness property=" << property_name(v.property) << " group=" << rep.group_literal
        << " index=" << index << " inputs=" << v.inputs << " lhs=" << v.lhs << " rhs=" << v.rhs
        << " pass=" << bool_str(v.pass) << " tight=" << bool_str(v.tight)
        << " vacuous=" << bool_str(v.vacuous) << " reason=" << v.reason << "\n";
  }
  out << "kind=summary property=" << property_name(rep.property) << " group=" << rep.group_literal
      << " mode=" << (rep.exhaustive ? "exhaustive" : "random") << " samples=" << rep.samples
      << " seed=" << rep.seed << " cases_checked=" << rep.cases_checked
      << " violations=" << rep.violations.size() << " tight_count=" << rep.tight_count
      << " vacuous_count=" << rep.vacuous_count << " elapsed_ms=" << fmt_ms(rep.elapsed_ms)
      << "\n";
}

void render_report_text(std::ostream& out, const ScanReport& rep) {
  out << std::left << std::setw(28) << "property" << std::setw(14) << "group" << std::setw(12)
      << "mode" << std::setw(14) << "checked" << std::setw(12) << "violations" << std::setw(10)
      << "tight" << std::setw(10) << "vacuous"
      << "elapsed_ms"
      << "\n";
  out << std::left << std::setw(28) << property_name(rep.property) << std::setw(14)
      << rep.group_literal << std::setw(12) << (rep.exhaustive ? "exhaustive" : "random")
      << std::setw(14) << rep.cases_checked << std::setw(12) << rep.violations.size()
      << std::setw(10) << rep.tight_count << std::setw(10) << rep.vacuous_count
      << fmt_ms(rep.elapsed_ms) << "\n";
  for (const auto& [index, v] : rep.violations) {
    out << "violation index=" << index << " inputs=" << v.inputs << " lhs=" << v.lhs
        << " rhs=" << v.rhs << " reason=" << v.reason << "\n";
  }
}

struct VerifyArgs {
  std::string group;
  std::string property;
  std::string sets;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::uint64_t budget = 100'000'000;
  bool canonicalize = false;
  int arity = 3;
  std::string format = "text";
};

int run_verify(const VerifyArgs& a, bool have_sets, bool have_samples, std::ostream& out) {
  Group g = parse_group(a.group);
  std::optional<Property> prop = parse_property(a.property);
  if (!prop) throw ContractError("unknown property '" + a.property + "'");
  const bool lines = a.format == "lines";

  if (have_sets) {
    if (a.exhaustive || have_samples) {
      throw ContractError("give explicit --sets or a scan mode, not both");
    }
    std::vector<Subset> sets = parse_sets(g, a.sets);
    Verdict v = evaluate_property(g, *prop, sets, true);
    if (lines) {
      render_verdict_lines(out, g.literal(), v);
    } else {
      render_verdict_text(out, v);
    }
    return v.pass ? kExitPass : kExitViolation;
  }

  if (a.exhaustive == have_samples) {
    throw ContractError("scans need exactly one of --exhaustive / --samples");
  }
  ScanOptions opt;
  opt.workers = a.workers;
  opt.budget = a.budget;
  opt.canonicalize = a.canonicalize;
  opt.arity = a.arity;
  ScanReport rep = a.exhaustive ? exhaustive_scan(g, *prop, opt)
                                : random_scan(g, *prop, a.samples, a.seed, opt);
  if (lines) {
    render_report_lines(out, rep);
  } else {
    render_report_text(out, rep);
  }
  return rep.violations.empty() ? kExitPass : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"set arithmetic and theorem scans in finite abelian groups"};
  app.require_subcommand(1);

  std::string group_lit;
  std::string sets_lit;
  int g0 = 0;
  VerifyArgs va;

  CLI::App* sum = app.add_subcommand("sumset", "n-fold sumset of ';'-joined sets");
  sum->add_option("--group", group_lit, "group literal, e.g. 6 or 2x4")->required();
  sum->add_option("--sets", sets_lit, "';'-joined set literals")->required();

  CLI::App* per = app.add_subcommand("period", "period (stabilizer) subgroup of a set");
  per->add_option("--group", group_lit, "group literal")->required();
  per->add_option("--sets", sets_lit, "a single set literal")->required();

  CLI::App* tr = app.add_subcommand("tau", "n-transform of a set system");
  tr->add_option("--group", group_lit, "group literal")->required();
  tr->add_option("--sets", sets_lit, "';'-joined set literals (1 to 8)")->required();

  CLI::App* comp = app.add_subcommand("complete", "maximal completion of a trio at an anchor");
  comp->add_option("--group", group_lit, "group literal")->required();
  comp->add_option("--sets", sets_lit, "trio literal A;B;C")->required();
  comp->add_option("--g0", g0, "anchor element outside A+B+C")->required();

  CLI::App* mx = app.add_subcommand("maximal-trios", "list every maximal trio of a group");
  mx->add_option("--group", group_lit, "group literal")->required();

  CLI::App* ver = app.add_subcommand("verify", "check a property directly or scan for violations");
  ver->add_option("--group", va.group, "group literal")->required();
  ver->add_option("--property", va.property, "property identifier")->required();
  CLI::Option* sets_opt = ver->add_option("--sets", va.sets, "explicit inputs; no scan");
  ver->add_flag("--exhaustive", va.exhaustive, "scan all tuples");
  CLI::Option* samples_opt =
      ver->add_option("--samples", va.samples, "scan this many random tuples");
  ver->add_option("--seed", va.seed, "random scan seed (echoed in the report)");
  ver->add_option("--workers", va.workers, "parallel workers")->check(CLI::PositiveNumber);
  ver->add_option("--budget", va.budget, "exhaustive case budget");
  ver->add_flag("--canonicalize", va.canonicalize, "pin min element of the first two sets to 0");
  ver->add_option("--arity", va.arity, "system size for the tau properties");
  ver->add_option("--format", va.format, "text or lines")
      ->check(CLI::IsMember({"text", "lines"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (sum->parsed()) {
      Group g = parse_group(group_lit);
      std::vector<Subset> sets = parse_sets(g, sets_lit);
      out << render_set(sumset_all(g, sets)) << "\n";
      return kExitPass;
    }
    if (per->parsed()) {
      Group g = parse_group(group_lit);
      std::vector<Subset> sets = parse_sets(g, sets_lit);
      if (sets.size() != 1) throw ContractError("period takes exactly one set literal");
      out << render_set(period(g, sets[0]).members) << "\n";
      return kExitPass;
    }
    if (tr->parsed()) {
      Group g = parse_group(group_lit);
      SetSystem sys(g, parse_sets(g, sets_lit));
      out << render_sets(tau(sys).output.sets()) << "\n";
      return kExitPass;
    }
    if (comp->parsed()) {
      Group g = parse_group(group_lit);
      std::vector<Subset> sets = parse_sets(g, sets_lit);
      if (sets.size() != 3) throw ContractError("complete takes a trio literal A;B;C");
      Trio t = complete_to_maximal(Trio::make(g, sets[0], sets[1], sets[2]), g0);
      const Subset done[] = {t.a(), t.b(), t.c()};
      out << render_sets(done) << "\n";
      return kExitPass;
    }
    if (mx->parsed()) {
      Group g = parse_group(group_lit);
      for (const Trio& t : enumerate_maximal_trios(g)) {
        const Subset parts[] = {t.a(), t.b(), t.c()};
        out << render_sets(parts) << "\n";
      }
      return kExitPass;
    }
    return run_verify(va, sets_opt->count() > 0, samples_opt->count() > 0, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const CapabilityError& e) {
    err << "capability: " << e.what() << "\n";
    return kExitCapability;
  } catch (const TheoremViolationError& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ContractError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace trioscan
