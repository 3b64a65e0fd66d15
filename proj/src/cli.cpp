#include "momentforge/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "momentforge/errors.hpp"
#include "momentforge/json_io.hpp"
#include "momentforge/localize.hpp"
#include "momentforge/nonab_oracle.hpp"
#include "momentforge/qseries.hpp"
#include "momentforge/sampler.hpp"
#include "momentforge/surjcount.hpp"
#include "momentforge/verify.hpp"

namespace momentforge {

namespace {

struct Globals {
  bool pretty = false;
  bool decimal = false;
  unsigned threads = 1;
};

std::string decimal_string(const Rational& r)
{
  std::ostringstream s;
  s << std::setprecision(12) << to_double(r);
  return s.str();
}

std::string render(const Rational& r, const Globals& g)
{
  return g.decimal ? to_string(r) + " (" + decimal_string(r) + ")" : to_string(r);
}

void emit_json(std::ostream& out, const Json& j, const Globals& g)
{
  out << (g.pretty ? j.dump(2) : j.dump()) << '\n';
}

Json bracket_json(const Bracket& b, const Globals& g)
{
  Json j = to_json(b);
  if (g.decimal) {
    j["lower_decimal"] = to_double(b.lower);
    j["upper_decimal"] = to_double(b.upper);
  }
  return j;
}

std::string read_input(const std::string& path, std::istream& in)
{
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file)
    throw InputError("cannot open input file '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

std::optional<SimpleType> type_from_flags(const std::optional<std::uint64_t>& abelian,
                                          const std::optional<std::uint64_t>& nonabelian)
{
  if (abelian && nonabelian)
    throw InputError("--abelian and --nonabelian are mutually exclusive");
  if (abelian)
    return SimpleType::abelian(*abelian);
  if (nonabelian)
    return SimpleType::non_abelian(*nonabelian);
  return std::nullopt;
}

MultiIndex broadcast(const std::vector<unsigned>& values, std::size_t size, const char* flag)
{
  if (values.size() == 1 && size != 1)
    return MultiIndex(std::vector<unsigned>(size, values[0]));
  if (values.size() != size)
    throw InputError(std::string(flag) + " needs " + std::to_string(size) + " entries (or one to broadcast), got "
                     + std::to_string(values.size()));
  return MultiIndex(values);
}

// Basis of prime fields in the requested elimination order.
TypeBasis module_basis(const ModuleMomentTable& table, const std::vector<std::uint64_t>& order)
{
  if (order.empty())
    return prime_basis(table.primes());
  if (std::set<std::uint64_t>(order.begin(), order.end()) != table.primes() || order.size() != table.primes().size())
    throw InputError("--order must list each of the table's primes exactly once");
  TypeBasis basis;
  for (std::uint64_t p : order)
    basis.types.push_back(SimpleType::abelian(p));
  return basis;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact moment inversion for measures on finite abelian groups and modules", "momentforge"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--pretty", g.pretty, "Human-oriented rendering");
  app.add_flag("--decimal", g.decimal, "Add decimal renderings next to exact rationals");
  app.add_option("--threads", g.threads, "Upper bound on internal parallelism")->check(CLI::PositiveNumber);

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "Inversion coefficient c_k of a simple type");
  std::optional<std::uint64_t> c_ab, c_nonab;
  unsigned c_k = 0;
  coeffs->add_option("--abelian", c_ab, "Endomorphism field size h (a prime power)");
  coeffs->add_option("--nonabelian", c_nonab, "Automorphism count of a non-abelian simple group");
  coeffs->add_option("--k", c_k, "Index k")->required();

  // sur
  auto* sur = app.add_subcommand("sur", "Surjection counts");
  std::optional<std::uint64_t> s_ab, s_nonab;
  std::optional<unsigned> s_e, s_k;
  std::string s_source, s_target;
  bool s_brute = false;
  sur->add_option("--abelian", s_ab, "Sur(G^e, G^k) for the abelian type with field size h");
  sur->add_option("--nonabelian", s_nonab, "Sur(G^e, G^k) for a non-abelian type with this many automorphisms");
  sur->add_option("--e", s_e, "Source exponent");
  sur->add_option("--k", s_k, "Target exponent");
  sur->add_option("--source", s_source, "Source group as JSON, e.g. '{\"2\":[1,1]}'");
  sur->add_option("--target", s_target, "Target group as JSON");
  sur->add_flag("--bruteforce", s_brute, "Count group surjections by enumeration");

  // invert
  auto* invert = app.add_subcommand("invert", "Bracket the mass at the trivial index from a moment table");
  std::string i_file;
  std::vector<unsigned> i_rmax;
  std::vector<std::size_t> i_order;
  bool i_partials = false;
  invert->add_option("--file", i_file, "Moment table JSON ('-' for stdin)")->required();
  invert->add_option("--rmax", i_rmax, "Truncation per type, comma separated")->required()->delimiter(',');
  invert->add_option("--order", i_order, "Elimination order as basis positions")->delimiter(',');
  invert->add_flag("--partials", i_partials, "Also print every partial sum (one-type tables)");

  // localize
  auto* localize = app.add_subcommand("localize", "Moments of the localized measure at M");
  std::string l_file, l_group;
  std::vector<unsigned> l_kbound;
  std::vector<std::uint64_t> l_order;
  localize->add_option("--file", l_file, "Module moment table JSON ('-' for stdin)")->required();
  localize->add_option("--group", l_group, "M as JSON")->required();
  localize->add_option("--kbound", l_kbound, "Largest k per prime, comma separated")->required()->delimiter(',');
  localize->add_option("--order", l_order, "Primes in elimination order")->delimiter(',');

  // reconstruct
  auto* reconstruct = app.add_subcommand("reconstruct", "Bracket on mu(M) from module moments");
  std::string r_file, r_group;
  std::vector<unsigned> r_rmax;
  std::vector<std::uint64_t> r_order;
  reconstruct->add_option("--file", r_file, "Module moment table JSON ('-' for stdin)")->required();
  reconstruct->add_option("--group", r_group, "M as JSON")->required();
  reconstruct->add_option("--rmax", r_rmax, "Truncation per prime, comma separated")->required()->delimiter(',');
  reconstruct->add_option("--order", r_order, "Primes in elimination order")->delimiter(',');

  // sample
  auto* sample = app.add_subcommand("sample", "Random cokernel convergence report (JSON lines)");
  SamplerConfig cfg;
  std::optional<std::uint64_t> seed;
  std::vector<std::uint64_t> counts;
  std::vector<std::string> targets_json;
  unsigned sample_rmax = 10;
  bool csv = false;
  sample->add_option("--p", cfg.p, "Prime")->required();
  sample->add_option("--cap", cfg.exponent_cap, "Work modulo p^cap")->required();
  sample->add_option("--n", cfg.n, "Matrix rows")->required();
  sample->add_option("--u", cfg.extra_cols, "Extra columns");
  sample->add_option("--seed", seed, "Random seed (required)")->required();
  sample->add_option("--counts", counts, "Increasing sample counts, comma separated")->required()->delimiter(',');
  sample->add_option("--targets", targets_json, "Target groups as JSON, repeatable");
  sample->add_option("--rmax", sample_rmax, "Truncation for the reconstruction");
  sample->add_flag("--csv", csv, "CSV instead of JSON lines");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the oracle suite");
  bool quick = false;
  std::uint64_t verify_seed = 1;
  verify->add_flag("--quick", quick, "Smaller grids");
  verify->add_option("--seed", verify_seed, "Seed for the randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const EnumerationBudget budget = EnumerationBudget::from_environment();

    if (coeffs->parsed()) {
      const auto t = type_from_flags(c_ab, c_nonab);
      if (!t)
        throw InputError("coeffs needs --abelian or --nonabelian");
      const Rational c = inversion_coefficient(*t, c_k);
      if (g.pretty)
        out << "c_" << c_k << "(" << t->describe() << ") = ";
      out << render(c, g) << '\n';
      return kExitOk;
    }

    if (sur->parsed()) {
      if (!s_source.empty() || !s_target.empty()) {
        if (s_source.empty() || s_target.empty())
          throw InputError("sur needs both --source and --target");
        const FinAbGroup a = group_from_json(parse_json(s_source, "--source"));
        const FinAbGroup b = group_from_json(parse_json(s_target, "--target"));
        const Integer n = s_brute ? sur_bruteforce(a, b, budget) : sur_count(a, b);
        if (g.pretty)
          out << "Sur(" << a.to_string() << ", " << b.to_string() << ") = ";
        out << to_string(n) << '\n';
        return kExitOk;
      }
      const auto t = type_from_flags(s_ab, s_nonab);
      if (!t || !s_e || !s_k)
        throw InputError("sur needs --abelian/--nonabelian with --e and --k, or --source and --target");
      const Integer n = sur_single(*t, *s_e, *s_k);
      if (g.pretty)
        out << "Sur(G^" << *s_e << ", G^" << *s_k << ") for " << t->describe() << " = ";
      out << to_string(n) << '\n';
      return kExitOk;
    }

    if (invert->parsed()) {
      MomentTable table = moment_table_from_json(parse_json(read_input(i_file, in), i_file));
      if (!i_order.empty())
        table = table.reordered(i_order);
      const MultiIndex r_max = broadcast(i_rmax, table.basis().size(), "--rmax");
      if (i_partials) {
        if (table.basis().size() != 1)
          throw InputError("--partials needs a one-type table");
        for (unsigned r = 0; r <= r_max[0]; ++r)
          out << "S_" << r << " = " << render(partial_sum(table, r), g) << '\n';
      }
      emit_json(out, bracket_json(multi_invert_zero(table, r_max), g), g);
      return kExitOk;
    }

    if (localize->parsed()) {
      const ModuleMomentTable table = module_table_from_json(parse_json(read_input(l_file, in), l_file));
      const FinAbGroup m = group_from_json(parse_json(l_group, "--group"));
      const TypeBasis basis = module_basis(table, l_order);
      emit_json(out, to_json(localized_moments(table, m, basis, broadcast(l_kbound, basis.size(), "--kbound"))), g);
      return kExitOk;
    }

    if (reconstruct->parsed()) {
      const ModuleMomentTable table = module_table_from_json(parse_json(read_input(r_file, in), r_file));
      const FinAbGroup m = group_from_json(parse_json(r_group, "--group"));
      const TypeBasis basis = module_basis(table, r_order);
      const Bracket b = reconstruct_probability(table, m, basis, broadcast(r_rmax, basis.size(), "--rmax"));
      emit_json(out, bracket_json(b, g), g);
      return kExitOk;
    }

    if (sample->parsed()) {
      cfg.seed = *seed;
      std::vector<FinAbGroup> targets;
      for (const std::string& t : targets_json)
        targets.push_back(group_from_json(parse_json(t, "--targets")));
      if (targets.empty())
        targets.push_back(FinAbGroup());
      const auto records = convergence_report(cfg, counts, targets, sample_rmax, g.threads);
      if (csv)
        out << "t,group,frequency,lower,upper,reference\n";
      for (const ReportRecord& r : records) {
        if (csv) {
          out << r.t << ",\"" << r.group.to_string() << "\"," << decimal_string(r.frequency) << ','
              << decimal_string(r.bracket.lower) << ',' << decimal_string(r.bracket.upper) << ','
              << std::setprecision(12) << r.reference << '\n';
        } else {
          Json j = to_json(r);
          if (g.decimal)
            j["frequency_decimal"] = to_double(r.frequency);
          emit_json(out, j, g);
        }
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      VerifyOptions options;
      options.quick = quick;
      options.seed = verify_seed;
      options.budget = budget;
      bool all = true;
      run_verification(options, [&](const CheckResult& r) {
        all = all && r.passed;
        if (g.pretty)
          out << (r.passed ? "PASS  " : "FAIL  ") << r.name << (r.passed ? "" : ": " + r.detail) << '\n';
        else
          out << Json{{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}}.dump() << '\n';
        out.flush();
      });
      return all ? kExitOk : kExitConsistency;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitConsistency;
  }
  return kExitInput;
}

} // namespace momentforge
