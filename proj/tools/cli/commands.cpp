#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "cli/suites.hpp"

namespace dposet::cli {

namespace {

template <typename Combination, typename KeyFormat>
std::string format_lines(const Combination& a, KeyFormat&& key) {
  if (a.is_zero()) return "0\n";
  std::string s;
  for (const auto& [k, c] : a) s += std::to_string(c) + "*" + key(k) + "\n";
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string format(const DElement& a) {
  return format_lines(a, [](const CanonicalForm& k) { return k.hex(); });
}

std::string format(const DTensor& t) {
  return format_lines(t, [](const auto& k) { return k.first.hex() + "|" + k.second.hex(); });
}

std::string format(const SElement& a) {
  return format_lines(a, [](const Permutation& p) { return to_string(p); });
}

std::string format(const QElement& a) {
  return format_lines(a, [](const Composition& c) { return "M" + to_string(c); });
}

DoublePoset load_operand(const std::string& operand) {
  if (operand.rfind("key:", 0) == 0) return CanonicalForm::from_hex(operand.substr(4)).decode();
  return parse_double_poset(read_file(operand));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("'" + text + "' is not a comma-separated list of integers");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw CLI::ValidationError("'" + text + "' is not a comma-separated list of integers");
    out.push_back(v);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Hopf algebra of double posets", "dposet"};
  app.require_subcommand(1);

  std::string a, b, partition, word, suite = "all";
  int max_n = 3;
  std::uint64_t seed = 0;

  auto unary = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("A", a, "double poset file, or key:<hex>")->required();
    return cmd;
  };
  auto binary = [&](const char* name, const char* help) {
    auto* cmd = unary(name, help);
    cmd->add_option("B", b, "double poset file, or key:<hex>")->required();
    return cmd;
  };

  auto* parse = unary("parse", "validate and print the canonical covering form");
  auto* canon = unary("canon", "print the canonical key in hex");
  auto* prod = binary("product", "product of two double posets");
  auto* copr = unary("coproduct", "coproduct as a tensor combination");
  auto* anti = unary("antipode", "antipode as a linear combination");
  auto* pair = binary("pair", "number of pictures from A to B");
  auto* intl = binary("internal", "internal product A o B");
  auto* linext = unary("linext", "linear extensions of a special double poset, as permutations");
  auto* gam = unary("gamma", "quasi-symmetric generating function in the monomial basis");
  auto* lmap = unary("lmap", "sum of linear extensions as an element of ZS");
  auto* lr = unary("lr", "Littlewood-Richardson counts against pi_nu");
  lr->add_option("--partition", partition, "parts of nu, e.g. 2,1")->required();
  auto* fits = unary("fits", "whether a word fits into a special double poset");
  fits->add_option("--word", word, "letters, e.g. 1,2,1")->required();
  auto* check = app.add_subcommand("check", "run property suites");
  check->add_option("--suite", suite, "hopf, selfdual, internal, lmap, qsym, lr or all")
      ->check(CLI::IsMember({"hopf", "selfdual", "internal", "lmap", "qsym", "lr", "all"}));
  check->add_option("--max-n", max_n, "largest size examined")->check(CLI::Range(0, kGammaCap));
  check->add_option("--seed", seed, "seed for sampled sizes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (parse->parsed()) {
      out << serialize_double_poset(load_operand(a));
    } else if (canon->parsed()) {
      out << canonical_form(load_operand(a)).hex() << '\n';
    } else if (prod->parsed()) {
      out << format(product(basis(load_operand(a)), basis(load_operand(b))));
    } else if (copr->parsed()) {
      out << format(coproduct(basis(load_operand(a))));
    } else if (anti->parsed()) {
      out << format(antipode(basis(load_operand(a))));
    } else if (pair->parsed()) {
      out << pairing_basis(load_operand(a), load_operand(b)) << '\n';
    } else if (intl->parsed()) {
      out << format(internal_product(basis(load_operand(a)), basis(load_operand(b))));
    } else if (linext->parsed()) {
      for (const Permutation& s : linear_extensions_special(load_operand(a))) out << to_string(s) << '\n';
    } else if (gam->parsed()) {
      out << format(gamma(load_operand(a)));
    } else if (lmap->parsed()) {
      out << format(linear_extension_map(load_operand(a)));
    } else if (lr->parsed()) {
      const DoublePoset d = load_operand(a);
      const Partition nu(parse_int_list(partition));
      const std::int64_t c = lr_count_complement(d, nu);
      const std::int64_t m = lr_count_mirror(d, nu);
      out << "complement-count=" << c << " mirror-count=" << m << " pairing=" << pairing_basis(d, pi_from_partition(nu))
          << '\n';
    } else if (fits->parsed()) {
      const FitsPair f = fits_standardization_check(parse_int_list(word), load_operand(a));
      out << "fits=" << (f.word ? "true" : "false") << " st-fits=" << (f.standardized ? "true" : "false") << '\n';
    } else if (check->parsed()) {
      const SuiteReport report = run_suite(suite, max_n, seed);
      print_report(report, out);
      return report.passed() ? kExitOk : kExitCheckFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kExitDomainError;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace dposet::cli
