#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rex/cli.hpp"
#include "rex/errors.hpp"

namespace {

rex::CartanDatum resolve_datum(const std::string& type, const std::string& cartan_file) {
  if (!cartan_file.empty()) return rex::cartan_from_file(cartan_file);
  if (type.empty()) throw rex::BadSyntax("need --type <label> or --cartan <file>");
  return rex::cartan_from_label(type);
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string token;
  for (char c : csv) {
    if (c == ',') {
      if (!token.empty()) out.push_back(token);
      token.clear();
    } else {
      token += c;
    }
  }
  if (!token.empty()) out.push_back(token);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rex: exact Ext^1 dimensions between Verma modules, Kazhdan-Lusztig "
      "R-polynomials, and finite-field point-count verification for finite "
      "Weyl groups.\nSimple roots use Bourbaki numbering; element words are "
      "1-based generator indices, e.g. \"1 2 1\", with \"e\" the identity."};
  app.require_subcommand(1);

  std::string type, cartan_file, v_word = "e", w_word = "e";
  std::string op = "ext1", format = "text", suites_csv = "all", primes_csv = "2,3,5";
  int n = 0, threads = 1;
  long long budget = 10'000'000;

  auto add_group_flags = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "type label, e.g. A3, B2, G2, A1xA1");
    cmd->add_option("--cartan", cartan_file, "file with a Cartan matrix, one row per line");
  };

  CLI::App* info = app.add_subcommand("info", "group summary: rank, roots, order, w0");
  add_group_flags(info);
  info->add_option("--format", format, "text | json-like");

  CLI::App* query = app.add_subcommand("query", "evaluate one pair (v, w)");
  add_group_flags(query);
  query->add_option("-v", v_word, "left element word");
  query->add_option("-w", w_word, "right element word");
  query->add_option("--op", op, "ext1 | rpoly | hom | bruhat | count-flags");
  query->add_option("--format", format, "text | json-like | csv");
  query->add_option("--primes", primes_csv, "primes for count-flags");
  query->add_option("--n", n, "ambient dimension for count-flags (rank + 1)");
  query->add_option("--budget", budget, "max flags to enumerate");

  CLI::App* table = app.add_subcommand("table", "all Bruhat-comparable pairs");
  add_group_flags(table);
  table->add_option("--op", op, "ext1 | rpoly | hom | bruhat | count-flags");
  table->add_option("--format", format, "text | json-like | csv");
  table->add_option("--threads", threads, "worker threads for the fill");
  table->add_option("--primes", primes_csv, "prime for count-flags (first is used)");
  table->add_option("--budget", budget, "max flags to enumerate");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--type", type, "type label or \"all\"");
  verify->add_option("--suites", suites_csv,
                     "all | observation1,basecor,descent-independence,r-identities,flag-oracle");
  verify->add_option("--format", format, "text | json-like");
  verify->add_option("--primes", primes_csv, "primes for the flag oracle");
  verify->add_option("--budget", budget, "max flags to enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::vector<int> primes;
    for (const auto& token : split_list(primes_csv)) primes.push_back(std::stoi(token));

    if (info->parsed()) {
      std::cout << rex::cmd_info(resolve_datum(type, cartan_file), format);
    } else if (query->parsed()) {
      rex::QueryRequest request;
      request.datum = resolve_datum(type, cartan_file);
      request.v_word = v_word;
      request.w_word = w_word;
      request.op = op;
      request.format = format;
      request.primes = primes;
      request.n = n;
      request.budget = budget;
      std::cout << rex::cmd_query(request);
    } else if (table->parsed()) {
      std::cout << rex::cmd_table(resolve_datum(type, cartan_file), op, format, threads,
                                  primes, budget);
    } else if (verify->parsed()) {
      rex::VerifyOptions options;
      options.suites = split_list(suites_csv);
      options.format = format;
      options.primes = primes;
      options.budget = budget;
      std::vector<std::string> labels;
      if (!cartan_file.empty())
        throw rex::BadSyntax("verify works on named types; use --type");
      labels.push_back(type.empty() ? "all" : type);
      rex::VerifyOutcome outcome = rex::cmd_verify(labels, options);
      std::cout << outcome.output;
      return outcome.all_passed ? 0 : 1;
    }
    return 0;
  } catch (const rex::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const rex::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
