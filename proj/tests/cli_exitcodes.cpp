// End-to-end checks of the CLI exit code contract:
//   0 success, 1 verification failure, 2 usage error, 3 budget error.
// argv[1] is the CLI binary path.

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int g_failures = 0;

void expect_exit(const std::string& cli, const std::string& args, int expected) {
  std::string command = "'" + cli + "' " + args + " >/dev/null 2>&1";
  int status = std::system(command.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  bool ok = code == expected;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "exit " << expected << " for: " << args;
  if (!ok) std::cout << " (got " << code << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_exitcodes <path-to-rex>\n";
    return 2;
  }
  std::string cli = argv[1];

  expect_exit(cli, "info --type A2", 0);
  expect_exit(cli, "query --type A2 --op ext1 -v e -w '1 2 1'", 0);
  expect_exit(cli, "query --type A2 --op rpoly -v e -w '1 2 1' --format json-like", 0);
  expect_exit(cli, "table --type A1 --op ext1 --format csv", 0);
  expect_exit(cli, "verify --type A1 --suites observation1,basecor", 0);
  expect_exit(cli, "verify --type all", 0);

  expect_exit(cli, "info --type Z9", 2);
  expect_exit(cli, "query --type A2 --op frobenius -v e -w e", 2);
  expect_exit(cli, "query --type A2 --op ext1 -v '9' -w e", 2);
  expect_exit(cli, "verify --type A1 --suites nonsense", 2);
  expect_exit(cli, "verify --type B2 --suites flag-oracle", 2);
  expect_exit(cli, "table --type A2 --op ext1 --format yaml", 2);
  expect_exit(cli, "bogus-subcommand", 2);

  expect_exit(cli, "query --type A2 --op count-flags -v e -w e --primes 5 --budget 10", 3);
  expect_exit(cli, "verify --type A2 --suites flag-oracle --budget 3", 3);

  if (g_failures == 0) {
    std::cout << "cli exit codes: all checks passed\n";
    return 0;
  }
  return 1;
}
