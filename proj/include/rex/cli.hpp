#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rex/cartan.hpp"

namespace rex {

// One query against a group: which operation, which pair, how to print it.
struct QueryRequest {
  CartanDatum datum;
  std::string v_word;
  std::string w_word;
  std::string op;              // ext1 | rpoly | hom | bruhat | count-flags
  std::string format = "text"; // text | json-like | csv
  std::vector<int> primes = {2, 3, 5};
  int n = 0;                   // count-flags only; 0 = infer from the type
  std::int64_t budget = 10'000'000;
};

struct VerifyOptions {
  std::vector<std::string> suites = {"all"};
  std::string format = "text";
  std::vector<int> primes = {2, 3, 5};
  std::int64_t budget = 10'000'000;
  bool include_timing = true;
};

// rank, root count, group order, longest element.
std::string cmd_info(const CartanDatum& datum, const std::string& format);

// Single-pair query; structured formats carry normalized words and lengths.
std::string cmd_query(const QueryRequest& request);

// Full table over all Bruhat-comparable pairs, in a fixed order that does
// not depend on the thread count. For count-flags, prime = primes.front().
std::string cmd_table(const CartanDatum& datum, const std::string& op,
                      const std::string& format, int threads = 1,
                      const std::vector<int>& primes = {2}, std::int64_t budget = 10'000'000);

struct VerifyOutcome {
  std::string output;
  bool all_passed = true;
};

// Runs the selected verification suites on each label. "all" as a label
// means {A1, A2, A3, B2, B3, G2}; "all" as a suite list means every suite
// applicable to the group's type.
VerifyOutcome cmd_verify(const std::vector<std::string>& labels, const VerifyOptions& options);

}  // namespace rex
