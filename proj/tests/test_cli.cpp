#include <doctest.h>

#include "rex/cli.hpp"
#include "rex/errors.hpp"

using rex::QueryRequest;
using rex::cartan_from_label;
using rex::cmd_info;
using rex::cmd_query;
using rex::cmd_table;
using rex::cmd_verify;

TEST_SUITE_BEGIN("cli");

TEST_CASE("info") {
  std::string text = cmd_info(cartan_from_label("A2"), "text");
  CHECK(text.find("order: 6") != std::string::npos);
  CHECK(text.find("positive roots: 3") != std::string::npos);
  CHECK(text.find("longest element: 1 2 1") != std::string::npos);

  std::string a1a1 = cmd_info(cartan_from_label("A1xA1"), "text");
  CHECK(a1a1.find("order: 4") != std::string::npos);
  CHECK(a1a1.find("(length 2)") != std::string::npos);

  std::string json = cmd_info(cartan_from_label("A2"), "json-like");
  CHECK(json.find("\"order\": 6") != std::string::npos);

  CHECK_THROWS_AS(cartan_from_label("Z9"), rex::UnknownType);
}

TEST_CASE("query examples") {
  QueryRequest request;
  request.datum = cartan_from_label("A2");
  request.v_word = "e";
  request.w_word = "1 2 1";
  request.op = "ext1";
  CHECK(cmd_query(request) == "2\n");

  request.op = "rpoly";
  CHECK(cmd_query(request) == "[-1, 2, -2, 1]\n");

  request.op = "bruhat";
  request.v_word = "1";
  request.w_word = "2";
  CHECK(cmd_query(request) == "false\n");

  request.op = "hom";
  request.v_word = "e";
  CHECK(cmd_query(request) == "1\n");

  request.op = "ext1";
  request.v_word = "1 1";  // unreduced input is fine
  request.w_word = "2 1 2";
  request.format = "json-like";
  std::string json = cmd_query(request);
  CHECK(json.find("\"v\": \"e\"") != std::string::npos);
  CHECK(json.find("\"w\": \"1 2 1\"") != std::string::npos);
  CHECK(json.find("\"len_w\": 3") != std::string::npos);
  CHECK(json.find("\"value\": 2") != std::string::npos);
}

TEST_CASE("query count-flags") {
  QueryRequest request;
  request.datum = cartan_from_label("A1");
  request.v_word = "e";
  request.w_word = "1";
  request.op = "count-flags";
  request.primes = {2, 3, 5};
  std::string text = cmd_query(request);
  CHECK(text == "p=2: 1\np=3: 2\np=5: 4\n");

  request.datum = cartan_from_label("B2");
  CHECK_THROWS_AS(cmd_query(request), rex::TypeUnsupported);

  request.datum = cartan_from_label("A1");
  request.n = 3;  // wrong ambient dimension for A1
  CHECK_THROWS_AS(cmd_query(request), rex::BadSyntax);
}

TEST_CASE("bad requests") {
  QueryRequest request;
  request.datum = cartan_from_label("A2");
  request.op = "frobenius";
  CHECK_THROWS_AS(cmd_query(request), rex::BadSyntax);
  request.op = "ext1";
  request.v_word = "7";
  CHECK_THROWS_AS(cmd_query(request), rex::BadIndex);
  request.v_word = "e";
  request.format = "yaml";
  CHECK_THROWS_AS(cmd_query(request), rex::BadSyntax);
}

TEST_CASE("tables") {
  std::string a1 = cmd_table(cartan_from_label("A1"), "ext1", "csv");
  CHECK(a1 ==
        "v,w,len_v,len_w,value\n"
        "\"e\",\"e\",0,0,0\n"
        "\"e\",\"1\",0,1,1\n"
        "\"1\",\"1\",1,1,0\n");

  std::string a2 = cmd_table(cartan_from_label("A2"), "rpoly", "csv");
  CHECK(a2.find("\"e\",\"1 2 1\",0,3,\"[-1, 2, -2, 1]\"") != std::string::npos);
  // 19 comparable pairs plus the header
  int lines = 0;
  for (char c : a2)
    if (c == '\n') ++lines;
  CHECK(lines == 20);

  std::string json = cmd_table(cartan_from_label("A1"), "bruhat", "json-like");
  CHECK(json.find("\"value\": true") != std::string::npos);

  CHECK_THROWS_AS(cmd_table(cartan_from_label("A2"), "ext1", "yaml"), rex::BadSyntax);
}

TEST_CASE("table fills are schedule independent") {
  for (const char* op : {"ext1", "rpoly"}) {
    CAPTURE(op);
    std::string serial = cmd_table(cartan_from_label("B2"), op, "csv", 1);
    std::string parallel = cmd_table(cartan_from_label("B2"), op, "csv", 4);
    CHECK(serial == parallel);
  }
}

TEST_CASE("count-flags table") {
  std::string table = cmd_table(cartan_from_label("A1"), "count-flags", "csv", 1, {3});
  CHECK(table ==
        "v,w,len_v,len_w,value\n"
        "\"e\",\"e\",0,0,1\n"
        "\"e\",\"1\",0,1,2\n"
        "\"1\",\"1\",1,1,1\n");
}

TEST_CASE("verify command") {
  rex::VerifyOptions options;
  options.include_timing = false;
  auto outcome = cmd_verify({"A2"}, options);
  CHECK(outcome.all_passed);
  CHECK(outcome.output.find("suite: observation1") != std::string::npos);
  CHECK(outcome.output.find("suite: flag-oracle") != std::string::npos);
  CHECK(outcome.output.find("all suites passed") != std::string::npos);

  options.suites = {"observation1"};
  auto single = cmd_verify({"A1"}, options);
  CHECK(single.all_passed);
  CHECK(single.output.find("sign_calibration: -1") != std::string::npos);
  CHECK(single.output.find("basecor") == std::string::npos);

  options.suites = {"nonsense"};
  CHECK_THROWS_AS(cmd_verify({"A1"}, options), rex::BadSyntax);

  // explicit flag-oracle outside type A is an error, but "all" skips it
  options.suites = {"flag-oracle"};
  CHECK_THROWS_AS(cmd_verify({"B2"}, options), rex::TypeUnsupported);
  options.suites = {"all"};
  auto b2 = cmd_verify({"B2"}, options);
  CHECK(b2.all_passed);
  CHECK(b2.output.find("flag-oracle") == std::string::npos);
}

TEST_SUITE_END();
