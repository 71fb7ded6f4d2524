#include <doctest.h>

#include "rex/verify.hpp"

using rex::VerificationReport;
using rex::WeylGroup;
using rex::cartan_from_label;

TEST_SUITE_BEGIN("verify");

TEST_CASE("suites pass on small groups") {
  for (const char* label : {"A1", "A2", "B2"}) {
    CAPTURE(label);
    WeylGroup group(cartan_from_label(label));

    VerificationReport obs1 = rex::verify_observation1(group);
    CHECK(obs1.passed());
    CHECK(obs1.pairs_checked > 0);
    REQUIRE(obs1.sign_calibration.has_value());
    CHECK(*obs1.sign_calibration == -1);

    CHECK(rex::verify_basecor(group).passed());
    CHECK(rex::verify_descent_independence(group).passed());
    CHECK(rex::verify_r_identities(group).passed());
  }
}

TEST_CASE("observation1 pair counts") {
  WeylGroup a1(cartan_from_label("A1"));
  CHECK(rex::verify_observation1(a1).pairs_checked == 3);
  WeylGroup a2(cartan_from_label("A2"));
  CHECK(rex::verify_observation1(a2).pairs_checked == 19);
}

TEST_CASE("flag oracle suite") {
  VerificationReport n2 = rex::verify_flag_oracle(2, {2, 3, 5});
  CHECK(n2.passed());
  CHECK(n2.group == "A1");
  VerificationReport n3 = rex::verify_flag_oracle(3, {2, 3});
  CHECK(n3.passed());
}

TEST_CASE("reports serialize deterministically") {
  WeylGroup a2(cartan_from_label("A2"));
  VerificationReport first = rex::verify_observation1(a2);
  VerificationReport second = rex::verify_observation1(a2);
  CHECK(first.to_text() == second.to_text());
  CHECK(first.to_json() == second.to_json());
  CHECK(first.to_text().find("sign_calibration: -1") != std::string::npos);
  CHECK(first.to_text().find("result: pass") != std::string::npos);
  // timing is opt-in so the default form stays byte-stable
  CHECK(first.to_text().find("elapsed") == std::string::npos);
  CHECK(first.to_json(true).find("elapsed_ms") != std::string::npos);
}

TEST_CASE("failures are data") {
  VerificationReport report{.suite = "demo", .group = "A1"};
  CHECK(report.passed());
  report.failures.push_back({"e", "1", "1", "2", "demo.rule"});
  CHECK_FALSE(report.passed());
  CHECK(report.to_text().find("FAIL demo.rule v=\"e\" w=\"1\" expected=1 actual=2") !=
        std::string::npos);
  CHECK(report.to_json().find("\"rule\": \"demo.rule\"") != std::string::npos);
}

TEST_SUITE_END();
