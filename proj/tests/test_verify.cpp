#include <doctest.h>

#include "mr6v/verify.hpp"

using mr6v::verify::Options;
using mr6v::verify::run_all;
using mr6v::verify::run_identities;

TEST_CASE("all suites pass on a default seed") {
  const auto results = run_all(Options{0, false});
  REQUIRE(results.size() == 12);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("suite roster is stable and seeded runs are reproducible") {
  const auto a = run_all(Options{42, false});
  const auto b = run_all(Options{42, false});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].detail == b[i].detail);
  }
  const char* expected[] = {"formula-equivalence", "cauchy",      "binomial",
                            "symmetric",           "vandermonde", "residue",
                            "toda",                "derivatives", "pdwbc",
                            "yang-baxter",         "rectangle-limit", "semi-infinite"};
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].name == expected[i]);
}

TEST_CASE("another seed also passes") {
  for (const auto& r : run_all(Options{20260811, false})) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("negative control: injected binomial fault fails only that suite") {
  const auto results = run_all(Options{0, true});
  for (const auto& r : results) {
    CAPTURE(r.name);
    if (r.name == "binomial") {
      CHECK(!r.pass);
    } else {
      CHECK(r.pass);
    }
  }
}

TEST_CASE("identity subset runs the five appendix suites") {
  const auto results = run_identities(Options{1, false});
  REQUIRE(results.size() == 5);
  const char* expected[] = {"cauchy", "binomial", "symmetric", "vandermonde", "residue"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].name == expected[i]);
    CHECK(results[i].pass);
  }
}
