#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "euler2/formats.hpp"
#include "euler2/identities.hpp"

using namespace euler2;

namespace {

Rational rational_side(const ExactValue& value) { return std::get<Rational>(value); }

std::string dump_reports(const std::vector<IdentityReport>& reports) {
  std::string out;
  for (const auto& report : reports) out += report_to_plain(report) + "\n";
  return out;
}

}  // namespace

TEST_CASE("theorem1: generating function equals the Eulerian closed form") {
  for (int n : {1, 2, 25}) {
    const auto report = check_theorem1(n);
    REQUIRE(report.holds);
  }
  CHECK(std::get<PolyQ>(check_theorem1(2).lhs) ==
        PolyQ{Rational{0}, Rational{-1, 12}, Rational{1, 4}});
  CHECK_THROWS_AS(check_theorem1(0), std::domain_error);
}

TEST_CASE("lemma1: both links at z = -m") {
  const auto report = check_lemma1(2, 2);
  CHECK(report.holds);
  CHECK(rational_side(report.lhs) == Rational{7, 6});

  for (int n = 1; n <= 6; ++n) {
    const auto zero_case = check_lemma1(n, 0);
    REQUIRE(zero_case.holds);
    REQUIRE(rational_side(zero_case.lhs).is_zero());
  }

  CHECK(check_lemma1(1, 5).holds);  // S(6,5) = 15 = binom(6,2)
  for (int n = 1; n <= 10; ++n)
    for (int m = 0; m <= 10; ++m) REQUIRE(check_lemma1(n, m).holds);
}

TEST_CASE("theorem3: alternating reciprocal-binomial sum") {
  const auto n1 = check_theorem3(1);
  CHECK(n1.holds);
  CHECK(rational_side(n1.lhs) == Rational{1, 3});

  const auto n2 = check_theorem3(2);
  CHECK(n2.holds);
  CHECK(rational_side(n2.lhs).is_zero());

  CHECK(check_theorem3(40).holds);
}

TEST_CASE("rzadkowski_urlinska: exact integrals") {
  const auto n1 = check_rzadkowski_urlinska(1);
  CHECK(n1.holds);
  CHECK(rational_side(n1.lhs) == Rational{1, 12});  // = B_2/2

  const auto n3 = check_rzadkowski_urlinska(3);
  CHECK(n3.holds);
  CHECK(rational_side(n3.rhs) == Rational{-1, 120});  // = B_4/4

  for (int n = 1; n <= 12; ++n) REQUIRE(check_rzadkowski_urlinska(n).holds);
}

TEST_CASE("miki: validity range locked") {
  const auto n4 = check_miki(4);
  CHECK(n4.holds);
  CHECK(rational_side(n4.lhs) == Rational{1, 144});

  CHECK(check_miki(3).holds);  // 0 = 0

  const auto n2 = check_miki(2);
  CHECK_FALSE(n2.holds);
  CHECK(n2.expected_failure);
  CHECK(rational_side(n2.rhs) == Rational{1, 4});

  for (int n = 3; n <= 20; ++n) REQUIRE(check_miki(n).holds);
}

TEST_CASE("theorem4: corrected sign holds, printed sign fails") {
  const auto corrected = check_theorem4(3, Theorem4Sign::corrected);
  CHECK(corrected.holds);
  CHECK(rational_side(corrected.lhs) == Rational{3, 4});

  const auto printed = check_theorem4(3, Theorem4Sign::as_printed);
  CHECK_FALSE(printed.holds);
  CHECK(rational_side(printed.lhs) == -rational_side(printed.rhs));

  for (int n = 3; n <= 20; ++n) REQUIRE(check_theorem4(n, Theorem4Sign::corrected).holds);

  SECTION("right side undefined below n = 2") {
    const auto n1 = check_theorem4(1, Theorem4Sign::corrected);
    CHECK_FALSE(n1.holds);
    CHECK(n1.expected_failure);
    CHECK(std::holds_alternative<std::monostate>(n1.rhs));
  }
}

TEST_CASE("mequation: holds from n = 2 on") {
  const auto n2 = check_mequation(2);
  CHECK(n2.holds);
  CHECK(rational_side(n2.lhs) == Rational{-1, 12});

  const auto n1 = check_mequation(1);
  CHECK_FALSE(n1.holds);
  CHECK(n1.expected_failure);
  CHECK(rational_side(n1.lhs) == Rational{1, 2});
  CHECK(rational_side(n1.rhs) == Rational{-1, 2});

  for (int n = 2; n <= 25; ++n) REQUIRE(check_mequation(n).holds);
}

TEST_CASE("derivative formulas") {
  const auto o1 = check_derivatives(2, 1);
  CHECK(o1.holds);
  CHECK(rational_side(o1.lhs) == Rational{-1, 12});

  const auto o1_exception = check_derivatives(1, 1);
  CHECK_FALSE(o1_exception.holds);
  CHECK(o1_exception.expected_failure);
  CHECK(rational_side(o1_exception.lhs) == Rational{-1, 2});

  const auto o2 = check_derivatives(4, 2);
  CHECK(o2.holds);
  CHECK(rational_side(o2.lhs) == Rational{1, 24});

  CHECK(check_derivatives(5, 2).holds);
  CHECK(rational_side(check_derivatives(5, 2).rhs) == Rational{-1, 24});

  const auto o2_exception = check_derivatives(2, 2);
  CHECK_FALSE(o2_exception.holds);
  CHECK(o2_exception.expected_failure);
  CHECK(rational_side(o2_exception.lhs) == Rational{1, 2});
  CHECK(rational_side(o2_exception.rhs) == Rational{-1});

  for (int n = 2; n <= 20; ++n) REQUIRE(check_derivatives(n, 1).holds);
  for (int n = 3; n <= 20; ++n) REQUIRE(check_derivatives(n, 2).holds);

  CHECK_THROWS_AS(check_derivatives(4, 3), std::invalid_argument);
}

TEST_CASE("dilcher: multinomial convolution vs stirling side") {
  for (int n = 1; n <= 8; ++n) REQUIRE(check_dilcher(n, 1).holds);
  CHECK(check_dilcher(2, 2).holds);
  CHECK(rational_side(check_dilcher(2, 2).lhs) == Rational{5, 6});
  CHECK(check_dilcher(12, 5).holds);

  SECTION("N > n is undefined on the right") {
    const auto report = check_dilcher(2, 3);
    CHECK_FALSE(report.holds);
    CHECK(report.expected_failure);
    CHECK(std::holds_alternative<std::monostate>(report.rhs));
  }
  CHECK_THROWS_AS(check_dilcher(2, 0), std::domain_error);
}

TEST_CASE("theorem2 and the Cauchy-number specialization") {
  const auto a = check_theorem2(2, 1);
  CHECK(a.holds);
  CHECK(rational_side(a.lhs) == Rational{1, 3});

  const auto b = check_theorem2(2, 2);
  CHECK(b.holds);
  CHECK(rational_side(b.lhs) == Rational{5, 3});

  for (int n = 1; n <= 12; ++n)
    for (int N = 1; N <= n; ++N) REQUIRE(check_theorem2(n, N).holds);

  SECTION("at N = n the sum gives the Cauchy numbers") {
    for (int n = 1; n <= 10; ++n) {
      const Rational lhs = rational_side(check_theorem2(n, n).lhs);
      const Rational folded = n % 2 == 0 ? lhs : -lhs;
      REQUIRE(folded == Rational{2} * cauchy2(n));
    }
  }

  SECTION("N outside 1..n") {
    const auto report = check_theorem2(3, 0);
    CHECK_FALSE(report.holds);
    CHECK(report.expected_failure);
    CHECK(std::holds_alternative<std::monostate>(report.rhs));
    CHECK(check_theorem2(3, 4).expected_failure);
  }
}

TEST_CASE("cauchy_eulerian") {
  const auto n1 = check_cauchy_eulerian(1);
  CHECK(n1.holds);
  CHECK(rational_side(n1.lhs) == Rational{1});

  const auto n2 = check_cauchy_eulerian(2);
  CHECK(n2.holds);
  CHECK(rational_side(n2.lhs) == Rational{5, 3});

  for (int n = 1; n <= 12; ++n) REQUIRE(check_cauchy_eulerian(n).holds);
}

TEST_CASE("gessel_stanley coefficient identity") {
  CHECK(check_gessel_stanley(2, 2).holds);
  CHECK(rational_side(check_gessel_stanley(2, 2).lhs) == Rational{7});
  CHECK(check_gessel_stanley(10, 20).holds);
  for (int n = 1; n <= 8; ++n) REQUIRE(check_gessel_stanley(n, 12).holds);
}

TEST_CASE("log series coefficients") {
  const auto report = check_log_series(12);
  CHECK(report.holds);
  const PolyQ& coeffs = std::get<PolyQ>(report.lhs);
  CHECK(coeffs.coeff(1) == Rational{1, 2});
  CHECK(coeffs.coeff(3).is_zero());
  CHECK(coeffs.coeff(4) == Rational{-1, 2880});
}

TEST_CASE("eulerian oracle as a report") {
  for (int n = 1; n <= 5; ++n) REQUIRE(check_eulerian_oracle(n, 5).holds);
}

TEST_CASE("run_suite") {
  SECTION("filter runs one identity over its range") {
    SuiteConfig config;
    config.n_max = 5;
    config.identities = {"theorem3"};
    const auto reports = run_suite(config);
    REQUIRE(reports.size() == 5);
    for (const auto& report : reports) {
      REQUIRE(report.identity == "theorem3");
      REQUIRE(report.holds);
    }
  }

  SECTION("minimal suite at n_max = 1") {
    SuiteConfig config;
    config.n_max = 1;
    config.enumeration_cap = 2;
    const auto reports = run_suite(config);
    CHECK(suite_passed(reports));
    const auto theorem3 = std::find_if(reports.begin(), reports.end(), [](const auto& r) {
      return r.identity == "theorem3";
    });
    REQUIRE(theorem3 != reports.end());
    CHECK(theorem3->holds);
  }

  SECTION("default ranges: the failing set is exactly the documented exceptions") {
    SuiteConfig config;
    config.n_max = 6;
    config.enumeration_cap = 4;
    const auto reports = run_suite(config);
    CHECK(suite_passed(reports));

    std::set<std::string> failing;
    for (const auto& report : reports) {
      REQUIRE(report.holds != report.expected_failure);
      if (!report.holds) failing.insert(report.identity + " " + report_params_string(report));
    }
    const std::set<std::string> documented{
        "mequation n=1",
        "miki n=2",
        "theorem4 n=3",  // as-printed regression lock
        "derivatives n=1 order=1",
        "derivatives n=2 order=2",
    };
    CHECK(failing == documented);
  }

  SECTION("forcing the printed theorem4 sign makes the suite fail") {
    SuiteConfig config;
    config.n_max = 5;
    config.identities = {"theorem4"};
    config.theorem4_sign = Theorem4Sign::as_printed;
    const auto reports = run_suite(config);
    CHECK_FALSE(suite_passed(reports));
    for (const auto& report : reports) {
      CHECK_FALSE(report.holds);
      CHECK_FALSE(report.expected_failure);
    }
  }

  SECTION("determinism: identical configs produce identical reports") {
    SuiteConfig config;
    config.n_max = 4;
    config.enumeration_cap = 3;
    const auto first = run_suite(config);
    const auto second = run_suite(config);
    REQUIRE(dump_reports(first) == dump_reports(second));
    nlohmann::ordered_json ja, jb;
    for (const auto& r : first) ja.push_back(report_to_json(r));
    for (const auto& r : second) jb.push_back(report_to_json(r));
    REQUIRE(ja.dump() == jb.dump());
  }

  SECTION("configuration validation") {
    SuiteConfig bad_n;
    bad_n.n_max = 0;
    CHECK_THROWS_AS(run_suite(bad_n), std::invalid_argument);

    SuiteConfig bad_cap;
    bad_cap.enumeration_cap = 11;
    CHECK_THROWS_AS(run_suite(bad_cap), std::invalid_argument);

    SuiteConfig bad_name;
    bad_name.identities = {"theorem9"};
    CHECK_THROWS_AS(run_suite(bad_name), std::invalid_argument);
  }
}

TEST_CASE("reports always materialize both sides") {
  const auto report = check_theorem4(3, Theorem4Sign::as_printed);
  CHECK_FALSE(std::holds_alternative<std::monostate>(report.lhs));
  CHECK_FALSE(std::holds_alternative<std::monostate>(report.rhs));
  CHECK(exact_value_to_string(report.lhs) == "-3/4");
  CHECK(exact_value_to_string(report.rhs) == "3/4");
}
