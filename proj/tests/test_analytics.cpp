#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "recnum/analytics.hpp"
#include "recnum/errors.hpp"
#include "recnum/oracle.hpp"

using namespace recnum;

TEST_CASE("pi_k pinned values") {
  CHECK(pi_k(10, 1) == 7);
  CHECK(pi_k(10, 2) == 2);
  CHECK(pi_k(29, 3) == 0);

  CHECK(pi_k(100, 1) == 35);
  CHECK(pi_k(100, 2) == 56);
  CHECK(pi_k(100, 3) == 8);
  CHECK(pi_k(1000, 1) == 193);
  CHECK(pi_k(1000, 2) == 508);
  CHECK(pi_k(1000, 3) == 275);
  CHECK(pi_k(10000, 1) == 1280);
  CHECK(pi_k(10000, 2) == 4097);
  CHECK(pi_k(10000, 3) == 3695);

  CHECK_THROWS_AS(pi_k(100, 0), std::invalid_argument);
  CHECK_THROWS_AS(pi_k(100, 4), std::invalid_argument);
  CHECK_THROWS_AS(pi_k(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(pi_k(1001, 1, 1000), ResourceError);
}

TEST_CASE("omega sieve agrees with direct factorization") {
  uint64_t mismatches = 0;
  for_each_omega(100000, kDefaultSweepBudget, [&](uint64_t n, uint32_t om) {
    if (om != factorize(n).omega()) ++mismatches;
  });
  CHECK(mismatches == 0);
}

TEST_CASE("density report pinned counts") {
  std::vector<uint64_t> recurrent = sweep(1, 10000).recurrent;
  std::vector<uint64_t> cps{100, 1000, 10000};
  DensityReport rep = density_report(cps, recurrent);

  CHECK(rep.checkpoints == cps);
  CHECK(rep.f == std::vector<uint64_t>{90, 768, 6745});
  CHECK(rep.pi[0] == std::vector<uint64_t>{35, 193, 1280});
  CHECK(rep.pi[1] == std::vector<uint64_t>{56, 508, 4097});
  CHECK(rep.pi[2] == std::vector<uint64_t>{8, 275, 3695});

  for (size_t i = 0; i < cps.size(); ++i) {
    CHECK(rep.f[i] <= rep.pi[0][i] + rep.pi[1][i] + rep.pi[2][i]);
    CHECK(std::isfinite(rep.envelope_c[i]));
    CHECK(rep.envelope_c[i] > 0.0);
    for (int k = 0; k < 3; ++k) {
      CHECK(std::isfinite(rep.landau_ratio[k][i]));
      CHECK(rep.landau_ratio[k][i] >= 0.0);
    }
  }

  // Spot-check one ratio against the definition.
  double x = 100.0;
  double expect = 35.0 / (x / std::log(x));
  CHECK(rep.landau_ratio[0][0] == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("density report validation") {
  std::vector<uint64_t> rec{1, 2, 3};
  CHECK_THROWS_AS(density_report(std::vector<uint64_t>{}, rec),
                  std::invalid_argument);
  CHECK_THROWS_AS(density_report(std::vector<uint64_t>{99}, rec),
                  std::invalid_argument);
  CHECK_THROWS_AS(density_report(std::vector<uint64_t>{200, 150}, rec),
                  std::invalid_argument);
  CHECK_THROWS_AS(density_report(std::vector<uint64_t>{200, 200}, rec),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      density_report(std::vector<uint64_t>{100, 2000}, rec, std::nullopt, 1000),
      ResourceError);
}

TEST_CASE("density report csv shape") {
  std::vector<uint64_t> recurrent = sweep(1, 1000).recurrent;
  std::vector<uint64_t> cps{100, 1000};
  DensityReport rep = density_report(cps, recurrent);
  std::ostringstream os;
  rep.write_csv(os);

  std::istringstream is(os.str());
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == "x,f,pi1,pi2,pi3,ratio1,ratio2,ratio3,envelope_C");
  size_t rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 8);
  }
  CHECK(rows == 2);
  CHECK(os.str().substr(0, os.str().find('\n') + 1 + 2) ==
        "x,f,pi1,pi2,pi3,ratio1,ratio2,ratio3,envelope_C\n10");
}

TEST_CASE("density report json round trips") {
  std::vector<uint64_t> recurrent = sweep(1, 1000).recurrent;
  std::vector<uint64_t> cps{100, 1000};
  DensityReport rep = density_report(cps, recurrent, std::pair(10.0, 10.0));
  nlohmann::json j = nlohmann::json::parse(rep.to_json());

  CHECK(j["checkpoints"] == std::vector<uint64_t>{100, 1000});
  CHECK(j["f"] == std::vector<uint64_t>{90, 768});
  CHECK(j["pi"].size() == 3);
  CHECK(j["pi"][0] == std::vector<uint64_t>{35, 193});
  CHECK(j["landau_ratio"].size() == 3);
  CHECK(j["envelope_C"].size() == 2);
  CHECK(j["bound"]["A"] == 10.0);
  CHECK(j["bound"]["B"] == 10.0);
  REQUIRE(j["bound"]["holds"].size() == 3);
  for (int k = 0; k < 3; ++k) {
    for (bool h : j["bound"]["holds"][k].get<std::vector<bool>>()) CHECK(h);
  }

  // Without the bound the key is absent.
  nlohmann::json plain =
      nlohmann::json::parse(density_report(cps, recurrent).to_json());
  CHECK(!plain.contains("bound"));
}

TEST_CASE("bound polynomial pinned values") {
  CHECK(bound_poly(1, 2) == Rational(5));
  CHECK(bound_poly(1, 3) == Rational(-23));
  CHECK(bound_gap(1, 2).sign() == 0);
  CHECK(bound_gap(1, 3).sign() < 0);

  // u = 4, x = 2: exact value -559/16.
  CHECK(bound_poly(4, 2) == Rational(-559, 16));

  CHECK_THROWS_AS(bound_poly(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(bound_poly(1'000'000'001, 2), std::invalid_argument);
}

TEST_CASE("bounds lemma box scan finds exactly one pair") {
  CHECK(verify_bounds_lemma(100, 100) ==
        std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(verify_bounds_lemma(1, 2) == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK_THROWS_AS(verify_bounds_lemma(0, 100), std::invalid_argument);
  CHECK_THROWS_AS(verify_bounds_lemma(100, 1), std::invalid_argument);
}

TEST_CASE("bounds lemma tail behavior") {
  TailCheck t = bounds_lemma_tail(4, 100, 100);
  CHECK(t.decreasing_in_x);
  CHECK(t.p_at_2_negative);

  // u = 1 breaks negativity at x = 2 (P(1,2) = 5).
  CHECK_FALSE(bounds_lemma_tail(1, 1, 10).p_at_2_negative);

  CHECK_THROWS_AS(bounds_lemma_tail(0, 5, 10), std::invalid_argument);
  CHECK_THROWS_AS(bounds_lemma_tail(5, 4, 10), std::invalid_argument);
  CHECK_THROWS_AS(bounds_lemma_tail(1, 5, 1), std::invalid_argument);
}

TEST_CASE("conjecture pairs pinned") {
  using P = std::pair<uint64_t, uint64_t>;
  CHECK(conjecture_pairs(7) == std::vector<P>{{2, 3}, {3, 7}});
  CHECK(conjecture_pairs(47) ==
        std::vector<P>{{2, 3}, {3, 7}, {5, 23}, {7, 43}, {7, 47}});
  CHECK(conjecture_pairs(2) == std::vector<P>{});
  CHECK_THROWS_AS(conjecture_pairs(1), std::invalid_argument);
}

TEST_CASE("conjecture pairs yield recurrent p^3 q") {
  for (auto [p, q] : conjecture_pairs(47)) {
    uint64_t n = p * p * p * q;
    OracleVerdict v = is_recurrent(n);
    CHECK(v.recurrent);
    CHECK(v.small_divisors == std::vector<uint64_t>{1, p, q, p * p});
  }
}

TEST_CASE("rational arithmetic") {
  using Int = Rational::Int;
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).num() == 3);
  CHECK(Rational(6, 4).den() == 2);
  CHECK(Rational(-6, 4) == Rational(6, -4));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-3, 2).str() == "-3/2");

  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(-Rational(1, 2) == Rational(-1, 2));

  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(1, 2) <= Rational(2, 4));
  CHECK(Rational(2, 3) > Rational(1, 2));
  CHECK(Rational(1, 2) != Rational(1, 3));

  CHECK(Rational(7, 2).sign() == 1);
  CHECK(Rational(-7, 2).sign() == -1);
  CHECK(Rational(0).sign() == 0);

  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(Int(0), Int(0)), std::invalid_argument);

  // 2^248 fits in 256 signed bits; its square does not.
  Rational big(1LL << 62);
  big = big * big;  // 2^124
  big = big * big;  // 2^248
  CHECK_THROWS_AS(big * big, ResourceError);
}
