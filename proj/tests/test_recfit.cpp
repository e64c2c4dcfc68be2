#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "recnum/errors.hpp"
#include "recnum/recfit.hpp"

using namespace recnum;

namespace {

// Reference check used throughout: does every term from index 3 on
// satisfy d_i = a*d_{i-1} + b*d_{i-2}?
bool satisfies(const std::vector<uint64_t>& seq, long long a, long long b) {
  for (size_t i = 2; i < seq.size(); ++i) {
    __int128 want = static_cast<__int128>(a) * seq[i - 1] +
                    static_cast<__int128>(b) * seq[i - 2];
    if (want != static_cast<__int128>(seq[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("solve_line degenerate cases") {
  CHECK(solve_line({0, 0, 0}).kind == SolutionKind::kPlane);
  CHECK(solve_line({0, 0, 5}).kind == SolutionKind::kEmpty);
  CHECK(solve_line({2, 4, 3}).kind == SolutionKind::kEmpty);
}

TEST_CASE("solve_line pinned example 2a+b=4") {
  AffineSolutionSet s = solve_line({2, 1, 4});
  REQUIRE(s.kind == SolutionKind::kLine);
  CHECK(s.contains(2, 0));
  CHECK(s.contains(0, 4));
  CHECK(s.contains(1, 2));
  CHECK(s.contains(-1, 6));
  CHECK_FALSE(s.contains(1, 1));
  // Canonical: direction (1,-2), base the |a|-minimizing member (0,4).
  CHECK(s.da == 1);
  CHECK(s.db == -2);
  CHECK(s.a == 0);
  CHECK(s.b == 4);
  CHECK(s == AffineSolutionSet::line(2, 0, 1, -2));
  CHECK(s == AffineSolutionSet::line(-1, 6, -3, 6));
}

TEST_CASE("solve_line divides through by the gcd") {
  AffineSolutionSet s = solve_line({2, 4, 6});  // a + 2b = 3
  REQUIRE(s.kind == SolutionKind::kLine);
  CHECK(s.da == 2);
  CHECK(s.db == -1);
  CHECK(s.a == 1);  // tie on |a| between (1,1) and (-1,2); |b| decides
  CHECK(s.b == 1);
  CHECK(s.contains(3, 0));
  CHECK(s.contains(-1, 2));
  CHECK_FALSE(s.contains(0, 0));
}

TEST_CASE("intersect pinned cases") {
  AffineSolutionSet l1 = solve_line({2, 1, 3});
  AffineSolutionSet l2 = solve_line({3, 2, 4});
  AffineSolutionSet meet = intersect(l1, l2);
  REQUIRE(meet.kind == SolutionKind::kPoint);
  CHECK(meet.a == 2);
  CHECK(meet.b == -1);

  // Plane is the identity.
  AffineSolutionSet plane = AffineSolutionSet::plane();
  CHECK(intersect(plane, l1) == l1);
  CHECK(intersect(l1, plane) == l1);
  CHECK(intersect(plane, plane).kind == SolutionKind::kPlane);

  // Coincident lines.
  CHECK(intersect(solve_line({2, 1, 4}), solve_line({4, 2, 8})) ==
        solve_line({2, 1, 4}));

  // Parallel distinct lines.
  CHECK(intersect(solve_line({2, 1, 4}), solve_line({2, 1, 5})).kind ==
        SolutionKind::kEmpty);

  // Crossing at a non-lattice point: a+b=1 and a-b=0.
  CHECK(intersect(solve_line({1, 1, 1}), solve_line({1, -1, 0})).kind ==
        SolutionKind::kEmpty);

  // Empty absorbs.
  CHECK(intersect(AffineSolutionSet::empty(), plane).kind ==
        SolutionKind::kEmpty);
  CHECK(intersect(l1, AffineSolutionSet::empty()).kind ==
        SolutionKind::kEmpty);

  // Points filter by membership.
  AffineSolutionSet p = AffineSolutionSet::point(2, -1);
  CHECK(intersect(p, l1) == p);
  CHECK(intersect(l1, p) == p);
  CHECK(intersect(AffineSolutionSet::point(0, 0), l1).kind ==
        SolutionKind::kEmpty);
  CHECK(intersect(p, p) == p);
  CHECK(intersect(p, AffineSolutionSet::point(0, 0)).kind ==
        SolutionKind::kEmpty);
}

TEST_CASE("fit_order2 pinned sequences") {
  std::vector<uint64_t> s60{1, 2, 3, 4, 5, 6};
  AffineSolutionSet f60 = fit_order2(s60);
  CHECK(f60 == AffineSolutionSet::point(2, -1));

  std::vector<uint64_t> s36{1, 2, 3, 4, 6};
  CHECK(fit_order2(s36).kind == SolutionKind::kEmpty);

  std::vector<uint64_t> s30{1, 2, 3, 5};
  CHECK(fit_order2(s30) == AffineSolutionSet::point(1, 1));

  std::vector<uint64_t> s54{1, 2, 3, 6};
  CHECK(fit_order2(s54) == AffineSolutionSet::point(0, 3));

  std::vector<uint64_t> s486{1, 2, 3, 6, 9, 18};
  CHECK(fit_order2(s486) == AffineSolutionSet::point(0, 3));

  CHECK(fit_order2(std::vector<uint64_t>{1}).kind == SolutionKind::kPlane);
  CHECK(fit_order2(std::vector<uint64_t>{1, 2}).kind == SolutionKind::kPlane);

  std::vector<uint64_t> s12{1, 2, 3};
  AffineSolutionSet f12 = fit_order2(s12);
  CHECK(f12.kind == SolutionKind::kLine);  // one equation, 3 = 2a + b
  CHECK(f12.contains(1, 1));
  CHECK(f12.contains(0, 3));
}

TEST_CASE("fit_order2 geometric sequence gives the expected line") {
  std::vector<uint64_t> seq{1, 2, 4, 8};
  AffineSolutionSet fit = fit_order2(seq);
  REQUIRE(fit.kind == SolutionKind::kLine);
  CHECK(fit == solve_line({2, 1, 4}));
  // Brute force over [-10,10]^2 finds exactly 11 pairs, all on 2a+b=4.
  int count = 0;
  for (long long a = -10; a <= 10; ++a) {
    for (long long b = -10; b <= 10; ++b) {
      bool brute = satisfies(seq, a, b);
      CHECK(brute == fit.contains(a, b));
      if (brute) ++count;
    }
  }
  CHECK(count == 11);
  CHECK(fit.contains(2, 0));
  CHECK(fit.contains(0, 4));
  CHECK(fit.contains(1, 2));
}

TEST_CASE("fit_order2 soundness sampling") {
  std::vector<std::vector<uint64_t>> cases{
      {1, 2, 3, 4, 5, 6}, {1, 2, 3, 6, 9, 18}, {1, 2, 4, 8, 16},
      {1, 3, 9, 27},      {1, 2, 3, 5},        {1, 5, 25},
  };
  for (const auto& seq : cases) {
    AffineSolutionSet fit = fit_order2(seq);
    switch (fit.kind) {
      case SolutionKind::kPoint:
        CHECK(satisfies(seq, fit.a, fit.b));
        break;
      case SolutionKind::kLine:
        for (long long t = -2; t <= 2; ++t) {
          CHECK(satisfies(seq, fit.a + t * fit.da, fit.b + t * fit.db));
        }
        break;
      case SolutionKind::kPlane:
        CHECK(satisfies(seq, 7, -3));
        CHECK(satisfies(seq, 0, 0));
        break;
      case SolutionKind::kEmpty:
        break;
    }
  }
}

TEST_CASE("fit_order2 input validation") {
  CHECK_THROWS_AS(fit_order2(std::vector<uint64_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(fit_order2(std::vector<uint64_t>{2, 2, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_order2(std::vector<uint64_t>{0, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_order2(std::vector<uint64_t>{1, 2, 1ull << 63}),
                  ResourceError);
}

TEST_CASE("closed_form_d matches Table-1 polynomials") {
  CHECK(closed_form_d(5, 2, 2, -1) == 5);
  CHECK(closed_form_d(4, 2, 0, 3) == 6);
  CHECK(closed_form_d(3, 5, 1, 0) == 5);
  CHECK(closed_form_d(2, 7, 0, 0) == 7);

  CHECK_THROWS_AS(closed_form_d(1, 2, 2, -1), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_d(6, 2, 2, -1), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_d(3, 1ll << 33, 1, 1), ResourceError);
}

TEST_CASE("closed_form_d equals the unrolled recurrence") {
  for (long long p = 2; p <= 20; ++p) {
    for (long long a = -20; a <= 20; ++a) {
      for (long long b = -20; b <= 20; ++b) {
        long long d1 = 1, d2 = p;
        long long d3 = a * d2 + b * d1;
        long long d4 = a * d3 + b * d2;
        long long d5 = a * d4 + b * d3;
        CHECK(closed_form_d(2, p, a, b) == d2);
        CHECK(closed_form_d(3, p, a, b) == d3);
        CHECK(closed_form_d(4, p, a, b) == d4);
        CHECK(closed_form_d(5, p, a, b) == d5);
      }
    }
  }
}

TEST_CASE("line canonicalization is representation independent") {
  // Same line handed in with different base points and scaled directions.
  AffineSolutionSet a = AffineSolutionSet::line(0, 4, 1, -2);
  AffineSolutionSet b = AffineSolutionSet::line(3, -2, -2, 4);
  AffineSolutionSet c = AffineSolutionSet::line(10, -16, 5, -10);
  CHECK(a == b);
  CHECK(b == c);
  CHECK_THROWS_AS(AffineSolutionSet::line(1, 1, 0, 0), std::invalid_argument);

  // Vertical directions normalize too; the set is the full lattice line,
  // so scaling the handed-in direction changes nothing.
  AffineSolutionSet v1 = AffineSolutionSet::line(3, 7, 0, -4);
  AffineSolutionSet v2 = AffineSolutionSet::line(3, -5, 0, 2);
  CHECK(v1 == v2);
  CHECK(v1.da == 0);
  CHECK(v1.db == 1);
  CHECK(v1.a == 3);
  CHECK(v1.b == 0);
}