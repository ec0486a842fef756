#include <doctest.h>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace magic;
using fixture::cover;
using fixture::error_code;

TEST_CASE("coverage") {
  CHECK(coverage_ratio(cover(4, {{0, 1}, {1, 2}})) == 0.75);
  CHECK(coverage_ratio(cover(4, {{0, 1}, {2, 3}})) == 1.0);
  CHECK(error_code([] { coverage_ratio(cover(0, {})); }) == Errc::InvalidArgument);
}

TEST_CASE("f1") {
  auto truth = cover(4, {{0, 1}, {2, 3}});
  CHECK(f1_score(truth, truth) == 1.0);
  CHECK(f1_score(cover(4, {{0, 1}}), cover(4, {{2, 3}})) == 0.0);
  CHECK(f1_score(cover(3, {{0, 1}}), cover(3, {{0, 1, 2}})) == doctest::Approx(0.8));
  std::vector<NodeIndex> a{0, 1}, b{0, 1, 2};
  CHECK(pairwise_f1(a, b) == doctest::Approx(0.8));
  CHECK(error_code([] { f1_score(cover(3, {{}}), cover(3, {{0}})); }) == Errc::EmptyCover);
  // empty communities do not count
  CHECK(f1_score(cover(4, {{0, 1}, {}, {2, 3}}), truth) == 1.0);
}

TEST_CASE("omega") {
  auto truth = cover(4, {{0, 1}, {1, 2, 3}});
  CHECK(omega_index(truth, truth) == 1.0);
  CHECK(omega_index(cover(2, {{0, 1}}), cover(2, {{0}, {1}})) == 0.0);
  CHECK(error_code([] { omega_index(cover(2, {{0}}), cover(3, {{0}})); }) == Errc::InvalidArgument);

  // all six pairs of a four-node universe against the brute-force oracle
  const std::vector<oracle::Mask> a{0b0011, 0b1110}, b{0b0111, 0b1100};
  CHECK(omega_index(oracle::cover_from_masks(a, 4), oracle::cover_from_masks(b, 4)) ==
        doctest::Approx(oracle::brute_omega(a, b, 4)).epsilon(1e-12));
}

TEST_CASE("overlapping modularity") {
  // two disjoint 4-cliques
  std::initializer_list<std::pair<std::string, std::string>> edges = {
      {"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"},
      {"e", "f"}, {"e", "g"}, {"e", "h"}, {"f", "g"}, {"f", "h"}, {"g", "h"}};
  auto g = fixture::net({{"a"}, {"b"}, {"c"}, {"d"}, {"e"}, {"f"}, {"g"}, {"h"}}, edges);
  const double exact = overlapping_modularity(g, cover(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}));
  const double mixed = overlapping_modularity(g, cover(8, {{0, 1, 4, 5}, {2, 3, 6, 7}}));
  CHECK(exact > 0.0);
  CHECK(exact > mixed);
  // a whole clique as one community: out_c = 0 and every pair is an edge
  CHECK(exact == doctest::Approx(1.0));
  CHECK(overlapping_modularity(g, cover(8, {{0}})) == 0.0);
}

TEST_CASE("composite score") {
  CHECK(composite_score({{0.5, 0.2, 0.1, 0.3}}) == std::vector<double>{4.0});
  auto s = composite_score({{1.0, 0.8, 0.4, 0.6}, {0.5, 0.4, 0.2, 0.3}, {0.9, 0.1, 0.0, 0.6}});
  CHECK(s[0] == 4.0);
  CHECK(s[1] < 4.0);
  CHECK(s[2] < 4.0);
  CHECK(s[1] == doctest::Approx(2.0));
  // an all-zero column contributes nothing
  CHECK(composite_score({{1.0, 0.0, 1.0, 1.0}, {0.5, 0.0, 0.5, 0.5}}) == std::vector<double>{3.0, 1.5});
}

TEST_CASE("evaluate bundles all metrics") {
  auto g = fixture::net({{"a"}, {"b"}, {"c"}, {"d"}}, {{"a", "b"}, {"c", "d"}});
  auto truth = cover(4, {{0, 1}, {2, 3}});
  auto report = evaluate(g, truth, truth);
  CHECK(report.coverage == 1.0);
  CHECK(report.f1 == 1.0);
  CHECK(report.omega == 1.0);
  CHECK(report.detected_communities == 2);
  CHECK(report.universe == 4);
}
