#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace magic;
using fixture::error_code;

namespace {

AffiliationMatrix rows(std::initializer_list<std::initializer_list<double>> values) {
  AffiliationMatrix F(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : values) {
    Eigen::Index j = 0;
    for (double v : r) F(i, j++) = v;
    ++i;
  }
  return F;
}

}  // namespace

TEST_CASE("delta and edge probability") {
  CHECK(delta(1, 2, Mode::Net) == 1);
  CHECK(delta(2, 2, Mode::Net) == 0);
  CHECK(delta(2, 1, Mode::All) == 0);
  CHECK(delta(5, 1, Mode::Raw) == 1);

  InteractionMatrix eta(2, 2);
  eta << 0.9, 0.1, 0.1, 0.9;
  Vector fu(2), fv(2);
  fu << 1, 0;
  fv << 0, 1;
  CHECK(edge_probability(fu, eta, fv, 1) == doctest::Approx(0.0951626).epsilon(1e-7));
  CHECK(edge_probability(fu, eta, fv, 0) == 0.0);
  CHECK(edge_probability(Vector::Zero(2), eta, fv, 1) == 0.0);
  CHECK(affinity(fu, eta, fv) == doctest::Approx(0.1));
}

TEST_CASE("mode names round trip") {
  for (Mode m : {Mode::All, Mode::Net, Mode::Raw}) CHECK(parse_mode(to_string(m)) == m);
  CHECK(error_code([] { parse_mode("bogus"); }) == Errc::InvalidArgument);
}

TEST_CASE("epsilon floor keeps the link finite") {
  CHECK(std::isfinite(log_link(0.0, kDefaultEpsilonFloor)));
  CHECK(log_link(0.0, kDefaultEpsilonFloor) == doctest::Approx(std::log(1e-10)).epsilon(1e-6));
  CHECK(log_link(1.0, kDefaultEpsilonFloor) == doctest::Approx(std::log(1.0 - std::exp(-1.0))));
  CHECK(link_weight(1.0, kDefaultEpsilonFloor) == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)));
}

TEST_CASE("log likelihood worked values") {
  auto g = fixture::net({{"a", 1}, {"b", 2}}, {{"a", "b"}});
  InteractionMatrix eta = InteractionMatrix::Ones(1, 1);
  AffiliationMatrix F = rows({{1.0}, {1.0}});
  CHECK(log_likelihood(g, F, eta, Mode::Net) == doctest::Approx(-0.4586751).epsilon(1e-7));

  // c ties with a (no pair), so c -> b is the only allowed non-edge, with x = 0.5.
  auto h = fixture::net({{"a", 1}, {"b", 2}, {"c", 1}}, {{"a", "b"}});
  AffiliationMatrix G = rows({{1.0}, {1.0}, {0.5}});
  CHECK(log_likelihood(h, G, eta, Mode::Net) == doctest::Approx(-0.9586751).epsilon(1e-7));
}

TEST_CASE("model graph drops or rejects backward edges") {
  auto g = fixture::net({{"a", 3}, {"b", 2}, {"c", 5}}, {{"a", "b"}, {"b", "c"}});
  ModelGraph lenient(g, Mode::Net);
  CHECK(lenient.num_edges() == 1);
  CHECK(lenient.dropped_edges() == 1);
  CHECK(error_code([&] { ModelGraph(g, Mode::Net, true); }) == Errc::NotNatural);

  auto u = fixture::net({{"a"}, {"b"}}, {{"a", "b"}}, Directedness::Undirected);
  CHECK(error_code([&] { ModelGraph(u, Mode::Net); }) == Errc::UndirectedNetwork);
  ModelGraph raw(u, Mode::Raw);
  CHECK(raw.num_edges() == 1);
  CHECK(raw.num_allowed_pairs() == 1.0);
}

TEST_CASE("shape and cache errors") {
  auto g = fixture::net({{"a", 1}, {"b", 2}, {"c", 3}}, {{"a", "b"}, {"b", "c"}});
  ModelGraph graph(g, Mode::Net);
  AffiliationMatrix F = AffiliationMatrix::Constant(3, 2, 0.5);
  InteractionMatrix eta = init_interactions(2);
  CHECK(error_code([&] { log_likelihood(graph, AffiliationMatrix::Ones(2, 2), eta); }) == Errc::ShapeMismatch);
  CHECK(error_code([&] { log_likelihood(graph, F, InteractionMatrix::Ones(3, 3)); }) == Errc::ShapeMismatch);

  PrefixCache cache(graph, F);
  CHECK_NOTHROW(gradient_F_u(graph, F, eta, 1, cache));
  F(0, 0) = 2.0;  // a is b's in-neighbour
  CHECK(error_code([&] { gradient_F_u(graph, F, eta, 1, cache); }) == Errc::StaleCache);
  cache.update_row(0, F.row(0).transpose());
  CHECK_NOTHROW(gradient_F_u(graph, F, eta, 1, cache));
}

TEST_CASE("isolated node without allowed partners has zero gradient") {
  // every node shares one timestamp, so no pair is allowed
  auto g = fixture::net({{"a", 4}, {"b", 4}, {"c", 4}}, {});
  ModelGraph graph(g, Mode::Net);
  AffiliationMatrix F = AffiliationMatrix::Constant(3, 2, 0.7);
  InteractionMatrix eta = init_interactions(2);
  PrefixCache cache(graph, F);
  CHECK(gradient_F_u(graph, F, eta, 0, cache).norm() == 0.0);
}

TEST_CASE("cached gradients match naive sums on a chain") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  auto g = fixture::net({{"a", 1}, {"b", 2}, {"c", 3}}, {{"a", "b"}, {"b", "c"}});
  AffiliationMatrix F(3, 3);
  for (Eigen::Index i = 0; i < F.size(); ++i) F.data()[i] = unit(rng);
  InteractionMatrix eta(3, 3);
  for (Eigen::Index i = 0; i < eta.size(); ++i) eta.data()[i] = unit(rng);
  ModelGraph graph(g, Mode::Net);
  PrefixCache cache(graph, F);
  for (NodeIndex u = 0; u < 3; ++u) {
    const Vector expected = oracle::naive_gradient_F_u(g, F, eta, u, Mode::Net);
    CHECK(oracle::relative_error(gradient_F_u(graph, F, eta, u, cache), expected) < 1e-12);
  }
  CHECK(oracle::relative_error(gradient_eta(graph, F, eta), oracle::naive_gradient_eta(g, F, eta, Mode::Net)) <
        1e-12);
  CHECK(log_likelihood(graph, F, eta) ==
        doctest::Approx(oracle::naive_log_likelihood(g, F, eta, Mode::Net)).epsilon(1e-12));
}

TEST_CASE("node objective agrees with the full likelihood") {
  std::mt19937_64 rng(5);
  for (Mode mode : {Mode::Net, Mode::Raw}) {
    auto inst = oracle::random_instance(rng, 15, 3, mode, 0.3, 4);
    ModelGraph graph(inst.net, mode);
    PrefixCache cache(graph, inst.F);
    for (NodeIndex u = 0; u < 15; u += 4) {
      NodeObjective obj(graph, inst.F, inst.eta, u, cache);
      Vector row = inst.F.row(static_cast<Eigen::Index>(u)).transpose();
      const double base = obj.value(row);
      const double full = log_likelihood(graph, inst.F, inst.eta);
      Vector moved = row;
      moved[0] += 0.3;
      AffiliationMatrix G = inst.F;
      G.row(static_cast<Eigen::Index>(u)) = moved.transpose();
      // the node objective differs from the likelihood by a constant in F_u
      CHECK(obj.value(moved) - base == doctest::Approx(log_likelihood(graph, G, inst.eta) - full).epsilon(1e-9));
      CHECK(oracle::relative_error(obj.gradient(row), gradient_F_u(graph, inst.F, inst.eta, u, cache)) < 1e-12);
    }
  }
}

TEST_CASE("raw mode matches the naive oracle") {
  std::mt19937_64 rng(21);
  auto inst = oracle::random_instance(rng, 12, 2, Mode::Raw, 0.3);
  ModelGraph graph(inst.net, Mode::Raw);
  PrefixCache cache(graph, inst.F);
  CHECK(log_likelihood(graph, inst.F, inst.eta) ==
        doctest::Approx(oracle::naive_log_likelihood(inst.net, inst.F, inst.eta, Mode::Raw)).epsilon(1e-12));
  for (NodeIndex u = 0; u < 12; ++u)
    CHECK(oracle::relative_error(gradient_F_u(graph, inst.F, inst.eta, u, cache),
                                 oracle::naive_gradient_F_u(inst.net, inst.F, inst.eta, u, Mode::Raw)) < 1e-12);
}
