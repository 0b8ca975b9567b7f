#include <catch_amalgamated.hpp>

#include <random>

#include "raagbns/homology.hpp"
#include "raagbns/io.hpp"

using namespace raagbns;

namespace {

std::vector<Rational> vec(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

Arrangement example31() { return load_arrangement(RAAGBNS_DATA_DIR "/arrangements/example31.json"); }
Arrangement example32() { return load_arrangement(RAAGBNS_DATA_DIR "/arrangements/example32.json"); }

// Betti numbers recomputed with dense ranks, independent of the sparse path.
std::vector<std::size_t> dense_betti(const ChainComplexData& c) {
  std::vector<std::size_t> ranks(c.dims.size() + 1, 0);
  for (std::size_t k = 1; k < c.dims.size(); ++k) ranks[k] = rank(c.boundaries[k].to_dense());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < c.dims.size(); ++k) out.push_back(c.dims[k] - ranks[k] - ranks[k + 1]);
  return out;
}

Subspace random_subspace(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> rows(1, n);
  std::uniform_int_distribution<int> entry(-2, 2);
  QMatrix m(rows(rng), n);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  return Subspace::span(n, m);
}

}  // namespace

TEST_CASE("chain complex dimensions of the worked examples") {
  const auto c1 = build_chain_complex(example31());
  CHECK(c1.dims == std::vector<std::size_t>{2, 3});
  const auto c2 = build_chain_complex(example32());
  CHECK(c2.dims == std::vector<std::size_t>{3, 8, 6});
  CHECK(c2.index_sets[2].size() == 6);

  const auto full = build_chain_complex(Arrangement{3, {Subspace::full(3)}});
  CHECK(full.dims == std::vector<std::size_t>{3, 3});
  CHECK(full.boundaries[1].to_dense() == QMatrix::identity(3));
}

TEST_CASE("Betti profiles of the worked examples") {
  const auto b1 = betti_profile(example31());
  CHECK(b1.betti == std::vector<std::size_t>{0, 1});
  CHECK(b1.euler == -1);
  const auto b2 = betti_profile(example32());
  CHECK(b2.betti == std::vector<std::size_t>{0, 0, 1});
  CHECK(b2.euler == 1);

  auto with_ambient = example32();
  with_ambient.subspaces.push_back(Subspace::full(3));
  const auto b3 = betti_profile(with_ambient);
  for (std::size_t b : b3.betti) CHECK(b == 0);
}

TEST_CASE("zeroth homology as a quotient") {
  CHECK(h0_dim(example31()) == 0);
  CHECK(h0_dim(Arrangement{3, {}}) == 3);
  CHECK(h0_dim(Arrangement{2, {Subspace::span(2, {vec({1, 0})})}}) == 1);
  CHECK(betti_profile(Arrangement{3, {}}).betti == std::vector<std::size_t>{3});
}

TEST_CASE("maximal filtering") {
  const auto x = Subspace::span(2, {vec({1, 0})});
  const auto f = maximal_filter(Arrangement{2, {x, Subspace::full(2)}});
  REQUIRE(f.subspaces.size() == 1);
  CHECK(f.subspaces[0] == Subspace::full(2));
  CHECK(maximal_filter(Arrangement{2, {x, x, x}}).subspaces.size() == 1);
  const auto e = example32();
  CHECK(maximal_filter(e).subspaces == e.subspaces);
}

TEST_CASE("complex verification") {
  const auto c = build_chain_complex(example32());
  CHECK(verify_complex(c));
  CHECK(verify_complex(build_chain_complex(Arrangement{4, {}})));

  auto broken = c;
  QMatrix d2 = broken.boundaries[2].to_dense();
  bool flipped = false;
  for (std::size_t r = 0; r < d2.rows() && !flipped; ++r)
    for (std::size_t col = 0; col < d2.cols() && !flipped; ++col)
      if (sgn(d2(r, col)) != 0) {
        d2(r, col) = -d2(r, col);
        flipped = true;
      }
  REQUIRE(flipped);
  broken.boundaries[2] = SparseMatrix::from_dense(d2);
  CHECK(!verify_complex(broken));
  CHECK_THROWS_AS(betti_numbers(broken), InvariantViolation);
}

TEST_CASE("summand cap") {
  CHECK_THROWS_AS(build_chain_complex(example32(), 5), CapExceeded);
  CHECK_NOTHROW(build_chain_complex(example32(), 14));
}

TEST_CASE("mismatched ambient dimensions are rejected") {
  Arrangement a{3, {Subspace::full(2)}};
  CHECK_THROWS_AS(build_chain_complex(a), InputError);
}

TEST_CASE("random arrangements: complex, Euler characteristic and H_0") {
  std::mt19937_64 rng(0x5eed21);
  std::uniform_int_distribution<std::size_t> n_dist(1, 4), m_dist(0, 5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = n_dist(rng);
    Arrangement a{n, {}};
    const std::size_t m = m_dist(rng);
    for (std::size_t i = 0; i < m; ++i) a.subspaces.push_back(random_subspace(n, rng));
    const auto c = build_chain_complex(a);
    REQUIRE(verify_complex(c));
    const auto b = betti_numbers(c);
    REQUIRE(b.betti == dense_betti(c));
    REQUIRE(b.euler == chain_euler(c));
    REQUIRE(b[0] == h0_dim(a));
    // Reordering the subspaces does not change the homology.
    auto shuffled = a;
    std::shuffle(shuffled.subspaces.begin(), shuffled.subspaces.end(), rng);
    REQUIRE(betti_profile(shuffled) == b);
  }
}
