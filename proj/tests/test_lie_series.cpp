#include <doctest.h>

#include "lienil/classify.hpp"
#include "lienil/lie_series.hpp"
#include "support.hpp"

using namespace lienil;
using testing::throws_code;

namespace {

std::vector<std::pair<std::string, unsigned>> lie_nilpotent_pairs(std::size_t max_order) {
  std::vector<std::pair<std::string, unsigned>> out;
  for (const auto &spec : testing::catalog()) {
    const Group G = build_group(spec.generators);
    if (G.order() > max_order)
      continue;
    for (unsigned p : spec.primes)
      if (lie_nilpotency_status(G, p).lie_nilpotent)
        out.emplace_back(spec.name, p);
  }
  return out;
}

} // namespace

TEST_CASE("abelian groups have index 2") {
  for (const auto &[name, p] : std::vector<std::pair<const char *, unsigned>>{
           {"C2", 2}, {"C3", 5}, {"C2xC2xC2", 2}, {"C3xC3", 3}}) {
    const auto ctx = testing::algebra(name, p);
    const auto l = lower_chain(ctx);
    CHECK(l.dims == std::vector<std::size_t>{ctx.dim(), 0});
    CHECK(l.index == 2);
    CHECK(upper_chain(ctx).index == 2);
  }
}

TEST_CASE("lower_chain examples") {
  CHECK(lower_chain(testing::algebra("D4", 2)).index == 3);
  CHECK(lower_chain(testing::algebra("C2wrC4", 2)).index == 8);
}

TEST_CASE("upper_chain examples") {
  CHECK(upper_chain(testing::algebra("Q8", 2)).index == 3);
  CHECK(upper_chain(testing::algebra("C3wrC3", 3)).index == 8);
}

TEST_CASE("chains fail fast when KG is not Lie nilpotent") {
  const auto ctx = testing::algebra("S3", 2);
  CHECK(throws_code([&] { lower_chain(ctx); }, Errc::BoundExceeded));
  CHECK(throws_code([&] { upper_chain(ctx); }, Errc::BoundExceeded));
  CHECK(throws_code([&] { lower_chain(testing::algebra("D4", 2), 2); }, Errc::BoundExceeded));
  CHECK(lower_chain(testing::algebra("D4", 2), 3).index == 3);
}

TEST_CASE("ideal_closure examples") {
  const auto ctx = testing::algebra("D4", 2);
  CHECK(ideal_closure(ctx, EchelonBasis(ctx)).dim() == 0);
  EchelonBasis one(ctx);
  one.insert(ctx.one());
  CHECK(ideal_closure(ctx, one).full());

  const Group &G = ctx.group();
  const Elem r = G.generators()[0];
  const Elem z = G.mul(r, r);
  EchelonBasis seed(ctx);
  seed.insert(hat(ctx, z));
  const auto I = ideal_closure(ctx, seed);
  CHECK(I.dim() == 4);
  for (Elem h = 0; h < G.order(); ++h)
    CHECK(I.contains(ctx.add(ctx.basis(h), ctx.basis(G.mul(h, z)))));
}

TEST_CASE("brute-force oracle examples") {
  CHECK(brute_force_t_lower(testing::algebra("C2xC2", 2), 10) == 2);
  CHECK(brute_force_t_lower(testing::algebra("D4", 2), 10) == 3);
  CHECK(brute_force_t_lower(testing::algebra("Q8", 2), 10) == 3);
  CHECK(brute_force_t_lower(testing::algebra("D8", 2), 3) == std::nullopt);
  CHECK(throws_code([] { brute_force_t_lower(testing::algebra("Heis27", 3), 10); },
                    Errc::ScaleExceeded));
}

TEST_CASE("brute-force oracle agrees with lower_chain up to order 16") {
  for (const auto &[name, p] : lie_nilpotent_pairs(oracle_max_order)) {
    CAPTURE(name);
    CAPTURE(p);
    const auto ctx = testing::algebra(name, p);
    CHECK(brute_force_t_lower(ctx, 20) == lower_chain(ctx).index);
  }
}

TEST_CASE("chain invariants over the catalog") {
  for (const auto &[name, p] : lie_nilpotent_pairs(81)) {
    CAPTURE(name);
    CAPTURE(p);
    const auto ctx = testing::algebra(name, p);
    const auto lower = lower_chain_terms(ctx);
    const auto upper = upper_chain_terms(ctx);
    const std::size_t derived = lower_central_series(ctx.group())[1].order();

    REQUIRE(lower.back().empty());
    REQUIRE(upper.back().empty());
    CHECK(lower.size() <= upper.size());
    CHECK(upper.size() <= derived + 1);
    if (p > 3)
      CHECK(lower.size() == upper.size());

    for (std::size_t n = 1; n < upper.size(); ++n)
      CHECK(upper[n].dim() < upper[n - 1].dim());

    for (std::size_t n = 0; n < lower.size(); ++n) {
      // L_n lies in R^(n); L_{n+1} lies in the ideal generated by L_n.
      for (const auto &row : lower[n].rows())
        REQUIRE(upper[n].contains(row));
      if (n + 1 < lower.size()) {
        const auto ideal = ideal_closure(ctx, lower[n]);
        for (const auto &row : lower[n + 1].rows())
          REQUIRE(ideal.contains(row));
      }
    }
  }
}

TEST_CASE("compute_series packages both chains") {
  const auto s = compute_series(testing::algebra("D8", 2), "D8");
  CHECK(s.group_name == "D8");
  CHECK(s.p == 2);
  CHECK(s.t_lower == 5);
  CHECK(s.t_upper == 5);
  CHECK(s.lower_dims.front() == 16);
  CHECK(s.lower_dims.back() == 0);
  CHECK(int(s.lower_dims.size()) == s.t_lower);
  CHECK(int(s.upper_dims.size()) == s.t_upper);
}

TEST_CASE("default bound is |G'| + 2") {
  CHECK(default_chain_bound(*testing::group("C2wrC4")) == 10);
  CHECK(default_chain_bound(*testing::group("C3")) == 3);
}
