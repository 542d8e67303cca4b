#include <doctest.h>

#include <random>

#include "lienil/algebra.hpp"
#include "lienil/echelon.hpp"
#include "support.hpp"

using namespace lienil;
using testing::throws_code;

namespace {

AlgebraElement random_element(const AlgebraContext &ctx, std::mt19937 &rng) {
  std::uniform_int_distribution<unsigned> coef(0, ctx.p() - 1);
  auto u = ctx.zero();
  for (auto &c : u.coords)
    c = Coeff(coef(rng));
  return u;
}

} // namespace

TEST_CASE("ga_mul examples") {
  const auto ctx = testing::algebra("D4", 2);
  const Elem g = ctx.group().generators()[0], h = ctx.group().generators()[1];
  CHECK(ga_mul(ctx, ctx.basis(g), ctx.basis(h)) == ctx.basis(ctx.group().mul(g, h)));
  const auto one_g = ctx.add(ctx.one(), ctx.basis(g));
  CHECK(ga_mul(ctx, one_g, one_g) == ctx.add(ctx.one(), ctx.basis(ctx.group().mul(g, g))));
  CHECK(ga_mul(ctx, one_g, ctx.one()) == one_g);
}

TEST_CASE("lie_bracket examples") {
  const auto ctx = testing::algebra("D4", 3);
  const Group &G = ctx.group();
  const Elem g = G.generators()[0], h = G.generators()[1];
  const Elem g2 = G.mul(g, g);
  CHECK(lie_bracket(ctx, ctx.basis(g), ctx.basis(g2)).is_zero());
  CHECK(lie_bracket(ctx, ctx.basis(g), ctx.basis(h)) ==
        ctx.sub(ctx.basis(G.mul(g, h)), ctx.basis(G.mul(h, g))));
  std::mt19937 rng(3);
  const auto u = random_element(ctx, rng);
  CHECK(lie_bracket(ctx, u, u).is_zero());
}

TEST_CASE("bracket with a group element agrees with the convolution bracket") {
  std::mt19937 rng(5);
  for (const char *name : {"D4", "Heis27", "C2wrC4"}) {
    const unsigned p = std::string(name) == "Heis27" ? 3 : 2;
    const auto ctx = testing::algebra(name, p);
    for (int i = 0; i < 20; ++i) {
      const auto u = random_element(ctx, rng);
      const Elem g = Elem(rng() % ctx.dim());
      CHECK(lie_bracket(ctx, u, g) == lie_bracket(ctx, u, ctx.basis(g)));
    }
  }
}

TEST_CASE("left_normed") {
  const auto ctx = testing::algebra("D4", 2);
  const Elem g = ctx.group().generators()[0], h = ctx.group().generators()[1];
  const auto u = ctx.basis(g), v = ctx.add(ctx.one(), ctx.basis(h));
  CHECK(left_normed(ctx, std::vector<AlgebraElement>{u}) == u);
  CHECK(left_normed(ctx, std::vector<AlgebraElement>{u, v}) == lie_bracket(ctx, u, v));
  CHECK(throws_code([&] { left_normed(ctx, std::vector<AlgebraElement>{}); }, Errc::EmptyArguments));

  // [g, h, h] two ways: iterated brackets and the expanded four-term sum.
  const Group &G = ctx.group();
  const auto direct = left_normed(ctx, std::vector<Elem>{g, h, h});
  const auto expanded = ctx.combination({{1, G.product({g, h, h})},
                                         {-1, G.product({h, g, h})},
                                         {-1, G.product({h, g, h})},
                                         {1, G.product({h, h, g})}});
  CHECK(direct == expanded);
  CHECK(direct == left_normed(ctx, std::vector<AlgebraElement>{ctx.basis(g), ctx.basis(h), ctx.basis(h)}));
}

TEST_CASE("hat and augmentation") {
  const auto ctx = testing::algebra("C4", 2);
  const Elem g = ctx.group().generators()[0];
  CHECK(hat(ctx, Group::identity) == ctx.one());
  const auto d = testing::algebra("D4", 2);
  const Elem s = d.group().generators()[1];
  CHECK(hat(d, s) == d.add(d.one(), d.basis(s)));
  CHECK(ga_mul(ctx, ctx.add(ctx.one(), ctx.basis(g)), hat(ctx, g)).is_zero());

  CHECK(augmentation(ctx, ctx.basis(g)) == 1);
  CHECK(augmentation(ctx, ctx.zero()) == 0);
  CHECK(augmentation(ctx, ctx.add(ctx.one(), ctx.basis(g))) == 0);
}

TEST_CASE("ga_mul is associative and distributive") {
  std::mt19937 rng(17);
  for (const auto &[name, p] : std::vector<std::pair<const char *, unsigned>>{
           {"D4", 2}, {"Q8", 2}, {"S3", 3}, {"Heis27", 3}, {"C5", 5}}) {
    CAPTURE(name);
    const auto ctx = testing::algebra(name, p);
    for (int i = 0; i < 25; ++i) {
      const auto x = random_element(ctx, rng), y = random_element(ctx, rng),
                 z = random_element(ctx, rng);
      REQUIRE(ga_mul(ctx, ga_mul(ctx, x, y), z) == ga_mul(ctx, x, ga_mul(ctx, y, z)));
      REQUIRE(ga_mul(ctx, x, ctx.add(y, z)) == ctx.add(ga_mul(ctx, x, y), ga_mul(ctx, x, z)));
      REQUIRE(ga_mul(ctx, ctx.add(x, y), z) == ctx.add(ga_mul(ctx, x, z), ga_mul(ctx, y, z)));
    }
  }
}

TEST_CASE("lie_bracket is antisymmetric and satisfies Jacobi") {
  std::mt19937 rng(19);
  for (const auto &[name, p] : std::vector<std::pair<const char *, unsigned>>{
           {"D4", 2}, {"S3", 3}, {"Heis27", 3}, {"Q8", 5}}) {
    CAPTURE(name);
    const auto ctx = testing::algebra(name, p);
    for (int i = 0; i < 25; ++i) {
      const auto x = random_element(ctx, rng), y = random_element(ctx, rng),
                 z = random_element(ctx, rng);
      const auto minus = ctx.field().neg(1);
      REQUIRE(lie_bracket(ctx, x, y) == ctx.scale(minus, lie_bracket(ctx, y, x)));
      const auto j = ctx.add(ctx.add(lie_bracket(ctx, lie_bracket(ctx, x, y), z),
                                     lie_bracket(ctx, lie_bracket(ctx, y, z), x)),
                             lie_bracket(ctx, lie_bracket(ctx, z, x), y));
      REQUIRE(j.is_zero());
    }
  }
}

TEST_CASE("hat(g) commutes with the centralizer of g, and is central when <g> is normal") {
  for (const auto &spec : testing::catalog()) {
    const auto G = std::make_shared<const Group>(build_group(spec.generators));
    if (G->order() > 64)
      continue;
    CAPTURE(spec.name);
    const AlgebraContext ctx(G, spec.primes.front());
    for (Elem g = 0; g < G->order(); ++g) {
      const auto gh = hat(ctx, g);
      const auto cyclic = subgroup_generated(*G, std::vector<Elem>{g});
      bool normal = true;
      for (Elem x = 0; x < G->order() && normal; ++x)
        normal = cyclic.contains(G->product({G->inv(x), g, x}));
      for (Elem x = 0; x < G->order(); ++x) {
        const bool centralizes = G->mul(g, x) == G->mul(x, g);
        if (centralizes || normal)
          REQUIRE(lie_bracket(ctx, gh, x).is_zero());
      }
    }
  }
}

TEST_CASE("basis_insert examples") {
  const auto ctx = testing::algebra("D4", 3);
  EchelonBasis B(ctx);
  CHECK_FALSE(B.insert(ctx.zero()));
  CHECK(B.dim() == 0);
  CHECK(B.insert(ctx.basis(3)));
  CHECK(B.dim() == 1);
  const auto u = ctx.combination({{1, 1}, {2, 5}, {1, 7}});
  CHECK(B.insert(u));
  CHECK_FALSE(B.insert(u));
  CHECK_FALSE(B.insert(ctx.scale(2, u)));
  CHECK(B.dim() == 2);
  CHECK(B.contains(ctx.add(u, ctx.basis(3))));
  CHECK_FALSE(B.contains(ctx.basis(1)));
}

TEST_CASE("echelon form stays fully reduced") {
  std::mt19937 rng(23);
  for (unsigned p : {2u, 3u, 5u}) {
    CAPTURE(p);
    const auto ctx = testing::algebra("Q8", p);
    EchelonBasis B(ctx);
    std::vector<AlgebraElement> inserted;
    for (int i = 0; i < 12; ++i) {
      // Odd steps insert a dependent vector.
      const bool dependent = i % 2 == 1;
      const auto u = dependent ? ctx.add(inserted.back(), ctx.scale(2 % p, inserted.front()))
                               : random_element(ctx, rng);
      const std::size_t before = B.dim();
      B.insert(u);
      if (dependent)
        REQUIRE(B.dim() == before);
      inserted.push_back(u);
      REQUIRE(B.dim() <= ctx.dim());
      const auto &piv = B.pivots();
      for (std::size_t r = 0; r < B.dim(); ++r) {
        REQUIRE(B.rows()[r].coords[piv[r]] == 1);
        if (r)
          REQUIRE(piv[r - 1] < piv[r]);
        for (std::size_t s = 0; s < B.dim(); ++s)
          if (s != r)
            REQUIRE(B.rows()[s].coords[piv[r]] == 0);
      }
      for (const auto &v : inserted)
        REQUIRE(B.contains(v));
    }
  }
}

TEST_CASE("echelon basis is canonical") {
  std::mt19937 rng(29);
  const auto ctx = testing::algebra("D4", 3);
  std::vector<AlgebraElement> vs;
  for (int i = 0; i < 5; ++i)
    vs.push_back(random_element(ctx, rng));
  EchelonBasis a(ctx), b(ctx);
  for (const auto &v : vs)
    a.insert(v);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it)
    b.insert(ctx.scale(2, *it));
  CHECK(a == b);
}

TEST_CASE("PrimeField") {
  CHECK(throws_code([] { PrimeField f(4); }, Errc::InvalidPrime));
  const PrimeField f(7);
  for (Coeff x = 1; x < 7; ++x)
    CHECK(f.mul(x, f.inv(x)) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.neg(0) == 0);
}
