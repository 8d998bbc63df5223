#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gstark/meyer.hpp"

using namespace gstark;

TEST_CASE("pell4 small cases and minimality") {
  auto [t8, u8] = pell4(8);
  CHECK(t8 == 6);
  CHECK(u8 == 2);
  auto [t12, u12] = pell4(12);
  CHECK(t12 == 4);
  CHECK(u12 == 1);
  for (long D : {8L, 12L, 13L, 21L, 44L, 60L, 221L}) {
    auto [t, u] = pell4(D);
    CHECK(t * t - D * u * u == 4);
    // exhaustive minimality check below the returned u
    for (Int v = 1; v < u; ++v) {
      Int tt = 4 + D * v * v;
      CHECK_FALSE(is_square(tt));
    }
  }
}

TEST_CASE("negative norm unit detection") {
  CHECK(has_negative_norm_unit(5));
  CHECK(has_negative_norm_unit(13));
  CHECK_FALSE(has_negative_norm_unit(12));
  CHECK_FALSE(has_negative_norm_unit(44));
  CHECK_FALSE(has_negative_norm_unit(2077));
}

TEST_CASE("automorph fixes its form with determinant 1") {
  for (long D : {12L, 44L, 221L}) {
    NarrowClassGroup G(D);
    for (size_t i = 0; i < G.size(); ++i) {
      auto A = automorph(G.cls(i).rep());
      CHECK(A.gamma[0] * A.gamma[3] - A.gamma[1] * A.gamma[2] == 1);
      CHECK(A.gamma[0] + A.gamma[3] == A.t);
    }
  }
}

TEST_CASE("dedekind sums: known values and oracle agreement") {
  CHECK(dedekind_sum(1, 2) == Rat(0));
  CHECK(dedekind_sum(1, 3) == Rat(1, 18));
  for (long c = 2; c <= 50; ++c)
    for (long a = 1; a < c; ++a) {
      if (std::gcd(a, c) != 1) continue;
      CHECK(dedekind_sum(a, c) == dedekind_sum_slow(a, c));
    }
}

TEST_CASE("dedekind reciprocity on random coprime pairs") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    long c = 2 + static_cast<long>(rng() % 1000000);
    long a = 1 + static_cast<long>(rng() % (c - 1));
    if (std::gcd(a, c) != 1) continue;
    Rat lhs = dedekind_sum(a, c) + dedekind_sum(c, a);
    Rat rhs = Rat(-1, 4) +
              (Rat(a, c) + Rat(c, a) + Rat(1, Int(a) * c)) / 12;
    rhs.canonicalize();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("dedekind symbol and rademacher on simple matrices") {
  IMat2 id{1, 0, 0, 1};
  CHECK(dedekind_symbol(id) == Rat(0));
  CHECK(rademacher(id) == Rat(0));
  IMat2 t{1, 1, 0, 1};
  CHECK(dedekind_symbol(t) == Rat(1));
  CHECK(rademacher(t) == Rat(1));
}

TEST_CASE("rademacher is conjugation invariant") {
  std::mt19937_64 rng(23);
  auto random_sl2 = [&]() {
    // random product of the standard generators
    IMat2 m{1, 0, 0, 1};
    for (int i = 0; i < 12; ++i) {
      long k = static_cast<long>(rng() % 5) - 2;
      IMat2 g = (rng() & 1) ? IMat2{1, k, 0, 1} : IMat2{1, 0, k, 1};
      IMat2 r{m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3],
              m[2] * g[0] + m[3] * g[2], m[2] * g[1] + m[3] * g[3]};
      m = r;
    }
    return m;
  };
  for (long D : {12L, 44L, 221L}) {
    NarrowClassGroup G(D);
    for (size_t i = 0; i < G.size(); ++i) {
      IMat2 g = automorph(G.cls(i).rep()).gamma;
      Rat base = rademacher(g);
      for (int k = 0; k < 100; ++k) {
        IMat2 s = random_sl2();
        IMat2 sinv{s[3], -s[1], -s[2], s[0]};
        IMat2 sg{s[0] * g[0] + s[1] * g[2], s[0] * g[1] + s[1] * g[3],
                 s[2] * g[0] + s[3] * g[2], s[2] * g[1] + s[3] * g[3]};
        IMat2 conj{sg[0] * sinv[0] + sg[1] * sinv[2],
                   sg[0] * sinv[1] + sg[1] * sinv[3],
                   sg[2] * sinv[0] + sg[3] * sinv[2],
                   sg[2] * sinv[1] + sg[3] * sinv[3]};
        CHECK(rademacher(conj) == base);
      }
    }
  }
}

TEST_CASE("zeta values pair to zero across the involution") {
  for (long D : {12L, 44L, 140L}) {
    NarrowClassGroup G(D);
    Rat total(0);
    for (size_t i = 0; i < G.size(); ++i) {
      Rat z = zeta_minus_zero(G.cls(i).rep());
      Rat zi = zeta_minus_zero(G.cls(G.involution(i)).rep());
      CHECK(z == -zi);
      total += z;
    }
    CHECK(total == Rat(0));
  }
  CHECK_THROWS_AS(zeta_minus_zero(QuadForm{1, 1, -1}), domain_error);  // D=5
}

TEST_CASE("root of unity counts") {
  CHECK(mu_count(21) == 6);
  CHECK(mu_count(44) == 4);
  CHECK(mu_count(2077) == 2);
  CHECK(mu_count(12) == 12);  // 12 = 4*3, both conditions
}

TEST_CASE("unit valuations: D=44 p-side vector and involution") {
  NarrowClassGroup G(44);
  auto V = unit_valuations(G);
  CHECK(V.e == 4);
  REQUIRE(V.ord.size() == 2);
  CHECK(V.ord[0] + V.ord[1] == 0);
  CHECK(std::abs(V.ord[0]) == 1);
  REQUIRE(V.positive_sorted.size() == 1);
  CHECK(V.positive_sorted[0] == 1);
}

TEST_CASE("unit valuations: D=2077 leading coefficient 2^3") {
  NarrowClassGroup G(2077);
  auto V = unit_valuations(G);
  CHECK(V.e == 2);
  long sum = 0;
  for (long v : V.positive_sorted) sum += v;
  CHECK(sum == 3);
}
