#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "toric/error.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

RationalMatrix unit(std::size_t size, std::size_t i, std::size_t j) {
  RationalMatrix m(size, size);
  m(i - 1, j - 1) = 1;
  return m;
}

}  // namespace

TEST(IntersectionNumber, PaperValues) {
  const Fan f = paper_fan();
  EXPECT_EQ(intersection_number(f, 1, 1), q(-1, 4));
  EXPECT_EQ(intersection_number(f, 2, 3), q(1, 5));
  EXPECT_EQ(intersection_number(f, 1, 3), q(0));
  EXPECT_EQ(intersection_number(f, 2, 2), q(-3, 20));
  EXPECT_EQ(intersection_number(f, 3, 3), q(-1, 10));
  EXPECT_EQ(intersection_number(f, 1, 2), q(1, 4));
  // Wrap-around adjacency: rays 5 and 1.
  EXPECT_EQ(intersection_number(f, 5, 1), q(1, 2));
  EXPECT_THROW(intersection_number(f, 0, 1), Error);
  EXPECT_THROW(intersection_number(f, 1, 6), Error);
}

TEST(IntersectionMatrix, Examples) {
  EXPECT_EQ(intersection_matrix(paper_fan()),
            (RationalMatrix{{q(-1, 4), q(1, 4), q(0)},
                            {q(1, 4), q(-3, 20), q(1, 5)},
                            {q(0), q(1, 5), q(-1, 10)}}));
  EXPECT_EQ(intersection_matrix(p1xp1_fan()), (RationalMatrix{{q(0), q(1)}, {q(1), q(0)}}));
  EXPECT_EQ(intersection_matrix(p112_fan()), (RationalMatrix{{q(1, 2)}}));
  EXPECT_EQ(intersection_matrix(p2_fan()), (RationalMatrix{{q(1)}}));
}

TEST(IntersectionTable, AgreesWithLinearRelationOracle) {
  std::mt19937_64 rng(41);
  for (const Fan& f : {paper_fan(), p2_fan(), p1xp1_fan(), p112_fan(), half_twist_fan()}) {
    EXPECT_EQ(intersection_table(f), oracle_intersection_table(f));
  }
  for (int t = 0; t < 300; ++t) {
    const Fan f = oracle_random_fan(rng, 3 + rng() % 18, 50);
    const RationalMatrix table = intersection_table(f);
    EXPECT_EQ(table, oracle_intersection_table(f));
    EXPECT_TRUE(table.is_symmetric());
    EXPECT_EQ(intersection_matrix(f), table.block(f.n(), f.n()));
  }
}

TEST(IntersectionNumber, DiagonalReadsTheSameFromBothSides) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const Fan f = oracle_random_fan(rng, 3 + rng() % 18, 50);
    for (std::size_t i = 1; i <= f.size(); ++i) {
      const long k = static_cast<long>(i);
      const WallRelation w = wall_relation(f, i);
      const Rational from_prev = make_rational(w.c_mid, Integer(w.c_prev * det2(f.ray(k - 1), f.ray(k))));
      const Rational from_next = make_rational(w.c_mid, Integer(w.c_next * det2(f.ray(k), f.ray(k + 1))));
      EXPECT_EQ(from_prev, from_next);
      EXPECT_EQ(intersection_number(f, i, i), from_prev);
    }
  }
}

TEST(SelfIntersection, InvariantUnderRescaledWall) {
  const Fan f = paper_fan();
  for (std::size_t i = 1; i <= f.size(); ++i) {
    const long k = static_cast<long>(i);
    const WallRelation w = wall_relation(f, i);
    const Integer mult_prev = det2(f.ray(k - 1), f.ray(k));
    for (long s : {-7L, -1L, 2L, 13L}) {
      const WallRelation scaled{Integer(s * w.c_prev), Integer(s * w.c_mid), Integer(s * w.c_next)};
      EXPECT_EQ(self_intersection(scaled, mult_prev), intersection_number(f, i, i));
    }
  }
}

TEST(IntersectionNumber, UnimodularInvariance) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 150; ++t) {
    const Fan f = oracle_random_fan(rng, 3 + rng() % 12, 30);
    EXPECT_EQ(intersection_table(transform(f, random_unimodular(rng))), intersection_table(f));
  }
}

TEST(Presentation, Examples) {
  const ChowPresentation p = presentation(paper_fan());
  EXPECT_EQ(p.a_form, (std::vector<Integer>{-2, -2, 1, 1, 0}));
  EXPECT_EQ(p.b_form, (std::vector<Integer>{1, -1, -2, 0, 1}));
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(p.nonadjacent_pairs, (Pairs{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}));

  const ChowPresentation p2 = presentation(p2_fan());
  EXPECT_EQ(p2.a_form, (std::vector<Integer>{-1, 1, 0}));
  EXPECT_EQ(p2.b_form, (std::vector<Integer>{-1, 0, 1}));
  EXPECT_TRUE(p2.nonadjacent_pairs.empty());

  EXPECT_EQ(presentation(p1xp1_fan()).nonadjacent_pairs, (Pairs{{1, 3}, {2, 4}}));
}

TEST(ExpressDroppedDivisors, Examples) {
  auto [x4, x5] = express_dropped_divisors(paper_fan());
  EXPECT_EQ(x4, (LinearForm{q(2), q(2), q(-1), q(0), q(0)}));
  EXPECT_EQ(x5, (LinearForm{q(-1), q(1), q(2), q(0), q(0)}));

  auto [x2, x3] = express_dropped_divisors(p2_fan());
  EXPECT_EQ(x2, (LinearForm{q(1), q(0), q(0)}));
  EXPECT_EQ(x3, (LinearForm{q(1), q(0), q(0)}));

  auto [y3, y4] = express_dropped_divisors(p1xp1_fan());
  EXPECT_EQ(y3, (LinearForm{q(1), q(0), q(0), q(0)}));
  EXPECT_EQ(y4, (LinearForm{q(0), q(1), q(0), q(0)}));

  try {
    express_dropped_divisors(make_fan({{0, -1}, {1, 1}, {-1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
  }
}

TEST(ReduceQuadratic, Examples) {
  const Fan f = paper_fan();
  EXPECT_EQ(reduce_quadratic(f, unit(5, 4, 5)), q(1));
  EXPECT_EQ(reduce_quadratic(f, RationalMatrix(5, 5)), q(0));
  EXPECT_THROW(reduce_quadratic(f, RationalMatrix(3, 3)), Error);
}

// mult(sigma_{i-1}) x_{i-1} x_i - mult(sigma_i) x_i x_{i+1} has degree zero.
TEST(ReduceQuadratic, AllFixedPointClassesCoincide) {
  std::mt19937_64 rng(44);
  std::vector<Fan> fans{paper_fan(), p2_fan(), p1xp1_fan(), p112_fan()};
  for (int t = 0; t < 100; ++t) fans.push_back(oracle_random_fan(rng, 3 + rng() % 18, 50));
  for (const Fan& f : fans) {
    const std::size_t size = f.size();
    for (std::size_t i = 1; i <= size; ++i) {
      const std::size_t prev = (i + size - 2) % size + 1;
      const std::size_t next = i % size + 1;
      RationalMatrix form(size, size);
      form(prev - 1, i - 1) += Rational(multiplicity(f, prev));
      form(i - 1, next - 1) -= Rational(multiplicity(f, i));
      EXPECT_EQ(reduce_quadratic(f, form), 0);
    }
  }
}

TEST(ReduceQuadratic, SubstitutingDroppedDivisorsIsConsistent) {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 100; ++t) {
    const Fan f = normalize(oracle_random_fan(rng, 3 + rng() % 15, 40)).fan;
    const std::size_t size = f.size();
    const auto [x_first, x_last] = express_dropped_divisors(f);
    for (std::size_t j = 1; j <= size; ++j) {
      for (const auto& [dropped, form] : {std::pair{size - 1, x_first}, std::pair{size, x_last}}) {
        RationalMatrix substituted(size, size);
        for (std::size_t k = 0; k < size; ++k) substituted(k, j - 1) = form[k];
        EXPECT_EQ(reduce_quadratic(f, unit(size, dropped, j)), reduce_quadratic(f, substituted));
      }
    }
  }
}
