#include "pellgf/sequences.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

namespace {

using pellgf::Integer;
using pellgf::PellContext;
using pellgf::SeqKind;

std::vector<Integer> ints(std::initializer_list<std::int64_t> xs) {
  return {xs.begin(), xs.end()};
}

TEST(PellContextTest, ValidatesInputs) {
  EXPECT_THROW(PellContext::from_m(4), std::invalid_argument);
  EXPECT_THROW(PellContext::from_m(1), std::invalid_argument);
  EXPECT_THROW(PellContext({Integer(3), Integer(2), Integer(1), -1}), std::invalid_argument);
  EXPECT_THROW(PellContext({Integer(3), Integer(2), Integer(1), 2}), std::invalid_argument);

  const PellContext ctx = PellContext::from_m(3);
  EXPECT_EQ(ctx.coef(), 4);
  EXPECT_EQ(ctx.epsilon(), 1);
}

TEST(Terms, InitialSegments) {
  const PellContext m3 = PellContext::from_m(3);
  EXPECT_EQ(pellgf::terms_upto(m3, SeqKind::L, 3), ints({1, 2, 7, 26}));
  EXPECT_EQ(pellgf::terms_upto(m3, SeqKind::F, 3), ints({0, 1, 4, 15}));

  const PellContext m2 = PellContext::from_m(2);
  EXPECT_EQ(pellgf::terms_upto(m2, SeqKind::L, 5), ints({1, 1, 3, 7, 17, 41}));
  EXPECT_EQ(pellgf::terms_upto(m2, SeqKind::F, 5), ints({0, 1, 2, 5, 12, 29}));

  EXPECT_EQ(pellgf::terms_upto(m3, SeqKind::F, 2), ints({0, 1, 4}));
  EXPECT_EQ(pellgf::terms_upto(m2, SeqKind::L, 1), ints({1, 1}));
  EXPECT_EQ(pellgf::terms_upto(m3, SeqKind::F, 0), ints({0}));

  // b > 1: every F term is a multiple of b = 2.
  const PellContext m6 = PellContext::from_m(6);
  EXPECT_EQ(pellgf::terms_upto(m6, SeqKind::F, 4), ints({0, 2, 20, 198, 1960}));
}

TEST(Terms, RejectsNegativeIndex) {
  const PellContext ctx = PellContext::from_m(2);
  EXPECT_THROW(pellgf::term(ctx, SeqKind::F, -1), std::invalid_argument);
  EXPECT_THROW(pellgf::terms_upto(ctx, SeqKind::F, -1), std::invalid_argument);
}

// Independent route: binary-exponentiated powers of (a + b sqrt(m)) in
// Z[sqrt(m)] must reproduce the recurrence terms exactly.
TEST(Terms, ClosedFormAgreesWithRecurrence) {
  for (std::int64_t m : {2, 3, 6, 13, 29}) {
    const PellContext ctx = PellContext::from_m(m);
    for (std::int64_t n = 0; n <= 60; ++n) {
      EXPECT_EQ(pellgf::term(ctx, SeqKind::L, n), pellgf::closed_form_term(ctx, SeqKind::L, n))
          << "m=" << m << " n=" << n;
      EXPECT_EQ(pellgf::term(ctx, SeqKind::F, n), pellgf::closed_form_term(ctx, SeqKind::F, n))
          << "m=" << m << " n=" << n;
    }
  }
}

TEST(Terms, StrictlyIncreasingFromIndexOne) {
  for (std::int64_t m : {2, 3, 6, 10, 13}) {
    const PellContext ctx = PellContext::from_m(m);
    for (SeqKind kind : {SeqKind::F, SeqKind::L}) {
      const std::vector<Integer> ts = pellgf::terms_upto(ctx, kind, 40);
      for (std::size_t n = 1; n + 1 < ts.size(); ++n)
        EXPECT_LT(ts[n], ts[n + 1]) << "m=" << m << " n=" << n;
    }
  }
}

TEST(PellInvariant, SpecExamplesAndSweep) {
  const PellContext m2 = PellContext::from_m(2);
  // 7^2 - 2*5^2 = -1 = (-1)^3
  EXPECT_TRUE(pellgf::pell_invariant(m2, 3));
  const PellContext m3 = PellContext::from_m(3);
  // 97^2 - 3*56^2 = 1
  EXPECT_EQ(pellgf::term(m3, SeqKind::L, 4), 97);
  EXPECT_EQ(pellgf::term(m3, SeqKind::F, 4), 56);
  EXPECT_TRUE(pellgf::pell_invariant(m3, 4));
  EXPECT_TRUE(pellgf::pell_invariant(m2, 0));

  // Full range, through cached sequences: every (L_n, F_n) solves the
  // equation and b divides every F_n.
  for (std::int64_t m = 2; m <= 50; ++m) {
    if (pellgf::is_square(m)) continue;
    const PellContext ctx = PellContext::from_m(m);
    const pellgf::Sequence f = pellgf::make_sequence(ctx, SeqKind::F);
    const pellgf::Sequence l = pellgf::make_sequence(ctx, SeqKind::L);
    for (std::int64_t n = 0; n <= 200; ++n) {
      ASSERT_EQ(l.at(n) * l.at(n) - ctx.m() * f.at(n) * f.at(n),
                pellgf::sign_pow(ctx.epsilon(), n))
          << "m=" << m << " n=" << n;
      ASSERT_EQ(f.at(n) % ctx.b(), 0) << "m=" << m << " n=" << n;
    }
  }
}

TEST(Identities, SpecExamples) {
  const PellContext m3 = PellContext::from_m(3);
  // F_1 F_3 - F_2^2 = 15 - 16 = -1 = -b^2
  EXPECT_TRUE(pellgf::check_identity(m3, 7, 2));
  // 2 L_1 L_2 = 28 = L_3 + a = 26 + 2
  EXPECT_TRUE(pellgf::check_identity(m3, 15, 1));
  // F_2 F_1 = 4 = (L_3 - L_1) / (2m) = 24 / 6
  EXPECT_TRUE(pellgf::check_identity(m3, 11, 2, 1));
  const PellContext m2 = PellContext::from_m(2);
  // 2 L_1^2 = 2 = L_2 + (-1) = 3 - 1
  EXPECT_TRUE(pellgf::check_identity(m2, 14, 1));
}

TEST(Identities, FullCatalogSmallGrid) {
  for (std::int64_t m : {2, 3, 6, 10}) {
    const PellContext ctx = PellContext::from_m(m);
    for (std::int64_t n = 1; n <= 25; ++n) {
      ASSERT_TRUE(pellgf::check_identity(ctx, 7, n)) << "m=" << m << " n=" << n;
      ASSERT_TRUE(pellgf::check_identity(ctx, 8, n)) << "m=" << m << " n=" << n;
    }
    for (std::int64_t n = 0; n <= 25; ++n) {
      for (std::int64_t j = 0; j <= n; ++j) {
        ASSERT_TRUE(pellgf::check_identity(ctx, 9, n, j)) << "m=" << m;
        ASSERT_TRUE(pellgf::check_identity(ctx, 10, n, j)) << "m=" << m;
        ASSERT_TRUE(pellgf::check_identity(ctx, 11, n, j)) << "m=" << m;
      }
      for (int id = 12; id <= 15; ++id)
        ASSERT_TRUE(pellgf::check_identity(ctx, id, n)) << "m=" << m << " id=" << id;
    }
  }
}

TEST(Identities, RejectsBadIndices) {
  const PellContext ctx = PellContext::from_m(3);
  EXPECT_THROW(pellgf::check_identity(ctx, 6, 1), std::invalid_argument);
  EXPECT_THROW(pellgf::check_identity(ctx, 16, 1), std::invalid_argument);
  EXPECT_THROW(pellgf::check_identity(ctx, 7, 0), std::invalid_argument);
  EXPECT_THROW(pellgf::check_identity(ctx, 8, 0), std::invalid_argument);
  EXPECT_THROW(pellgf::check_identity(ctx, 9, 1, 2), std::invalid_argument);
  EXPECT_THROW(pellgf::check_identity(ctx, 12, -1), std::invalid_argument);
}

TEST(BDividesF, HoldsAcrossContexts) {
  const PellContext m6 = PellContext::from_m(6);
  for (std::int64_t n = 0; n <= 50; ++n)
    ASSERT_TRUE(pellgf::b_divides_F(m6, n)) << "n=" << n;
  const PellContext m3 = PellContext::from_m(3);
  EXPECT_TRUE(pellgf::b_divides_F(m3, 5));
  const PellContext m2 = PellContext::from_m(2);
  EXPECT_TRUE(pellgf::b_divides_F(m2, 4));
  const PellContext m13 = PellContext::from_m(13);  // b = 5
  for (std::int64_t n = 0; n <= 50; ++n)
    ASSERT_TRUE(pellgf::b_divides_F(m13, n)) << "n=" << n;
}

}  // namespace
