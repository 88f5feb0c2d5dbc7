#include <gtest/gtest.h>

#include <numeric>

#include "agb/hstar.hpp"
#include "oracles.hpp"

using agb::Errc;
using agb::HStar;
using agb::NumericalSemigroup;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const agb::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InternalInvariantViolation;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::vector<int> klein_members() {
  auto v = range(5, 23);
  v.insert(v.begin(), {0, 3});
  v.push_back(25);
  v.push_back(28);
  return v;
}

const NumericalSemigroup& two_three() {
  static const auto s = NumericalSemigroup::from_generators({2, 3});
  return s;
}

}  // namespace

TEST(HStar, ExplicitKlein) {
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  const auto hs = HStar::from_explicit(s, 23, klein_members());
  EXPECT_EQ(hs.members(), klein_members());
  EXPECT_TRUE(hs.is_isometry_dual());
  EXPECT_EQ(hs.mode(), agb::HStarMode::Explicit);
  EXPECT_EQ(hs.m(0), HStar::kSentinel);
  EXPECT_EQ(hs.m(1), 0);
  EXPECT_EQ(hs.m(23), 28);
}

TEST(HStar, ExplicitTwoThree) {
  const std::vector<int> members{0, 2, 3, 4, 5, 6, 7, 9};
  EXPECT_EQ(HStar::from_explicit(two_three(), 8, members).members(), members);
}

// {0,2,...,8} for <2,3>, n=8 meets every invariant: 8 members, all in H,
// agreement with H below 8, and 9 is the only excluded element of H in range,
// with nothing above it. It is a valid H*, just not an isometry-dual one.
TEST(HStar, ExplicitWithoutTopIsValid) {
  const auto hs = HStar::from_explicit(two_three(), 8, {0, 2, 3, 4, 5, 6, 7, 8});
  EXPECT_FALSE(hs.is_isometry_dual());
  EXPECT_EQ(hs.pi(), 9);
}

TEST(HStar, ExplicitRejections) {
  const auto& s = two_three();
  EXPECT_EQ(error_of([&] { HStar::from_explicit(s, 8, {0, 2, 3, 4, 5, 6, 7}); }), Errc::WrongCardinality);
  EXPECT_EQ(error_of([&] { HStar::from_explicit(s, 8, {0, 2, 3, 4, 5, 6, 7, 7}); }), Errc::WrongCardinality);
  EXPECT_EQ(error_of([&] { HStar::from_explicit(s, 8, {0, 1, 3, 4, 5, 6, 7, 9}); }), Errc::NotSubsetOfH);
  EXPECT_EQ(error_of([&] { HStar::from_explicit(s, 8, {0, 2, 3, 4, 5, 6, 7, 10}); }), Errc::NotSubsetOfH);
  EXPECT_EQ(error_of([&] { HStar::from_explicit(s, 8, {0, 2, 3, 4, 5, 6, 8, 9}); }), Errc::LowRangeMismatch);
  EXPECT_EQ(error_of([&] { HStar::from_explicit(s, 4, {0, 2, 3, 5}); }), Errc::LengthTooSmall);
  // gaps {1,2}: 8 is left out although 8 + 3 = 11 is kept.
  const auto s345 = NumericalSemigroup::from_generators({3, 4, 5});
  EXPECT_EQ(error_of([&] { HStar::from_explicit(s345, 8, {0, 3, 4, 5, 6, 7, 9, 11}); }), Errc::ClosureViolation);
  EXPECT_NO_THROW(HStar::from_explicit(s345, 8, {0, 3, 4, 5, 6, 7, 9, 10}));
}

TEST(HStar, EquivDivisor) {
  EXPECT_EQ(HStar::from_equiv_divisor(two_three(), 8).members(), (std::vector<int>{0, 2, 3, 4, 5, 6, 7, 9}));
  EXPECT_EQ(HStar::from_equiv_divisor(NumericalSemigroup::from_generators({1}), 5).members(), range(0, 4));
  const auto suzuki = HStar::from_equiv_divisor(NumericalSemigroup::from_generators({8, 10, 12, 13}), 64);
  EXPECT_EQ(suzuki.members().size(), 64u);
  EXPECT_EQ(suzuki.members().back(), 91);
  EXPECT_EQ(suzuki.pi(), 64);
  EXPECT_EQ(HStar::from_equiv_divisor(two_three(), 8).pi(), 8);
  EXPECT_EQ(error_of([] { HStar::from_equiv_divisor(two_three(), 4); }), Errc::LengthTooSmall);
}

TEST(HStar, IsometryDual) {
  const auto klein = HStar::from_isometry_dual(NumericalSemigroup::from_generators({3, 5, 7}), 23);
  EXPECT_EQ(klein.members(), klein_members());
  EXPECT_EQ(HStar::from_isometry_dual(NumericalSemigroup::from_generators({1}), 6).members(), range(0, 5));
  EXPECT_EQ(HStar::from_isometry_dual(NumericalSemigroup::from_generators({1}), 6).pi(), 6);
  EXPECT_EQ(HStar::from_isometry_dual(two_three(), 8).members(), (std::vector<int>{0, 2, 3, 4, 5, 6, 7, 9}));
}

TEST(HStar, F16IsNotIsometryDual) {
  const auto s = NumericalSemigroup::from_generators({14, 15, 22});
  std::vector<int> members;
  for (int m = 0; m < 212; ++m)
    if (s.contains(m)) members.push_back(m);
  for (int l : s.gaps())
    if (l >= 2) members.push_back(210 + l);
  members.push_back(225);
  const auto hs = HStar::from_explicit(s, 212, members);
  EXPECT_EQ(hs.top(), 309);
  EXPECT_FALSE(hs.is_isometry_dual());
  EXPECT_GE(hs.pi(), hs.n());
}

TEST(HStar, Abundance) {
  std::vector<int> ell(10, 0);
  ell[8] = 1;
  ell[9] = 1;
  EXPECT_EQ(HStar::from_abundance(two_three(), 8, ell).members(), (std::vector<int>{0, 2, 3, 4, 5, 6, 7, 9}));

  const auto n0 = NumericalSemigroup::from_generators({1});
  EXPECT_EQ(HStar::from_abundance(n0, 5, std::vector<int>(5, 0)).members(), range(0, 4));

  auto jump = ell;
  jump[8] = 2;
  jump[9] = 2;
  EXPECT_EQ(error_of([&] { HStar::from_abundance(two_three(), 8, jump); }), Errc::MalformedAbundance);
  auto early = ell;
  early[3] = 1;
  EXPECT_EQ(error_of([&] { HStar::from_abundance(two_three(), 8, early); }), Errc::MalformedAbundance);
  auto short_top = std::vector<int>(10, 0);
  EXPECT_EQ(error_of([&] { HStar::from_abundance(two_three(), 8, short_top); }), Errc::MalformedAbundance);
  EXPECT_EQ(error_of([&] { HStar::from_abundance(two_three(), 8, std::vector<int>(9, 0)); }),
            Errc::MalformedAbundance);

  // Well-formed abundances whose H* breaks closure: gaps {1,2}, n=8.
  const auto s345 = NumericalSemigroup::from_generators({3, 4, 5});
  // m:       0 1 2 3 4 5 6 7 8 9 10 11
  std::vector<int> bad{0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 2};
  EXPECT_EQ(error_of([&] { HStar::from_abundance(s345, 8, bad); }), Errc::ResultInvalid);
}

TEST(HStar, DimensionChain) {
  const std::vector<int> dims{1, 1, 2, 3, 4, 5, 6, 7, 7, 8};
  const auto hs = HStar::from_dimension_chain(dims, two_three());
  EXPECT_EQ(hs.members(), (std::vector<int>{0, 2, 3, 4, 5, 6, 7, 9}));
  EXPECT_EQ(hs.mode(), agb::HStarMode::CodeChain);
  for (int m = 0; m <= hs.top(); ++m) EXPECT_EQ(hs.dimension_at(m), dims[static_cast<std::size_t>(m)]);

  EXPECT_EQ(error_of([] { HStar::from_dimension_chain(std::vector<int>(10, 1), two_three()); }),
            Errc::MalformedChain);
  EXPECT_EQ(error_of([] { HStar::from_dimension_chain(std::vector<int>{1, 1, 3, 4, 5, 6, 7, 8, 8, 8}, two_three()); }),
            Errc::MalformedChain);
  // Steps at a gap below n.
  EXPECT_EQ(error_of([] { HStar::from_dimension_chain(std::vector<int>{1, 2, 2, 3, 4, 5, 6, 7, 7, 8}, two_three()); }),
            Errc::MalformedChain);
}

TEST(HStar, ConstructorsOverFamily) {
  for (const auto& s : ref::semigroup_family(2, 9, 6)) {
    const int g = s.genus();
    for (int n = 2 * g + 3; n <= 2 * g + 14; ++n) {
      const auto iso = HStar::from_isometry_dual(s, n);
      const auto eq = HStar::from_equiv_divisor(s, n);
      ASSERT_TRUE(iso.is_isometry_dual());
      EXPECT_GE(iso.pi(), n);
      EXPECT_GE(eq.pi(), n);
      // Symmetric as a set around n+2g-1.
      for (int i = 1; i <= n; ++i)
        ASSERT_EQ(iso.m(static_cast<std::size_t>(i)) + iso.m(static_cast<std::size_t>(n - i + 1)), iso.top());
      if (s.is_symmetric()) {
        ASSERT_EQ(iso.members(), eq.members());
        std::vector<int> h_minus_shift;
        for (int m = 0; m <= iso.top(); ++m)
          if (s.contains(m) && !s.contains(m - n)) h_minus_shift.push_back(m);
        ASSERT_EQ(iso.members(), h_minus_shift);
      }
      // Outputs pass explicit validation and the dimension-chain round trip.
      EXPECT_EQ(HStar::from_explicit(s, n, iso.members()).members(), iso.members());
      EXPECT_EQ(HStar::from_explicit(s, n, eq.members()).members(), eq.members());
      std::vector<int> dims;
      for (int m = 0; m <= eq.top(); ++m) dims.push_back(eq.dimension_at(m));
      EXPECT_EQ(HStar::from_dimension_chain(dims, s).members(), eq.members());
      // Abundances of D ~ nQ reproduce the same set.
      std::vector<int> ell;
      for (int m = 0; m <= eq.top(); ++m) ell.push_back(s.count_up_to(m - n));
      EXPECT_EQ(HStar::from_abundance(s, n, ell).members(), eq.members());
    }
  }
}
