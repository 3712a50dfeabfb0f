#include "sic/cost.hpp"

#include <sstream>

#include <gtest/gtest.h>

namespace {

using sic::cost;

TEST(Cost, UnreachableSaturatesAddition) {
    EXPECT_TRUE((cost(3) + cost::unreachable()).is_unreachable());
    EXPECT_TRUE((cost::unreachable() + cost(0)).is_unreachable());
    EXPECT_EQ(cost(3) + cost(4), cost(7));
}

TEST(Cost, MinPrefersFiniteValues) {
    EXPECT_EQ(sic::min(cost::unreachable(), cost(5)), cost(5));
    EXPECT_EQ(sic::min(cost(5), cost::unreachable()), cost(5));
    EXPECT_EQ(sic::min(cost(2), cost(5)), cost(2));
    EXPECT_TRUE(sic::min(cost::unreachable(), cost::unreachable()).is_unreachable());
}

TEST(Cost, OrderingPlacesUnreachableLast) {
    EXPECT_LT(cost(1000000), cost::unreachable());
    EXPECT_FALSE(cost::unreachable() < cost::unreachable());
    EXPECT_LE(cost::unreachable(), cost::unreachable());
    EXPECT_NE(cost(0), cost::unreachable());
}

TEST(Cost, ValueOfUnreachableThrows) {
    EXPECT_THROW((void)cost::unreachable().value(), std::logic_error);
}

TEST(Cost, Printing) {
    std::ostringstream os;
    os << cost(4) << ' ' << cost::unreachable();
    EXPECT_EQ(os.str(), "4 unreachable");
}

TEST(Cost, RationalWeights) {
    const sic::weighted_cost a(sic::rational(3, 2));
    EXPECT_EQ(a + sic::weighted_cost(sic::rational(1, 2)), sic::weighted_cost(sic::rational(2)));
}

}  // namespace
