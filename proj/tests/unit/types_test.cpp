#include <gtest/gtest.h>

#include "causalorder/types.hpp"

using namespace causalorder;

TEST(FormatSet, EmptySet) { EXPECT_EQ(format_set({}), "{}"); }

TEST(FormatSet, SortedCommaSeparated) { EXPECT_EQ(format_set({"v_P", "v_D", "v_K"}), "{v_D, v_K, v_P}"); }

TEST(ParseIdList, EmptyStringIsEmptySet) { EXPECT_TRUE(parse_id_list("").empty()); }

TEST(ParseIdList, SplitsAndTrims) { EXPECT_EQ(parse_id_list("v_1, v_2,v_3"), (VertexSet{"v_1", "v_2", "v_3"})); }

TEST(ParseIdList, DuplicatesCollapse) { EXPECT_EQ(parse_id_list("a,a"), (VertexSet{"a"})); }
