#include <gtest/gtest.h>

#include "kummer/cli/commands.hpp"

using namespace kummer;
using namespace kummer::cli;

TEST(Config, ExpressionsMatchCoefficientLists) {
    EXPECT_EQ(parse_poly_expression("x^5 - x - 1"), (UniPolyQ{-1, -1, 0, 0, 0, 1}));
    EXPECT_EQ(parse_poly_expression("2*x^2+3"), (UniPolyQ{3, 0, 2}));
    EXPECT_EQ(parse_poly_expression("-theta"), (UniPolyQ{0, -1}));
    EXPECT_EQ(parse_poly_expression("3/2 x - 1/2 + x"), UniPolyQ(std::vector<Rational>{Rational(-1, 2), Rational(5, 2)}));
    EXPECT_EQ(parse_poly_expression("x^2 - x^2 + 7"), (UniPolyQ{7}));
    for (const char* bad : {"", "x^", "2*", "x +", "x y", "1/0", "x^99999"})
        EXPECT_THROW(parse_poly_expression(bad), InputError) << bad;
}

TEST(Config, BigCoefficientsAreExact) {
    const std::string big = "123456789012345678901234567890";
    auto kv = parse_config("f = [" + big + ", \"-1/3\", 0, 1]\n");
    auto js = parse_config("{\"f\": [\"" + big + "\", \"-1/3\", 0, 1]}");
    UniPolyQ a = kv.poly("f"), b = js.poly("f");
    EXPECT_EQ(a, b);
    EXPECT_EQ(exact::to_string(a[0]), big);
    EXPECT_EQ(a[1], Rational(-1, 3));
    EXPECT_THROW(parse_config("{\"f\": [" + big + "]}"), InputError);  // would be a double
    EXPECT_THROW(parse_config("{\"f\": 0.5}"), InputError);
}

TEST(Config, KeyValueSyntax) {
    auto c = parse_config("# comment\n a = 3 # trailing\n\nS = [3, 5]\nlocal = false\n");
    EXPECT_EQ(c.uint("a"), 3u);
    EXPECT_EQ(c.uint_list("S"), (std::vector<std::uint64_t>{3, 5}));
    EXPECT_FALSE(c.boolean("local"));
    EXPECT_THROW(c.uint("S"), InputError);
    EXPECT_THROW(c.uint("missing"), InputError);
    EXPECT_THROW(parse_config("a = 1\na = 2\n"), InputError);
    EXPECT_THROW(parse_config("just words\n"), InputError);
    EXPECT_THROW(parse_config("a = -1\n").uint("a"), InputError);
    EXPECT_THROW(c.require_known({"a", "S"}), InputError);
}

TEST(Commands, EffortPrecedence) {
    CommandResult res;
    Flags flags;
    auto cfg = parse_config("effort = low\nnode_budget = 77\nseed = 5\n");
    auto o = options_from(cfg, flags, res);
    EXPECT_EQ(o.effort_name, "low");
    EXPECT_EQ(o.effort.node_budget, 77u);
    EXPECT_EQ(o.effort.padic_depth, locsol::Effort::low().padic_depth);
    EXPECT_EQ(o.effort.seed, 5u);
    flags.effort = "high";
    flags.seed = 9;
    o = options_from(cfg, flags, res);
    EXPECT_EQ(o.effort.node_budget, locsol::Effort::high().node_budget);
    EXPECT_EQ(o.effort.seed, 9u);
    EXPECT_FALSE(res.warnings.empty());
    EXPECT_THROW(options_from(parse_config("effort = extreme\n"), Flags{}, res), InputError);
}

TEST(Commands, ExitCodesFollowTheOverallVerdict) {
    Flags flags;
    EXPECT_EQ(cmd_check_a(parse_config("g1 = x^4-x-1\ng2 = x^4+x+1\nw1 = 283\nw2 = 229\n"), flags).exit_code, kHold);
    EXPECT_EQ(cmd_check_a(parse_config("g1 = x^4-x-1\ng2 = x^4-x-1\nw1 = 283\nw2 = 229\n"), flags).exit_code, kFail);
    EXPECT_THROW(cmd_check_a(parse_config("g1 = x^4-x-1\ng2 = x^4+x+1\nw1 = 283\nw2 = 8\n"), flags), InputError);
    auto r = cmd_check_b(parse_config("f = x^5-x-1\nw = 19\n"), flags);
    EXPECT_EQ(r.exit_code, kFail);
    ASSERT_EQ(r.warnings.size(), 1u);
}

TEST(Commands, FindPrimeWithTwoPolynomials) {
    auto r = cmd_find_prime(parse_config("f1 = x^5-x-1\ntarget1 = [5]\nf2 = x^4+x+1\ntarget2 = [4]\nbound = 20000\n"), Flags{});
    EXPECT_EQ(r.exit_code, kHold);
    std::uint64_t q = r.output["q"];
    EXPECT_EQ(q % 8, 1u);
    EXPECT_EQ(perm::frobenius_cycle_type(UniPolyQ{1, 1, 0, 0, 1}, q), (perm::Partition{4}));
}
