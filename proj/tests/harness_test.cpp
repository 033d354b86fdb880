#include <set>
#include <string>

#include <gtest/gtest.h>

#include "frob/harness/claims.hpp"
#include "frob/harness/grid.hpp"
#include "frob/harness/report.hpp"

namespace frob::harness {
namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

const Claim& find_claim(const std::string& id) {
    static const std::vector<Claim> catalog = claim_catalog();
    for (const auto& c : catalog) {
        if (c.id == id) return c;
    }
    throw std::out_of_range(id);
}

TEST(Catalog, IdsAreUniqueAndDescribed) {
    const auto catalog = claim_catalog();
    EXPECT_GE(catalog.size(), 16u);
    std::set<std::string> ids;
    for (const auto& c : catalog) {
        EXPECT_TRUE(ids.insert(c.id).second) << c.id;
        EXPECT_FALSE(c.description.empty()) << c.id;
        EXPECT_FALSE(c.parameters.empty()) << c.id;
    }
    for (const char* id : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8a", "C8b", "C9", "C10a", "C10b", "C11",
                           "C12a", "C12b", "C4-fixed", "C6-fixed"}) {
        EXPECT_TRUE(ids.count(id)) << id;
    }
}

TEST(RunClaim, UmbralRecurrence) {
    const auto r = run_claim(find_claim("C1"), Instance({{"n", 3L}, {"u", q(2)}}));
    EXPECT_EQ(r.status, Status::Verified);
    EXPECT_EQ(r.lhs, "0");
    EXPECT_EQ(r.rhs, "0");
    const auto r0 = run_claim(find_claim("C1"), Instance({{"n", 0L}, {"u", q(2)}}));
    EXPECT_EQ(r0.status, Status::Verified);
    EXPECT_EQ(r0.lhs, "-1");
}

TEST(RunClaim, ValueAtTwoWitness) {
    const auto r = run_claim(find_claim("C5"), Instance({{"n", 2L}, {"u", q(2)}}));
    EXPECT_EQ(r.status, Status::Verified);
    EXPECT_EQ(r.lhs, "56/9");
    EXPECT_EQ(r.rhs, "56/9");
}

TEST(RunClaim, ReflectionWitnesses) {
    const Instance at({{"n", 1L}, {"u", q(2)}, {"x", q(2)}});
    const auto direct = run_claim(find_claim("C4"), at);
    EXPECT_EQ(direct.status, Status::Refuted);
    EXPECT_EQ(direct.lhs, "-5/3");
    EXPECT_EQ(direct.rhs, "-4/3");
    const auto fixed = run_claim(find_claim("C4-fixed"), at);
    EXPECT_EQ(fixed.status, Status::Verified);
    EXPECT_EQ(fixed.rhs, "-5/3");
}

TEST(RunClaim, ReflectedMomentWitnesses) {
    const Instance at({{"n", 1L}, {"u", q(2)}});
    const auto direct = run_claim(find_claim("C6"), at);
    EXPECT_EQ(direct.status, Status::Refuted);
    EXPECT_EQ(direct.lhs, "10/9");
    EXPECT_EQ(direct.rhs, "8/9");
    const auto fixed = run_claim(find_claim("C6-fixed"), at);
    EXPECT_EQ(fixed.status, Status::Verified);
    EXPECT_EQ(fixed.rhs, "10/9");
}

TEST(RunClaim, PadicClaimReportsResidues) {
    const Instance at({{"n", 1L}, {"x", q(0)}, {"u", q(4)}, {"p", 3L}, {"precision", 6L}});
    const auto r = run_claim(find_claim("C2"), at);
    EXPECT_EQ(r.status, Status::Verified);
    EXPECT_EQ(r.lhs, "58 mod 3^6");
}

TEST(RunClaim, PreconditionFailureIsSkipped) {
    // u = 2 is not congruent to 1 mod 3.
    const Instance at({{"n", 1L}, {"x", q(0)}, {"u", q(2)}, {"p", 3L}, {"precision", 4L}});
    const auto r = run_claim(find_claim("C2"), at);
    EXPECT_EQ(r.status, Status::Skipped);
    EXPECT_TRUE(r.reason.has_value());
    EXPECT_FALSE(r.lhs.has_value());
}

TEST(RunClaim, ExcludedParameterIsSkipped) {
    const auto r = run_claim(find_claim("C5"), Instance({{"n", 2L}, {"u", q(-1)}}));
    EXPECT_EQ(r.status, Status::Skipped);
}

TEST(RunClaim, BranchIsAnnotated) {
    const auto k0 = run_claim(find_claim("C8b"), Instance({{"n", 3L}, {"k", 0L}, {"u", q(2)}}));
    const auto k1 = run_claim(find_claim("C8b"), Instance({{"n", 3L}, {"k", 1L}, {"u", q(2)}}));
    ASSERT_TRUE(k0.branch && k1.branch);
    EXPECT_NE(*k0.branch, *k1.branch);
}

TEST(Grid, ParseAndValidate) {
    const Grid g = Grid::parse("# comment\nn = 3, 0..2, 2\nu = 5/3, -1/2\n\nx=0\n");
    EXPECT_EQ(g.ints("n"), (std::vector<long>{0, 1, 2, 3}));
    EXPECT_EQ(g.rats("u"), (std::vector<Rational>{q(-1, 2), q(5, 3)}));
    EXPECT_EQ(g.rats("x"), (std::vector<Rational>{q(0)}));
    EXPECT_NO_THROW(g.validate());
    EXPECT_THROW(Grid::parse("n = 40").validate(), InvalidParameter);
    EXPECT_THROW(Grid::parse("u = 1/1000").validate(), InvalidParameter);
}

TEST(Grid, SyntaxErrors) {
    EXPECT_THROW(Grid::parse("m = 1"), SyntaxError);
    EXPECT_THROW(Grid::parse("n 1"), SyntaxError);
    EXPECT_THROW(Grid::parse("u = 0..2"), SyntaxError);
    EXPECT_THROW(Grid::parse("n = 1,,2"), SyntaxError);
    EXPECT_THROW(Grid::parse("u = 1/x"), SyntaxError);
}

TEST(Sweep, CountsFollowGrid) {
    const Grid g = Grid::parse("n = 0..4\nu = 2");
    const Report r = sweep({find_claim("C1")}, g);
    ASSERT_EQ(r.results.size(), 5u);
    EXPECT_EQ(r.summary.at("C1").verified, 5u);
    EXPECT_EQ(r.summary.at("C1").refuted, 0u);
    EXPECT_FALSE(r.summary.at("C1").first_refutation.has_value());
}

TEST(Sweep, EmptyGridGivesEmptyReport) {
    const Report r = sweep(claim_catalog(), Grid{});
    EXPECT_TRUE(r.results.empty());
    for (const auto& [id, s] : r.summary) EXPECT_EQ(s.verified + s.refuted + s.skipped, 0u) << id;
}

TEST(Sweep, FirstRefutationIsSmallestInstance) {
    const Report r = sweep({find_claim("C6")}, Grid::parse("n = 0..3\nu = 3, 2"));
    const auto& s = r.summary.at("C6");
    ASSERT_TRUE(s.first_refutation.has_value());
    EXPECT_EQ(s.first_refutation->params.integer("n"), 1);
    EXPECT_EQ(s.first_refutation->params.rational("u"), q(2));
}

TEST(Render, JsonSchema) {
    const Report r = sweep({find_claim("C4")}, Grid::parse("n = 1\nu = 2\nx = 2"));
    const auto j = nlohmann::json::parse(render(r, "json"));
    EXPECT_EQ(j["version"], std::string(kToolVersion));
    EXPECT_EQ(j["grid"]["u"][0], "2");
    ASSERT_EQ(j["results"].size(), 1u);
    const auto& row = j["results"][0];
    EXPECT_EQ(row["claim"], "C4");
    EXPECT_EQ(row["params"]["n"], 1);
    EXPECT_EQ(row["status"], "refuted");
    EXPECT_EQ(row["lhs"], "-5/3");
    EXPECT_EQ(row["rhs"], "-4/3");
    EXPECT_TRUE(row["reason"].is_null());
    EXPECT_EQ(j["summary"]["C4"]["refuted"], 1);
    EXPECT_EQ(j["summary"]["C4"]["first_refutation"]["lhs"], "-5/3");
}

TEST(Render, MarkdownAndUnknownFormat) {
    const Report r = sweep({find_claim("C4")}, Grid::parse("n = 1\nu = 2\nx = 2"));
    const std::string md = render(r, "markdown");
    EXPECT_NE(md.find("| C4 | 0 | 1 | 0 |"), std::string::npos) << md;
    EXPECT_NE(md.find("-5/3 vs -4/3"), std::string::npos);
    EXPECT_THROW(render(r, "yaml"), UnknownFormat);
}

TEST(Render, Deterministic) {
    const Grid g = Grid::parse("n = 0..4\nk = 0..2\nu = 2, -1/2\nx = 0, 1/2\ns = 2\nni = 0..3");
    EXPECT_EQ(render(sweep(claim_catalog(), g), "json"), render(sweep(claim_catalog(), g), "json"));
}

}  // namespace
}  // namespace frob::harness
