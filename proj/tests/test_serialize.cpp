#include <doctest.h>

#include <overschur/enumerate.hpp>
#include <overschur/serialize.hpp>

using namespace overschur;
using nlohmann::json;

TEST_CASE("overpartition json round trip")
{
    const Params params(5, 2);
    for (int n = 0; n <= 25; ++n) {
        for (auto f : {FamilyId::Ebar, FamilyId::Bbar, FamilyId::Cbar}) {
            for (const auto &lambda : enumerate(f, params, n)) {
                const json j = lambda;
                CHECK(json::parse(j.dump()).get<Overpartition>() == lambda);
                const json k = to_dmodular(lambda, params);
                CHECK(json::parse(k.dump()).get<DModularOverpartition>() == to_dmodular(lambda, params));
            }
        }
    }
}

TEST_CASE("json shapes")
{
    const json j = Overpartition({{9, true}, {5, true}});
    CHECK(j.dump() == R"([{"overlined":true,"value":9},{"overlined":true,"value":5}])");
    const json k = DModularOverpartition({{2, Label::DmR}, {1, Label::D}});
    CHECK(k.dump() == R"([{"label":"d-r","length":2},{"label":"d","length":1}])");
    const json t = BoundedTriple{2, {14}, {2}, {5}};
    CHECK(t == json::parse(R"({"m":2,"alpha":[14],"beta":[2],"gamma":[5]})"));
    CHECK(t.get<BoundedTriple>() == BoundedTriple{2, {14}, {2}, {5}});
    const json p = PartitionTriple{{3}, {2, 1}, {}};
    CHECK(p.get<PartitionTriple>() == PartitionTriple{{3}, {2, 1}, {}});
}

TEST_CASE("reports")
{
    VerificationReport rep;
    rep.identity = IdentityId::CbarG2;
    rep.d = 7;
    rep.r = 2;
    rep.order = 40;
    json j = rep;
    CHECK(j.at("status") == "equal");
    CHECK(j.at("identity") == "cbar-g2");
    CHECK_FALSE(j.contains("at"));
    rep.equal = false;
    rep.at = 12;
    rep.lhs_coeff = 3;
    rep.rhs_coeff = 4;
    j = rep;
    CHECK(j.at("status") == "mismatch");
    CHECK(j.at("at") == 12);
    CHECK(j.at("rhs_coeff") == 4);
}

TEST_CASE("big integers")
{
    CHECK(bigint_to_json(BigInt(42)) == 42);
    const BigInt huge = BigInt(1) << 100;
    CHECK(bigint_to_json(huge) == huge.str());
}

TEST_CASE("malformed input throws")
{
    CHECK_THROWS_AS(json::parse(R"([{"length":2,"label":"x"}])").get<DModularOverpartition>(), json::exception);
    CHECK_THROWS_AS(json::parse(R"([{"value":2}])").get<Overpartition>(), json::exception);
    CHECK_THROWS_AS(json::parse(R"({"alpha":[]})").get<PartitionTriple>(), json::exception);
}
