#include <doctest.h>

#include <overschur/partition.hpp>

#include "oracles.hpp"

using namespace overschur;

namespace
{

Overpartition op(std::initializer_list<std::pair<int, bool>> parts)
{
    Overpartition lambda;
    for (auto [v, ov] : parts) {
        lambda.parts.push_back({v, ov});
    }
    return lambda;
}

DModularOverpartition dm(std::initializer_list<std::pair<int, Label>> parts)
{
    DModularOverpartition mu;
    for (auto [len, label] : parts) {
        mu.parts.push_back({len, label});
    }
    return mu;
}

const Params p72{7, 2};

} // namespace

TEST_CASE("params enforce d >= 3 and 1 <= r < d/2")
{
    CHECK_NOTHROW(Params(3, 1));
    CHECK_NOTHROW(Params(9, 4));
    CHECK_THROWS_AS(Params(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(Params(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(Params(7, 0), std::invalid_argument);
}

TEST_CASE("weight_part")
{
    CHECK(weight_part({4, Label::DmR}, p72) == 26);
    CHECK(weight_part({1, Label::D}, p72) == 0);
    CHECK(weight_part({3, Label::R}, p72) == 16);
    CHECK(weight_part({1, Label::Dbar}, p72) == 7);
    CHECK(weight_part({2, Label::D}, p72) == 7);
}

TEST_CASE("part order at equal weight and equal length")
{
    // 1_dbar < 2_d < 2_r < 2_{d-r} < 2_dbar
    CHECK(DModularPart{1, Label::Dbar} < DModularPart{2, Label::D});
    CHECK(DModularPart{2, Label::D} < DModularPart{2, Label::R});
    CHECK(DModularPart{2, Label::R} < DModularPart{2, Label::DmR});
    CHECK(DModularPart{2, Label::DmR} < DModularPart{2, Label::Dbar});
}

TEST_CASE("to_dmodular")
{
    const auto lambda = op({{26, true}, {21, false}, {21, false}, {16, true}, {7, true}});
    const auto mu = to_dmodular(lambda, p72);
    CHECK(mu == dm({{4, Label::DmR}, {4, Label::D}, {4, Label::D}, {3, Label::R}, {1, Label::Dbar}}));
    CHECK(weight(mu, p72) == lambda.weight());

    CHECK(to_dmodular(Overpartition{}, p72).parts.empty());
    CHECK(to_dmodular(op({{42, false}}), p72) == dm({{7, Label::D}}));

    CHECK_THROWS_AS(to_dmodular(op({{3, true}}), p72), not_representable_error);
    CHECK_THROWS_AS(to_dmodular(op({{9, false}}), p72), not_representable_error);
}

TEST_CASE("from_dmodular")
{
    const auto mu = dm({{12, Label::Dbar}, {11, Label::R}, {8, Label::DmR}, {5, Label::DmR}, {4, Label::R}, {1, Label::R}});
    const auto lambda = from_dmodular(mu, p72);
    CHECK(lambda == op({{84, true}, {72, true}, {54, true}, {33, true}, {23, true}, {2, true}}));
    CHECK(lambda.weight() == 268);
    CHECK(weight(mu, p72) == 268);

    CHECK(from_dmodular(DModularOverpartition{}, p72).parts.empty());
    CHECK(from_dmodular(dm({{2, Label::D}}), p72) == op({{7, false}}));
    CHECK_THROWS_AS(from_dmodular(dm({{1, Label::D}}), p72), invalid_part_error);
}

TEST_CASE("round trip through the d-modular form")
{
    for (auto [d, r] : {std::pair{3, 1}, {5, 2}, {7, 2}, {9, 4}}) {
        const Params params(d, r);
        int seen = 0;
        oracle::for_each_candidate(params, d == 3 ? 24 : 45, [&](const Overpartition &lambda) {
            const auto mu = to_dmodular(lambda, params);
            CHECK(mu.is_ordered());
            CHECK(weight(mu, params) == lambda.weight());
            CHECK(from_dmodular(mu, params) == lambda);
            ++seen;
        });
        CHECK(seen > 100);
    }
}

TEST_CASE("matrix A")
{
    CHECK(matrix_A(p72, Label::Dbar, Label::DmR) == 9);
    CHECK(matrix_A(p72, Label::D, Label::D) == 0);
    CHECK(matrix_A(p72, Label::R, Label::R) == 7);
    CHECK(matrix_A(p72, Label::Dbar, Label::R) == 12);
}

TEST_CASE("matrix A' depends only on the column")
{
    CHECK(matrix_Aprime(Label::Dbar, Label::DmR) == 1);
    CHECK(matrix_Aprime(Label::R, Label::D) == 0);
    CHECK(matrix_Aprime(Label::D, Label::Dbar) == 2);
    for (auto v : all_labels) {
        for (auto u : all_labels) {
            CHECK(matrix_Aprime(u, v) == matrix_Aprime(Label::R, v));
        }
    }
}

TEST_CASE("check_family examples")
{
    const auto bbar = dm({{12, Label::Dbar}, {11, Label::R}, {8, Label::DmR}, {5, Label::DmR}, {4, Label::R}, {1, Label::R}});
    CHECK(check_family(bbar, FamilyId::Bbar, p72));
    CHECK_FALSE(check_family(bbar, FamilyId::Cbar, p72));

    const auto cbar = dm({{14, Label::Dbar}, {11, Label::R}, {10, Label::DmR}, {4, Label::Dbar}, {4, Label::D}, {2, Label::D}});
    CHECK(check_family(cbar, FamilyId::Cbar, p72));
    CHECK_FALSE(check_family(cbar, FamilyId::Bbar, p72));

    for (auto f : all_families) {
        CHECK(check_family(Overpartition{}, f, p72));
        CHECK(check_family(DModularOverpartition{}, f, p72));
    }
}

TEST_CASE("check_family on raw classical families")
{
    const Params p31(3, 1);
    CHECK(check_family(op({{5, false}, {1, false}}), FamilyId::B, p31));
    CHECK(check_family(op({{6, false}}), FamilyId::B, p31));
    CHECK_FALSE(check_family(op({{4, false}, {2, false}}), FamilyId::B, p31));
    // gap exactly d onto a multiple of d must be strict
    CHECK_FALSE(check_family(op({{9, false}, {6, false}}), FamilyId::B, p31));
    CHECK(check_family(op({{8, false}, {5, false}}), FamilyId::B, p31));
    CHECK(check_family(op({{4, false}, {2, false}}), FamilyId::E, p31));
    CHECK_FALSE(check_family(op({{6, false}}), FamilyId::E, p31));
    CHECK_FALSE(check_family(op({{2, false}, {2, false}}), FamilyId::E, p31));
    CHECK(check_family(op({{7, false}}), FamilyId::C, p31));
    CHECK_FALSE(check_family(op({{5, false}, {1, false}}), FamilyId::C, p31));

    CHECK_THROWS_AS(check_family(op({{5, true}}), FamilyId::B, p31), invalid_input_error);
    CHECK_THROWS_AS(check_family(op({{5, true}}), FamilyId::E, p31), invalid_input_error);
}

TEST_CASE("check_family on ebar")
{
    CHECK(check_family(op({{12, true}, {2, true}}), FamilyId::Ebar, p72));
    CHECK(check_family(op({{14, false}, {14, false}}), FamilyId::Ebar, p72));
    CHECK_FALSE(check_family(op({{7, false}}), FamilyId::Ebar, p72));
    CHECK_FALSE(check_family(op({{14, true}}), FamilyId::Ebar, p72));
    CHECK_FALSE(check_family(op({{2, true}, {2, true}}), FamilyId::Ebar, p72));
    // not canonical
    CHECK_FALSE(check_family(op({{2, true}, {12, true}}), FamilyId::Ebar, p72));
}

TEST_CASE("violations are named")
{
    const auto v = family_violation(dm({{3, Label::R}, {1, Label::R}}), FamilyId::Bbar, p72);
    REQUIRE(v.has_value());
    CHECK(v->find("difference") != std::string::npos);
    const auto w = family_violation(dm({{3, Label::R}}), FamilyId::Cbar, p72);
    REQUIRE(w.has_value());
    CHECK(w->find("odd length") != std::string::npos);
}

TEST_CASE("d-modular checker agrees with value-level matrix conditions")
{
    for (auto [d, r] : {std::pair{3, 1}, {5, 2}, {7, 2}, {7, 3}, {9, 2}, {9, 4}}) {
        const Params params(d, r);
        const int bound = d == 3 ? 36 : (d == 5 ? 50 : 60);
        long agree_b = 0;
        long agree_c = 0;
        oracle::for_each_candidate(params, bound, [&](const Overpartition &lambda) {
            const bool b = check_family(lambda, FamilyId::Bbar, params);
            const bool c = check_family(lambda, FamilyId::Cbar, params);
            CHECK(b == value_level::check_bbar(lambda, params));
            CHECK(c == value_level::check_cbar(lambda, params));
            if (b && !lambda.parts.empty()) {
                const auto mu = to_dmodular(lambda, params);
                CHECK(mu.parts.back().length % 2 == 1);
                for (const auto &p : mu.parts) {
                    CHECK_FALSE((p.length == 1 && p.label == Label::D));
                }
                ++agree_b;
            }
            if (c && !lambda.parts.empty()) {
                CHECK(to_dmodular(lambda, params).parts.back().length % 2 == 0);
                ++agree_c;
            }
        });
        CHECK(agree_b > 10);
        CHECK(agree_c > 5);
    }
}
