#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include <overschur/construction.hpp>
#include <overschur/enumerate.hpp>

using namespace overschur;

namespace
{

const std::vector<std::pair<int, int>> grid{{3, 1}, {5, 2}, {7, 2}, {7, 3}, {9, 2}, {9, 4}};

const BoundedTriple running_example{6, {70, 42, 42, 14}, {23, 9, 2}, {26, 19, 5}};

DModularOverpartition running_result()
{
    return DModularOverpartition({{14, Label::Dbar}, {11, Label::R}, {10, Label::DmR}, {4, Label::Dbar}, {4, Label::D}, {2, Label::D}});
}

int triple_sum(const BoundedTriple &t)
{
    int s = 0;
    for (const auto *v : {&t.alpha, &t.beta, &t.gamma}) {
        for (int x : *v) {
            s += x;
        }
    }
    return s;
}

// Every bounded triple with m parts whose construction weight is <= max_n.
void for_each_bounded(const Params &params, int m, int max_n, const std::function<void(const BoundedTriple &)> &visit)
{
    const int d = params.d();
    const int r = params.r();
    BoundedTriple t;
    t.m = m;
    const int base = m * d;
    std::function<void(int)> g_rec, b_rec, a_rec;
    g_rec = [&](int room) {
        visit(t);
        const int top = t.gamma.empty() ? m * d - r : t.gamma.back() - d;
        for (int g = top; g > 0; g -= d) {
            if (g <= room) {
                t.gamma.push_back(g);
                g_rec(room - g);
                t.gamma.pop_back();
            }
        }
    };
    b_rec = [&](int room) {
        g_rec(room);
        const int top = t.beta.empty() ? (m - 1) * d + r : t.beta.back() - d;
        for (int b = top; b > 0; b -= d) {
            if (b <= room) {
                t.beta.push_back(b);
                b_rec(room - b);
                t.beta.pop_back();
            }
        }
    };
    a_rec = [&](int room) {
        b_rec(room);
        const int top = t.alpha.empty() ? 2 * m * d : t.alpha.back();
        for (int a = top; a > 0; a -= 2 * d) {
            if (a <= room) {
                t.alpha.push_back(a);
                a_rec(room - a);
                t.alpha.pop_back();
            }
        }
    };
    if (base <= max_n) {
        a_rec(max_n - base);
    }
}

} // namespace

TEST_CASE("construct the running example")
{
    const Params params(7, 2);
    const auto mu = construct(running_example, params);
    CHECK(mu == running_result());
    CHECK(mu.parts.size() == 6);
    CHECK(weight(mu, params) == 294);
    CHECK(weight(mu, params) == 6 * 7 + triple_sum(running_example));
    CHECK(check_family(mu, FamilyId::Cbar, params));
    CHECK(deconstruct(mu, params) == running_example);
}

TEST_CASE("construct small cases")
{
    const Params params(7, 2);
    CHECK(construct(BoundedTriple{}, params).parts.empty());
    CHECK(deconstruct(DModularOverpartition{}, params) == BoundedTriple{});
    const auto one = construct(BoundedTriple{1, {}, {}, {}}, params);
    CHECK(one == DModularOverpartition({{2, Label::D}}));
    CHECK(weight(one, params) == 7);
    CHECK(deconstruct(one, params) == BoundedTriple{1, {}, {}, {}});
}

TEST_CASE("bound violations are named")
{
    const Params params(7, 2);
    auto v = bounded_triple_violation({2, {42}, {}, {}}, params);
    REQUIRE(v);
    CHECK(v->find("alpha part 42") != std::string::npos);
    CHECK(v->find("2md") != std::string::npos);
    v = bounded_triple_violation({2, {}, {16}, {}}, params);
    REQUIRE(v);
    CHECK(v->find("beta part 16") != std::string::npos);
    v = bounded_triple_violation({2, {}, {}, {19}}, params);
    REQUIRE(v);
    CHECK(v->find("gamma part 19") != std::string::npos);
    v = bounded_triple_violation({2, {}, {9, 9}, {}}, params);
    REQUIRE(v);
    CHECK(v->find("strictly decreasing") != std::string::npos);
    v = bounded_triple_violation({2, {7}, {}, {}}, params);
    REQUIRE(v);
    CHECK(v->find("even multiple") != std::string::npos);
    CHECK_THROWS_AS(construct({2, {}, {3}, {}}, params), invalid_input_error);
    CHECK_THROWS_AS(deconstruct(DModularOverpartition({{1, Label::R}}), params), invalid_input_error);
}

TEST_CASE("construct is injective with exact weight, and deconstruct inverts it")
{
    for (auto [d, r] : grid) {
        const Params params(d, r);
        for (int m = 0; m * d <= 50; ++m) {
            std::set<DModularOverpartition> seen;
            long made = 0;
            for_each_bounded(params, m, 50, [&](const BoundedTriple &t) {
                const auto mu = construct(t, params);
                CHECK(static_cast<int>(mu.parts.size()) == m);
                CHECK(weight(mu, params) == m * d + triple_sum(t));
                CHECK(check_family(mu, FamilyId::Cbar, params));
                CHECK(deconstruct(mu, params) == t);
                seen.insert(mu);
                ++made;
            });
            CHECK(static_cast<long>(seen.size()) == made);
        }
    }
}

TEST_CASE("every cbar object up to weight 50 deconstructs and reconstructs")
{
    for (auto [d, r] : grid) {
        const Params params(d, r);
        for (int n = 0; n <= 50; ++n) {
            for (const auto &mu : enumerate_dmodular(FamilyId::Cbar, params, n)) {
                const auto t = deconstruct(mu, params);
                CHECK(t.m == static_cast<int>(mu.parts.size()));
                CHECK(construct(t, params) == mu);
            }
        }
    }
}

TEST_CASE("gamma insertion lands on dbar exactly where a beta mark sits")
{
    const Params params(7, 2);
    const int d = 7;
    const int r = 2;
    std::mt19937 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 8);
        BoundedTriple t;
        t.m = m;
        std::set<int> beta_rows, gamma_rows;
        for (int k = m; k >= 1; --k) {
            if (rng() % 2) {
                t.beta.push_back((k - 1) * d + r);
                beta_rows.insert(k);
            }
            if (rng() % 2) {
                t.gamma.push_back(k * d - r);
                gamma_rows.insert(k);
            }
        }
        const int alphas = static_cast<int>(rng() % 4);
        for (int i = 0; i < alphas; ++i) {
            t.alpha.push_back(2 * d * (1 + static_cast<int>(rng() % m)));
        }
        std::sort(t.alpha.begin(), t.alpha.end(), std::greater<>{});
        const auto mu = construct(t, params);
        for (int k = 1; k <= m; ++k) {
            const auto label = mu.parts[k - 1].label;
            const bool b = beta_rows.count(k) > 0;
            const bool g = gamma_rows.count(k) > 0;
            CHECK((label == Label::Dbar) == (b && g));
            CHECK((label == Label::R) == (b && !g));
            CHECK((label == Label::DmR) == (!b && g));
        }
    }
}

TEST_CASE("cbar_table_formula")
{
    const Params params(7, 2);
    const auto table = cbar_table_formula(params, 6, 294);
    CHECK(table.at(0, 0) == 1);
    for (int n = 1; n <= 294; ++n) {
        CHECK(table.at(0, n) == 0);
    }
    CHECK(table.at(1, 7) == 1);
    CHECK(table.at(6, 294) >= 1);
}

TEST_CASE("cbar_table_formula matches count_by_parts up to weight 60")
{
    for (auto [d, r] : grid) {
        const Params params(d, r);
        const int max_m = 60 / d;
        const auto table = cbar_table_formula(params, max_m, 60);
        const auto counts = count_by_parts_table(FamilyId::Cbar, params, max_m, 60);
        for (int m = 0; m <= max_m; ++m) {
            for (int n = 0; n <= 60; ++n) {
                CHECK(table.at(m, n) == counts[m][n]);
            }
        }
    }
}
