#include <overschur/construction.hpp>

#include <algorithm>

namespace overschur
{

namespace
{

void print_seq(std::ostream &os, const std::vector<int> &v)
{
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    os << ")";
}

std::string part_msg(const char *name, int value)
{
    return std::string(name) + " part " + std::to_string(value);
}

void grow_rows(std::vector<DModularPart> &rows, int count, int by)
{
    for (int i = 0; i < count; ++i) {
        rows[i].length += by;
    }
}

} // namespace

std::ostream &operator<<(std::ostream &os, const BoundedTriple &t)
{
    os << "m=" << t.m << " alpha=";
    print_seq(os, t.alpha);
    os << " beta=";
    print_seq(os, t.beta);
    os << " gamma=";
    print_seq(os, t.gamma);
    return os;
}

std::optional<std::string> bounded_triple_violation(const BoundedTriple &t, const Params &params)
{
    const int d = params.d();
    const int r = params.r();
    const int m = t.m;
    if (m < 0) {
        return "m=" + std::to_string(m) + " is negative";
    }
    for (std::size_t i = 0; i < t.alpha.size(); ++i) {
        const int a = t.alpha[i];
        if (a <= 0 || a % (2 * d) != 0) {
            return part_msg("alpha", a) + " is not a positive even multiple of d";
        }
        if (a > 2 * m * d) {
            return part_msg("alpha", a) + " exceeds the bound 2md=" + std::to_string(2 * m * d);
        }
        if (i > 0 && a > t.alpha[i - 1]) {
            return std::string("alpha is not non-increasing");
        }
    }
    const auto check_distinct = [](const std::vector<int> &v, const char *name) -> std::optional<std::string> {
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i] >= v[i - 1]) {
                return std::string(name) + " is not strictly decreasing at " + part_msg(name, v[i]);
            }
        }
        return std::nullopt;
    };
    for (int b : t.beta) {
        if (b <= 0 || b % d != r) {
            return part_msg("beta", b) + " is not a positive integer congruent to r mod d";
        }
        if (b > (m - 1) * d + r) {
            return part_msg("beta", b) + " exceeds the bound (m-1)d+r=" + std::to_string((m - 1) * d + r);
        }
    }
    if (auto v = check_distinct(t.beta, "beta")) {
        return v;
    }
    for (int g : t.gamma) {
        if (g <= 0 || g % d != d - r) {
            return part_msg("gamma", g) + " is not a positive integer congruent to d-r mod d";
        }
        if (g > m * d - r) {
            return part_msg("gamma", g) + " exceeds the bound md-r=" + std::to_string(m * d - r);
        }
    }
    return check_distinct(t.gamma, "gamma");
}

DModularOverpartition construct(const BoundedTriple &t, const Params &params)
{
    if (auto v = bounded_triple_violation(t, params)) {
        throw invalid_input_error("invalid bounded triple: " + *v);
    }
    const int d = params.d();
    const int r = params.r();
    std::vector<DModularPart> rows(static_cast<std::size_t>(t.m), DModularPart{2, Label::D});

    for (int a : t.alpha) {
        grow_rows(rows, a / (2 * d), 2);
    }
    // beta and gamma are already largest first.
    for (int b : t.beta) {
        const int k = (b - r) / d + 1;
        grow_rows(rows, k - 1, 1);
        auto &row = rows[k - 1];
        if (row.label != Label::D) {
            throw internal_consistency_error("beta insertion hit row " + std::to_string(k) + " twice");
        }
        row.label = Label::R;
    }
    for (int g : t.gamma) {
        const int k = (g + r) / d;
        grow_rows(rows, k - 1, 1);
        auto &row = rows[k - 1];
        if (row.label == Label::D) {
            row.label = Label::DmR;
        } else if (row.label == Label::R) {
            row.label = Label::Dbar;
        } else {
            throw internal_consistency_error("gamma insertion hit row " + std::to_string(k) + " twice");
        }
    }
    return DModularOverpartition(std::move(rows));
}

BoundedTriple deconstruct(const DModularOverpartition &mu, const Params &params)
{
    if (auto v = family_violation(mu, FamilyId::Cbar, params)) {
        throw invalid_input_error("not a cbar d-modular overpartition: " + *v);
    }
    const int d = params.d();
    const int r = params.r();
    auto rows = mu.parts;
    BoundedTriple t;
    t.m = static_cast<int>(rows.size());

    const auto fail = [] {
        return internal_consistency_error("cbar object does not deconstruct to a bounded triple");
    };
    const auto shrink_above = [&](std::size_t i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (--rows[j].length < 2) {
                throw fail();
            }
        }
    };

    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].label == Label::DmR || rows[i].label == Label::Dbar) {
            rows[i].label = rows[i].label == Label::Dbar ? Label::R : Label::D;
            shrink_above(i);
            t.gamma.push_back(static_cast<int>(i + 1) * d - r);
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].label == Label::R) {
            rows[i].label = Label::D;
            shrink_above(i);
            t.beta.push_back(static_cast<int>(i) * d + r);
        }
    }
    std::reverse(t.gamma.begin(), t.gamma.end());
    std::reverse(t.beta.begin(), t.beta.end());

    // Remaining rows are 2 + 2h_i with h non-increasing; alpha is h conjugated.
    std::vector<int> h;
    for (const auto &row : rows) {
        if (row.length < 2 || row.length % 2 != 0) {
            throw fail();
        }
        h.push_back((row.length - 2) / 2);
    }
    if (!std::is_sorted(h.begin(), h.end(), std::greater<>{})) {
        throw fail();
    }
    const int top = h.empty() ? 0 : h.front();
    for (int j = 1; j <= top; ++j) {
        const auto s = std::count_if(h.begin(), h.end(), [j](int x) { return x >= j; });
        t.alpha.push_back(static_cast<int>(s) * 2 * d);
    }

    if (bounded_triple_violation(t, params) || construct(t, params) != mu) {
        throw fail();
    }
    return t;
}

BivariateTable cbar_table_formula(const Params &params, int max_m, int max_n)
{
    if (max_m < 0 || max_n < 0) {
        throw std::invalid_argument("table bounds must be non-negative");
    }
    const auto d = static_cast<std::size_t>(params.d());
    const auto r = static_cast<std::size_t>(params.r());
    const auto order = static_cast<std::size_t>(max_n);
    BivariateTable table(static_cast<std::size_t>(max_m), order);
    for (std::size_t m = 0; m <= static_cast<std::size_t>(max_m); ++m) {
        auto term = Series::monomial(order, d * m);
        term *= poch_finite(minus_q(r), d, m, order);
        term *= poch_finite(minus_q(d - r), d, m, order);
        term *= poch_finite(plus_q(2 * d), 2 * d, m, order).inverse();
        for (std::size_t n = 0; n <= order; ++n) {
            table.at(m, n) = term[n];
        }
    }
    return table;
}

} // namespace overschur
