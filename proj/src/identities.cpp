#include <overschur/identities.hpp>

#include <overschur/construction.hpp>
#include <overschur/enumerate.hpp>

namespace overschur
{

std::string_view identity_name(IdentityId id) noexcept
{
    switch (id) {
        case IdentityId::SchurProduct:
            return "schur-product";
        case IdentityId::CG3:
            return "c-g3";
        case IdentityId::BbarProduct:
            return "bbar-product";
        case IdentityId::CbarG2:
            return "cbar-g2";
        case IdentityId::CbarSumEq:
            return "cbar-sum-eq";
        case IdentityId::CbarBivariate:
            return "cbar-bivariate";
    }
    return "?";
}

std::optional<IdentityId> parse_identity(std::string_view s) noexcept
{
    for (auto id : all_identities) {
        if (identity_name(id) == s) {
            return id;
        }
    }
    return std::nullopt;
}

bool uses_enumeration(IdentityId id) noexcept
{
    return id != IdentityId::CbarSumEq;
}

Series counting_series(FamilyId family, const Params &params, std::size_t order)
{
    const auto counts = count_table(family, params, static_cast<int>(order));
    Series s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        s[n] = counts[n];
    }
    return s;
}

Series schur_product(const Params &params, std::size_t order)
{
    const auto d = static_cast<std::size_t>(params.d());
    const auto r = static_cast<std::size_t>(params.r());
    return poch_infinite({minus_q(r), minus_q(d - r)}, d, order);
}

Series bbar_product(const Params &params, std::size_t order)
{
    return schur_product(params, order) * inv_poch_infinite(2 * static_cast<std::size_t>(params.d()), order);
}

Series cbar_sum(const Params &params, std::size_t order)
{
    const auto d = static_cast<std::size_t>(params.d());
    const auto r = static_cast<std::size_t>(params.r());
    Series sum(order);
    for (std::size_t n = 0; d * n <= order; ++n) {
        auto term = Series::monomial(order, d * n);
        term *= poch_finite(minus_q(r), d, n, order);
        term *= poch_finite(minus_q(d - r), d, n, order);
        term *= poch_finite(plus_q(2 * d), 2 * d, n, order).inverse();
        sum += term;
    }
    return sum;
}

IdentitySides identity_sides(IdentityId id, const Params &params, std::size_t order)
{
    const auto d = static_cast<std::size_t>(params.d());
    const auto r = static_cast<std::size_t>(params.r());
    switch (id) {
        case IdentityId::SchurProduct:
            return {counting_series(FamilyId::B, params, order), schur_product(params, order)};
        case IdentityId::CG3:
            return {counting_series(FamilyId::C, params, order),
                    schur_product(params, order) * g3_special(d, r, order)};
        case IdentityId::BbarProduct:
            return {counting_series(FamilyId::Bbar, params, order), bbar_product(params, order)};
        case IdentityId::CbarG2:
            return {counting_series(FamilyId::Cbar, params, order),
                    bbar_product(params, order) * g2_special(d, r, order)};
        case IdentityId::CbarSumEq:
            return {cbar_sum(params, order), bbar_product(params, order) * g2_special(d, r, order)};
        case IdentityId::CbarBivariate:
            break;
    }
    throw std::invalid_argument("cbar-bivariate compares tables, not series");
}

BivariateSides bivariate_sides(const Params &params, int max_m, int max_n)
{
    const auto counts = count_by_parts_table(FamilyId::Cbar, params, max_m, max_n);
    BivariateTable enumerated(static_cast<std::size_t>(max_m), static_cast<std::size_t>(max_n));
    for (int m = 0; m <= max_m; ++m) {
        for (int n = 0; n <= max_n; ++n) {
            enumerated.at(m, n) = counts[m][n];
        }
    }
    return {std::move(enumerated), cbar_table_formula(params, max_m, max_n)};
}

VerificationReport verify(IdentityId id, const Params &params, std::size_t order, const VerifyOptions &opts)
{
    VerificationReport report;
    report.identity = id;
    report.d = params.d();
    report.r = params.r();
    report.order = order;

    if (id == IdentityId::CbarBivariate) {
        // Every Cbar part weighs at least d.
        const int max_m = static_cast<int>(order) / params.d();
        auto sides = bivariate_sides(params, max_m, static_cast<int>(order));
        if (opts.corrupt_at && *opts.corrupt_at <= order) {
            sides.formula.at(0, *opts.corrupt_at) += 1;
        }
        for (std::size_t n = 0; n <= order; ++n) {
            for (std::size_t m = 0; m <= static_cast<std::size_t>(max_m); ++m) {
                if (sides.enumerated.at(m, n) != sides.formula.at(m, n)) {
                    report.equal = false;
                    report.at = n;
                    report.at_m = m;
                    report.lhs_coeff = sides.enumerated.at(m, n);
                    report.rhs_coeff = sides.formula.at(m, n);
                    return report;
                }
            }
        }
        return report;
    }

    auto sides = identity_sides(id, params, order);
    if (opts.corrupt_at && *opts.corrupt_at <= order) {
        sides.rhs[*opts.corrupt_at] += 1;
    }
    const auto cmp = series_compare(sides.lhs, sides.rhs);
    if (!cmp.equal()) {
        report.equal = false;
        report.at = cmp.mismatch_at;
        report.lhs_coeff = cmp.lhs;
        report.rhs_coeff = cmp.rhs;
    }
    return report;
}

} // namespace overschur
