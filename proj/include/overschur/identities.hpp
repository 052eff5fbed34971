#ifndef OVERSCHUR_IDENTITIES_HPP
#define OVERSCHUR_IDENTITIES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <overschur/partition.hpp>
#include <overschur/qseries.hpp>

namespace overschur
{

// The generating-function statements that can be checked coefficientwise.
//   SchurProduct   B counts      == (-q^r,-q^{d-r};q^d)_inf
//   CG3            C counts      == (-q^r,-q^{d-r};q^d)_inf g3(-q^r;q^d)
//   BbarProduct    Bbar counts   == (-q^r,-q^{d-r};q^d)_inf / (q^{2d};q^{2d})_inf
//   CbarG2         Cbar counts   == BbarProduct * g2(-q^r;q^d)
//   CbarSumEq      sum_n q^{dn}(-q^r,-q^{d-r};q^d)_n/(q^{2d};q^{2d})_n == BbarProduct * g2(-q^r;q^d)
//   CbarBivariate  Cbar counts by number of parts == the same sum with x^m kept apart
enum class IdentityId { SchurProduct, CG3, BbarProduct, CbarG2, CbarSumEq, CbarBivariate };

inline constexpr std::array<IdentityId, 6> all_identities{IdentityId::SchurProduct, IdentityId::CG3,
                                                          IdentityId::BbarProduct,  IdentityId::CbarG2,
                                                          IdentityId::CbarSumEq,    IdentityId::CbarBivariate};

std::string_view identity_name(IdentityId id) noexcept;
std::optional<IdentityId> parse_identity(std::string_view s) noexcept;

// Whether the left side is produced by brute-force enumeration (and therefore
// should only be asked for at modest orders).
bool uses_enumeration(IdentityId id) noexcept;

struct IdentitySides {
    Series lhs;
    Series rhs;
};

// Counting series of an enumerated family up to q^order.
Series counting_series(FamilyId family, const Params &params, std::size_t order);

// Right-hand building blocks.
Series schur_product(const Params &params, std::size_t order);
Series bbar_product(const Params &params, std::size_t order);
Series cbar_sum(const Params &params, std::size_t order);

// Series identities only; throws std::invalid_argument for CbarBivariate.
IdentitySides identity_sides(IdentityId id, const Params &params, std::size_t order);

struct BivariateSides {
    BivariateTable enumerated;
    BivariateTable formula;
};

// Tables for m <= max_m and n <= max_n.
BivariateSides bivariate_sides(const Params &params, int max_m, int max_n);

struct VerifyOptions {
    // Add one to the right-hand coefficient of q^k before comparing.
    std::optional<std::size_t> corrupt_at;
};

struct VerificationReport {
    IdentityId identity{};
    int d = 0;
    int r = 0;
    std::size_t order = 0;
    bool equal = true;
    std::optional<std::size_t> at;
    // Part count of the mismatching entry, CbarBivariate only.
    std::optional<std::size_t> at_m;
    BigInt lhs_coeff{};
    BigInt rhs_coeff{};
};

VerificationReport verify(IdentityId id, const Params &params, std::size_t order, const VerifyOptions &opts = {});

} // namespace overschur

#endif
