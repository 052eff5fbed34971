#ifndef OVERSCHUR_PARTITION_HPP
#define OVERSCHUR_PARTITION_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace overschur
{

class not_representable_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class invalid_part_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class invalid_input_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class internal_consistency_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Modulus d and residue r, with d >= 3 and 1 <= r < d/2.
class Params
{
public:
    Params(int d, int r);

    int d() const noexcept
    {
        return m_d;
    }
    int r() const noexcept
    {
        return m_r;
    }

    bool operator==(const Params &) const = default;

private:
    int m_d;
    int m_r;
};

struct OverPart {
    int value = 0;
    bool overlined = false;

    auto operator<=>(const OverPart &) const = default;
};

// Canonical form: parts sorted descending by (value, overlined), so at equal
// value the overlined copy comes first.
struct Overpartition {
    std::vector<OverPart> parts;

    Overpartition() = default;
    explicit Overpartition(std::vector<OverPart> p) : parts(std::move(p)) {}

    int weight() const noexcept;
    bool is_canonical() const noexcept;
    void canonicalize();

    auto operator<=>(const Overpartition &) const = default;
};

std::ostream &operator<<(std::ostream &, const Overpartition &);

// Terminal cell of a d-modular row. The enumerator order is the index order of
// both difference matrices.
enum class Label { R = 0, DmR = 1, Dbar = 2, D = 3 };

inline constexpr std::array<Label, 4> all_labels{Label::R, Label::DmR, Label::Dbar, Label::D};

std::string_view label_name(Label l) noexcept;
std::optional<Label> parse_label(std::string_view s) noexcept;

constexpr std::size_t label_index(Label l) noexcept
{
    return static_cast<std::size_t>(l);
}

// Rank at equal length: D < R < DmR < Dbar.
constexpr int label_rank(Label l) noexcept
{
    switch (l) {
        case Label::D:
            return 0;
        case Label::R:
            return 1;
        case Label::DmR:
            return 2;
        case Label::Dbar:
            return 3;
    }
    return 0;
}

struct DModularPart {
    int length = 1;
    Label label = Label::D;

    bool operator==(const DModularPart &) const = default;
    std::strong_ordering operator<=>(const DModularPart &o) const noexcept
    {
        if (auto c = length <=> o.length; c != 0) {
            return c;
        }
        return label_rank(label) <=> label_rank(o.label);
    }
};

// Parts listed largest first under the DModularPart order.
struct DModularOverpartition {
    std::vector<DModularPart> parts;

    DModularOverpartition() = default;
    explicit DModularOverpartition(std::vector<DModularPart> p) : parts(std::move(p)) {}

    bool is_ordered() const noexcept;

    bool operator==(const DModularOverpartition &) const = default;
    auto operator<=>(const DModularOverpartition &) const = default;
};

std::ostream &operator<<(std::ostream &, const DModularOverpartition &);

int weight_part(DModularPart p, const Params &params) noexcept;
int weight(const DModularOverpartition &mu, const Params &params) noexcept;

// Raw part -> (length, label). Throws not_representable_error on a residue
// outside {r, d-r, 0} (overlined) or a non-multiple of d (non-overlined).
DModularPart to_dmodular_part(OverPart part, const Params &params);
OverPart from_dmodular_part(DModularPart p, const Params &params);

DModularOverpartition to_dmodular(const Overpartition &lambda, const Params &params);
Overpartition from_dmodular(const DModularOverpartition &mu, const Params &params);

// 4x4 table indexed [label of larger part][label of smaller part].
using LabelMatrix = std::array<std::array<int, 4>, 4>;

LabelMatrix matrix_A(const Params &params) noexcept;
int matrix_A(const Params &params, Label larger, Label smaller) noexcept;

LabelMatrix matrix_Aprime() noexcept;
int matrix_Aprime(Label larger, Label smaller) noexcept;

enum class FamilyId { B, E, C, Bbar, Ebar, Cbar };

inline constexpr std::array<FamilyId, 6> all_families{FamilyId::B,    FamilyId::E,    FamilyId::C,
                                                      FamilyId::Bbar, FamilyId::Ebar, FamilyId::Cbar};

std::string_view family_name(FamilyId f) noexcept;
std::optional<FamilyId> parse_family(std::string_view s) noexcept;

// First violated membership condition, or nullopt if the object belongs to
// the family. B/E/C reject overlined input with invalid_input_error.
std::optional<std::string> family_violation(const Overpartition &lambda, FamilyId family, const Params &params);
std::optional<std::string> family_violation(const DModularOverpartition &mu, FamilyId family, const Params &params);

// Bbar/Cbar difference rule with a caller-supplied matrix; the other families
// ignore the matrix.
std::optional<std::string> family_violation(const DModularOverpartition &mu, FamilyId family, const Params &params,
                                            const LabelMatrix &aprime);

bool check_family(const Overpartition &lambda, FamilyId family, const Params &params);
bool check_family(const DModularOverpartition &mu, FamilyId family, const Params &params);

// Bbar/Cbar membership tested directly on part values against the matrix A.
// Independent of the d-modular route; used to cross-check it.
namespace value_level
{

bool check_bbar(const Overpartition &lambda, const Params &params, const LabelMatrix &a);
bool check_cbar(const Overpartition &lambda, const Params &params, const LabelMatrix &a);

inline bool check_bbar(const Overpartition &lambda, const Params &params)
{
    return check_bbar(lambda, params, matrix_A(params));
}
inline bool check_cbar(const Overpartition &lambda, const Params &params)
{
    return check_cbar(lambda, params, matrix_A(params));
}

} // namespace value_level

} // namespace overschur

#endif
