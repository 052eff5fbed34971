#include <overschur/partition.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace overschur
{

Params::Params(int d, int r) : m_d(d), m_r(r)
{
    if (d < 3 || r < 1 || 2 * r >= d) {
        throw std::invalid_argument("invalid parameters: need d >= 3 and 1 <= r < d/2 (got d=" + std::to_string(d)
                                    + ", r=" + std::to_string(r) + ")");
    }
}

int Overpartition::weight() const noexcept
{
    return std::accumulate(parts.begin(), parts.end(), 0, [](int acc, OverPart p) { return acc + p.value; });
}

bool Overpartition::is_canonical() const noexcept
{
    return std::is_sorted(parts.begin(), parts.end(), std::greater<>{});
}

void Overpartition::canonicalize()
{
    std::sort(parts.begin(), parts.end(), std::greater<>{});
}

std::ostream &operator<<(std::ostream &os, const Overpartition &lambda)
{
    os << "(";
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
        if (i) {
            os << ", ";
        }
        os << (lambda.parts[i].overlined ? "~" : "") << lambda.parts[i].value;
    }
    return os << ")";
}

std::string_view label_name(Label l) noexcept
{
    switch (l) {
        case Label::R:
            return "r";
        case Label::DmR:
            return "d-r";
        case Label::Dbar:
            return "dbar";
        case Label::D:
            return "d";
    }
    return "?";
}

std::optional<Label> parse_label(std::string_view s) noexcept
{
    for (auto l : all_labels) {
        if (label_name(l) == s) {
            return l;
        }
    }
    return std::nullopt;
}

bool DModularOverpartition::is_ordered() const noexcept
{
    return std::is_sorted(parts.begin(), parts.end(), std::greater<>{});
}

std::ostream &operator<<(std::ostream &os, const DModularOverpartition &mu)
{
    os << "(";
    for (std::size_t i = 0; i < mu.parts.size(); ++i) {
        if (i) {
            os << ", ";
        }
        os << mu.parts[i].length << "_" << label_name(mu.parts[i].label);
    }
    return os << ")";
}

int weight_part(DModularPart p, const Params &params) noexcept
{
    const int d = params.d();
    const int r = params.r();
    switch (p.label) {
        case Label::R:
            return (p.length - 1) * d + r;
        case Label::DmR:
            return p.length * d - r;
        case Label::Dbar:
            return p.length * d;
        case Label::D:
            return (p.length - 1) * d;
    }
    return 0;
}

int weight(const DModularOverpartition &mu, const Params &params) noexcept
{
    int w = 0;
    for (const auto &p : mu.parts) {
        w += weight_part(p, params);
    }
    return w;
}

DModularPart to_dmodular_part(OverPart part, const Params &params)
{
    const int d = params.d();
    const int r = params.r();
    const int v = part.value;
    if (v <= 0) {
        throw not_representable_error("part " + std::to_string(v) + " is not positive");
    }
    const int res = v % d;
    if (!part.overlined) {
        if (res != 0) {
            throw not_representable_error("non-overlined part " + std::to_string(v) + " is not a multiple of d");
        }
        return {v / d + 1, Label::D};
    }
    if (res == r) {
        return {(v - r) / d + 1, Label::R};
    }
    if (res == d - r) {
        return {(v + r) / d, Label::DmR};
    }
    if (res == 0) {
        return {v / d, Label::Dbar};
    }
    throw not_representable_error("overlined part " + std::to_string(v) + " is not congruent to r, d-r or 0 mod d");
}

OverPart from_dmodular_part(DModularPart p, const Params &params)
{
    if (p.length < 1) {
        throw invalid_part_error("d-modular part length must be positive");
    }
    if (p.label == Label::D && p.length == 1) {
        throw invalid_part_error("degenerate part 1_d has weight 0");
    }
    return {weight_part(p, params), p.label != Label::D};
}

DModularOverpartition to_dmodular(const Overpartition &lambda, const Params &params)
{
    DModularOverpartition mu;
    mu.parts.reserve(lambda.parts.size());
    for (const auto &p : lambda.parts) {
        mu.parts.push_back(to_dmodular_part(p, params));
    }
    std::sort(mu.parts.begin(), mu.parts.end(), std::greater<>{});
    return mu;
}

Overpartition from_dmodular(const DModularOverpartition &mu, const Params &params)
{
    Overpartition lambda;
    lambda.parts.reserve(mu.parts.size());
    for (const auto &p : mu.parts) {
        lambda.parts.push_back(from_dmodular_part(p, params));
    }
    lambda.canonicalize();
    return lambda;
}

LabelMatrix matrix_A(const Params &params) noexcept
{
    const int d = params.d();
    const int r = params.r();
    // rows/cols: r, d-r, dbar, d
    return {{
        {d, 2 * r, d + r, r},
        {2 * d - 2 * r, d, 2 * d - r, d - r},
        {2 * d - r, d + r, 2 * d, d},
        {d - r, r, d, 0},
    }};
}

int matrix_A(const Params &params, Label larger, Label smaller) noexcept
{
    return matrix_A(params)[label_index(larger)][label_index(smaller)];
}

LabelMatrix matrix_Aprime() noexcept
{
    return {{
        {1, 1, 2, 0},
        {1, 1, 2, 0},
        {1, 1, 2, 0},
        {1, 1, 2, 0},
    }};
}

int matrix_Aprime(Label larger, Label smaller) noexcept
{
    return matrix_Aprime()[label_index(larger)][label_index(smaller)];
}

std::string_view family_name(FamilyId f) noexcept
{
    switch (f) {
        case FamilyId::B:
            return "b";
        case FamilyId::E:
            return "e";
        case FamilyId::C:
            return "c";
        case FamilyId::Bbar:
            return "bbar";
        case FamilyId::Ebar:
            return "ebar";
        case FamilyId::Cbar:
            return "cbar";
    }
    return "?";
}

std::optional<FamilyId> parse_family(std::string_view s) noexcept
{
    for (auto f : all_families) {
        if (family_name(f) == s) {
            return f;
        }
    }
    return std::nullopt;
}

namespace
{

std::string part_str(const OverPart &p)
{
    return (p.overlined ? "~" : "") + std::to_string(p.value);
}

std::optional<std::string> basic_shape_violation(const Overpartition &lambda)
{
    for (const auto &p : lambda.parts) {
        if (p.value <= 0) {
            return "part " + std::to_string(p.value) + " is not positive";
        }
    }
    if (!lambda.is_canonical()) {
        return std::string("parts are not in non-increasing canonical order");
    }
    for (std::size_t i = 0; i + 1 < lambda.parts.size(); ++i) {
        if (lambda.parts[i] == lambda.parts[i + 1] && lambda.parts[i].overlined) {
            return "overlined part " + part_str(lambda.parts[i]) + " occurs more than once";
        }
    }
    return std::nullopt;
}

std::optional<std::string> classical_violation(const Overpartition &lambda, FamilyId family, const Params &params)
{
    for (const auto &p : lambda.parts) {
        if (p.overlined) {
            throw invalid_input_error("family " + std::string(family_name(family))
                                      + " is defined on partitions without overlines; got " + part_str(p));
        }
    }
    if (auto v = basic_shape_violation(lambda)) {
        return v;
    }
    const int d = params.d();
    const int r = params.r();
    const auto &parts = lambda.parts;

    if (family == FamilyId::E) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const int res = parts[i].value % d;
            if (res != r && res != d - r) {
                return "part " + part_str(parts[i]) + " is not congruent to +-r mod d";
            }
            if (i + 1 < parts.size() && parts[i].value == parts[i + 1].value) {
                return "part " + part_str(parts[i]) + " repeats";
            }
        }
        return std::nullopt;
    }

    // B and C
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int res = parts[i].value % d;
        if (res != r && res != d - r && res != 0) {
            return "part " + part_str(parts[i]) + " is not congruent to r, d-r or 0 mod d";
        }
        if (i + 1 < parts.size()) {
            const int gap = parts[i].value - parts[i + 1].value;
            const bool strict = parts[i + 1].value % d == 0;
            if (gap < d || (strict && gap == d)) {
                return "gap between " + part_str(parts[i]) + " and " + part_str(parts[i + 1]) + " is too small";
            }
        }
    }
    if (family == FamilyId::C && !parts.empty() && parts.back().value <= d) {
        return "smallest part " + part_str(parts.back()) + " is not larger than d";
    }
    return std::nullopt;
}

std::optional<std::string> ebar_violation(const Overpartition &lambda, const Params &params)
{
    if (auto v = basic_shape_violation(lambda)) {
        return v;
    }
    const int d = params.d();
    const int r = params.r();
    for (const auto &p : lambda.parts) {
        if (p.overlined) {
            const int res = p.value % d;
            if (res != r && res != d - r) {
                return "overlined part " + part_str(p) + " is not congruent to +-r mod d";
            }
        } else if (p.value % (2 * d) != 0) {
            return "non-overlined part " + part_str(p) + " is not a multiple of 2d";
        }
    }
    return std::nullopt;
}

std::optional<std::string> dmodular_difference_violation(const DModularOverpartition &mu, FamilyId family,
                                                         const LabelMatrix &aprime)
{
    const auto &parts = mu.parts;
    for (const auto &p : parts) {
        if (p.length < 1) {
            return std::string("part with non-positive length");
        }
        if (p.length == 1 && p.label == Label::D) {
            return std::string("contains the degenerate part 1_d");
        }
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const auto &big = parts[i];
        const auto &small = parts[i + 1];
        const int need = aprime[label_index(big.label)][label_index(small.label)];
        const int diff = big.length - small.length;
        if (diff < need || (diff - need) % 2 != 0) {
            std::string msg = "difference between row " + std::to_string(i + 1) + " and row " + std::to_string(i + 2)
                              + " is " + std::to_string(diff) + ", need >= " + std::to_string(need) + " with the same parity";
            return msg;
        }
    }
    if (!parts.empty()) {
        const int smallest = parts.back().length;
        if (family == FamilyId::Bbar && smallest % 2 == 0) {
            return "smallest part has even length " + std::to_string(smallest);
        }
        if (family == FamilyId::Cbar && smallest % 2 != 0) {
            return "smallest part has odd length " + std::to_string(smallest);
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::string> family_violation(const Overpartition &lambda, FamilyId family, const Params &params)
{
    switch (family) {
        case FamilyId::B:
        case FamilyId::E:
        case FamilyId::C:
            return classical_violation(lambda, family, params);
        case FamilyId::Ebar:
            return ebar_violation(lambda, params);
        case FamilyId::Bbar:
        case FamilyId::Cbar:
            break;
    }
    if (auto v = basic_shape_violation(lambda)) {
        return v;
    }
    DModularOverpartition mu;
    try {
        mu = to_dmodular(lambda, params);
    } catch (const not_representable_error &e) {
        return std::string(e.what());
    }
    return dmodular_difference_violation(mu, family, matrix_Aprime());
}

std::optional<std::string> family_violation(const DModularOverpartition &mu, FamilyId family, const Params &params,
                                            const LabelMatrix &aprime)
{
    if (family == FamilyId::Bbar || family == FamilyId::Cbar) {
        if (!mu.is_ordered()) {
            return std::string("parts are not in non-increasing d-modular order");
        }
        return dmodular_difference_violation(mu, family, aprime);
    }
    Overpartition lambda;
    try {
        lambda = from_dmodular(mu, params);
    } catch (const invalid_part_error &e) {
        return std::string(e.what());
    }
    return family_violation(lambda, family, params);
}

std::optional<std::string> family_violation(const DModularOverpartition &mu, FamilyId family, const Params &params)
{
    return family_violation(mu, family, params, matrix_Aprime());
}

bool check_family(const Overpartition &lambda, FamilyId family, const Params &params)
{
    return !family_violation(lambda, family, params).has_value();
}

bool check_family(const DModularOverpartition &mu, FamilyId family, const Params &params)
{
    return !family_violation(mu, family, params).has_value();
}

namespace value_level
{

namespace
{

std::optional<Label> value_label(OverPart p, int d, int r)
{
    const int res = p.value % d;
    if (!p.overlined) {
        return res == 0 ? std::optional(Label::D) : std::nullopt;
    }
    if (res == r) {
        return Label::R;
    }
    if (res == d - r) {
        return Label::DmR;
    }
    if (res == 0) {
        return Label::Dbar;
    }
    return std::nullopt;
}

int mod(int a, int m)
{
    return ((a % m) + m) % m;
}

// Residue/overline rules and the pairwise matrix conditions; the smallest-part
// rule is left to the caller.
bool pairwise_ok(const Overpartition &lambda, const Params &params, const LabelMatrix &a)
{
    if (basic_shape_violation(lambda)) {
        return false;
    }
    const int d = params.d();
    const int r = params.r();
    std::vector<Label> labels;
    for (const auto &p : lambda.parts) {
        auto l = value_label(p, d, r);
        if (!l) {
            return false;
        }
        labels.push_back(*l);
    }
    for (std::size_t i = 0; i + 1 < lambda.parts.size(); ++i) {
        const int diff = lambda.parts[i].value - lambda.parts[i + 1].value;
        const int need = a[label_index(labels[i])][label_index(labels[i + 1])];
        if (diff < need || mod(diff - need, 2 * d) != 0) {
            return false;
        }
    }
    return true;
}

} // namespace

bool check_bbar(const Overpartition &lambda, const Params &params, const LabelMatrix &a)
{
    if (!pairwise_ok(lambda, params, a)) {
        return false;
    }
    if (lambda.parts.empty()) {
        return true;
    }
    const int d = params.d();
    const int r = params.r();
    const auto last = lambda.parts.back();
    const int res = last.value % (2 * d);
    if (last.overlined) {
        return res == r || res == d - r || res == d;
    }
    return res == 0;
}

bool check_cbar(const Overpartition &lambda, const Params &params, const LabelMatrix &a)
{
    if (!pairwise_ok(lambda, params, a)) {
        return false;
    }
    if (lambda.parts.empty()) {
        return true;
    }
    const int d = params.d();
    const int r = params.r();
    const auto last = lambda.parts.back();
    const int res = last.value % (2 * d);
    if (last.overlined) {
        return res == d + r || res == 2 * d - r || res == 0;
    }
    return res == d;
}

} // namespace value_level

} // namespace overschur
