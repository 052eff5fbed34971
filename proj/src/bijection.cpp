#include <overschur/bijection.hpp>

#include <algorithm>
#include <functional>

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

int head_or_zero(const std::vector<int> &v)
{
    return v.empty() ? 0 : v.front();
}

enum class Mark { Beta, Gamma };

// Add one column of height k (rows 1..k-1 grow by one) and mark row k.
void insert_column(std::vector<DModularPart> &rows, int k, Mark mark)
{
    const auto n = static_cast<int>(rows.size());
    if (k > n) {
        for (auto &row : rows) {
            ++row.length;
        }
        for (int i = n + 1; i <= k - 1; ++i) {
            rows.push_back({2, Label::D});
        }
        rows.push_back({1, mark == Mark::Beta ? Label::R : Label::DmR});
        return;
    }
    for (int i = 0; i < k - 1; ++i) {
        ++rows[i].length;
    }
    auto &target = rows[k - 1];
    if (mark == Mark::Beta) {
        if (target.label == Label::D) {
            target.label = Label::R;
        } else if (target.label == Label::DmR) {
            target.label = Label::Dbar;
        } else {
            throw internal_consistency_error("row " + std::to_string(k) + " already carries an r mark");
        }
    } else {
        if (target.label == Label::D) {
            target.label = Label::DmR;
        } else if (target.label == Label::R) {
            target.label = Label::Dbar;
        } else {
            throw internal_consistency_error("row " + std::to_string(k) + " already carries a d-r mark");
        }
    }
}

bool carries(Label l, Mark mark)
{
    if (mark == Mark::Beta) {
        return l == Label::R || l == Label::Dbar;
    }
    return l == Label::DmR || l == Label::Dbar;
}

Label strip(Label l, Mark mark)
{
    if (mark == Mark::Beta) {
        return l == Label::Dbar ? Label::DmR : Label::D;
    }
    return l == Label::Dbar ? Label::R : Label::D;
}

// Peel every `mark` column, lowest row first. Returns the column heights in
// decreasing order, or nullopt if a row would shrink to nothing.
std::optional<std::vector<int>> peel(std::vector<DModularPart> &rows, Mark mark)
{
    std::vector<int> heights;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!carries(rows[i].label, mark)) {
            continue;
        }
        rows[i].label = strip(rows[i].label, mark);
        for (std::size_t j = 0; j < i; ++j) {
            if (--rows[j].length < 1) {
                return std::nullopt;
            }
        }
        heights.push_back(static_cast<int>(i) + 1);
    }
    std::reverse(heights.begin(), heights.end());
    return heights;
}

std::optional<PartitionTriple> extract(const DModularOverpartition &mu, const Params &params, InsertionCase which)
{
    auto rows = mu.parts;
    // Undo in reverse insertion order: the set inserted last comes off first.
    const Mark first_off = which == InsertionCase::BetaFirst ? Mark::Gamma : Mark::Beta;
    const Mark second_off = which == InsertionCase::BetaFirst ? Mark::Beta : Mark::Gamma;
    auto a = peel(rows, first_off);
    if (!a) {
        return std::nullopt;
    }
    auto b = peel(rows, second_off);
    if (!b) {
        return std::nullopt;
    }
    // Rows created as padding by an overhanging first column end up as 1_d.
    while (!rows.empty() && rows.back() == DModularPart{1, Label::D}) {
        rows.pop_back();
    }

    PartitionTriple t;
    t.beta = which == InsertionCase::BetaFirst ? std::move(*b) : std::move(*a);
    t.gamma = which == InsertionCase::BetaFirst ? std::move(*a) : std::move(*b);
    for (const auto &row : rows) {
        if (row.label != Label::D) {
            return std::nullopt;
        }
        t.alpha.push_back(row.length);
    }
    if (triple_violation(t)) {
        return std::nullopt;
    }
    const bool beta_first = head_or_zero(t.beta) >= head_or_zero(t.gamma);
    if (beta_first != (which == InsertionCase::BetaFirst)) {
        return std::nullopt;
    }
    if (insert(t, params) != mu) {
        return std::nullopt;
    }
    return t;
}

} // namespace

std::ostream &operator<<(std::ostream &os, const PartitionTriple &t)
{
    os << "alpha=";
    print_seq(os, t.alpha);
    os << " beta=";
    print_seq(os, t.beta);
    os << " gamma=";
    print_seq(os, t.gamma);
    return os;
}

std::optional<std::string> triple_violation(const PartitionTriple &t)
{
    for (std::size_t i = 0; i < t.alpha.size(); ++i) {
        const int a = t.alpha[i];
        if (a < 3 || a % 2 == 0) {
            return "alpha length " + std::to_string(a) + " is not odd and >= 3";
        }
        if (i > 0 && a > t.alpha[i - 1]) {
            return std::string("alpha is not non-increasing");
        }
    }
    auto strictly_decreasing = [](const std::vector<int> &v, const char *name) -> std::optional<std::string> {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 1) {
                return std::string(name) + " length " + std::to_string(v[i]) + " is not positive";
            }
            if (i > 0 && v[i] >= v[i - 1]) {
                return std::string(name) + " is not strictly decreasing";
            }
        }
        return std::nullopt;
    };
    if (auto v = strictly_decreasing(t.beta, "beta")) {
        return v;
    }
    return strictly_decreasing(t.gamma, "gamma");
}

int weight(const PartitionTriple &t, const Params &params)
{
    int w = 0;
    for (int a : t.alpha) {
        w += weight_part({a, Label::D}, params);
    }
    for (int b : t.beta) {
        w += weight_part({b, Label::R}, params);
    }
    for (int g : t.gamma) {
        w += weight_part({g, Label::DmR}, params);
    }
    return w;
}

PartitionTriple decompose(const Overpartition &pi, const Params &params)
{
    if (auto v = family_violation(pi, FamilyId::Ebar, params)) {
        throw invalid_input_error("not an ebar overpartition: " + *v);
    }
    PartitionTriple t;
    for (const auto &p : pi.parts) {
        const auto part = to_dmodular_part(p, params);
        switch (part.label) {
            case Label::D:
                t.alpha.push_back(part.length);
                break;
            case Label::R:
                t.beta.push_back(part.length);
                break;
            case Label::DmR:
                t.gamma.push_back(part.length);
                break;
            case Label::Dbar:
                throw internal_consistency_error("ebar member produced an overlined multiple of d");
        }
    }
    for (auto *seq : {&t.alpha, &t.beta, &t.gamma}) {
        std::sort(seq->begin(), seq->end(), std::greater<>{});
    }
    return t;
}

Overpartition recompose(const PartitionTriple &t, const Params &params)
{
    if (auto v = triple_violation(t)) {
        throw invalid_input_error("invalid triple: " + *v);
    }
    Overpartition pi;
    for (int a : t.alpha) {
        pi.parts.push_back(from_dmodular_part({a, Label::D}, params));
    }
    for (int b : t.beta) {
        pi.parts.push_back(from_dmodular_part({b, Label::R}, params));
    }
    for (int g : t.gamma) {
        pi.parts.push_back(from_dmodular_part({g, Label::DmR}, params));
    }
    pi.canonicalize();
    return pi;
}

DModularOverpartition insert(const PartitionTriple &t, const Params &)
{
    if (auto v = triple_violation(t)) {
        throw invalid_input_error("invalid triple: " + *v);
    }
    std::vector<DModularPart> rows;
    for (int a : t.alpha) {
        rows.push_back({a, Label::D});
    }
    const bool beta_first = head_or_zero(t.beta) >= head_or_zero(t.gamma);
    const auto &first = beta_first ? t.beta : t.gamma;
    const auto &second = beta_first ? t.gamma : t.beta;
    const Mark first_mark = beta_first ? Mark::Beta : Mark::Gamma;
    const Mark second_mark = beta_first ? Mark::Gamma : Mark::Beta;
    for (int k : first) {
        insert_column(rows, k, first_mark);
    }
    for (int k : second) {
        insert_column(rows, k, second_mark);
    }
    return DModularOverpartition(std::move(rows));
}

ExtractionAttempts try_extractions(const DModularOverpartition &mu, const Params &params)
{
    return {extract(mu, params, InsertionCase::BetaFirst), extract(mu, params, InsertionCase::GammaFirst)};
}

PartitionTriple invert(const DModularOverpartition &mu, const Params &params)
{
    if (auto v = family_violation(mu, FamilyId::Bbar, params)) {
        throw invalid_input_error("not a bbar d-modular overpartition: " + *v);
    }
    if (auto t = extract(mu, params, InsertionCase::BetaFirst)) {
        return *t;
    }
    if (auto t = extract(mu, params, InsertionCase::GammaFirst)) {
        return *t;
    }
    throw internal_consistency_error("no triple re-inserts to the given bbar object");
}

Overpartition bijection_forward(const Overpartition &pi, const Params &params)
{
    return from_dmodular(insert(decompose(pi, params), params), params);
}

Overpartition bijection_inverse(const Overpartition &lambda, const Params &params)
{
    if (auto v = family_violation(lambda, FamilyId::Bbar, params)) {
        throw invalid_input_error("not a bbar overpartition: " + *v);
    }
    return recompose(invert(to_dmodular(lambda, params), params), params);
}

} // namespace overschur
