#include <overschur/enumerate.hpp>

#include <algorithm>

namespace overschur
{

namespace
{

class RawGenerator
{
public:
    RawGenerator(FamilyId family, const Params &params, int max_n,
                 const std::function<void(const Overpartition &)> &visit)
        : m_family(family), m_d(params.d()), m_r(params.r()), m_max_n(max_n), m_visit(visit)
    {
    }

    void run()
    {
        grow(0);
    }

private:
    bool allowed_value(OverPart p) const
    {
        const int res = p.value % m_d;
        switch (m_family) {
            case FamilyId::B:
            case FamilyId::C:
                return !p.overlined && (res == m_r || res == m_d - m_r || res == 0);
            case FamilyId::E:
                return !p.overlined && (res == m_r || res == m_d - m_r);
            case FamilyId::Ebar:
                if (p.overlined) {
                    return res == m_r || res == m_d - m_r;
                }
                return p.value % (2 * m_d) == 0;
            default:
                return false;
        }
    }

    // Whether `next` may follow `prev` (the previous, larger part).
    bool may_follow(OverPart prev, OverPart next) const
    {
        switch (m_family) {
            case FamilyId::B:
            case FamilyId::C: {
                const int gap = prev.value - next.value;
                return next.value % m_d == 0 ? gap > m_d : gap >= m_d;
            }
            case FamilyId::E:
                return next.value < prev.value;
            case FamilyId::Ebar:
                return next < prev || (next == prev && !next.overlined);
            default:
                return false;
        }
    }

    bool terminal_ok() const
    {
        if (m_family == FamilyId::C && !m_current.parts.empty()) {
            return m_current.parts.back().value > m_d;
        }
        return true;
    }

    void grow(int weight)
    {
        if (terminal_ok()) {
            m_visit(m_current);
        }
        const int room = m_max_n - weight;
        int top = room;
        if (!m_current.parts.empty()) {
            top = std::min(top, m_current.parts.back().value);
        }
        for (int v = top; v >= 1; --v) {
            for (bool ov : {true, false}) {
                const OverPart p{v, ov};
                if (!allowed_value(p)) {
                    continue;
                }
                if (!m_current.parts.empty() && !may_follow(m_current.parts.back(), p)) {
                    continue;
                }
                m_current.parts.push_back(p);
                grow(weight + v);
                m_current.parts.pop_back();
            }
        }
    }

    FamilyId m_family;
    int m_d;
    int m_r;
    int m_max_n;
    const std::function<void(const Overpartition &)> &m_visit;
    Overpartition m_current;
};

class DModularGenerator
{
public:
    DModularGenerator(FamilyId family, const Params &params, int max_n, const LabelMatrix &aprime,
                      const std::function<void(const DModularOverpartition &, int)> &visit)
        : m_family(family), m_params(params), m_max_n(max_n), m_aprime(aprime), m_visit(visit)
    {
    }

    void run()
    {
        grow(0);
    }

private:
    bool terminal_ok() const
    {
        if (m_current.parts.empty()) {
            return true;
        }
        const int smallest = m_current.parts.back().length;
        return m_family == FamilyId::Bbar ? smallest % 2 == 1 : smallest % 2 == 0;
    }

    void grow(int weight)
    {
        if (terminal_ok()) {
            m_visit(m_current, weight);
        }
        const int room = m_max_n - weight;
        // Every part other than 1_d weighs at least (length - 1) d.
        const int max_len = room / m_params.d() + 1;
        for (int len = max_len; len >= 1; --len) {
            for (auto label : {Label::Dbar, Label::DmR, Label::R, Label::D}) {
                const DModularPart p{len, label};
                if (len == 1 && label == Label::D) {
                    continue;
                }
                const int w = weight_part(p, m_params);
                if (w > room) {
                    continue;
                }
                if (!m_current.parts.empty()) {
                    const auto &prev = m_current.parts.back();
                    if (p > prev) {
                        continue;
                    }
                    const int need = m_aprime[label_index(prev.label)][label_index(label)];
                    const int diff = prev.length - len;
                    if (diff < need || (diff - need) % 2 != 0) {
                        continue;
                    }
                }
                m_current.parts.push_back(p);
                grow(weight + w);
                m_current.parts.pop_back();
            }
        }
    }

    FamilyId m_family;
    Params m_params;
    int m_max_n;
    const LabelMatrix &m_aprime;
    const std::function<void(const DModularOverpartition &, int)> &m_visit;
    DModularOverpartition m_current;
};

bool is_dmodular_family(FamilyId f)
{
    return f == FamilyId::Bbar || f == FamilyId::Cbar;
}

} // namespace

void for_each_dmodular_member(FamilyId family, const Params &params, int max_n, const LabelMatrix &aprime,
                              const std::function<void(const DModularOverpartition &, int weight)> &visit)
{
    if (!is_dmodular_family(family)) {
        throw std::invalid_argument("d-modular enumeration is only defined for bbar and cbar");
    }
    if (max_n < 0) {
        return;
    }
    DModularGenerator(family, params, max_n, aprime, visit).run();
}

void for_each_member(FamilyId family, const Params &params, int max_n,
                     const std::function<void(const Overpartition &)> &visit)
{
    if (max_n < 0) {
        return;
    }
    if (is_dmodular_family(family)) {
        const auto aprime = matrix_Aprime();
        for_each_dmodular_member(family, params, max_n, aprime,
                                 [&](const DModularOverpartition &mu, int) { visit(from_dmodular(mu, params)); });
        return;
    }
    RawGenerator(family, params, max_n, visit).run();
}

std::vector<Overpartition> enumerate(FamilyId family, const Params &params, int n)
{
    std::vector<Overpartition> out;
    for_each_member(family, params, n, [&](const Overpartition &lambda) {
        if (lambda.weight() == n) {
            out.push_back(lambda);
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DModularOverpartition> enumerate_dmodular(FamilyId family, const Params &params, int n)
{
    std::vector<DModularOverpartition> out;
    const auto aprime = matrix_Aprime();
    for_each_dmodular_member(family, params, n, aprime, [&](const DModularOverpartition &mu, int w) {
        if (w == n) {
            out.push_back(mu);
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

Count count(FamilyId family, const Params &params, int n)
{
    if (n < 0) {
        return 0;
    }
    return count_table(family, params, n).back();
}

std::vector<Count> count_table(FamilyId family, const Params &params, int max_n)
{
    if (is_dmodular_family(family)) {
        return count_table(family, params, max_n, matrix_Aprime());
    }
    std::vector<Count> table(static_cast<std::size_t>(std::max(max_n, -1) + 1), 0);
    for_each_member(family, params, max_n, [&](const Overpartition &lambda) { ++table[lambda.weight()]; });
    return table;
}

std::vector<Count> count_table(FamilyId family, const Params &params, int max_n, const LabelMatrix &aprime)
{
    std::vector<Count> table(static_cast<std::size_t>(std::max(max_n, -1) + 1), 0);
    for_each_dmodular_member(family, params, max_n, aprime,
                             [&](const DModularOverpartition &, int w) { ++table[w]; });
    return table;
}

std::map<int, Count> count_by_parts(FamilyId family, const Params &params, int n)
{
    std::map<int, Count> out;
    for_each_member(family, params, n, [&](const Overpartition &lambda) {
        if (lambda.weight() == n) {
            ++out[static_cast<int>(lambda.parts.size())];
        }
    });
    return out;
}

std::vector<std::vector<Count>> count_by_parts_table(FamilyId family, const Params &params, int max_m, int max_n)
{
    std::vector<std::vector<Count>> table(max_m + 1, std::vector<Count>(max_n + 1, 0));
    for_each_member(family, params, max_n, [&](const Overpartition &lambda) {
        const auto m = static_cast<int>(lambda.parts.size());
        if (m <= max_m) {
            ++table[m][lambda.weight()];
        }
    });
    return table;
}

} // namespace overschur
