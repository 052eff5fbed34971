#ifndef OVERSCHUR_QSERIES_HPP
#define OVERSCHUR_QSERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace overschur
{

using BigInt = boost::multiprecision::cpp_int;

class order_mismatch_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class divergent_product_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class invalid_parameters_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Power series in q truncated after q^order (inclusive). Coefficient
// storage always has exactly order + 1 entries.
template <typename Coeff>
class TruncatedSeries
{
public:
    using coeff_type = Coeff;

    explicit TruncatedSeries(std::size_t order) : m_coeffs(order + 1, Coeff(0)) {}

    TruncatedSeries(std::size_t order, std::initializer_list<Coeff> leading) : TruncatedSeries(order)
    {
        std::size_t i = 0;
        for (const auto &c : leading) {
            if (i > order) {
                break;
            }
            m_coeffs[i++] = c;
        }
    }

    static TruncatedSeries one(std::size_t order)
    {
        TruncatedSeries s(order);
        s.m_coeffs[0] = 1;
        return s;
    }

    // c * q^e, dropped entirely when e > order.
    static TruncatedSeries monomial(std::size_t order, std::size_t e, Coeff c = Coeff(1))
    {
        TruncatedSeries s(order);
        if (e <= order) {
            s.m_coeffs[e] = std::move(c);
        }
        return s;
    }

    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1;
    }

    const Coeff &operator[](std::size_t e) const
    {
        return m_coeffs.at(e);
    }
    Coeff &operator[](std::size_t e)
    {
        return m_coeffs.at(e);
    }

    std::span<const Coeff> coeffs() const noexcept
    {
        return m_coeffs;
    }

    bool operator==(const TruncatedSeries &) const = default;

    TruncatedSeries &operator+=(const TruncatedSeries &other)
    {
        require_same_order(other);
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            m_coeffs[i] += other.m_coeffs[i];
        }
        return *this;
    }

    TruncatedSeries &operator-=(const TruncatedSeries &other)
    {
        require_same_order(other);
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            m_coeffs[i] -= other.m_coeffs[i];
        }
        return *this;
    }

    TruncatedSeries &operator*=(const TruncatedSeries &other)
    {
        *this = *this * other;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        a += b;
        return a;
    }

    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        a -= b;
        return a;
    }

    // Cauchy product, truncated.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        a.require_same_order(b);
        const std::size_t n = a.order();
        TruncatedSeries out(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.m_coeffs[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (b.m_coeffs[j] != 0) {
                    out.m_coeffs[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
                }
            }
        }
        return out;
    }

    // Multiply in place by (1 + c q^e); cheaper than a full product.
    void mul_binomial(const Coeff &c, std::size_t e)
    {
        if (e == 0) {
            for (auto &x : m_coeffs) {
                x *= (Coeff(1) + c);
            }
            return;
        }
        for (std::size_t i = order(); i >= e; --i) {
            m_coeffs[i] += c * m_coeffs[i - e];
            if (i == e) {
                break;
            }
        }
    }

    // Multiplicative inverse; defined only when the constant term is +1 or -1.
    TruncatedSeries inverse() const
    {
        const Coeff &c0 = m_coeffs[0];
        if (c0 != 1 && c0 != -1) {
            throw std::domain_error("series inverse requires constant term +1 or -1");
        }
        const std::size_t n = order();
        TruncatedSeries out(n);
        out.m_coeffs[0] = c0;
        for (std::size_t k = 1; k <= n; ++k) {
            Coeff acc(0);
            for (std::size_t i = 1; i <= k; ++i) {
                if (m_coeffs[i] != 0) {
                    acc += m_coeffs[i] * out.m_coeffs[k - i];
                }
            }
            // c0 * c0 == 1, so dividing by c0 is multiplying by it.
            out.m_coeffs[k] = -acc * c0;
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
    {
        bool first = true;
        for (std::size_t e = 0; e <= s.order(); ++e) {
            const auto &c = s.m_coeffs[e];
            if (c == 0) {
                continue;
            }
            if (!first) {
                os << (c < 0 ? " - " : " + ");
            } else if (c < 0) {
                os << "-";
            }
            first = false;
            const Coeff mag = c < 0 ? Coeff(-c) : c;
            if (mag != 1 || e == 0) {
                os << mag;
            }
            if (e >= 1) {
                os << "q";
            }
            if (e >= 2) {
                os << "^" << e;
            }
        }
        if (first) {
            os << "0";
        }
        return os << " + O(q^" << (s.order() + 1) << ")";
    }

private:
    void require_same_order(const TruncatedSeries &other) const
    {
        if (order() != other.order()) {
            throw order_mismatch_error("series orders differ: " + std::to_string(order()) + " vs "
                                       + std::to_string(other.order()));
        }
    }

    std::vector<Coeff> m_coeffs;
};

using Series = TruncatedSeries<BigInt>;

// +q^e or -q^e as a Pochhammer argument.
struct Monomial {
    int sign = 1;
    std::size_t exponent = 0;

    bool operator==(const Monomial &) const = default;
};

inline Monomial plus_q(std::size_t e)
{
    return {1, e};
}
inline Monomial minus_q(std::size_t e)
{
    return {-1, e};
}

// (arg; q^step)_count = prod_{i<count} (1 - arg q^{step i}).
template <typename Coeff = BigInt>
TruncatedSeries<Coeff> poch_finite(Monomial arg, std::size_t step, std::size_t count, std::size_t order)
{
    auto out = TruncatedSeries<Coeff>::one(order);
    const Coeff c(-arg.sign);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t e = arg.exponent + step * i;
        if (e > order) {
            break;
        }
        out.mul_binomial(c, e);
    }
    return out;
}

// (a_1, ..., a_k; q^step)_inf, keeping only factors whose exponent fits.
template <typename Coeff = BigInt>
TruncatedSeries<Coeff> poch_infinite(std::span<const Monomial> args, std::size_t step, std::size_t order)
{
    if (step == 0) {
        throw invalid_parameters_error("infinite product step must be positive");
    }
    auto out = TruncatedSeries<Coeff>::one(order);
    for (const auto &a : args) {
        if (a.exponent == 0) {
            throw divergent_product_error("infinite product argument has exponent 0");
        }
        const Coeff c(-a.sign);
        for (std::size_t e = a.exponent; e <= order; e += step) {
            out.mul_binomial(c, e);
        }
    }
    return out;
}

template <typename Coeff = BigInt>
TruncatedSeries<Coeff> poch_infinite(std::initializer_list<Monomial> args, std::size_t step, std::size_t order)
{
    return poch_infinite<Coeff>(std::span<const Monomial>(args.begin(), args.size()), step, order);
}

// 1 / (q^step; q^step)_inf: partitions into multiples of step.
template <typename Coeff = BigInt>
TruncatedSeries<Coeff> inv_poch_infinite(std::size_t step, std::size_t order)
{
    if (step == 0) {
        throw invalid_parameters_error("infinite product step must be positive");
    }
    auto out = TruncatedSeries<Coeff>::one(order);
    // Multiplying by 1/(1 - q^k) is a running prefix sum with stride k.
    for (std::size_t k = step; k <= order; k += step) {
        for (std::size_t i = k; i <= order; ++i) {
            out[i] += out[i - k];
        }
    }
    return out;
}

namespace detail
{

inline void check_mock_params(std::size_t d, std::size_t r)
{
    if (d == 0 || r == 0 || 2 * r >= d) {
        throw invalid_parameters_error("mock theta specialization needs 1 <= r < d/2 (d=" + std::to_string(d)
                                       + ", r=" + std::to_string(r) + ")");
    }
}

// 1 / (-q^r, -q^{d-r}; q^d)_{n+1}
template <typename Coeff>
TruncatedSeries<Coeff> mock_denominator_inverse(std::size_t d, std::size_t r, std::size_t n, std::size_t order)
{
    auto den = poch_finite<Coeff>(minus_q(r), d, n + 1, order);
    den *= poch_finite<Coeff>(minus_q(d - r), d, n + 1, order);
    return den.inverse();
}

} // namespace detail

// g2(-q^r; q^d) = sum_n (-q^d;q^d)_n q^{dn(n+1)/2} / (-q^r,-q^{d-r};q^d)_{n+1}
template <typename Coeff = BigInt>
TruncatedSeries<Coeff> g2_special(std::size_t d, std::size_t r, std::size_t order)
{
    detail::check_mock_params(d, r);
    TruncatedSeries<Coeff> sum(order);
    for (std::size_t n = 0;; ++n) {
        const std::size_t lead = d * n * (n + 1) / 2;
        if (lead > order) {
            break;
        }
        auto term = poch_finite<Coeff>(minus_q(d), d, n, order);
        term *= TruncatedSeries<Coeff>::monomial(order, lead);
        term *= detail::mock_denominator_inverse<Coeff>(d, r, n, order);
        sum += term;
    }
    return sum;
}

// g3(-q^r; q^d) = sum_n q^{dn(n+1)} / (-q^r,-q^{d-r};q^d)_{n+1}
template <typename Coeff = BigInt>
TruncatedSeries<Coeff> g3_special(std::size_t d, std::size_t r, std::size_t order)
{
    detail::check_mock_params(d, r);
    TruncatedSeries<Coeff> sum(order);
    for (std::size_t n = 0;; ++n) {
        const std::size_t lead = d * n * (n + 1);
        if (lead > order) {
            break;
        }
        auto term = TruncatedSeries<Coeff>::monomial(order, lead);
        term *= detail::mock_denominator_inverse<Coeff>(d, r, n, order);
        sum += term;
    }
    return sum;
}

// Outcome of a coefficientwise comparison.
template <typename Coeff>
struct SeriesComparison {
    std::optional<std::size_t> mismatch_at;
    Coeff lhs{};
    Coeff rhs{};

    bool equal() const noexcept
    {
        return !mismatch_at.has_value();
    }
};

template <typename Coeff>
SeriesComparison<Coeff> series_compare(const TruncatedSeries<Coeff> &a, const TruncatedSeries<Coeff> &b)
{
    if (a.order() != b.order()) {
        throw order_mismatch_error("cannot compare series of orders " + std::to_string(a.order()) + " and "
                                   + std::to_string(b.order()));
    }
    for (std::size_t e = 0; e <= a.order(); ++e) {
        if (a[e] != b[e]) {
            return {e, a[e], b[e]};
        }
    }
    return {};
}

// Coefficient table c[m][n]; rows indexed by part count m, columns by weight n.
class BivariateTable
{
public:
    BivariateTable(std::size_t max_m, std::size_t max_n)
        : m_max_m(max_m), m_max_n(max_n), m_entries((max_m + 1) * (max_n + 1), BigInt(0))
    {
    }

    std::size_t max_m() const noexcept
    {
        return m_max_m;
    }
    std::size_t max_n() const noexcept
    {
        return m_max_n;
    }

    BigInt &at(std::size_t m, std::size_t n)
    {
        return m_entries.at(index(m, n));
    }
    const BigInt &at(std::size_t m, std::size_t n) const
    {
        return m_entries.at(index(m, n));
    }

    bool operator==(const BivariateTable &) const = default;

private:
    std::size_t index(std::size_t m, std::size_t n) const
    {
        if (m > m_max_m || n > m_max_n) {
            throw std::out_of_range("bivariate table index out of range");
        }
        return m * (m_max_n + 1) + n;
    }

    std::size_t m_max_m;
    std::size_t m_max_n;
    std::vector<BigInt> m_entries;
};

} // namespace overschur

#endif
