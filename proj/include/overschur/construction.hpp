#ifndef OVERSCHUR_CONSTRUCTION_HPP
#define OVERSCHUR_CONSTRUCTION_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <overschur/partition.hpp>
#include <overschur/qseries.hpp>

namespace overschur
{

// Input of the Cbar construction with exactly m parts. Entries are part
// values, not row lengths:
//   alpha  non-increasing even multiples of d, each <= 2md
//   beta   strictly decreasing, == r mod d, each <= (m-1)d + r
//   gamma  strictly decreasing, == d-r mod d, each <= md - r
struct BoundedTriple {
    int m = 0;
    std::vector<int> alpha;
    std::vector<int> beta;
    std::vector<int> gamma;

    bool operator==(const BoundedTriple &) const = default;
    auto operator<=>(const BoundedTriple &) const = default;
};

std::ostream &operator<<(std::ostream &, const BoundedTriple &);

// Names the offending bound and part, or nullopt if t is valid.
std::optional<std::string> bounded_triple_violation(const BoundedTriple &t, const Params &params);

DModularOverpartition construct(const BoundedTriple &t, const Params &params);

BoundedTriple deconstruct(const DModularOverpartition &mu, const Params &params);

// entries[m][n] = [q^n] q^{dm} (-q^r,-q^{d-r};q^d)_m / (q^{2d};q^{2d})_m
BivariateTable cbar_table_formula(const Params &params, int max_m, int max_n);

} // namespace overschur

#endif
