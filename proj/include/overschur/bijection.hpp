#ifndef OVERSCHUR_BIJECTION_HPP
#define OVERSCHUR_BIJECTION_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <overschur/partition.hpp>

namespace overschur
{

// Row lengths of the three pieces of an Ebar object:
//   alpha  odd lengths >= 3, non-increasing, label d (non-overlined multiples of 2d)
//   beta   distinct lengths, strictly decreasing, label r
//   gamma  distinct lengths, strictly decreasing, label d-r
struct PartitionTriple {
    std::vector<int> alpha;
    std::vector<int> beta;
    std::vector<int> gamma;

    bool operator==(const PartitionTriple &) const = default;
    auto operator<=>(const PartitionTriple &) const = default;
};

std::ostream &operator<<(std::ostream &, const PartitionTriple &);

std::optional<std::string> triple_violation(const PartitionTriple &t);

int weight(const PartitionTriple &t, const Params &params);

// Split an Ebar overpartition into its triple.
PartitionTriple decompose(const Overpartition &pi, const Params &params);

// Inverse of decompose; the result is canonical and lies in Ebar.
Overpartition recompose(const PartitionTriple &t, const Params &params);

// Column insertion of beta and gamma into alpha. The output lies in Bbar and
// has the same weight as the triple.
DModularOverpartition insert(const PartitionTriple &t, const Params &params);

// Undo insert. Throws invalid_input_error if mu is not in Bbar and
// internal_consistency_error if no extraction reproduces mu.
PartitionTriple invert(const DModularOverpartition &mu, const Params &params);

// Which extraction order invert() accepted; exposed for testing uniqueness.
enum class InsertionCase { BetaFirst, GammaFirst };

// Both extraction attempts, each present only if it yields a valid triple that
// satisfies its own case guard and re-inserts to mu.
struct ExtractionAttempts {
    std::optional<PartitionTriple> beta_first;
    std::optional<PartitionTriple> gamma_first;
};

ExtractionAttempts try_extractions(const DModularOverpartition &mu, const Params &params);

// Ebar -> Bbar and back, on raw overpartitions.
Overpartition bijection_forward(const Overpartition &pi, const Params &params);
Overpartition bijection_inverse(const Overpartition &lambda, const Params &params);

} // namespace overschur

#endif
