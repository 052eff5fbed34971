#ifndef OVERSCHUR_ENUMERATE_HPP
#define OVERSCHUR_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <overschur/partition.hpp>

namespace overschur
{

using Count = std::uint64_t;

// Brute-force backtracking over all members of a family. Bbar and Cbar are
// generated in d-modular form; the rest over raw part values.

// Calls visit once per member of weight <= max_n. The object passed to visit
// is only valid during the call.
void for_each_member(FamilyId family, const Params &params, int max_n,
                     const std::function<void(const Overpartition &)> &visit);

// Bbar/Cbar only, in d-modular form, using the given difference matrix.
void for_each_dmodular_member(FamilyId family, const Params &params, int max_n, const LabelMatrix &aprime,
                              const std::function<void(const DModularOverpartition &, int weight)> &visit);

// All members of weight exactly n, sorted ascending lexicographically.
std::vector<Overpartition> enumerate(FamilyId family, const Params &params, int n);

// Bbar/Cbar members of weight exactly n in d-modular form, sorted ascending.
std::vector<DModularOverpartition> enumerate_dmodular(FamilyId family, const Params &params, int n);

Count count(FamilyId family, const Params &params, int n);

// Counts for weights 0..max_n.
std::vector<Count> count_table(FamilyId family, const Params &params, int max_n);

// Bbar/Cbar counts produced by a possibly altered difference matrix.
std::vector<Count> count_table(FamilyId family, const Params &params, int max_n, const LabelMatrix &aprime);

// Number of parts -> count, for members of weight exactly n.
std::map<int, Count> count_by_parts(FamilyId family, const Params &params, int n);

// table[m][n] for m <= max_m, n <= max_n.
std::vector<std::vector<Count>> count_by_parts_table(FamilyId family, const Params &params, int max_m, int max_n);

} // namespace overschur

#endif
