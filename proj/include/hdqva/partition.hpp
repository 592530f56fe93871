#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hdqva {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

int weight(const Partition& p);
inline int length(const Partition& p) { return static_cast<int>(p.size()); }
/// Sort descending and drop zero parts.
Partition normalized(Partition p);
bool is_partition(const Partition& p);
/// All partitions of n, largest first in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// m[k] = number of parts equal to k, for k = 0..max part (m[0] unused).
std::vector<int> multiplicities(const Partition& p);
/// Dominance order a >= b (equal weights assumed).
bool dominates(const Partition& a, const Partition& b);
/// Multiset union of parts.
Partition merged(const Partition& a, const Partition& b);
std::string to_string(const Partition& p);
/// "2,1", "2 1" or "(2,1)"; nullopt on malformed input.
std::optional<Partition> parse_partition(std::string_view text);

}  // namespace hdqva
