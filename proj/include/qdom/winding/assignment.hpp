#pragma once

#include <vector>

namespace qdom {

/// Minimum-cost perfect assignment for a square cost matrix (Hungarian
/// method, O(n^3)). Returns col[i], the column assigned to row i.
std::vector<int> hungarian(const std::vector<std::vector<double>>& cost);

}  // namespace qdom
