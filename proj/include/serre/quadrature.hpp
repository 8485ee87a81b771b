#pragma once

#include <vector>

namespace serre {

// Gauss-Legendre rule mapped to [0,1]; weights sum to 1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int size() const { return static_cast<int>(nodes.size()); }
};

// Nodes are interior to (0,1), strictly increasing.
QuadratureRule gauss_legendre(int npts);

}  // namespace serre
