#pragma once

#include <vector>

namespace moyal {

// Fornberg weights: coefficients w_i such that f^(m)(x0) ~= sum_i w_i f(nodes[i]).
// Exact for polynomials up to degree nodes.size()-1.
std::vector<double> fd_weights(double x0, const std::vector<double>& nodes, int m);

// Centered stencil offsets {-k..k} (in units of h) giving >= 4th-order
// accuracy for derivative order d.
std::vector<int> central_offsets_order4(int d);

} // namespace moyal
