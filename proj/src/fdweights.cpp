#include "moyal/fdweights.hpp"

#include "moyal/errors.hpp"

namespace moyal {

// Fornberg (1988) recursion, single target derivative order m.
std::vector<double> fd_weights(double x0, const std::vector<double>& x, int m) {
    int n = int(x.size()) - 1;
    if (n < m) throw ValidationError("fd_weights: need more nodes than derivative order");
    std::vector<std::vector<double>> c(n + 1, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        int mn = std::min(i, m);
        double c2 = 1.0;
        double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = c[i][m];
    return w;
}

std::vector<int> central_offsets_order4(int d) {
    // accuracy of symmetric central stencils: 2k-d+1 (odd d), 2k-d+2 (even d)
    int k = (d % 2 == 1) ? (d + 3) / 2 : d / 2 + 1;
    std::vector<int> off;
    for (int i = -k; i <= k; ++i) off.push_back(i);
    return off;
}

} // namespace moyal
