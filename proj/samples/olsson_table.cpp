// Decomposes W_{n,n+1} and W_{6,8} and prints the fitted dimension polynomial p_1.

#include "tideal/tideal.hpp"

#include <iostream>

int main() {
    using namespace tideal;
    std::map<int, Integer> dims;
    for (int n = 3; n <= 6; ++n) {
        auto w = decompose_W(n, n + 1);
        dims[n] = w.dimension();
        std::cout << "W_{" << n << "," << n + 1 << "} = " << w.str() << "  (dim " << w.dimension() << ")\n";
    }
    std::cout << "p_1(n) = " << fit_pK(1, dims).polynomial.str() << "\n";
    auto w = decompose_W(6, 8);
    std::cout << "W_{6,8} = " << w.str() << "  (dim " << w.dimension() << ")\n";
}
