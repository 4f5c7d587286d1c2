// Prints the first few cluster variables and checks one exchange relation.

#include <iostream>

#include "cluster_a11/cluster_a11.hpp"

int main() {
    using namespace cluster_a11;

    Engine engine;
    for (int m = -2; m <= 6; ++m) {
        std::cout << "x_" << m << " = " << to_human(engine.x(m)) << '\n';
    }

    const LaurentPoly lhs = engine.x(4) * engine.x(6);
    const LaurentPoly rhs = engine.x(5) * engine.x(5) + LaurentPoly::one();
    std::cout << "x_4 x_6 == x_5^2 + 1: " << std::boolalpha << (lhs == rhs) << '\n';

    std::cout << "s_3 = " << to_human(engine.s(3)) << '\n';
    std::cout << "s_3 at (1,1) = " << eval_int(engine.s(3), 1, 1) << '\n';
}
