// Signed permutation sums for a few weight systems.
//
// For a Lie weight system of dimension n the sum against P_id is the falling
// factorial n(n-1)...(n-k+1), so it first vanishes at k = n+1. A table-backed
// weight system that gives the two orientations of theta different values
// already fails at k = 3.

#include <weightsys.hpp>

#include <iomanip>
#include <iostream>

using namespace weightsys;

int main() {
    std::cout << "delta_sum(p_c, k, P_id)\n";
    std::cout << std::setw(14) << "algebra";
    for (int k = 1; k <= 5; ++k) std::cout << std::setw(6) << ("k=" + std::to_string(k));
    std::cout << "\n";
    for (const auto& [name, c] : {std::pair{"abelian(2)", abelian(2)}, std::pair{"so3_eps", so3_eps()},
                                   std::pair{"so_n(4)", so_n_rational(4)}}) {
        const auto f = WeightSystem<Rational>::from_tensor(c);
        std::cout << std::setw(14) << name;
        for (int k = 1; k <= 5; ++k) std::cout << std::setw(6) << delta_sum(f, k, identity_permutation_diagram(k));
        std::cout << "\n";
    }

    // so3 on random diagrams: every sum at k = 4 is zero.
    const auto f = WeightSystem<Rational>::from_tensor(so3_eps());
    const auto corpus = random_diagrams(2024, 20, 8, 4);
    const auto rep = delta_check(f, 4, corpus);
    std::cout << "\nso3_eps, k=4, 20 random diagrams: max |sum| = " << rep.max_residual << " ("
              << (rep.pass ? "pass" : "fail") << ")\n";

    // Table weight system with f(theta) = 7, f(theta flipped) = 11, f(loop) = 2.
    TableBacked<Rational> t{Rational(2), {}};
    t.table[canonical_form(theta())] = 7;
    t.table[canonical_form(flip_vertex(theta(), 0))] = 11;
    const WeightSystem<Rational> g(t);
    std::cout << "table f, k=3 against two tripods: " << delta_sum(g, 3, tri_star(2)) << "\n";
    return 0;
}
