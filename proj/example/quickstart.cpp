// Minimal library walkthrough: build an algebra from the catalog, check the
// axioms, solve one weighted derivation space, and print the basis.

#include <iostream>

#include <lsdial/lsdial.hpp>

int main() {
    using namespace lsdial;

    // A two-dimensional catalog member with generic parameters.
    const Algebra alg = instantiate(default_sample_params(ClassId::L1));
    std::cout << "left-symmetric: " << (check_left_symmetric(alg).satisfied ? "yes" : "no")
              << "\n";

    // Classical derivations are the weight triple (1, 1, 1).
    const DerivationSpace der = derivation_space(alg, WeightTriple{1, 1, 1});
    std::cout << "Der dim: " << der.dim() << "\n";
    for (const QMatrix& d : der.basis) std::cout << "  " << format_matrix(d) << "\n";

    // A rho = 0 family, requested through its canonical tag.
    const WeightTriple w = family_triple({WeightFamily::D01Delta, Rational(3)});
    std::cout << "family " << family_name(WeightFamily::D01Delta) << " solves "
              << format_triple(w) << ", dim " << derivation_space(alg, w).dim() << "\n";

    // Round-trip through the JSON file format.
    const Algebra copy = algebra_from_json(algebra_to_json(alg));
    std::cout << "JSON round-trip equal: " << (copy == alg ? "yes" : "no") << "\n";
    return 0;
}
