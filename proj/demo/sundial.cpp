// Builds one sundial in P^3 by hand and compares it with two skew lines.

#include <iostream>

#include <hilbertfn/hilbertfn.hpp>

namespace hf = hilbertfn;

int main() {
    const hf::PrimeField f;
    hf::GenericSampler s(11);
    const auto sundial = hf::make_sundial(f, s, 3, 1);
    hf::Configuration<hf::PrimeField> lines(f, 3);
    lines.add_linear(hf::random_subspace(f, s, 3, 1));
    lines.add_linear(hf::random_subspace(f, s, 3, 1));
    for (int d = 1; d <= 5; ++d)
        std::cout << "d=" << d << "  sundial " << hf::ideal_dim(sundial.configuration(), d) << "  two lines "
                  << hf::ideal_dim(lines, d) << "\n";
}
