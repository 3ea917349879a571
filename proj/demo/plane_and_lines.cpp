// Prints dim (I_X)_d for a plane and s generic lines in P^4 around the
// critical counts, next to the closed-form value.

#include <iostream>

#include <hilbertfn/hilbertfn.hpp>

namespace hf = hilbertfn;

int main() {
    const hf::PrimeField f;
    const hf::GenericSampler sampler(7);
    for (int d = 1; d <= 5; ++d) {
        const auto rows = hf::verify_bipolynomial(4, d, d, hf::Family::plane_lines, std::nullopt, 3, f, sampler);
        for (const auto& r : rows)
            std::cout << "d=" << r.d << " s=" << r.s << "  computed " << r.computed << "  closed form " << r.expected
                      << (r.pass ? "" : "  MISMATCH") << "\n";
    }
}
