// Prints the restricted root system of a real form given by its Satake
// diagram, then runs a small properness query on it.
//
//   sample_restricted            # e6(-26): black nodes 2..5
//   sample_restricted F4 1 2 3   # f4(-20)

#include <kleinsieve/kleinsieve.hpp>

#include <cstdlib>
#include <iostream>
#include <vector>

using namespace kleinsieve;

int main(int argc, char** argv) {
    SimpleType type = SimpleType::parse(argc > 1 ? argv[1] : "E6");
    std::vector<int> black;
    for (int i = 2; i < argc; ++i) black.push_back(std::atoi(argv[i]));
    if (argc <= 1) black = {2, 3, 4, 5};

    try {
        const auto s = SatakeDiagram::from_labels(type, black, {});
        const auto rec = make_real_form(type.name() + " " + s.render(), s);
        const auto& r = *rec.restricted;
        std::cout << rec.name << "\n"
                  << "  restricted type " << r.type_name() << ", real rank " << rec.real_rank << ", a-hyperbolic rank "
                  << rec.a_hyp_rank << "\n"
                  << "  dim k = " << rec.dims.dim_k << ", dim p = " << rec.dims.dim_p << "\n";
        for (const auto& root : r.positive_roots()) {
            std::cout << "  (";
            for (std::size_t i = 0; i < root.coords.size(); ++i) std::cout << (i ? "," : "") << root.coords[i];
            std::cout << ")  multiplicity " << root.multiplicity << "\n";
        }
        if (rec.real_rank >= 2) {
            RationalVector e1(rec.real_rank, Rational(0)), e2 = e1;
            e1[0] = 1;
            e2[1] = 1;
            const PropernessQuery q{rec.name, rec.restricted, {e1}, {e2}};
            const auto res = properness_test(q);
            std::cout << "  line 1 vs line 2: " << (res.proper ? "proper" : "not proper") << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
