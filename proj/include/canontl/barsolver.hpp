#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "canontl/laurent.hpp"

namespace canontl {

// sparse coordinate vector over a basis indexed 0..N-1
using Coords = std::map<int, LaurentPoly>;

void add_scaled(Coords& dst, const Coords& src, const LaurentPoly& scale);

struct BarModuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A free module with a distinguished basis, listed in a linear extension of
// its partial order, together with a semilinear involution given row by row:
// bar_row(x) = bar(e_x) must be e_x plus terms at smaller indices.
class BarModule {
public:
    virtual ~BarModule() = default;
    virtual int size() const = 0;
    virtual Coords bar_row(int x) const = 0;
    virtual std::string label(int x) const { return std::to_string(x); }

    Coords bar_vector(const Coords& v) const;
};

// canonical[x] = e_x + sum over y < x of (strictly negative) * e_y, bar-fixed
struct CanonicalFamily {
    std::vector<Coords> canonical;
};

// Solves for the unique bar-fixed unitriangular family. Validates that bar
// is unitriangular and an involution before solving.
CanonicalFamily compute_canonical_basis(const BarModule& mod);

// coefficients of v in the canonical family (back-substitution)
Coords express_in_canonical(const CanonicalFamily& fam, Coords v);

}  // namespace canontl
