#include "loq/quaternion.hpp"

#include "loq/factor.hpp"

namespace loq {

Int algebra_discriminant(const Int& d) {
    if (d < 1) {
        throw std::invalid_argument("algebra_discriminant requires d >= 1");
    }
    // Product of the primes p = 2 mod 3 dividing d to an odd power; the algebra
    // ramifies exactly there, plus at 3 when that product is not 1 mod 3.
    Int dh = 1;
    for (const auto& [p, e] : factorize(d)) {
        if (mod3(p) == 2 && e % 2 == 1) {
            dh *= p;
        }
    }
    return mod3(dh) == 1 ? dh : 3 * dh;
}

}  // namespace loq
