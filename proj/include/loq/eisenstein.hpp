#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "loq/factor.hpp"
#include "loq/ints.hpp"

namespace loq {

// Element a + b*w of Z[w], w^2 + w + 1 = 0.
struct EisensteinInt {
    Int a;
    Int b;

    friend bool operator==(const EisensteinInt& l, const EisensteinInt& r) = default;
};

inline EisensteinInt eis(Int a, Int b) { return EisensteinInt{std::move(a), std::move(b)}; }

// (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w.
inline EisensteinInt multiply(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

inline EisensteinInt add(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a + y.a, x.b + y.b};
}

inline EisensteinInt negate(const EisensteinInt& x) { return {-x.a, -x.b}; }

// Complex conjugate: a + b*wbar = (a - b) - b*w.
inline EisensteinInt conjugate(const EisensteinInt& x) { return {x.a - x.b, -x.b}; }

// N(a + bw) = a^2 - ab + b^2 >= 0; multiplicative; always 0 or 1 mod 3.
inline Int norm(const EisensteinInt& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

// The 12 images of x under the six units and conjugation (with repeats for
// symmetric x).
std::vector<EisensteinInt> unit_conjugate_orbit(const EisensteinInt& x);

// Deterministic representative of the orbit: a >= b >= 0, lexicographically
// smallest (a, b) among the orbit members in that sector.
EisensteinInt canonical(const EisensteinInt& x);

// Factorization shape of a Loeschian number:
//   n = 3^three_exp * prod(split p^e) * inert_root^2,
// where every split prime is 1 mod 3 and every prime of inert_root is 2 mod 3.
struct LoeschianFactorization {
    Int n;
    unsigned three_exp = 0;
    std::vector<std::pair<Int, unsigned>> split_part;
    Int inert_root = 1;
};

// nullopt when some prime 2 mod 3 divides n to an odd power (so n is not a
// norm from Z[w]). Throws FactorizationExhausted when n cannot be split within
// the effort cap. n = 0 is Loeschian (norm of 0) and gets a degenerate shape.
std::optional<LoeschianFactorization> classify_loeschian(const Int& n,
                                                         const FactorOptions& opts = {});

inline bool is_loeschian(const Int& n, const FactorOptions& opts = {}) {
    return n >= 0 && classify_loeschian(n, opts).has_value();
}

// Canonical x with norm(x) = n. Split primes are represented by a modular
// square root of -3 followed by lattice reduction under the norm form; pieces
// are multiplied together and the product canonicalized. Throws
// std::domain_error when n is not Loeschian.
EisensteinInt represent(const Int& n, const FactorOptions& opts = {});

// All canonical orbit representatives of solutions of a^2 - ab + b^2 = k,
// sorted lexicographically. Exhaustive search; meant for enumeration-scale k
// (requires k < 2^62).
std::vector<EisensteinInt> norm_representatives(const Int& k);

// Bitmap of Loeschian numbers up to a limit, built by walking the norm form.
class LoeschianSieve {
public:
    explicit LoeschianSieve(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    bool contains(std::uint64_t n) const { return table_[n]; }

private:
    std::uint64_t limit_;
    std::vector<bool> table_;
};

// Shared sieve up to 1e6 for hot paths; built on first use.
const LoeschianSieve& shared_sieve();

// Exact test on a 64-bit value by trial division (falls back to the generic
// classifier above 1e12).
bool is_loeschian_u64(std::uint64_t n);

}  // namespace loq
