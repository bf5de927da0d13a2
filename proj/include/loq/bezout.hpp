#pragma once

#include <optional>

#include "loq/eisenstein.hpp"
#include "loq/ints.hpp"

namespace loq {

inline const Int kDefaultSearchBound = 1'000'000;

enum class BezoutMode {
    Any,       // d'u - d''v in {1, -1}, either orientation
    NoThree,   // additionally 3 does not divide uv (input orientation kept)
    ExactOne,  // epsilon = +1, input orientation kept; requires 3 coprime to d'd''
};

// Witness for a relation a*u - b*v = epsilon with u = N(x), v = N(y) both
// Loeschian, where (a, b) is (d', d'') or, when swapped is set, (d'', d').
struct BezoutCertificate {
    Int d_prime, d_dprime;
    bool swapped = false;
    int epsilon = 1;
    Int u, v;
    EisensteinInt x, y;
};

// First certificate in a deterministic sweep of v = 0, 1, 2, ...; nullopt when
// the bound is exhausted (for NoThree with 3 | d'd'' that is an honest
// "unknown": solvability there is an open question).
std::optional<BezoutCertificate> solve(const Int& d_prime, const Int& d_dprime, BezoutMode mode,
                                       const Int& bound = kDefaultSearchBound);

// Recompute every claim in the certificate from scratch.
bool verify(const BezoutCertificate& cert);

// Fixed-orientation search for a*u - b*v = epsilon over both signs (all of
// epsilon = +1 first). skip > 0 returns a later solution in the same sweep;
// used to produce independent witnesses.
std::optional<BezoutCertificate> solve_oriented(const Int& a, const Int& b,
                                                const Int& bound = kDefaultSearchBound,
                                                unsigned skip = 0);

// Loeschian test backed by the shared sieve with a factorization fallback.
bool loeschian_value(const Int& n);

}  // namespace loq
