#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "loq/bezout.hpp"
#include "loq/qforms.hpp"
#include "loq/quaternion.hpp"

namespace loq {

struct EquationViolated : std::domain_error {
    explicit EquationViolated(const std::string& what) : std::domain_error(what) {}
};

// Raised when an intertwiner solution space does not have rank 2; cannot occur
// for genuine order-3 inputs (the space is a twisted copy of Q(w)) but is
// checked rather than assumed.
struct DegenerateIntertwiner : std::runtime_error {
    explicit DegenerateIntertwiner(const std::string& what) : std::runtime_error(what) {}
};

enum class CaseTag {
    Full,   // d'_xi * d''_xi = d  (equivalently 3 | N(x3 + x4 w))
    Third,  // d'_xi * d''_xi = d / 3
};

// An element of order 3 in the order: Tr = -1, Nr = 1, i.e. x2 = 2 x1 + 1 and
// 3 x1 (x1 + 1) = d (x3^2 - x3 x4 + x4^2). Carries its conjugation invariants
// d'_xi = gcd(x1, d), d''_xi = gcd(x1 + 1, d).
struct Order3Element {
    OrderElement elem;
    Int d_prime, d_dprime;
    CaseTag tag;

    friend bool operator==(const Order3Element& a, const Order3Element& b) {
        return a.elem == b.elem;
    }
};

// Validates the order-3 equations for (x1, 2x1+1, x3, x4); throws
// EquationViolated otherwise.
Order3Element make(const Int& d, const Int& x1, const Int& x3, const Int& x4);

// Same, from a full coordinate vector (checks the trace condition too).
Order3Element from_order(const OrderElement& e);

// xi* = f xi^2 f^{-1}: coordinates (x1, x2, x4 - x3, x4). Same invariants.
Order3Element star(const Order3Element& xi);

// xi^2 = -1 - xi: coordinates (-1 - x1, -x2, -x3, -x4). Swaps the invariants.
Order3Element square(const Order3Element& xi);

// All order-3 elements with x1 in {m, -(m+1) : 0 <= m <= x1_bound}, one
// canonical (x3, x4) per unit/conjugate orbit of the norm-form representation,
// plus the star partner when it differs. Deterministic order.
std::vector<Order3Element> enumerate_elements(const Int& d, const Int& x1_bound);

// The rank-2 lattice {alpha in O : eta alpha = alpha xi} together with the
// reduced norm restricted to it. A conjugating unit exists iff the form
// represents 1 or -1.
struct IntertwinerLattice {
    std::array<OrderElement, 2> basis;
    BinaryQF form;
};

IntertwinerLattice intertwiner(const Order3Element& xi, const Order3Element& eta);

struct ConjugacyWitness {
    OrderElement alpha;  // eta alpha = alpha xi, Nr(alpha) in {1, -1}
};

// Decision procedure: nullopt means definitely not conjugate in the unit group
// of the order (invariants differ, or the intertwiner form has minimum >= 2).
std::optional<ConjugacyWitness> conjugacy_witness(const Order3Element& xi,
                                                  const Order3Element& eta);

// An order-3 element with prescribed invariants (dp, dpp), built from a
// divisor-relation certificate. Requires dp * dpp = d (full case) or d/3
// (third case, 3 | d). nullopt when the certificate search exhausts its bound
// (possible only in the third case with 3 | dp * dpp).
std::optional<Order3Element> construct_with_invariants(const Int& d, const Int& dp,
                                                       const Int& dpp,
                                                       const Int& bound = kDefaultSearchBound);

}  // namespace loq
