#pragma once

#include <optional>

#include "loq/bezout.hpp"
#include "loq/quaternion.hpp"

namespace loq {

// w = d'x + y f with d' N(x) - d'' N(y) = epsilon for a Hall divisor d' of d
// (d'' = d / d'). Such w normalizes the order, Nr(w) = epsilon d', and
// w^2 = d' q with Nr(q) = 1.
struct AtkinLehnerElement {
    Int d, d_prime, d_dprime;
    int epsilon = 1;
    OrderElement w, q;
    BezoutCertificate cert;
};

// Solve the divisor relation for (d', d/d') and assemble the element; nullopt
// when the search bound is exhausted (does not happen for genuine Hall
// divisors at the default bound). skip requests a later certificate.
std::optional<AtkinLehnerElement> build(const Int& d, const Int& d_prime,
                                        const Int& bound = kDefaultSearchBound,
                                        unsigned skip = 0);

// Assemble from explicit Eisenstein coordinates; validates the divisor
// relation and all element identities.
AtkinLehnerElement from_xy(const Int& d, const Int& d_prime, const EisensteinInt& x,
                           const EisensteinInt& y);

// Does conjugation by this (invertible) element map the order into itself?
bool normalizes(const OrderElement& w);

inline bool check_normalizes(const AtkinLehnerElement& al) { return normalizes(al.w); }

// w xi w^{-1}, guaranteed integral for a normalizing w.
OrderElement conjugate_by(const OrderElement& w, const OrderElement& xi);

inline OrderElement conjugate_by(const AtkinLehnerElement& al, const OrderElement& xi) {
    return conjugate_by(al.w, xi);
}

}  // namespace loq
