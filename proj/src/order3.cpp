#include "loq/order3.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "loq/eisenstein.hpp"
#include "loq/lattice.hpp"

namespace loq {

namespace {

Int gcd_abs(Int a, Int b) {
    using boost::multiprecision::abs;
    return boost::multiprecision::gcd(abs(a), abs(b));
}

std::string coord_string(const OrderElement& e) {
    return "(" + e.x1.str() + ", " + e.x2.str() + ", " + e.x3.str() + ", " + e.x4.str() +
           ") in H(" + e.d.str() + ")";
}

}  // namespace

Order3Element make(const Int& d, const Int& x1, const Int& x3, const Int& x4) {
    if (d < 1) throw std::invalid_argument("make: d must be >= 1");
    const Int ny = x3 * x3 - x3 * x4 + x4 * x4;
    const Int lhs = 3 * x1 * (x1 + 1);
    if (lhs != d * ny) {
        throw EquationViolated("order-3 norm equation fails: 3*x1*(x1+1) = " + lhs.str() +
                               " but d*N(x3+x4*w) = " + Int(d * ny).str());
    }
    Order3Element out;
    out.elem = OrderElement{d, x1, 2 * x1 + 1, x3, x4};

    // Cube check: x^2 + x + 1 must vanish identically (then x^3 = 1, x != 1).
    const OrderElement sq = mul(out.elem, out.elem);
    const OrderElement probe =
        add(add(sq, out.elem), OrderElement{d, 1, 0, 0, 0});
    if (!(probe.x1 == 0 && probe.x2 == 0 && probe.x3 == 0 && probe.x4 == 0)) {
        throw std::logic_error("order-3 minimal polynomial check failed for " +
                               coord_string(out.elem));
    }

    out.d_prime = gcd_abs(x1, d);
    out.d_dprime = gcd_abs(x1 + 1, d);
    const Int prod = out.d_prime * out.d_dprime;
    const bool y_norm_div3 = mod3(ny) == 0;
    if (y_norm_div3) {
        if (prod != d)
            throw std::logic_error("invariant product mismatch (expected d) for " +
                                   coord_string(out.elem));
        out.tag = CaseTag::Full;
    } else {
        if (3 * prod != d)
            throw std::logic_error("invariant product mismatch (expected d/3) for " +
                                   coord_string(out.elem));
        out.tag = CaseTag::Third;
    }
    return out;
}

Order3Element from_order(const OrderElement& e) {
    if (e.x2 != 2 * e.x1 + 1) {
        throw EquationViolated("element has trace " + Int(2 * e.x1 - e.x2).str() +
                               ", expected -1: " + coord_string(e));
    }
    return make(e.d, e.x1, e.x3, e.x4);
}

Order3Element star(const Order3Element& xi) {
    const OrderElement& e = xi.elem;
    return make(e.d, e.x1, e.x4 - e.x3, e.x4);
}

Order3Element square(const Order3Element& xi) {
    const OrderElement& e = xi.elem;
    return make(e.d, -1 - e.x1, -e.x3, -e.x4);
}

std::vector<Order3Element> enumerate_elements(const Int& d, const Int& x1_bound) {
    if (d < 1) throw std::invalid_argument("enumerate_elements: d must be >= 1");
    if (x1_bound < 0) throw std::invalid_argument("enumerate_elements: bound must be >= 0");

    std::vector<Order3Element> out;
    for (Int m = 0; m <= x1_bound; ++m) {
        for (int which = 0; which < 2; ++which) {
            const Int x1 = (which == 0) ? m : -(m + 1);
            const Int t = 3 * x1 * (x1 + 1);  // = 3 m (m+1) for both choices
            if (t % d != 0) continue;
            const Int k = t / d;
            for (const EisensteinInt& y : norm_representatives(k)) {
                const Order3Element xi = make(d, x1, y.a, y.b);
                out.push_back(xi);
                const Order3Element st = star(xi);
                if (!(st == xi)) out.push_back(st);
            }
        }
    }
    return out;
}

IntertwinerLattice intertwiner(const Order3Element& xi, const Order3Element& eta) {
    require_same_algebra(xi.elem, eta.elem);
    const Int d = xi.elem.d;

    // Solve eta * alpha - alpha * xi = 0 over the coordinate lattice: the
    // matrix columns are the images of the basis elements 1, w, f, wf.
    const std::array<OrderElement, 4> basis = {
        OrderElement{d, 1, 0, 0, 0},
        OrderElement{d, 0, 1, 0, 0},
        OrderElement{d, 0, 0, 1, 0},
        OrderElement{d, 0, 0, 0, 1},
    };
    IntMatrix m(4, std::vector<Int>(4));
    for (int j = 0; j < 4; ++j) {
        const OrderElement img = sub(mul(eta.elem, basis[j]), mul(basis[j], xi.elem));
        m[0][j] = img.x1;
        m[1][j] = img.x2;
        m[2][j] = img.x3;
        m[3][j] = img.x4;
    }

    IntMatrix kernel = integer_kernel(m);
    if (kernel.size() != 2) {
        throw DegenerateIntertwiner("intertwiner space has rank " +
                                    std::to_string(kernel.size()) + ", expected 2");
    }
    hnf_rows(kernel);
    if (kernel.size() != 2)
        throw DegenerateIntertwiner("intertwiner basis collapsed during reduction");

    IntertwinerLattice out;
    for (int i = 0; i < 2; ++i) {
        out.basis[i] = OrderElement{d, kernel[i][0], kernel[i][1], kernel[i][2], kernel[i][3]};
        const OrderElement lhs = mul(eta.elem, out.basis[i]);
        const OrderElement rhs = mul(out.basis[i], xi.elem);
        if (!(lhs == rhs))
            throw std::logic_error("intertwiner basis vector fails the defining relation");
    }
    const Int a = nr(out.basis[0]);
    const Int c = nr(out.basis[1]);
    const Int b = nr(add(out.basis[0], out.basis[1])) - a - c;
    out.form = BinaryQF{a, b, c};
    return out;
}

std::optional<ConjugacyWitness> conjugacy_witness(const Order3Element& xi,
                                                  const Order3Element& eta) {
    require_same_algebra(xi.elem, eta.elem);
    if (xi.d_prime != eta.d_prime || xi.d_dprime != eta.d_dprime) return std::nullopt;

    const IntertwinerLattice lat = intertwiner(xi, eta);
    const std::optional<UnitRepresentation> rep = represent_unit(lat.form);
    if (!rep) return std::nullopt;

    const OrderElement alpha =
        add(scale(rep->k, lat.basis[0]), scale(rep->l, lat.basis[1]));
    const Int n = nr(alpha);
    if (n != rep->epsilon)
        throw std::logic_error("conjugating element has wrong reduced norm " + n.str());
    if (!(mul(eta.elem, alpha) == mul(alpha, xi.elem)))
        throw std::logic_error("conjugating element fails eta*alpha = alpha*xi");
    return ConjugacyWitness{alpha};
}

std::optional<Order3Element> construct_with_invariants(const Int& d, const Int& dp,
                                                       const Int& dpp, const Int& bound) {
    if (d < 1 || dp < 1 || dpp < 1)
        throw std::invalid_argument("construct_with_invariants: arguments must be >= 1");
    if (gcd_abs(dp, dpp) != 1)
        throw std::invalid_argument("construct_with_invariants: invariants must be coprime");

    const Int prod = dp * dpp;
    Order3Element xi{};
    if (prod == d) {
        const std::optional<BezoutCertificate> cert = solve(dp, dpp, BezoutMode::Any, bound);
        if (!cert) return std::nullopt;
        // Relation a*u - b*v = 1 with {a, b} = {dp, dpp}; then x1 = b*v has
        // gcd(x1, d) = b and gcd(x1 + 1, d) = a.
        const Int b = cert->swapped ? cert->d_prime : cert->d_dprime;
        const Int x1 = b * cert->v;
        const EisensteinInt y = represent(3 * cert->u * cert->v);
        xi = make(d, x1, y.a, y.b);
    } else if (mod3(d) == 0 && 3 * prod == d) {
        const std::optional<BezoutCertificate> cert =
            solve(dp, dpp, BezoutMode::NoThree, bound);
        if (!cert) return std::nullopt;
        // dp*u - dpp*v = eps with u, v, and u*v all prime to 3. For eps = -1,
        // x1 = dp*u gives invariants (dp, dpp) directly; for eps = +1,
        // x1 = dpp*v gives the swapped pair and squaring fixes it.
        const Int x1 = (cert->epsilon == -1) ? dp * cert->u : dpp * cert->v;
        const EisensteinInt y = represent(cert->u * cert->v);
        xi = make(d, x1, y.a, y.b);
    } else {
        throw std::invalid_argument(
            "construct_with_invariants: product must equal d, or d/3 with 3 | d");
    }

    if (!(xi.d_prime == dp && xi.d_dprime == dpp)) xi = square(xi);
    if (!(xi.d_prime == dp && xi.d_dprime == dpp))
        throw std::logic_error("constructed element has invariants (" + xi.d_prime.str() +
                               ", " + xi.d_dprime.str() + "), requested (" + dp.str() + ", " +
                               dpp.str() + ")");
    return xi;
}

}  // namespace loq
