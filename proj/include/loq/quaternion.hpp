#pragma once

#include <optional>
#include <stdexcept>

#include "loq/eisenstein.hpp"
#include "loq/ints.hpp"

namespace loq {

// Element x1 + x2 w + x3 f + x4 wf of the quaternion algebra with f^2 = d and
// f z = zbar f for z in Q(w). Writing xi = x + y f with x = x1 + x2 w and
// y = x3 + x4 w:
//   Nr(xi) = N(x) - d N(y),   Tr(xi) = 2 x1 - x2.
template <typename S>
struct QuatT {
    Int d;
    S x1{}, x2{}, x3{}, x4{};

    friend bool operator==(const QuatT&, const QuatT&) = default;
};

using OrderElement = QuatT<Int>;  // coordinates in Z[w] + Z[w] f
using QuatElement = QuatT<Rat>;

template <typename S>
QuatT<S> quat(Int d, S x1, S x2, S x3, S x4) {
    return {std::move(d), std::move(x1), std::move(x2), std::move(x3), std::move(x4)};
}

inline OrderElement one(const Int& d) { return {d, 1, 0, 0, 0}; }
inline OrderElement omega(const Int& d) { return {d, 0, 1, 0, 0}; }
inline OrderElement phi(const Int& d) { return {d, 0, 0, 1, 0}; }

inline QuatElement to_quat(const OrderElement& e) {
    return {e.d, Rat(e.x1), Rat(e.x2), Rat(e.x3), Rat(e.x4)};
}

template <typename S>
void require_same_algebra(const QuatT<S>& a, const QuatT<S>& b) {
    if (a.d != b.d) {
        throw std::invalid_argument("operands live in different quaternion algebras");
    }
}

template <typename S>
QuatT<S> add(const QuatT<S>& a, const QuatT<S>& b) {
    require_same_algebra(a, b);
    return {a.d, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.x4 + b.x4};
}

template <typename S>
QuatT<S> sub(const QuatT<S>& a, const QuatT<S>& b) {
    require_same_algebra(a, b);
    return {a.d, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.x4 - b.x4};
}

template <typename S>
QuatT<S> negate(const QuatT<S>& a) {
    return {a.d, -a.x1, -a.x2, -a.x3, -a.x4};
}

template <typename S, typename T>
QuatT<S> scale(const T& c, const QuatT<S>& a) {
    return {a.d, S(c) * a.x1, S(c) * a.x2, S(c) * a.x3, S(c) * a.x4};
}

// (x + y f)(x' + y' f) = (x x' + d y ybar') + (x y' + y xbar') f.
template <typename S>
QuatT<S> mul(const QuatT<S>& a, const QuatT<S>& b) {
    require_same_algebra(a, b);
    const S d = S(a.d);
    // Eisenstein products on coordinate pairs: (p + q w)(r + s w).
    auto emul = [](const S& p, const S& q, const S& r, const S& s) {
        return std::pair<S, S>{p * r - q * s, p * s + q * r - q * s};
    };
    auto econj = [](const S& p, const S& q) { return std::pair<S, S>{p - q, -q}; };

    auto [yb1, yb2] = econj(b.x3, b.x4);
    auto [xx1, xx2] = emul(a.x1, a.x2, b.x1, b.x2);
    auto [yy1, yy2] = emul(a.x3, a.x4, yb1, yb2);
    auto [xb1, xb2] = econj(b.x1, b.x2);
    auto [xy1, xy2] = emul(a.x1, a.x2, b.x3, b.x4);
    auto [yx1, yx2] = emul(a.x3, a.x4, xb1, xb2);
    return {a.d, xx1 + d * yy1, xx2 + d * yy2, xy1 + yx1, xy2 + yx2};
}

// Canonical involution x + y f -> xbar - y f; xi * bar(xi) = Nr(xi).
template <typename S>
QuatT<S> bar(const QuatT<S>& a) {
    return {a.d, a.x1 - a.x2, -a.x2, -a.x3, -a.x4};
}

template <typename S>
S nr(const QuatT<S>& a) {
    return a.x1 * a.x1 - a.x1 * a.x2 + a.x2 * a.x2 -
           S(a.d) * (a.x3 * a.x3 - a.x3 * a.x4 + a.x4 * a.x4);
}

template <typename S>
S tr(const QuatT<S>& a) {
    return 2 * a.x1 - a.x2;
}

struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

// xi^{-1} = bar(xi) / Nr(xi); rational in general.
template <typename S>
QuatElement inverse(const QuatT<S>& a) {
    Rat n = Rat(nr(a));
    if (n == 0) {
        throw NotInvertible("element has reduced norm 0");
    }
    QuatT<S> c = bar(a);
    return {a.d, Rat(c.x1) / n, Rat(c.x2) / n, Rat(c.x3) / n, Rat(c.x4) / n};
}

inline std::optional<OrderElement> to_order(const QuatElement& e) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    for (const Rat* c : {&e.x1, &e.x2, &e.x3, &e.x4}) {
        if (denominator(*c) != 1) {
            return std::nullopt;
        }
    }
    return OrderElement{e.d, numerator(e.x1), numerator(e.x2), numerator(e.x3), numerator(e.x4)};
}

inline bool is_unit(const OrderElement& e) {
    Int n = nr(e);
    return n == 1 || n == -1;
}

// --- 2x2 matrix model over Q(w) ---------------------------------------------
// psi(x + y f) = [[x, y], [d ybar, xbar]]; determinant is Nr, trace is Tr, and
// psi is multiplicative. Useful as an independent route for cross-checks.

struct QOmega {
    Rat a, b;  // a + b w

    friend bool operator==(const QOmega&, const QOmega&) = default;
};

inline QOmega qo_add(const QOmega& x, const QOmega& y) { return {x.a + y.a, x.b + y.b}; }
inline QOmega qo_mul(const QOmega& x, const QOmega& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}
inline QOmega qo_conj(const QOmega& x) { return {x.a - x.b, -x.b}; }

struct PsiMatrix {
    QOmega e11, e12, e21, e22;

    friend bool operator==(const PsiMatrix&, const PsiMatrix&) = default;
};

template <typename S>
PsiMatrix psi(const QuatT<S>& e) {
    QOmega x{Rat(e.x1), Rat(e.x2)};
    QOmega y{Rat(e.x3), Rat(e.x4)};
    QOmega ybar = qo_conj(y);
    return {x, y, {Rat(e.d) * ybar.a, Rat(e.d) * ybar.b}, qo_conj(x)};
}

inline PsiMatrix mat_mul(const PsiMatrix& l, const PsiMatrix& r) {
    return {qo_add(qo_mul(l.e11, r.e11), qo_mul(l.e12, r.e21)),
            qo_add(qo_mul(l.e11, r.e12), qo_mul(l.e12, r.e22)),
            qo_add(qo_mul(l.e21, r.e11), qo_mul(l.e22, r.e21)),
            qo_add(qo_mul(l.e21, r.e12), qo_mul(l.e22, r.e22))};
}

inline QOmega mat_trace(const PsiMatrix& m) { return qo_add(m.e11, m.e22); }
inline QOmega mat_det(const PsiMatrix& m) {
    QOmega p = qo_mul(m.e11, m.e22);
    QOmega q = qo_mul(m.e12, m.e21);
    return {p.a - q.a, p.b - q.b};
}

// --- algebra isomorphism -----------------------------------------------------
// x + y f_{3d} -> x + (1 - w) y f_d identifies the algebra with parameter 3d
// with the one with parameter d, and sends integral elements to integral ones.
template <typename S>
QuatT<S> embed_3d_to_d(const QuatT<S>& e) {
    if (e.d % 3 != 0) {
        throw std::invalid_argument("embed_3d_to_d requires 3 | d");
    }
    // (1 - w)(x3 + x4 w) = (x3 + x4) + (2 x4 - x3) w.
    return {e.d / 3, e.x1, e.x2, e.x3 + e.x4, 2 * e.x4 - e.x3};
}

// Discriminant of the rational quaternion algebra (product of ramified primes):
// informational metadata derived from the factorization of d.
Int algebra_discriminant(const Int& d);

}  // namespace loq
