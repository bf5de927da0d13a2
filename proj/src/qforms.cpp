#include "loq/qforms.hpp"

#include <stdexcept>

namespace loq {

namespace {

Unimodular compose(const Unimodular& s, const Unimodular& t) {
    return {s.m11 * t.m11 + s.m12 * t.m21, s.m11 * t.m12 + s.m12 * t.m22,
            s.m21 * t.m11 + s.m22 * t.m21, s.m21 * t.m12 + s.m22 * t.m22};
}

}  // namespace

BinaryQF apply(const BinaryQF& f, const Unimodular& t) {
    Int a = f.eval(t.m11, t.m21);
    Int c = f.eval(t.m12, t.m22);
    Int b = 2 * (f.A * t.m11 * t.m12 + f.C * t.m21 * t.m22) +
            f.B * (t.m11 * t.m22 + t.m12 * t.m21);
    return {a, b, c};
}

std::pair<BinaryQF, Unimodular> reduce(const BinaryQF& f) {
    if (f.disc() >= 0) {
        throw std::invalid_argument("reduce expects a definite form (disc < 0)");
    }
    int sign = f.A > 0 ? 1 : -1;
    BinaryQF g{sign * f.A, sign * f.B, sign * f.C};  // positive definite copy
    Unimodular t;
    for (int guard = 0; guard < 100'000; ++guard) {
        if (g.A > g.C) {
            // (x, y) -> (-y, x) swaps the outer coefficients.
            Unimodular s{0, -1, 1, 0};
            g = apply(g, s);
            t = compose(t, s);
            continue;
        }
        // Shift B into (-A, A] with x -> x + m y.
        Int m = floor_div(g.A - g.B, 2 * g.A);
        if (m != 0) {
            Unimodular s{1, m, 0, 1};
            g = apply(g, s);
            t = compose(t, s);
            if (g.A > g.C) {
                continue;
            }
        }
        // Boundary normalization of the reduced domain.
        if (g.B == -g.A) {
            Unimodular s{1, 1, 0, 1};
            g = apply(g, s);
            t = compose(t, s);
        }
        if (g.A == g.C && g.B < 0) {
            Unimodular s{0, -1, 1, 0};
            g = apply(g, s);
            t = compose(t, s);
        }
        if (abs(g.B) <= g.A && g.A <= g.C && g.B > -g.A && !(g.A == g.C && g.B < 0)) {
            return {BinaryQF{sign * g.A, sign * g.B, sign * g.C}, t};
        }
    }
    throw std::logic_error("form reduction failed to converge");
}

std::optional<UnitRepresentation> represent_unit(const BinaryQF& f) {
    if (f.disc() >= 0) {
        throw std::invalid_argument("represent_unit expects a definite form");
    }
    auto [g, t] = reduce(f);
    Int lead = abs(g.A);
    if (lead != 1) {
        // The minimum of the (sign-normalized) reduced form exceeds 1.
        return std::nullopt;
    }
    UnitRepresentation rep{t.m11, t.m21, g.A > 0 ? 1 : -1};
    if (f.eval(rep.k, rep.l) != rep.epsilon) {
        throw std::logic_error("unit representation failed to verify");
    }
    return rep;
}

PellSolution pell_min_solution(const Int& n) {
    if (n < 2 || is_square(n)) {
        throw std::invalid_argument("pell_min_solution requires nonsquare n >= 2");
    }
    const Int a0 = isqrt(n);
    Int m = 0, d = 1, a = a0;
    Int p_prev = 1, p = a0, q_prev = 0, q = 1;
    for (int guard = 0; guard < 10'000'000; ++guard) {
        if (p * p - n * q * q == 1) {
            return {n, p, q};
        }
        m = d * a - m;
        d = (n - m * m) / d;
        a = (a0 + m) / d;
        Int p_next = a * p + p_prev;
        Int q_next = a * q + q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
    }
    throw std::logic_error("Pell expansion exceeded the iteration guard");
}

}  // namespace loq
