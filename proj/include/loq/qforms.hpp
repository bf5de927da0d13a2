#pragma once

#include <optional>
#include <utility>

#include "loq/ints.hpp"

namespace loq {

// Binary quadratic form A x^2 + B xy + C y^2.
struct BinaryQF {
    Int A, B, C;

    Int disc() const { return B * B - 4 * A * C; }
    Int eval(const Int& x, const Int& y) const { return A * x * x + B * x * y + C * y * y; }

    friend bool operator==(const BinaryQF&, const BinaryQF&) = default;
};

// Column transform in SL2(Z): (x, y) -> (m11 x + m12 y, m21 x + m22 y).
struct Unimodular {
    Int m11 = 1, m12 = 0, m21 = 0, m22 = 1;

    Int det() const { return m11 * m22 - m12 * m21; }
};

BinaryQF apply(const BinaryQF& f, const Unimodular& t);

// Gaussian reduction of a definite form (disc < 0). Returns (g, T) with
// g = f o T and |g.B| <= |g.A| <= |g.C| (g keeps the sign of f). Throws
// std::invalid_argument for indefinite or degenerate input.
std::pair<BinaryQF, Unimodular> reduce(const BinaryQF& f);

// A representation f(k, l) = epsilon with epsilon in {1, -1}, if one exists.
struct UnitRepresentation {
    Int k, l;
    int epsilon;
};

// Definite forms only. A reduced positive-definite form attains its minimum at
// (1, 0), so the question reduces to whether the reduced leading coefficient
// is 1.
std::optional<UnitRepresentation> represent_unit(const BinaryQF& f);

// Fundamental solution of X^2 - n Y^2 = 1 with X, Y > 0.
struct PellSolution {
    Int n, x0, y0;
};

// Continued-fraction expansion of sqrt(n); requires n >= 2 and n not a square.
PellSolution pell_min_solution(const Int& n);

}  // namespace loq
