#pragma once

#include <vector>

#include "loq/ints.hpp"

namespace loq {

using IntMatrix = std::vector<std::vector<Int>>;

// Basis of {x in Z^n : M x = 0} for an integer matrix M (rows may be linearly
// dependent). The result is a basis of the full kernel lattice, i.e. saturated:
// any integer solution is an integer combination of the returned vectors.
IntMatrix integer_kernel(IntMatrix m);

// In-place row Hermite normal form (pivots positive, entries above a pivot
// reduced into [0, pivot)); zero rows are dropped. Canonicalizes a lattice
// basis given as rows.
void hnf_rows(IntMatrix& rows);

}  // namespace loq
