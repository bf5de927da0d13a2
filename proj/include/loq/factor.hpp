#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "loq/ints.hpp"

namespace loq {

// Thrown when the factoring effort cap runs out before a number is fully split.
// Distinct from "has a disqualifying factor": the caller genuinely does not know.
struct FactorizationExhausted : std::runtime_error {
    explicit FactorizationExhausted(const std::string& what) : std::runtime_error(what) {}
};

// All primes below 1e6, computed once.
const std::vector<std::uint32_t>& small_primes();

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Deterministic below 2^64, probabilistic Miller-Rabin (25 rounds) above.
bool is_prime(const Int& n);

struct FactorOptions {
    // Pollard-Brent iterations allowed in total before FactorizationExhausted.
    std::uint64_t rho_budget = std::uint64_t(1) << 24;
};

// Prime factorization n = prod p^e with pairs sorted by p. Requires n >= 1.
std::vector<std::pair<Int, unsigned>> factorize(Int n, const FactorOptions& opts = {});

// Square root of a modulo an odd prime p (Tonelli-Shanks); nullopt if a is a
// non-residue. Result is in [0, p).
std::optional<Int> sqrt_mod(Int a, const Int& p);

// Modular inverse of a mod m, gcd(a, m) = 1.
Int inverse_mod(const Int& a, const Int& m);

}  // namespace loq
