#include "loq/factor.hpp"

#include <algorithm>
#include <boost/multiprecision/miller_rabin.hpp>
#include <numeric>

namespace loq {

namespace {

constexpr std::uint32_t kSieveLimit = 1'000'000;

std::vector<std::uint32_t> build_prime_table() {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2; p <= kSieveLimit; ++p) {
        if (composite[p]) {
            continue;
        }
        primes.push_back(p);
        for (std::uint64_t q = std::uint64_t(p) * p; q <= kSieveLimit; q += p) {
            composite[static_cast<std::size_t>(q)] = true;
        }
    }
    return primes;
}

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mul_mod_u64(result, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Pollard rho, Brent variant, on 64-bit words. Returns a nontrivial factor of n
// or 0 when the iteration budget ran out. n must be odd composite, not a prime power check'd here.
std::uint64_t pollard_brent_u64(std::uint64_t n, std::uint64_t& budget) {
    for (std::uint64_t c = 1; budget > 0; ++c) {
        std::uint64_t x = 2, y = 2, d = 1, q = 1;
        std::uint64_t ys = y;
        const std::uint64_t m = 128;
        for (std::uint64_t r = 1; d == 1 && budget > 0; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = mul_mod_u64(y, y, n) + c;
                if (y >= n) y -= n;
            }
            for (std::uint64_t k = 0; k < r && d == 1 && budget > 0; k += m) {
                ys = y;
                std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = mul_mod_u64(y, y, n) + c;
                    if (y >= n) y -= n;
                    q = mul_mod_u64(q, x > y ? x - y : y - x, n);
                }
                budget = budget > lim ? budget - lim : 0;
                d = std::gcd(q, n);
            }
        }
        if (d == n) {
            // back up one step at a time
            do {
                ys = mul_mod_u64(ys, ys, n) + c;
                if (ys >= n) ys -= n;
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n && d != 1) {
            return d;
        }
    }
    return 0;
}

// Generic Pollard rho for numbers above 64 bits.
Int pollard_brent_int(const Int& n, std::uint64_t& budget) {
    for (Int c = 1; budget > 0; ++c) {
        Int x = 2, y = 2, d = 1, q = 1, ys = y;
        const std::uint64_t m = 64;
        for (std::uint64_t r = 1; d == 1 && budget > 0; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = (y * y + c) % n;
            }
            for (std::uint64_t k = 0; k < r && d == 1 && budget > 0; k += m) {
                ys = y;
                std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                budget = budget > lim ? budget - lim : 0;
                d = gcd(q, n);
            }
        }
        if (d == n) {
            do {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n && d != 1) {
            return d;
        }
    }
    return 0;
}

void factor_rec(const Int& n, std::vector<Int>& out, std::uint64_t& budget) {
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int f = 0;
    if (n < (Int(1) << 62)) {
        std::uint64_t w = static_cast<std::uint64_t>(n);
        std::uint64_t g = pollard_brent_u64(w, budget);
        f = g;
    } else {
        f = pollard_brent_int(n, budget);
    }
    if (f == 0) {
        throw FactorizationExhausted("factoring effort cap exhausted on " + n.str());
    }
    factor_rec(f, out, budget);
    factor_rec(n / f, out, budget);
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> table = build_prime_table();
    return table;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic base set for the full 64-bit range.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < (Int(1) << 64)) {
        return is_prime_u64(static_cast<std::uint64_t>(n));
    }
    return boost::multiprecision::miller_rabin_test(n, 25);
}

std::vector<std::pair<Int, unsigned>> factorize(Int n, const FactorOptions& opts) {
    if (n < 1) {
        throw std::invalid_argument("factorize requires n >= 1");
    }
    std::vector<std::pair<Int, unsigned>> result;
    for (std::uint32_t p : small_primes()) {
        if (Int(p) * p > n) {
            break;
        }
        if (n % p == 0) {
            unsigned e = 0;
            do {
                n /= p;
                ++e;
            } while (n % p == 0);
            result.emplace_back(Int(p), e);
        }
    }
    if (n > 1) {
        std::vector<Int> rest;
        std::uint64_t budget = opts.rho_budget;
        factor_rec(n, rest, budget);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            result.emplace_back(rest[i], static_cast<unsigned>(j - i));
            i = j;
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

Int inverse_mod(const Int& a, const Int& m) {
    Int old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw std::invalid_argument("inverse_mod: arguments not coprime");
    }
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

std::optional<Int> sqrt_mod(Int a, const Int& p) {
    using boost::multiprecision::powm;
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return Int(0);
    if (p == 2) return a;
    if (powm(a, (p - 1) / 2, p) != 1) {
        return std::nullopt;  // non-residue
    }
    if (p % 4 == 3) {
        return powm(a, (p + 1) / 4, p);
    }
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (powm(z, (p - 1) / 2, p) != p - 1) {
        ++z;
    }
    Int m = s;
    Int c = powm(z, q, p);
    Int t = powm(a, q, p);
    Int r = powm(a, (q + 1) / 2, p);
    while (t != 1) {
        Int t2 = t;
        Int i = 0;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
            if (i == m) return std::nullopt;  // defensive; cannot happen for residues
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) {
            b = b * b % p;
        }
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

}  // namespace loq
