#include "loq/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace loq {

namespace {

// Multiplication by w rotates by 60 degrees: w(a + bw) = -b + (a - b)w.
EisensteinInt times_omega(const EisensteinInt& x) { return {-x.b, x.a - x.b}; }

bool in_sector(const EisensteinInt& x) { return x.a >= x.b && x.b >= 0; }

bool lex_less(const EisensteinInt& l, const EisensteinInt& r) {
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
}

// Twice the inner product attached to the norm form (integral for integer input).
Int dot2(const EisensteinInt& u, const EisensteinInt& v) {
    return 2 * u.a * v.a + 2 * u.b * v.b - u.a * v.b - u.b * v.a;
}

// Lagrange-Gauss reduction of the rank-2 lattice spanned by u, v under the
// norm form; returns a shortest nonzero vector.
EisensteinInt shortest_vector(EisensteinInt u, EisensteinInt v) {
    if (norm(u) < norm(v)) {
        std::swap(u, v);
    }
    for (int guard = 0; guard < 10'000; ++guard) {
        Int nv = norm(v);
        Int mu = round_div(dot2(u, v), 2 * nv);
        EisensteinInt r = add(u, {-mu * v.a, -mu * v.b});
        u = v;
        v = r;
        if (norm(v) >= norm(u)) {
            return u;
        }
    }
    throw std::logic_error("lattice reduction failed to converge");
}

// Prime element above a split prime p = 1 mod 3: reduce the lattice
// {(a, b) : a + b*r = 0 mod p} where r is a root of r^2 + r + 1 mod p.
EisensteinInt split_prime_element(const Int& p) {
    auto t = sqrt_mod(-3, p);
    if (!t) {
        throw std::logic_error("no square root of -3 modulo split prime " + p.str());
    }
    Int r = (*t - 1) * inverse_mod(2, p) % p;
    if (r < 0) r += p;
    if ((r * r + r + 1) % p != 0) {
        throw std::logic_error("bad cube root of unity modulo " + p.str());
    }
    EisensteinInt z = shortest_vector({p, 0}, {-r, 1});
    if (norm(z) != p) {
        throw std::logic_error("lattice reduction missed the prime " + p.str());
    }
    return canonical(z);
}

}  // namespace

std::vector<EisensteinInt> unit_conjugate_orbit(const EisensteinInt& x) {
    std::vector<EisensteinInt> orbit;
    orbit.reserve(12);
    EisensteinInt y = x;
    for (int half = 0; half < 2; ++half) {
        EisensteinInt z = y;
        for (int k = 0; k < 3; ++k) {
            orbit.push_back(z);
            orbit.push_back(negate(z));
            z = times_omega(z);
        }
        y = conjugate(x);
    }
    return orbit;
}

EisensteinInt canonical(const EisensteinInt& x) {
    std::optional<EisensteinInt> best;
    for (const EisensteinInt& c : unit_conjugate_orbit(x)) {
        if (!in_sector(c)) {
            continue;
        }
        if (!best || lex_less(c, *best)) {
            best = c;
        }
    }
    if (!best) {
        throw std::logic_error("orbit has no sector representative");
    }
    return *best;
}

std::optional<LoeschianFactorization> classify_loeschian(const Int& n, const FactorOptions& opts) {
    if (n < 0) {
        throw std::invalid_argument("classify_loeschian requires n >= 0");
    }
    LoeschianFactorization f;
    f.n = n;
    if (n == 0) {
        f.inert_root = 0;
        return f;
    }
    for (const auto& [p, e] : factorize(n, opts)) {
        if (p == 3) {
            f.three_exp = e;
        } else if (mod3(p) == 1) {
            f.split_part.emplace_back(p, e);
        } else {
            if (e % 2 != 0) {
                return std::nullopt;
            }
            for (unsigned i = 0; i < e / 2; ++i) {
                f.inert_root *= p;
            }
        }
    }
    return f;
}

EisensteinInt represent(const Int& n, const FactorOptions& opts) {
    auto f = classify_loeschian(n, opts);
    if (!f) {
        throw std::domain_error(n.str() + " is not a Loeschian number");
    }
    if (n == 0) {
        return {0, 0};
    }
    EisensteinInt z{1, 0};
    for (unsigned i = 0; i < f->three_exp; ++i) {
        z = multiply(z, {2, 1});  // norm 3
    }
    for (const auto& [p, e] : f->split_part) {
        EisensteinInt zp = split_prime_element(p);
        for (unsigned i = 0; i < e; ++i) {
            z = multiply(z, zp);
        }
    }
    z = multiply(z, {f->inert_root, 0});
    if (norm(z) != n) {
        throw std::logic_error("represent produced wrong norm for " + n.str());
    }
    return canonical(z);
}

std::vector<EisensteinInt> norm_representatives(const Int& k) {
    if (k < 0) {
        return {};
    }
    if (k >= (Int(1) << 62)) {
        throw std::invalid_argument("norm_representatives is limited to k < 2^62");
    }
    if (k == 0) {
        return {EisensteinInt{0, 0}};
    }
    const std::uint64_t kk = static_cast<std::uint64_t>(k);
    std::vector<EisensteinInt> reps;
    // Sector solutions: for each b <= sqrt(k), a = (b + sqrt(4k - 3b^2)) / 2.
    for (std::uint64_t b = 0; b * b <= kk; ++b) {
        std::uint64_t disc = 4 * kk - 3 * b * b;
        std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(disc)));
        using u128 = unsigned __int128;
        while (s > 0 && u128(s) * s > disc) --s;
        while (u128(s + 1) * (s + 1) <= disc) ++s;
        if (u128(s) * s != disc || (b + s) % 2 != 0) {
            continue;
        }
        std::uint64_t a = (b + s) / 2;
        EisensteinInt c = canonical({Int(a), Int(b)});
        if (std::find(reps.begin(), reps.end(), c) == reps.end()) {
            reps.push_back(c);
        }
    }
    std::sort(reps.begin(), reps.end(), lex_less);
    return reps;
}

LoeschianSieve::LoeschianSieve(std::uint64_t limit) : limit_(limit), table_(limit + 1, false) {
    for (std::uint64_t b = 0; b * b <= limit; ++b) {
        for (std::uint64_t a = b;; ++a) {
            std::uint64_t n = a * a - a * b + b * b;
            if (n > limit) {
                break;
            }
            table_[n] = true;
        }
    }
}

const LoeschianSieve& shared_sieve() {
    static const LoeschianSieve sieve(1'000'000);
    return sieve;
}

bool is_loeschian_u64(std::uint64_t n) {
    if (n == 0 || n == 1) {
        return true;
    }
    if (n > 1'000'000'000'000ull) {
        return is_loeschian(Int(n));
    }
    for (std::uint32_t p : small_primes()) {
        if (std::uint64_t(p) * p > n) {
            break;
        }
        if (n % p != 0) {
            continue;
        }
        unsigned e = 0;
        do {
            n /= p;
            ++e;
        } while (n % p == 0);
        if (p % 3 == 2 && e % 2 != 0) {
            return false;
        }
    }
    // Leftover cofactor is prime (no divisor below 1e6, n <= 1e12).
    return n == 1 || n % 3 != 2;
}

}  // namespace loq
