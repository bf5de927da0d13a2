#include "loq/classify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "loq/eisenstein.hpp"
#include "loq/factor.hpp"

namespace loq {

namespace {

// Divisors h of n with gcd(h, n/h) = 1: every prime power of n goes entirely
// into h or entirely into n/h. Ascending.
std::vector<Int> hall_divisors(const Int& n) {
    std::vector<Int> out{1};
    for (const auto& [p, e] : factorize(n)) {
        Int q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        const std::size_t sz = out.size();
        for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

[[noreturn]] void throw_exhausted(const Int& d, const Int& dp, const Int& dpp,
                                  const Int& bound) {
    throw std::runtime_error("search bound " + bound.str() +
                             " exhausted on a stratum known to be nonempty (d = " + d.str() +
                             ", invariants (" + dp.str() + ", " + dpp.str() + "))");
}

}  // namespace

const char* case_name(CdCase c) {
    switch (c) {
        case CdCase::A: return "A";
        case CdCase::B: return "B";
        case CdCase::Ci: return "C_i";
        case CdCase::Cii: return "C_ii";
    }
    return "?";
}

const char* status_name(ThirdStatus s) {
    switch (s) {
        case ThirdStatus::Realized: return "realized";
        case ThirdStatus::NotRealized: return "not-realized";
        case ThirdStatus::Unknown: return "unknown";
    }
    return "?";
}

const char* method_name(SearchMethod m) {
    switch (m) {
        case SearchMethod::DirectSearch: return "direct-search";
        case SearchMethod::Pell: return "pell";
        case SearchMethod::Corollary: return "corollary";
    }
    return "?";
}

ClassReport count_classes(const Int& d, const Int& bound) {
    if (d < 1) throw std::invalid_argument("count_classes: d must be >= 1");
    ClassReport rep;
    rep.d = d;
    rep.search_bound = bound;

    const auto factors = factorize(d);
    rep.r = static_cast<unsigned>(factors.size());
    unsigned v3 = 0;
    for (const auto& [p, e] : factors) {
        if (p == 3) v3 = e;
    }
    if (v3 == 0) {
        rep.cd_case = CdCase::A;
    } else if (v3 >= 2) {
        rep.cd_case = CdCase::B;
    } else {
        rep.cd_case = (mod3(d / 3) == 1) ? CdCase::Ci : CdCase::Cii;
    }

    // Invariant product d: one class per ordered coprime pair, for every d.
    for (const Int& h : hall_divisors(d)) {
        auto xi = construct_with_invariants(d, h, d / h, bound);
        if (!xi) throw_exhausted(d, h, d / h, bound);
        rep.representatives.push_back({h, d / h, false, *xi});
    }

    // Invariant product d/3: possible only when 3 | d, and then each coprime
    // pair contributes a non-conjugate pair {xi, xi*}.
    if (rep.cd_case == CdCase::Cii || rep.cd_case == CdCase::B) {
        const Int dt = d / 3;
        bool complete = true;
        for (const Int& h : hall_divisors(dt)) {
            auto xi = construct_with_invariants(d, h, dt / h, bound);
            if (!xi) {
                if (rep.cd_case == CdCase::Cii) throw_exhausted(d, h, dt / h, bound);
                complete = false;
                continue;
            }
            if (!rep.third_witness) rep.third_witness = *xi;
            rep.representatives.push_back({h, dt / h, false, *xi});
            rep.representatives.push_back({h, dt / h, true, star(*xi)});
        }
        rep.third_status = complete ? ThirdStatus::Realized : ThirdStatus::Unknown;
    } else {
        rep.third_status = ThirdStatus::NotRealized;
    }

    if (rep.third_status != ThirdStatus::Unknown) {
        Int expected = Int(1) << rep.r;
        if (rep.cd_case == CdCase::Cii) expected *= 2;
        if (rep.cd_case == CdCase::B) expected *= 3;
        if (Int(rep.representatives.size()) != expected) {
            throw std::logic_error("representative count " +
                                   std::to_string(rep.representatives.size()) +
                                   " disagrees with the closed form " + expected.str() +
                                   " for d = " + d.str());
        }
        rep.conjugacy_classes = expected;
        rep.subgroup_classes = (d == 1) ? Int(1) : expected / 2;
    }

    std::sort(rep.representatives.begin(), rep.representatives.end(),
              [](const ClassRepresentative& a, const ClassRepresentative& b) {
                  if (a.d_prime != b.d_prime) return a.d_prime < b.d_prime;
                  if (a.d_dprime != b.d_dprime) return a.d_dprime < b.d_dprime;
                  return a.star < b.star;
              });
    return rep;
}

DivisibilityWitness verify_conjecture2(const Int& d_star, const Int& bound) {
    if (d_star < 1) throw std::invalid_argument("verify_conjecture2: d* must be >= 1");
    if (mod3(d_star) != 1)
        throw std::invalid_argument("verify_conjecture2: d* must be 1 (mod 3)");
    if (bound < 1) throw std::invalid_argument("verify_conjecture2: bound must be >= 1");

    DivisibilityWitness out;
    out.d_star = d_star;
    out.bound = bound;
    out.method = SearchMethod::DirectSearch;

    const LoeschianSieve& sieve = shared_sieve();
    if (bound <= Int(sieve.limit()) && 3 * d_star * bound + 1 < (Int(1) << 63)) {
        const auto ds = static_cast<std::uint64_t>(d_star);
        const auto b = static_cast<std::uint64_t>(bound);
        for (std::uint64_t v = 1; v <= b; ++v) {
            if (v % 3 == 0 || !sieve.contains(v)) continue;
            const std::uint64_t u = 3 * ds * v + 1;
            if (is_loeschian_u64(u)) {
                out.verified = true;
                out.pair = std::make_pair(Int(u), Int(v));
                return out;
            }
        }
        return out;
    }
    for (Int v = 1; v <= bound; ++v) {
        if (mod3(v) == 0 || !loeschian_value(v)) continue;
        const Int u = 3 * d_star * v + 1;
        if (loeschian_value(u)) {
            out.verified = true;
            out.pair = std::make_pair(u, v);
            return out;
        }
    }
    return out;
}

SweepResult verify_conjecture2_range(const Int& lo, const Int& hi, const Int& bound,
                                     unsigned jobs,
                                     const std::function<void(const Int&)>& progress) {
    if (lo < 1) throw std::invalid_argument("verify_conjecture2_range: lo must be >= 1");
    SweepResult res;
    res.lo = lo;
    res.hi = hi;
    if (lo > hi) return res;

    Int first = lo;
    while (mod3(first) != 1) ++first;
    if (first > hi) return res;
    const auto total = static_cast<std::uint64_t>((hi - first) / 3 + 1);
    const std::uint64_t chunk = 1024;
    const std::uint64_t nchunks = (total + chunk - 1) / chunk;
    if (jobs == 0) jobs = 1;

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> verified{0};
    std::mutex mu;
    std::set<std::uint64_t> done;       // finished chunks past the frontier
    std::uint64_t frontier = 0;         // chunks [0, frontier) fully finished
    std::vector<Int> unknown;

    auto worker = [&]() {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            const std::uint64_t ibegin = c * chunk;
            const std::uint64_t iend = std::min(total, ibegin + chunk);
            std::uint64_t local_ok = 0;
            std::vector<Int> local_unknown;
            for (std::uint64_t i = ibegin; i < iend; ++i) {
                const Int ds = first + 3 * Int(i);
                try {
                    if (verify_conjecture2(ds, bound).verified) {
                        ++local_ok;
                    } else {
                        local_unknown.push_back(ds);
                    }
                } catch (const FactorizationExhausted&) {
                    local_unknown.push_back(ds);
                }
            }
            std::lock_guard<std::mutex> lock(mu);
            verified += local_ok;
            unknown.insert(unknown.end(), local_unknown.begin(), local_unknown.end());
            done.insert(c);
            bool advanced = false;
            while (done.count(frontier) != 0) {
                done.erase(frontier);
                ++frontier;
                advanced = true;
            }
            if (advanced && progress) {
                const Int through =
                    (frontier == nchunks) ? hi : first + 3 * Int(frontier * chunk) - 3;
                progress(through);
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    res.verified = verified.load();
    std::sort(unknown.begin(), unknown.end());
    res.unknown = std::move(unknown);
    return res;
}

PellCriterion pell_criterion(const Int& d) {
    if (d < 1 || d % 9 != 0)
        throw std::invalid_argument("pell_criterion: d must be a positive multiple of 9");
    const Int dt = d / 3;
    if (is_square(dt)) return PellCriterion::Inapplicable;
    const PellSolution sol = pell_min_solution(dt);
    return (mod3(sol.y0) != 0) ? PellCriterion::True : PellCriterion::Inapplicable;
}

GMembership g_membership(const Int& d, const Int& bound) {
    if (d < 1) throw std::invalid_argument("g_membership: d must be >= 1");
    GMembership g;
    g.bound = bound;

    if (d % 9 != 0) {
        g.result = GMembership::Result::InG;
        g.route = "nine-coprime";
        return g;
    }
    if (is_loeschian(d)) {
        g.result = GMembership::Result::InG;
        g.route = "norm-form-value";
        return g;
    }
    Int m = d;
    while (m % 3 == 0) m /= 3;
    if (mod3(m) == 2) {
        g.result = GMembership::Result::InG;
        g.route = "three-power-shape";
        return g;
    }
    const Int dt = d / 3;
    if (!is_square(dt)) {
        const PellSolution sol = pell_min_solution(dt);
        if (mod3(sol.y0) != 0) {
            g.result = GMembership::Result::InG;
            g.route = "pell(x0=" + sol.x0.str() + ",y0=" + sol.y0.str() + ")";
            g.witness = std::make_pair(sol.x0 * sol.x0, sol.y0 * sol.y0);
            return g;
        }
    }
    if (dt % 9 == 0) {
        GMembership inner = g_membership(dt, bound);
        if (inner.result == GMembership::Result::InG) {
            g.result = GMembership::Result::InG;
            g.route = "triple(" + inner.route + ")";
            g.witness = inner.witness;
            return g;
        }
    }
    for (const Int& h : hall_divisors(dt)) {
        if (auto cert = solve(h, dt / h, BezoutMode::NoThree, bound)) {
            g.result = GMembership::Result::InG;
            g.route = "direct-search(" + h.str() + "," + Int(dt / h).str() + ")";
            g.witness = std::make_pair(cert->u, cert->v);
            return g;
        }
    }
    g.result = GMembership::Result::Unknown;
    g.route = "exhausted";
    return g;
}

nlohmann::json to_json(const Order3Element& e) {
    return nlohmann::json{
        {"d", e.elem.d.str()},
        {"coords", {e.elem.x1.str(), e.elem.x2.str(), e.elem.x3.str(), e.elem.x4.str()}},
        {"d_prime", e.d_prime.str()},
        {"d_dprime", e.d_dprime.str()},
        {"stratum", e.tag == CaseTag::Full ? "full" : "third"},
    };
}

nlohmann::json to_json(const ClassReport& r) {
    nlohmann::json j{
        {"d", r.d.str()},
        {"distinct_primes", r.r},
        {"case", case_name(r.cd_case)},
        {"third_status", status_name(r.third_status)},
        {"search_bound", r.search_bound.str()},
    };
    j["conjugacy_classes"] =
        r.conjugacy_classes ? nlohmann::json(r.conjugacy_classes->str()) : nlohmann::json();
    j["subgroup_classes"] =
        r.subgroup_classes ? nlohmann::json(r.subgroup_classes->str()) : nlohmann::json();
    if (r.third_witness) j["third_witness"] = to_json(*r.third_witness);
    nlohmann::json reps = nlohmann::json::array();
    for (const ClassRepresentative& c : r.representatives) {
        nlohmann::json e = to_json(c.elem);
        e["invariants"] = {c.d_prime.str(), c.d_dprime.str()};
        e["star"] = c.star;
        reps.push_back(std::move(e));
    }
    j["representatives"] = std::move(reps);
    return j;
}

nlohmann::json to_json(const DivisibilityWitness& w) {
    nlohmann::json j{
        {"d_star", w.d_star.str()},
        {"verified", w.verified},
        {"method", method_name(w.method)},
        {"bound", w.bound.str()},
    };
    if (w.pair) {
        j["u"] = w.pair->first.str();
        j["v"] = w.pair->second.str();
    }
    return j;
}

nlohmann::json to_json(const GMembership& g) {
    nlohmann::json j{
        {"result", g.result == GMembership::Result::InG ? "in" : "unknown"},
        {"route", g.route},
        {"bound", g.bound.str()},
    };
    if (g.witness) {
        j["u"] = g.witness->first.str();
        j["v"] = g.witness->second.str();
    }
    return j;
}

std::string csv_header() { return "d,r,case,C_d,third_status"; }

std::string to_csv_row(const ClassReport& r) {
    std::string c = r.conjugacy_classes ? r.conjugacy_classes->str() : "";
    return r.d.str() + "," + std::to_string(r.r) + "," + case_name(r.cd_case) + "," + c + "," +
           status_name(r.third_status);
}

}  // namespace loq
