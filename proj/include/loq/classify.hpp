#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "loq/order3.hpp"
#include "loq/qforms.hpp"

namespace loq {

// Stratification of d by its 3-adic valuation v and, when v = 1, by d/3 mod 3.
enum class CdCase {
    A,    // 3 does not divide d
    B,    // 9 | d
    Ci,   // d = 3 t with t = 1 (mod 3)
    Cii,  // d = 3 t with t = 2 (mod 3)
};

enum class ThirdStatus {
    Realized,     // elements with invariant product d/3 exist (witness included)
    NotRealized,  // provably none exist for this d
    Unknown,      // search bound exhausted without a decision
};

struct ClassRepresentative {
    Int d_prime, d_dprime;  // invariant pair of the class
    bool star;              // second member of a non-self-paired star pair
    Order3Element elem;
};

struct ClassReport {
    Int d;
    unsigned r = 0;  // number of distinct prime factors of d
    CdCase cd_case = CdCase::A;
    std::optional<Int> conjugacy_classes;         // C_d, unset when Unknown
    std::optional<Int> subgroup_classes;          // C'_d
    ThirdStatus third_status = ThirdStatus::NotRealized;
    std::optional<Order3Element> third_witness;
    Int search_bound;
    std::vector<ClassRepresentative> representatives;
};

// Counts conjugacy classes of order-3 elements by constructing one
// representative per class and cross-checking against the closed-form counts.
ClassReport count_classes(const Int& d, const Int& bound = kDefaultSearchBound);

enum class SearchMethod { DirectSearch, Pell, Corollary };

struct DivisibilityWitness {
    Int d_star;
    bool verified = false;                      // found u - 3 d* v = 1 with the
    std::optional<std::pair<Int, Int>> pair;    // required norm-form shape
    SearchMethod method = SearchMethod::DirectSearch;
    Int bound;
};

// Searches for norm-form values u, v with u - 3 d* v = 1 and u, v, 3 pairwise
// admissible. Precondition: d* = 1 (mod 3).
DivisibilityWitness verify_conjecture2(const Int& d_star,
                                       const Int& bound = kDefaultSearchBound);

struct SweepResult {
    Int lo, hi;
    std::uint64_t verified = 0;
    std::vector<Int> unknown;  // values where the bound was exhausted
};

// Runs verify_conjecture2 over every admissible d* in [lo, hi] using `jobs`
// worker threads. `progress`, when set, is called with the largest value v
// such that all admissible d* <= v are done (suitable for checkpointing).
SweepResult verify_conjecture2_range(const Int& lo, const Int& hi, const Int& bound,
                                     unsigned jobs,
                                     const std::function<void(const Int&)>& progress = {});

enum class PellCriterion { True, Inapplicable };

// For 9 | d: solves X^2 - (d/3) Y^2 = 1 minimally and reports True when the
// fundamental Y is prime to 3 (which forces the third stratum to be realized).
PellCriterion pell_criterion(const Int& d);

struct GMembership {
    enum class Result { InG, Unknown };
    Result result = Result::Unknown;
    std::string route;  // which sufficient condition fired
    std::optional<std::pair<Int, Int>> witness;
    Int bound;
};

// Decides (when possible) whether order-3 elements with invariant product d/3
// exist, via a chain of sufficient conditions ending in direct search.
GMembership g_membership(const Int& d, const Int& bound = kDefaultSearchBound);

// Serialization helpers. All big integers render as decimal strings.
nlohmann::json to_json(const Order3Element& e);
nlohmann::json to_json(const ClassReport& r);
nlohmann::json to_json(const DivisibilityWitness& w);
nlohmann::json to_json(const GMembership& g);
std::string csv_header();
std::string to_csv_row(const ClassReport& r);

const char* case_name(CdCase c);
const char* status_name(ThirdStatus s);
const char* method_name(SearchMethod m);

}  // namespace loq
