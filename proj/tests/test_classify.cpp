#include <doctest.h>

#include <set>
#include <vector>

#include "loq/classify.hpp"
#include "loq/factor.hpp"

using namespace loq;

TEST_SUITE("classify") {

TEST_CASE("class counts for hand-checked levels") {
    ClassReport one = count_classes(1);
    CHECK(one.cd_case == CdCase::A);
    CHECK(one.r == 0);
    REQUIRE(one.conjugacy_classes.has_value());
    CHECK(*one.conjugacy_classes == 1);
    CHECK(*one.subgroup_classes == 1);
    CHECK(one.third_status == ThirdStatus::NotRealized);
    REQUIRE(one.representatives.size() == 1);
    CHECK(one.representatives[0].elem.elem == omega(1));

    ClassReport three = count_classes(3);
    CHECK(three.cd_case == CdCase::Ci);
    CHECK(*three.conjugacy_classes == 2);
    CHECK(*three.subgroup_classes == 1);
    CHECK(three.third_status == ThirdStatus::NotRealized);

    ClassReport twelve = count_classes(12);
    CHECK(twelve.cd_case == CdCase::Ci);
    CHECK(*twelve.conjugacy_classes == 4);

    ClassReport forty = count_classes(40);
    CHECK(forty.cd_case == CdCase::A);
    CHECK(forty.r == 2);
    CHECK(*forty.conjugacy_classes == 4);
    CHECK(*forty.subgroup_classes == 2);
    REQUIRE(forty.representatives.size() == 4);
    CHECK(forty.representatives[1].d_prime == 5);
    CHECK(forty.representatives[1].elem.elem == OrderElement{40, -105, -209, -33, -15});
    CHECK(forty.representatives[2].elem.elem == OrderElement{40, 104, 209, 33, 15});

    ClassReport six = count_classes(6);
    CHECK(six.cd_case == CdCase::Cii);
    CHECK(*six.conjugacy_classes == 8);
    CHECK(six.third_status == ThirdStatus::Realized);
    REQUIRE(six.third_witness.has_value());
    CHECK(six.third_witness->elem == OrderElement{6, 1, 3, 1, 0});

    ClassReport nine = count_classes(9);
    CHECK(nine.cd_case == CdCase::B);
    CHECK(nine.r == 1);
    CHECK(*nine.conjugacy_classes == 6);
    CHECK(*nine.subgroup_classes == 3);
    CHECK(nine.third_status == ThirdStatus::Realized);
    REQUIRE(nine.representatives.size() == 6);
    CHECK(nine.representatives[3].elem.elem == OrderElement{9, 3, 7, 2, 0});
    CHECK(nine.representatives[4].star);
    CHECK(nine.representatives[4].elem.elem == OrderElement{9, 3, 7, -2, 0});
    CHECK(nine.representatives[5].elem.elem == omega(9));

    ClassReport eighteen = count_classes(18);
    CHECK(eighteen.cd_case == CdCase::B);
    CHECK(*eighteen.conjugacy_classes == 12);

    CHECK_THROWS_AS(count_classes(0), std::invalid_argument);
}

TEST_CASE("counts follow the closed form for every level up to 80") {
    for (Int d = 1; d <= 80; ++d) {
        CAPTURE(d);
        ClassReport rep = count_classes(d);

        const auto factors = factorize(d);
        CHECK(rep.r == factors.size());
        unsigned v3 = 0;
        for (const auto& [p, e] : factors)
            if (p == 3) v3 = e;
        CdCase expected_case = v3 == 0    ? CdCase::A
                               : v3 >= 2 ? CdCase::B
                               : mod3(d / 3) == 1 ? CdCase::Ci
                                                  : CdCase::Cii;
        CHECK(rep.cd_case == expected_case);

        // Every level this small is decided.
        REQUIRE(rep.conjugacy_classes.has_value());
        Int expected = Int(1) << rep.r;
        if (rep.cd_case == CdCase::Cii) expected *= 2;
        if (rep.cd_case == CdCase::B) expected *= 3;
        CHECK(*rep.conjugacy_classes == expected);
        CHECK(*rep.subgroup_classes == (d == 1 ? Int(1) : expected / 2));
        CHECK(Int(rep.representatives.size()) == expected);

        bool expect_third = rep.cd_case == CdCase::Cii || rep.cd_case == CdCase::B;
        CHECK(rep.third_status ==
              (expect_third ? ThirdStatus::Realized : ThirdStatus::NotRealized));
        CHECK(rep.third_witness.has_value() == expect_third);

        std::set<std::vector<Int>> seen;
        const ClassRepresentative* prev = nullptr;
        for (const ClassRepresentative& c : rep.representatives) {
            // Labels match the element's own invariants and stratum.
            CHECK(c.elem.d_prime == c.d_prime);
            CHECK(c.elem.d_dprime == c.d_dprime);
            Int product = c.d_prime * c.d_dprime;
            CHECK((product == d || 3 * product == d));
            CHECK(c.elem.tag == (product == d ? CaseTag::Full : CaseTag::Third));
            if (c.star) {
                CHECK(3 * product == d);
            }
            seen.insert({c.elem.elem.x1, c.elem.elem.x2, c.elem.elem.x3, c.elem.elem.x4});
            if (prev != nullptr) {
                auto key = [](const ClassRepresentative& x) {
                    return std::tuple<Int, Int, bool>{x.d_prime, x.d_dprime, x.star};
                };
                CHECK(key(*prev) < key(c));
            }
            prev = &c;
        }
        CHECK(Int(seen.size()) == expected);
    }
}

TEST_CASE("representatives are pairwise non-conjugate") {
    for (const Int d : {Int(6), Int(9), Int(12), Int(30), Int(36), Int(40)}) {
        CAPTURE(d);
        ClassReport rep = count_classes(d);
        for (size_t i = 0; i < rep.representatives.size(); ++i) {
            for (size_t j = 0; j < rep.representatives.size(); ++j) {
                if (i == j) continue;
                CHECK_FALSE(conjugacy_witness(rep.representatives[i].elem,
                                              rep.representatives[j].elem)
                                .has_value());
            }
        }
    }
}

TEST_CASE("divisibility witnesses for single values") {
    DivisibilityWitness w1 = verify_conjecture2(1);
    CHECK(w1.verified);
    REQUIRE(w1.pair.has_value());
    CHECK(w1.pair->first == 4);
    CHECK(w1.pair->second == 1);
    CHECK(w1.pair->first - 3 * w1.d_star * w1.pair->second == 1);

    DivisibilityWitness w4 = verify_conjecture2(4);
    REQUIRE(w4.pair.has_value());
    CHECK(w4.pair->first == 13);
    CHECK(w4.pair->second == 1);

    DivisibilityWitness w7 = verify_conjecture2(7);
    REQUIRE(w7.pair.has_value());
    CHECK(w7.pair->first == 148);
    CHECK(w7.pair->second == 7);
    CHECK(mod3(w7.pair->second) != 0);
    CHECK(is_loeschian(w7.pair->first));
    CHECK(is_loeschian(w7.pair->second));

    // A too-small bound reports failure instead of lying.
    CHECK_FALSE(verify_conjecture2(7, 6).verified);
    CHECK(verify_conjecture2(7, 7).verified);

    CHECK_THROWS_AS(verify_conjecture2(2), std::invalid_argument);
    CHECK_THROWS_AS(verify_conjecture2(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_conjecture2(1, 0), std::invalid_argument);
}

TEST_CASE("threaded sweeps agree with the single-value search") {
    std::vector<Int> marks;
    SweepResult res = verify_conjecture2_range(1, 300, kDefaultSearchBound, 3,
                                               [&](const Int& through) { marks.push_back(through); });
    CHECK(res.verified == 100);
    CHECK(res.unknown.empty());
    REQUIRE(!marks.empty());
    for (size_t i = 1; i < marks.size(); ++i) CHECK(marks[i - 1] <= marks[i]);
    CHECK(marks.back() == 300);

    // Ranges that contain no admissible value are empty, not an error.
    SweepResult none = verify_conjecture2_range(2, 3, kDefaultSearchBound, 2);
    CHECK(none.verified == 0);
    CHECK(none.unknown.empty());

    // A hopeless bound classifies everything as unknown.
    SweepResult stuck = verify_conjecture2_range(7, 7, 6, 2);
    CHECK(stuck.verified == 0);
    REQUIRE(stuck.unknown.size() == 1);
    CHECK(stuck.unknown[0] == 7);
}

TEST_CASE("fundamental Pell solutions decide the stratum when 3 misses Y") {
    CHECK(pell_criterion(9) == PellCriterion::True);     // X^2 - 3Y^2: (2, 1)
    CHECK(pell_criterion(18) == PellCriterion::True);    // X^2 - 6Y^2: (5, 2)
    CHECK(pell_criterion(27) == PellCriterion::Inapplicable);  // 9 is a square
    CHECK(pell_criterion(63) == PellCriterion::Inapplicable);  // (55, 12) has 3 | 12
    CHECK(pell_min_solution(21).y0 == 12);
    CHECK_THROWS_AS(pell_criterion(10), std::invalid_argument);
    CHECK_THROWS_AS(pell_criterion(-9), std::invalid_argument);
}

TEST_CASE("membership routes fire in documented order") {
    GMembership direct = g_membership(40);
    CHECK(direct.result == GMembership::Result::InG);
    CHECK(direct.route == "nine-coprime");

    for (const Int d : {Int(9), Int(36), Int(225)}) {
        GMembership g = g_membership(d);
        CHECK(g.result == GMembership::Result::InG);
        CHECK(g.route == "norm-form-value");
    }

    GMembership shape = g_membership(54);
    CHECK(shape.result == GMembership::Result::InG);
    CHECK(shape.route == "three-power-shape");

    GMembership pell = g_membership(90);
    CHECK(pell.result == GMembership::Result::InG);
    CHECK(pell.route == "pell(x0=11,y0=2)");
    REQUIRE(pell.witness.has_value());
    CHECK(pell.witness->first == 121);
    CHECK(pell.witness->second == 4);
    // The witness is itself a divisor-relation certificate for (1, d/3).
    CHECK(pell.witness->first - 30 * pell.witness->second == 1);

    // 1566 = 2 * 3^3 * 29 is not a norm, its three-free part 58 is 1 mod 3,
    // and pell(522) = (19603, 858) has 3 | 858 -- but 9 | 522, so the decision
    // recurses and settles 522 through pell(174) = (1451, 110).
    GMembership triple = g_membership(1566);
    CHECK(triple.result == GMembership::Result::InG);
    CHECK(triple.route == "triple(pell(x0=1451,y0=110))");
    REQUIRE(triple.witness.has_value());
    CHECK(triple.witness->first == 2105401);  // 1451^2
    CHECK(triple.witness->second == 12100);   // 110^2
    CHECK(triple.witness->first - 174 * triple.witness->second == 1);

    // 495 = 9 * 55: the Pell solution (1079, 84) has 3 | 84, so the search
    // takes over and finds 1 * 661 - 165 * 4 = 1.
    GMembership search = g_membership(495);
    CHECK(search.result == GMembership::Result::InG);
    CHECK(search.route == "direct-search(1,165)");
    REQUIRE(search.witness.has_value());
    CHECK(search.witness->first == 661);
    CHECK(search.witness->second == 4);

    GMembership stuck = g_membership(495, 3);
    CHECK(stuck.result == GMembership::Result::Unknown);
    CHECK(stuck.route == "exhausted");

    CHECK_THROWS_AS(g_membership(0), std::invalid_argument);

    // Membership is what realizes the third stratum for levels with 9 | d.
    for (const Int d : {Int(9), Int(18), Int(36), Int(45), Int(54), Int(63), Int(72)}) {
        CHECK(g_membership(d).result == GMembership::Result::InG);
        CHECK(count_classes(d).third_status == ThirdStatus::Realized);
    }
}

TEST_CASE("reports serialize to stable shapes") {
    ClassReport nine = count_classes(9);
    nlohmann::json j = to_json(nine);
    CHECK(j["d"] == "9");
    CHECK(j["distinct_primes"] == 1);
    CHECK(j["case"] == "B");
    CHECK(j["third_status"] == "realized");
    CHECK(j["conjugacy_classes"] == "6");
    CHECK(j["subgroup_classes"] == "3");
    REQUIRE(j["representatives"].size() == 6);
    CHECK(j["representatives"][3]["coords"] ==
          nlohmann::json({"3", "7", "2", "0"}));
    CHECK(j["representatives"][3]["stratum"] == "third");
    CHECK(j["representatives"][3]["star"] == false);
    CHECK(j["representatives"][4]["star"] == true);
    CHECK(j["third_witness"]["d_prime"] == "1");

    CHECK(csv_header() == "d,r,case,C_d,third_status");
    CHECK(to_csv_row(nine) == "9,1,B,6,realized");
    CHECK(to_csv_row(count_classes(40)) == "40,2,A,4,not-realized");

    nlohmann::json wj = to_json(verify_conjecture2(4));
    CHECK(wj["d_star"] == "4");
    CHECK(wj["verified"] == true);
    CHECK(wj["method"] == "direct-search");
    CHECK(wj["u"] == "13");
    CHECK(wj["v"] == "1");

    nlohmann::json gj = to_json(g_membership(90));
    CHECK(gj["result"] == "in");
    CHECK(gj["route"] == "pell(x0=11,y0=2)");
    CHECK(gj["u"] == "121");
    CHECK(gj["v"] == "4");
}

}  // TEST_SUITE
