#include <doctest.h>

#include <vector>

#include "loq/atkin_lehner.hpp"
#include "loq/order3.hpp"

using namespace loq;

namespace {

std::vector<Order3Element> sample_pool() {
    std::vector<Order3Element> pool = enumerate_elements(6, 8);
    for (const Order3Element& xi : enumerate_elements(9, 4)) pool.push_back(xi);
    pool.push_back(make(1, 0, 0, 0));
    pool.push_back(make(1, -1, 0, 0));
    return pool;
}

}  // namespace

TEST_SUITE("order3") {

TEST_CASE("construction validates the defining equations") {
    Order3Element w = make(1, 0, 0, 0);
    CHECK(w.elem == omega(1));
    CHECK(w.d_prime == 1);
    CHECK(w.d_dprime == 1);
    CHECK(w.tag == CaseTag::Full);

    Order3Element t = make(9, 3, 2, 0);
    CHECK(t.elem == OrderElement{9, 3, 7, 2, 0});
    CHECK(t.d_prime == 3);
    CHECK(t.d_dprime == 1);
    CHECK(t.tag == CaseTag::Third);

    Order3Element f = make(40, -105, -33, -15);
    CHECK(f.elem == OrderElement{40, -105, -209, -33, -15});
    CHECK(f.d_prime == 5);
    CHECK(f.d_dprime == 8);
    CHECK(f.tag == CaseTag::Full);

    Order3Element s = make(6, 1, 1, 0);
    CHECK(s.elem == OrderElement{6, 1, 3, 1, 0});
    CHECK(s.d_prime == 1);
    CHECK(s.d_dprime == 2);
    CHECK(s.tag == CaseTag::Third);

    CHECK_THROWS_AS(make(9, 1, 1, 0), EquationViolated);
    CHECK_THROWS_AS(make(40, 1, 0, 0), EquationViolated);
    CHECK_THROWS_AS(from_order(OrderElement{9, 3, 6, 2, 0}), EquationViolated);
    CHECK(from_order(omega(9)) == make(9, 0, 0, 0));
}

TEST_CASE("squares, cubes, and the star involution") {
    for (const Order3Element& xi : sample_pool()) {
        const OrderElement& e = xi.elem;
        CAPTURE(e.d);
        CAPTURE(e.x1);

        OrderElement sq = mul(e, e);
        CHECK(sq == square(xi).elem);
        CHECK(mul(e, sq) == one(e.d));

        CHECK(star(star(xi)) == xi);
        CHECK(square(square(xi)) == xi);
        CHECK(star(square(xi)) == square(star(xi)));

        // star keeps the invariant pair, squaring exchanges it.
        CHECK(star(xi).d_prime == xi.d_prime);
        CHECK(star(xi).d_dprime == xi.d_dprime);
        CHECK(square(xi).d_prime == xi.d_dprime);
        CHECK(square(xi).d_dprime == xi.d_prime);
        CHECK(star(xi).tag == xi.tag);
        CHECK(square(xi).tag == xi.tag);

        // star is conjugation of the square by the generator f.
        auto transported = to_order(mul(mul(to_quat(phi(e.d)), to_quat(sq)), inverse(phi(e.d))));
        REQUIRE(transported.has_value());
        CHECK(*transported == star(xi).elem);
    }
}

TEST_CASE("enumeration lists one representative per orbit plus star partners") {
    auto only_units = enumerate_elements(1, 0);
    REQUIRE(only_units.size() == 2);
    CHECK(only_units[0].elem == omega(1));
    CHECK(only_units[1].elem == OrderElement{1, -1, -1, 0, 0});
    // Besides the units, x1 = 3 and x1 = -4 admit norm(y) = 36 solutions.
    CHECK(enumerate_elements(1, 5).size() == 6);

    auto nine = enumerate_elements(9, 4);
    REQUIRE(nine.size() == 6);
    CHECK(nine[0].elem == omega(9));
    CHECK(nine[1].elem == OrderElement{9, -1, -1, 0, 0});
    CHECK(nine[2].elem == OrderElement{9, 3, 7, 2, 0});
    CHECK(nine[3].elem == OrderElement{9, 3, 7, -2, 0});
    CHECK(nine[4].elem == OrderElement{9, -4, -7, 2, 0});
    CHECK(nine[5].elem == OrderElement{9, -4, -7, -2, 0});

    // x1 = 15 is the only admissible value besides 0/-1 up to 16 for d = 40,
    // and its norm target 18 is not attained, so only the units remain.
    auto forty = enumerate_elements(40, 16);
    REQUIRE(forty.size() == 2);
    CHECK(forty[0].elem == omega(40));

    CHECK_THROWS_AS(enumerate_elements(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_elements(9, -1), std::invalid_argument);
}

TEST_CASE("intertwiner lattices and their norm forms") {
    Order3Element w = make(1, 0, 0, 0);
    Order3Element w2 = make(1, -1, 0, 0);

    IntertwinerLattice self = intertwiner(w, w);
    CHECK(self.basis[0] == one(1));
    CHECK(self.basis[1] == omega(1));
    CHECK(self.form == BinaryQF{1, -1, 1});

    IntertwinerLattice cross = intertwiner(w, w2);
    CHECK(cross.basis[0] == phi(1));
    CHECK(cross.basis[1] == OrderElement{1, 0, 0, 0, 1});
    CHECK(cross.form == BinaryQF{-1, 1, -1});

    // The form computes the reduced norm of arbitrary lattice vectors.
    for (const auto& [k, l] : std::vector<std::pair<Int, Int>>{
             {1, 0}, {0, 1}, {1, 1}, {2, -3}, {-1, 2}}) {
        OrderElement v = add(scale(k, cross.basis[0]), scale(l, cross.basis[1]));
        CHECK(nr(v) == cross.form.eval(k, l));
    }

    // Star partners in the d = 9 third stratum: same invariants, but the
    // lattice norm form has discriminant -27 and content 3, so it never
    // represents a unit.
    Order3Element t = make(9, 3, 2, 0);
    IntertwinerLattice lat = intertwiner(t, star(t));
    CHECK(lat.form.disc() == -27);
    BinaryQF reduced = reduce(lat.form).first;
    bool third_shape = reduced == BinaryQF{3, 3, 3} || reduced == BinaryQF{-3, -3, -3};
    CHECK(third_shape);
    CHECK_FALSE(represent_unit(lat.form).has_value());
}

TEST_CASE("conjugacy decisions produce checkable unit witnesses") {
    Order3Element w = make(1, 0, 0, 0);
    Order3Element w2 = make(1, -1, 0, 0);

    auto wit = conjugacy_witness(w, w2);
    REQUIRE(wit.has_value());
    CHECK(wit->alpha == phi(1));
    CHECK(nr(wit->alpha) == -1);

    // Same invariants yet not conjugate: the d = 9 star pair.
    Order3Element t = make(9, 3, 2, 0);
    CHECK_FALSE(conjugacy_witness(t, star(t)).has_value());
    // Distinct invariants short-circuit.
    CHECK_FALSE(conjugacy_witness(from_order(omega(9)), t).has_value());
    CHECK_THROWS_AS(conjugacy_witness(w, t), std::invalid_argument);

    // Full elements are conjugate to their star; third ones never are.
    Order3Element full6 = make(6, 2, 2, 1);
    CHECK(full6.tag == CaseTag::Full);
    CHECK(conjugacy_witness(full6, star(full6)).has_value());
    Order3Element full40 = make(40, -105, -33, -15);
    CHECK(conjugacy_witness(full40, star(full40)).has_value());
    Order3Element third6 = make(6, 1, 1, 0);
    CHECK_FALSE(conjugacy_witness(third6, star(third6)).has_value());

    // Decisions are symmetric, and every witness passes an independent
    // matrix-model check.
    auto pool = enumerate_elements(6, 8);
    for (const Order3Element& xi : pool) {
        for (const Order3Element& eta : pool) {
            auto fwd = conjugacy_witness(xi, eta);
            auto bwd = conjugacy_witness(eta, xi);
            CHECK(fwd.has_value() == bwd.has_value());
            if (!fwd) continue;
            PsiMatrix lhs = mat_mul(psi(eta.elem), psi(fwd->alpha));
            PsiMatrix rhs = mat_mul(psi(fwd->alpha), psi(xi.elem));
            CHECK(lhs == rhs);
            QOmega det = mat_det(psi(fwd->alpha));
            bool unit_det = det == QOmega{Rat(1), Rat(0)} || det == QOmega{Rat(-1), Rat(0)};
            CHECK(unit_det);
        }
    }
}

TEST_CASE("conjugation by order units preserves classes") {
    Order3Element xi = make(6, 2, 2, 1);

    // By the Eisenstein unit w: the scalar coordinates stay, y picks up w^2.
    OrderElement by_omega = conjugate_by(omega(6), xi.elem);
    CHECK(by_omega == OrderElement{6, 2, 5, -1, -2});
    CHECK(from_order(by_omega).d_prime == xi.d_prime);

    // By a norm-one unit mixing the two halves of the order.
    OrderElement u{6, 5, 0, 2, 0};
    REQUIRE(nr(u) == 1);
    Order3Element moved = from_order(conjugate_by(u, xi.elem));
    CHECK(moved.d_prime == xi.d_prime);
    CHECK(moved.d_dprime == xi.d_dprime);
    CHECK(moved.tag == xi.tag);
    auto wit = conjugacy_witness(xi, moved);
    REQUIRE(wit.has_value());
    CHECK(mul(moved.elem, wit->alpha) == mul(wit->alpha, xi.elem));
}

TEST_CASE("elements with prescribed invariants") {
    auto f58 = construct_with_invariants(40, 5, 8);
    REQUIRE(f58.has_value());
    CHECK(f58->elem == OrderElement{40, -105, -209, -33, -15});
    CHECK(f58->tag == CaseTag::Full);

    auto f85 = construct_with_invariants(40, 8, 5);
    REQUIRE(f85.has_value());
    CHECK(f85->elem == OrderElement{40, 104, 209, 33, 15});
    CHECK(square(*f85) == *f58);

    auto t31 = construct_with_invariants(9, 3, 1);
    REQUIRE(t31.has_value());
    CHECK(t31->elem == OrderElement{9, 3, 7, 2, 0});
    CHECK(t31->tag == CaseTag::Third);

    auto t13 = construct_with_invariants(9, 1, 3);
    REQUIRE(t13.has_value());
    CHECK(t13->elem == OrderElement{9, -4, -7, -2, 0});

    auto t12 = construct_with_invariants(6, 1, 2);
    REQUIRE(t12.has_value());
    CHECK(t12->elem == OrderElement{6, 1, 3, 1, 0});
    auto t21 = construct_with_invariants(6, 2, 1);
    REQUIRE(t21.has_value());
    CHECK(t21->elem == OrderElement{6, -2, -3, -1, 0});

    auto trivial = construct_with_invariants(1, 1, 1);
    REQUIRE(trivial.has_value());
    CHECK(trivial->elem == omega(1));

    // The scaled-square family: d = 9c^2 always realizes the third stratum.
    auto family = construct_with_invariants(36, 12, 1);
    REQUIRE(family.has_value());
    CHECK(family->tag == CaseTag::Third);
    Order3Element direct = make(36, 12, 1, 4);
    CHECK(direct.d_prime == 12);
    CHECK(direct.d_dprime == 1);

    // Bad requests are rejected; impossible sign constraints propagate.
    CHECK_THROWS_AS(construct_with_invariants(40, 5, 7), std::invalid_argument);
    CHECK_THROWS_AS(construct_with_invariants(40, 4, 10), std::invalid_argument);
    CHECK_THROWS_AS(construct_with_invariants(3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_with_invariants(0, 1, 1), std::invalid_argument);

    // An exhausted search bound is reported, not guessed.
    CHECK_FALSE(construct_with_invariants(40, 5, 8, 12).has_value());
    CHECK(construct_with_invariants(40, 5, 8, 13).has_value());
}

}  // TEST_SUITE
