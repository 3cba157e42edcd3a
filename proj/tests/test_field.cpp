#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eucideal/errors.hpp"
#include "eucideal/field.hpp"
#include "oracles.hpp"

using namespace eucideal;

TEST_CASE("make_field fills the descriptor") {
    quad_field f5 = make_field(5);
    CHECK(f5.disc == -20);
    CHECK(f5.omega == omega_kind::sqrt_d);
    CHECK(f5.unit_count == 2);

    quad_field f3 = make_field(3);
    CHECK(f3.disc == -3);
    CHECK(f3.omega == omega_kind::half_one_plus_sqrt_d);
    CHECK(f3.unit_count == 6);

    quad_field f1 = make_field(1);
    CHECK(f1.disc == -4);
    CHECK(f1.unit_count == 4);

    CHECK_THROWS_AS(make_field(12), not_squarefree);
    CHECK_THROWS_AS(make_field(0), not_squarefree);
    CHECK_THROWS_AS(make_field(-5), not_squarefree);
    CHECK_THROWS_AS(make_field(49), not_squarefree);
}

TEST_CASE("element arithmetic") {
    quad_field f7 = make_field(7);
    field_element w = omega_of(f7);
    // omega^2 = omega - 2 when d = 7
    CHECK(w * w == make_elem(f7, Rat(-2), Rat(1)));

    quad_field f5 = make_field(5);
    field_element e = make_elem(f5, make_rat(3, 2), make_rat(-1, 4));
    CHECK(e + from_int(f5, 0) == e);

    // (1 + w)(1 - w) = 6 when d = 5; cross-checked against the real/imag route
    field_element a = make_elem(f5, Rat(1), Rat(1));
    field_element b = make_elem(f5, Rat(1), Rat(-1));
    CHECK(a * b == from_int(f5, 6));
    CHECK(a * b == oracles::mul_oracle(a, b));

    CHECK_THROWS_AS(omega_of(f5) + omega_of(f7), field_mismatch);
}

TEST_CASE("norms") {
    quad_field f5 = make_field(5);
    CHECK(norm(sqrt_minus_d(f5)) == 5);

    quad_field f7 = make_field(7);
    CHECK(norm(omega_of(f7)) == 2);  // (1+sqrt(-7))/2

    quad_field f23 = make_field(23);
    CHECK(norm(omega_of(f23)) == 6);  // (1+23)/4
    CHECK(norm(omega_of(f23)) == norm_sq(f23, embed(omega_of(f23))));
}

TEST_CASE("embedding") {
    quad_field f5 = make_field(5);
    CHECK(embed(sqrt_minus_d(f5)) == plane_point{Rat(0), Rat(1)});

    quad_field f7 = make_field(7);
    CHECK(embed(omega_of(f7)) == plane_point{make_rat(1, 2), make_rat(1, 2)});

    field_element e = make_elem(f5, Rat(3), Rat(2));  // 3 + 2 sqrt(-5)
    CHECK(embed(e) == plane_point{Rat(3), Rat(2)});
    CHECK(norm_sq(f5, embed(e)) == 29);
    CHECK(norm(e) == 29);
}

TEST_CASE("randomized algebra laws") {
    std::mt19937_64 gen(20240811);
    for (int it = 0; it < 300; ++it) {
        quad_field f = oracles::random_field(gen);
        field_element a = oracles::random_element(gen, f);
        field_element b = oracles::random_element(gen, f);

        CHECK(norm(a * b) == norm(a) * norm(b));
        CHECK(a * b == oracles::mul_oracle(a, b));
        CHECK(embed(a + b) == embed(a) + embed(b));
        CHECK(norm_sq(f, embed(a)) == norm(a));
        CHECK(norm(conj(a)) == norm(a));
        CHECK(conj(conj(a)) == a);

        // integrality is closed under ring operations
        field_element ia = make_elem(f, Rat(rat_round(a.u)), Rat(rat_round(a.v)));
        field_element ib = make_elem(f, Rat(rat_round(b.u)), Rat(rat_round(b.v)));
        CHECK(ia.is_integral());
        CHECK((ia + ib).is_integral());
        CHECK((ia * ib).is_integral());

        if (!a.is_zero()) CHECK(a * inverse(a) == from_int(f, 1));
    }
}

TEST_CASE("rational helpers") {
    CHECK(rat_floor(make_rat(7, 2)) == 3);
    CHECK(rat_floor(make_rat(-7, 2)) == -4);
    CHECK(rat_ceil(make_rat(7, 2)) == 4);
    CHECK(rat_round(make_rat(1, 2)) == 1);  // ties go up
    CHECK(rat_round(make_rat(-1, 2)) == 0);
    CHECK(floor_sqrt(make_rat(49, 4)) == 3);
    CHECK(floor_sqrt(Rat(49)) == 7);
    CHECK(isqrt(Int(48)) == 6);
    CHECK(parse_rat("9/5") == make_rat(9, 5));
    CHECK(rat_str(make_rat(9, 5)) == "9/5");
    CHECK(rat_str(Rat(3)) == "3/1");
    CHECK_THROWS_AS(parse_rat("x"), io_error);
}
