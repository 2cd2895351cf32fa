#include <catch2/catch_amalgamated.hpp>

#include "cwbd/constructions.hpp"
#include "cwbd/design.hpp"
#include "support/figures.hpp"

using namespace cwbd;

TEST_CASE("design construction validates its cells", "[design]") {
    REQUIRE_THROWS(Design(3, 2, {{0, 1}, {1, 2}}));          // wrong row count
    REQUIRE_THROWS(Design(3, 2, {{0, 1}, {1, 2}, {2, 3}}));  // cell out of range
    REQUIRE_THROWS(Design(1, 1, {{0}}));                     // t too small
    Design d(3, 1, {{2}, {0}, {1}});
    REQUIRE(d.at(0, 0) == 2);
    REQUIRE(d.pred(0, 0) == 1); // circular predecessor wraps to the last period
    REQUIRE(d.pred(1, 0) == 2);
}

TEST_CASE("lambda and k from t and n", "[design]") {
    auto check = [](long long t, long long n, long long lambda, long long k) {
        auto [l, kk] = k_lambda(t, n);
        REQUIRE(l == lambda);
        REQUIRE(kk == k);
    };
    check(7, 3, 1, 3);
    check(7, 21, 4, 3);
    check(7, 24, 4, 6);
    check(11, 5, 1, 5);
    check(3, 3, 2, 1);
    check(13, 9, 1, 9);
    check(16, 6, 1, 6);
}

TEST_CASE("neighbour counts on a single cyclic sequence", "[design]") {
    Design d(3, 1, {{0}, {1}, {2}});
    NeighbourMatrix nb = neighbour_matrix(d);
    IntMatrix expect(3, 3);
    expect(0, 2) = expect(1, 0) = expect(2, 1) = 1;
    REQUIRE(nb.S == expect);
    REQUIRE(nb.lambda == 1);
    REQUIRE(nb.k == 1);
}

TEST_CASE("multiplier designs have residue-circulant neighbour structure", "[design]") {
    // Each column with multiplier m contributes ones exactly where the
    // treatment difference i - j equals m, so S is the 0/1 circulant over
    // the multiplier set.
    Design d = figures::fig_1a();
    NeighbourMatrix nb = neighbour_matrix(d);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            int diff = ((i - j) % 7 + 7) % 7;
            long long expect = (diff == 1 || diff == 2 || diff == 4) ? 1 : 0;
            REQUIRE(nb.S(i, j) == expect);
        }
}

TEST_CASE("the three-treatment special design has the pinned neighbour matrix", "[design]") {
    Design d = t3_special();
    NeighbourMatrix nb = neighbour_matrix(d);
    IntMatrix expect(3, 3);
    long long rows[3][3] = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) expect(i, j) = rows[i][j];
    REQUIRE(nb.S == expect);
    REQUIRE(nb.lambda == 2);
    REQUIRE(nb.k == 1);
}

TEST_CASE("classification of the catalogued example designs", "[design]") {
    SECTION("seven treatments, three subjects") {
        Classification c = classify(figures::fig_1a());
        REQUIRE(c.kind == DesignKind::cwbd);
        REQUIRE(c.cwbd_type == CwbdType::type_i);
        REQUIRE(c.lambda == 1);
        REQUIRE(c.k == 3);
        REQUIRE(c.uniform_on_subjects);
        REQUIRE_FALSE(c.uniform_on_periods);
        REQUIRE(c.connected);
        REQUIRE(c.self_neighbour_free);
    }
    SECTION("eleven treatments, five subjects") {
        Classification c = classify(figures::fig_1b());
        REQUIRE(c.kind == DesignKind::cwbd);
        REQUIRE(c.cwbd_type == CwbdType::type_i);
        REQUIRE(c.lambda == 1);
        REQUIRE(c.k == 5);
        REQUIRE(c.uniform_on_subjects);
        REQUIRE(c.connected);
    }
    SECTION("seven treatments, twenty-one subjects") {
        Classification c = classify(figures::figure2());
        REQUIRE(c.kind == DesignKind::cwbd);
        REQUIRE(c.cwbd_type == CwbdType::type_i);
        REQUIRE(c.lambda == 4);
        REQUIRE(c.k == 3);
        REQUIRE(c.uniform);
        REQUIRE(c.connected);
    }
    SECTION("difference-set designs are Type II") {
        for (const Design& d : {figures::fig_3a(), figures::fig_3b(), figures::fig_3c()}) {
            Classification c = classify(d);
            REQUIRE(c.kind == DesignKind::cwbd);
            REQUIRE(c.cwbd_type == CwbdType::type_ii);
            REQUIRE(c.lambda == 1);
            REQUIRE(c.uniform_on_subjects);
            REQUIRE(c.connected);
        }
    }
    SECTION("three treatments, three subjects") {
        Classification c = classify(t3_special());
        REQUIRE(c.kind == DesignKind::cwbd);
        REQUIRE(c.cwbd_type == CwbdType::type_i);
        REQUIRE(c.lambda == 2);
        REQUIRE(c.k == 1);
        REQUIRE(c.uniform_on_subjects);
        REQUIRE_FALSE(c.uniform_on_periods);
        REQUIRE(c.connected);
    }
}

TEST_CASE("complete balance outranks weak balance", "[design]") {
    Design cbd7 = construct_cbd(7);
    Classification c = classify(cbd7);
    REQUIRE(c.kind == DesignKind::cbd);
    REQUIRE_FALSE(c.cwbd_type.has_value());
    REQUIRE(c.k == 6);
}

TEST_CASE("a single repeated-blocks sequence is disconnected", "[design]") {
    Design d(3, 1, {{0}, {1}, {2}});
    REQUIRE_FALSE(connectivity(d));
    REQUIRE(connectivity(figures::fig_1a()));
    REQUIRE(connectivity(figures::figure2()));
}

TEST_CASE("juxtaposition with a completely balanced design", "[design]") {
    Design cbd7 = construct_cbd(7);

    SECTION("preserves weak balance for antisymmetric-complement types") {
        Design joined = juxtapose(figures::fig_1a(), cbd7);
        REQUIRE(joined.n == 9);
        Classification c = classify(joined);
        REQUIRE(c.kind == DesignKind::cwbd);
        REQUIRE(c.cwbd_type == CwbdType::type_i);
        REQUIRE(c.lambda == 2);
        REQUIRE(c.k == 3);
    }
    SECTION("destroys weak balance for the other types") {
        Design joined = juxtapose(figures::fig_3a(), cbd7);
        Classification c = classify(joined);
        REQUIRE(c.kind == DesignKind::none);
    }
}

TEST_CASE("parameter feasibility screen", "[design]") {
    FeasibilityRecord ok = existence_check(7, 21);
    REQUIRE(ok.lambda == 4);
    REQUIRE(ok.k == 3);
    REQUIRE(ok.divisibility_ok);

    // For t=3, n=3 the divisibility holds but the high-multiplicity cap
    // rules out the non-antisymmetric types.
    FeasibilityRecord t3 = existence_check(3, 3);
    REQUIRE(t3.divisibility_ok);
    REQUIRE_FALSE(t3.type3_lambda_ok);

    // k = t-1 marks the completely balanced margin.
    REQUIRE(existence_check(7, 24).cbd_parameters);
    REQUIRE_FALSE(existence_check(7, 21).cbd_parameters);
}

TEST_CASE("uniformity predicates", "[design]") {
    REQUIRE(is_uniform_on_subjects(figures::figure2()));
    REQUIRE(is_uniform_on_periods(figures::figure2()));
    REQUIRE(is_uniform_on_subjects(figures::fig_1a()));
    REQUIRE_FALSE(is_uniform_on_periods(figures::fig_1a()));
    Design with_repeat(3, 1, {{0}, {0}, {1}});
    REQUIRE_FALSE(is_uniform_on_subjects(with_repeat));
    REQUIRE(subject_multiplicity_excess(with_repeat) == 1);
    REQUIRE(subject_multiplicity_excess(figures::figure2()) == 0);
}

TEST_CASE("summary strings", "[design]") {
    REQUIRE(classification_summary(classify(figures::figure2())) ==
            "CWBD Type I, uniform, lambda=4, k=3, connected");
    REQUIRE(classification_summary(classify(figures::fig_1a())) ==
            "CWBD Type I, uniform on subjects, lambda=1, k=3, connected");
    Design d(3, 1, {{0}, {1}, {2}});
    REQUIRE(classification_summary(classify(d)) ==
            "CWBD Type I, uniform on subjects, lambda=1, k=1, disconnected");
}
