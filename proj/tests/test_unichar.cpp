#include <catch2/catch_amalgamated.hpp>

#include "endoscope/unichar.hpp"

using namespace endoscope;

TEST_CASE("generic degrees") {
    for (int n = 2; n <= 10; ++n) {
        CHECK(generic_degree({Partition{n}, Family::SL}) == IntPolynomial::one());
        CHECK(generic_degree({Partition::rectangle(1, n), Family::SL}) ==
              IntPolynomial::monomial(n * (n - 1) / 2));
    }
    // (3,1): q * Phi_3
    CHECK(generic_degree({Partition{3, 1}, Family::SL}) == IntPolynomial::monomial(1) * cyclotomic(3));
    CHECK(generic_degree({Partition{3, 1}, Family::SL}).eval(4) == 84);

    SECTION("hook family identity") {
        for (int d = 2; d <= 6; ++d) {
            std::vector<int> parts{d + 1};
            parts.insert(parts.end(), static_cast<size_t>(d - 1), 1);
            CHECK(generic_degree({Partition(parts), Family::SL}) ==
                  IntPolynomial::monomial(d * (d - 1) / 2) * gaussian_binomial(2 * d - 1, d - 1));
        }
    }
    SECTION("q -> 1 specialization is the hook length formula") {
        for (int n = 2; n <= 8; ++n) {
            for (const auto& la : partitions_of(n)) {
                // strip the q-power, sum coefficients of the cyclotomic part:
                // prod (q^i-1)/prod (q^h-1) at q -> 1 equals n!/prod h
                IntPolynomial degree = generic_degree({la, Family::SL});
                Bigint dim = factorial(n);
                for (int h : la.hook_lengths()) dim /= h;
                CHECK(degree.coefficient_sum() == dim);
            }
        }
    }
    SECTION("unitary degrees by sign-normalized negation") {
        CHECK(generic_degree({Partition{2, 1}, Family::SL}).eval(5) == 30);   // q(q+1)
        CHECK(generic_degree({Partition{2, 1}, Family::SU}).eval(5) == 20);   // q(q-1)
        CHECK(generic_degree({Partition{2, 2}, Family::SU}).eval(2) == 20);   // q^2(q^2+1)
        for (int n = 2; n <= 8; ++n)
            for (const auto& la : partitions_of(n))
                for (long long q : {2, 3, 4})
                    CHECK(generic_degree({la, Family::SU}).eval(q) > 0);
    }
}

TEST_CASE("values on regular semisimple classes") {
    CHECK(value_on_regular({Partition{5}, Family::SL}, Partition{3, 2}) == 1);
    CHECK(value_on_regular({Partition{3, 2}, Family::SL}, Partition{5}) == 0);
    CHECK(value_on_regular({Partition{3, 1}, Family::SL}, Partition{2, 2}) == -1);
}

TEST_CASE("valspecial") {
    SECTION("internal MN sign assertions") {
        CHECK(mn_value(Partition{3, 2}, Partition{2, 2, 1}) == 1);
        CHECK(mn_value(Partition{3, 2}, Partition{4, 1}) == -1);
    }
    CHECK(valspecial(2, 1, 3).magnitude == 9);
    SECTION("|value| = q^d across the verified range") {
        for (int d = 2; d <= 6; ++d)
            for (int r = 1; r <= d - 1; ++r)
                for (long long q : {2, 3, 4, 5})
                    CHECK(valspecial(d, r, q).magnitude == big_pow(Bigint(q), static_cast<unsigned>(d)));
    }
    CHECK_THROWS_AS(valspecial(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(valspecial(1, 1, 3), std::invalid_argument);
}

TEST_CASE("one-sided screens") {
    CHECK(prop_zero_screen("3+2", {"4+1", "5"}) == ZeroScreen::MustVanish);
    CHECK(prop_zero_screen("4+1", {"4+1", "5"}) == ZeroScreen::Unknown);
    CHECK(prop_zero_screen("3+2", {}) == ZeroScreen::MustVanish);

    CHECK(prop_divis_bound(12, 6) == 2);
    CHECK(prop_divis_bound(8, 8) == 1);
    CHECK(prop_divis_bound(8, 2) == 4);
    CHECK_THROWS_AS(prop_divis_bound(12, 5), std::invalid_argument);
}

TEST_CASE("unipotent screen driver") {
    SECTION("SL_4(4), ell = 5") {
        ScreenVerdict v22 = screen_unipotent(Family::SL, 4, 4, 5, Partition{2, 2});
        CHECK(v22.eliminated);
        CHECK((v22.reason == ScreenReason::Vanishing || v22.reason == ScreenReason::Congruence));

        ScreenVerdict v31 = screen_unipotent(Family::SL, 4, 4, 5, Partition{3, 1});
        CHECK(v31.eliminated);
        CHECK(v31.reason == ScreenReason::Congruence);
        CHECK(v31.witness.find("84") != std::string::npos);
        CHECK(v31.witness.find("9 (mod 25)") != std::string::npos);
    }
    SECTION("input contract") {
        CHECK_THROWS_AS(screen_unipotent(Family::SL, 4, 4, 5, Partition{4}), std::invalid_argument);
        CHECK_THROWS_AS(screen_unipotent(Family::SL, 3, 2, 7, Partition{2, 1}), std::invalid_argument);
        CHECK_THROWS_AS(screen_unipotent(Family::GL, 4, 4, 5, Partition{2, 2}), std::invalid_argument);
    }
    SECTION("cited reasons land where expected") {
        // conjugate of (5,2,1,1) at d = 4: Hecke reducibility citation
        ScreenVerdict hecke = screen_unipotent(Family::SL, 9, 2, 5, Partition{4, 2, 1, 1, 1});
        CHECK(hecke.eliminated);
        CHECK(hecke.reason == ScreenReason::HeckeReducible);
        // same label in the unitary family: support-vanishing citation
        ScreenVerdict lu = screen_unipotent(Family::SU, 9, 2, 5, Partition{4, 2, 1, 1, 1});
        CHECK(lu.eliminated);
        CHECK(lu.reason == ScreenReason::SupportVanishing);
        // Steinberg of SL_4(2) at ell = 3 slips through the congruence
        // (2^6 = 1 mod 9) and is settled by the value formula
        ScreenVerdict st = screen_unipotent(Family::SL, 4, 2, 3, Partition{1, 1, 1, 1});
        CHECK(st.eliminated);
        CHECK(st.reason == ScreenReason::SteinbergValue);
        // Steinberg of L_3(4) at ell = 3: the n = ell = 3 citation row
        ScreenVerdict ku = screen_unipotent(Family::SL, 3, 4, 3, Partition{1, 1, 1});
        CHECK(ku.eliminated);
        CHECK(ku.reason == ScreenReason::KnownTables);
    }
    SECTION("every nontrivial label of SL_4(4) at ell = 5 is eliminated") {
        for (const auto& la : partitions_of(4)) {
            if (la == Partition{4}) continue;
            CHECK(screen_unipotent(Family::SL, 4, 4, 5, la).eliminated);
        }
    }
}
