#include "doctest.h"

#include "gwcount/quantum.hpp"

using namespace gwcount;

namespace {

QClass QH(int n, int k, int qpow = 0) { return QClass::basis(n, k, qpow); }

}  // namespace

TEST_CASE("small quantum product on P^2") {
    CHECK(small_qproduct(2, QH(2, 1), QH(2, 1)) == QH(2, 2));
    CHECK(small_qproduct(2, QH(2, 2), QH(2, 2)) == QH(2, 1, 1));
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) CHECK(small_qproduct(n, QH(n, 0), QH(n, k)) == QH(n, k));
    CHECK_THROWS_AS(small_qproduct(2, QH(2, 1), QH(3, 1)), DomainError);
}

TEST_CASE("H^N * H = q in every P^N") {
    for (int n = 1; n <= 5; ++n) CHECK(small_qproduct(n, QH(n, n), QH(n, 1)) == QH(n, 0, 1));
}

TEST_CASE("small product is a commutative associative deformation of cup") {
    for (int n = 1; n <= 5; ++n)
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b) {
                const QClass ab = small_qproduct(n, QH(n, a), QH(n, b));
                REQUIRE(ab == small_qproduct(n, QH(n, b), QH(n, a)));
                REQUIRE(ab.at_q_zero() == cup(CohClass::basis(n, a), CohClass::basis(n, b)));
                for (int c = 0; c <= n; ++c)
                    REQUIRE(small_qproduct(n, ab, QH(n, c)) ==
                            small_qproduct(n, QH(n, a), small_qproduct(n, QH(n, b), QH(n, c))));
            }
}

TEST_CASE("q-bilinearity") {
    QClass a = QH(3, 1) + QH(3, 2, 1);
    QClass b = QH(3, 3) + QH(3, 0, 2);
    QClass expected = small_qproduct(3, QH(3, 1), QH(3, 3)) + small_qproduct(3, QH(3, 1), QH(3, 0, 2)) +
                      small_qproduct(3, QH(3, 2, 1), QH(3, 3)) + small_qproduct(3, QH(3, 2, 1), QH(3, 0, 2));
    CHECK(small_qproduct(3, a, b) == expected);
}

TEST_CASE("big quantum product gamma_1 * gamma_1") {
    CountTable table;
    P2Potential p = assemble_potential(4, table);
    BigQClass prod = big_qproduct_p2(1, 1, p);
    // (integral L.L) pt + Phi_111 L + Phi_112 [P^2]
    CHECK(prod.basis_coefficient(2) == phi_ijk(p, 1, 1, 0));
    CHECK(prod.basis_coefficient(2).coefficient({0, 0}) == 1);
    CHECK(prod.basis_coefficient(1) == phi_ijk(p, 1, 1, 1));
    CHECK(prod.basis_coefficient(0) == phi_ijk(p, 1, 1, 2));
}

TEST_CASE("big product at the origin") {
    CountTable table;
    P2Potential p = assemble_potential(4, table);
    CHECK(big_qproduct_p2(2, 2, p).at_origin() == QH(2, 1, 1));
    for (int j = 0; j <= 2; ++j) CHECK(big_qproduct_p2(0, j, p).at_origin() == QH(2, j));

    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            const BigQClass big = big_qproduct_p2(i, j, p);
            REQUIRE(big.at_origin() == small_qproduct(2, QH(2, i), QH(2, j)));
            REQUIRE(big.classical_limit() == cup(CohClass::basis(2, i), CohClass::basis(2, j)));
            REQUIRE(big == big_qproduct_p2(j, i, p));
        }
}

TEST_CASE("rendering") {
    CHECK(small_qproduct(2, QH(2, 2), QH(2, 2)).to_string() == "q*H");
    CHECK(QClass::zero(2).to_string() == "0");
    CHECK((QH(2, 0) + QH(2, 0, 1)).to_string() == "(1 + q)");
}
