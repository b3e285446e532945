#include <doctest.h>

#include "tate/matrix.hpp"
#include "tate/random_lattice.hpp"

using namespace tate;

namespace {

FieldMatrix mk(const FieldInfo* f, int rows, int cols, std::vector<long long> e) {
    std::vector<Scalar> s;
    for (long long x : e) s.push_back(f->kind() == FieldKind::rational ? Scalar::rational(x, 1)
                                                                       : f->from_integer(x));
    return FieldMatrix(f, rows, cols, std::move(s));
}

}  // namespace

TEST_CASE("rank, rref and kernel over Q") {
    const FieldInfo* q = FieldInfo::rationals();
    FieldMatrix m = mk(q, 2, 2, {1, 2, 2, 4});
    CHECK(m.rank() == 1);
    FieldMatrix k = m.kernel_basis();
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    // spanned by (2, -1) up to scale
    CHECK(k.at(0, 0) * Scalar::rational(-1, 2) == k.at(1, 0) * Scalar::rational(1, 1));
}

TEST_CASE("solve and inverse") {
    const FieldInfo* f5 = FieldInfo::prime(5);
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        FieldMatrix m = random_field_matrix(rng, f5, 3, 3);
        if (m.rank() < 3) continue;
        FieldMatrix inv = m.inverse();
        CHECK(m * inv == FieldMatrix::identity(f5, 3));
        FieldMatrix b = random_field_matrix(rng, f5, 3, 2);
        auto x = m.solve(b);
        REQUIRE(x.has_value());
        CHECK(m * *x == b);
    }
    FieldMatrix sing = mk(f5, 2, 2, {1, 2, 2, 4});
    CHECK_THROWS_AS(sing.inverse(), singular_error);
    auto none = sing.solve(mk(f5, 2, 1, {1, 0}));
    CHECK(!none.has_value());
}

TEST_CASE("column space basis picks first independent columns") {
    const FieldInfo* f2 = FieldInfo::prime(2);
    FieldMatrix m = mk(f2, 2, 3, {1, 1, 0, 1, 1, 1});
    std::vector<int> chosen;
    FieldMatrix b = m.column_space_basis(&chosen);
    CHECK(b.cols() == 2);
    CHECK(chosen == std::vector<int>{0, 2});
}

TEST_CASE("retraction of a monic is a left inverse") {
    Rng rng(3);
    const FieldInfo* f3 = FieldInfo::prime(3);
    for (int i = 0; i < 40; ++i) {
        FieldMatrix m = random_field_matrix(rng, f3, 4, 2);
        if (m.rank() < 2) continue;
        FieldMatrix r = retraction_of_monic(m);
        CHECK(r * m == FieldMatrix::identity(f3, 2));
    }
}

TEST_CASE("kernel and solve respect shapes") {
    const FieldInfo* f2 = FieldInfo::prime(2);
    FieldMatrix m = mk(f2, 2, 2, {1, 0, 0, 1});
    CHECK(m.kernel_basis().cols() == 0);
    CHECK_THROWS_AS(m * mk(f2, 3, 1, {1, 0, 1}), domain_error);
}
