#include <doctest.h>

#include "tate/exact.hpp"
#include "tate/lattice.hpp"
#include "tate/random_lattice.hpp"
#include "tate/window.hpp"

using namespace tate;

namespace {

const FieldInfo* F2 = FieldInfo::prime(2);
const TateSpace V1{1, F2, 32};
const TateSpace V2{2, F2, 32};

LaurentSeries sc(const FieldInfo* f, long v, std::vector<long long> coeffs, long prec = 32) {
    std::vector<Scalar> c;
    for (long long x : coeffs) c.push_back(f->from_integer(x));
    return LaurentSeries(f, v, prec, std::move(c));
}

Lattice diag(const TateSpace& v, std::vector<long> exps) {
    return Lattice::from_matrix(LaurentMatrix::monomial_diag(v.field, exps, v.default_prec));
}

long total(const std::vector<long>& v) {
    long s = 0;
    for (long e : v) s += e;
    return s;
}

}  // namespace

TEST_CASE("standard lattices") {
    Lattice std1 = Lattice::standard(V1);
    CHECK(std1.pivots() == std::vector<long>{0});
    Lattice shifted = Lattice::standard(V2, -1);
    CHECK(shifted.pivots() == std::vector<long>{-1, -1});
    Lattice empty = Lattice::standard({0, F2, 32}, 5);
    CHECK(empty.rank() == 0);
}

TEST_CASE("canonicalization of explicit bases") {
    CHECK(diag(V2, {1, 0}).pivots() == std::vector<long>{0, 1});
    LaurentMatrix m(2, 2, {sc(F2, 0, {1}), sc(F2, 0, {1}), sc(F2, 1, {1}), sc(F2, 1, {1, 1})});
    Lattice l = Lattice::from_matrix(m);
    CHECK(total(l.pivots()) == 2);  // cofactor oracle: det val 2
    CHECK(Lattice::from_matrix(LaurentMatrix::identity(F2, 3, 32)) ==
          Lattice::standard({3, F2, 32}));
}

TEST_CASE("join examples") {
    CHECK(lattice_join(Lattice::standard(V1), Lattice::standard(V1, 1)) == Lattice::standard(V1));
    CHECK(lattice_join(diag(V2, {0, 0}), diag(V2, {-1, 1})) == diag(V2, {-1, 0}));

    // join of the span of [[1,0],[t^{-1},1]] with the standard lattice
    LaurentMatrix g(2, 2,
                    {sc(F2, 0, {1}), LaurentSeries::zero(F2, 32), sc(F2, -1, {1}), sc(F2, 0, {1})});
    Lattice l = Lattice::from_matrix(g);
    Lattice joined = lattice_join(l, Lattice::standard(V2));
    long w = 6;
    FieldMatrix sum = window_oracle::subspace_sum(
        window_oracle::span_of_lattice(l, w),
        window_oracle::span_of_lattice(Lattice::standard(V2), w));
    CHECK(window_oracle::subspace_eq(window_oracle::span_of_lattice(joined, w), sum));
}

TEST_CASE("meet examples") {
    CHECK(lattice_meet(Lattice::standard(V1), Lattice::standard(V1, 2)) ==
          Lattice::standard(V1, 2));
    CHECK(lattice_meet(diag(V2, {0, 0}), diag(V2, {-1, 1})) == diag(V2, {0, 1}));

    Rng rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        Lattice l0 = random_lattice(rng, V2), l1 = random_lattice(rng, V2);
        Lattice meet = lattice_meet(l0, l1);
        long w = 9;
        if (!window_oracle::lattice_fits(l0, w) || !window_oracle::lattice_fits(l1, w) ||
            !window_oracle::lattice_fits(meet, w))
            continue;
        FieldMatrix expected = window_oracle::subspace_intersection(
            window_oracle::span_of_lattice(l0, w), window_oracle::span_of_lattice(l1, w));
        CHECK(window_oracle::subspace_eq(window_oracle::span_of_lattice(meet, w), expected));
    }
}

TEST_CASE("containment") {
    CHECK(lattice_leq(Lattice::standard(V1, 2), Lattice::standard(V1)));
    CHECK(!lattice_leq(Lattice::standard(V1, -1), Lattice::standard(V1)));
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        Lattice l0 = random_lattice(rng, V2), l1 = random_lattice(rng, V2);
        CHECK(lattice_leq(lattice_meet(l0, l1), l0));
    }
}

TEST_CASE("quotient exponents") {
    CHECK(quotient_dims(Lattice::standard(V1, 2), Lattice::standard(V1)) == std::vector<long>{2});
    Lattice l = diag(V2, {1, 0});
    CHECK(quotient_dims(l, l) == std::vector<long>{0, 0});
    CHECK(quotient_dims(diag(V2, {1, 2}), diag(V2, {0, 0})) == std::vector<long>{1, 2});
    CHECK_THROWS_AS(quotient_dims(Lattice::standard(V1, -1), Lattice::standard(V1)), domain_error);
}

TEST_CASE("index bundles") {
    IndexBundle b = index_bundle(Lattice::standard(V1), Lattice::standard(V1, 2));
    CHECK(b.pos == 2);
    CHECK(b.neg == 0);
    CHECK(b.net() == 2);

    Lattice l = diag(V2, {1, 0});
    IndexBundle self = index_bundle(l, l);
    CHECK(self.pos == 0);
    CHECK(self.neg == 0);

    IndexBundle mixed = index_bundle(Lattice::standard(V2), diag(V2, {-1, 1}));
    CHECK(mixed.pos == 1);
    CHECK(mixed.neg == 1);
    CHECK(mixed.net() == 0);
    // window-dimension oracle
    long w = 5;
    auto dims = window_oracle::index_dims(
        window_oracle::span_of_lattice(Lattice::standard(V2), w),
        window_oracle::span_of_lattice(diag(V2, {-1, 1}), w));
    CHECK(dims.pos == mixed.pos);
    CHECK(dims.neg == mixed.neg);
}

TEST_CASE("index identities on random lattices") {
    Rng rng(55);
    for (int trial = 0; trial < 25; ++trial) {
        Lattice l0 = random_lattice(rng, V2), l1 = random_lattice(rng, V2),
                l2 = random_lattice(rng, V2);
        IndexBundle b01 = index_bundle(l0, l1), b12 = index_bundle(l1, l2),
                    b02 = index_bundle(l0, l2);
        CHECK(b01.net() == det_val(l0.basis().inverse() * l1.basis()));
        CHECK(b02.net() == b01.net() + b12.net());
    }
}

TEST_CASE("enveloping lattice for a map") {
    LaurentMatrix integral(2, 1, {sc(F2, 0, {1, 1}), sc(F2, 2, {1})});
    CHECK(enveloping_lattice_for_map(integral, 2, 32) == Lattice::standard(V2));
    LaurentMatrix deep(2, 1, {sc(F2, -3, {1}), sc(F2, 0, {1})});
    CHECK(enveloping_lattice_for_map(deep, 2, 32) == Lattice::standard(V2, -3));
    LaurentMatrix zero(F2, 2, 1, 32);
    CHECK(enveloping_lattice_for_map(zero, 2, 32) == Lattice::standard(V2));
    // the columns indeed land inside
    CHECK(in_dvr_span(enveloping_lattice_for_map(deep, 2, 32).basis(), deep.col(0)));
}

TEST_CASE("chain presentation of the quotient") {
    CHECK(ind_quotient_dims(Lattice::standard(V1), 3) == std::vector<long>{0, 1, 2, 3});
    CHECK(ind_quotient_dims(Lattice::standard(V2), 2) == std::vector<long>{0, 2, 4});
    Rng rng(4);
    Lattice l = random_lattice(rng, {3, F2, 32});
    CHECK(ind_quotient_dims(l, 1)[1] == 3);
}

TEST_CASE("window splittings") {
    SplitWindow s = split_tate(V1, Lattice::standard(V1), 2);
    // window coordinates: t^{-2}, t^{-1}, 1, t; the lattice occupies the
    // nonnegative half
    REQUIRE(s.section.cols() == 2);
    CHECK(s.section.at(2, 0).is_one());
    CHECK(s.section.at(3, 1).is_one());
    CHECK(s.retraction * s.section == FieldMatrix::identity(F2, 2));

    SplitWindow sh = split_tate(V1, Lattice::standard(V1, 1), 2);
    REQUIRE(sh.section.cols() == 1);
    CHECK(sh.section.at(3, 0).is_one());

    Rng rng(70);
    for (int trial = 0; trial < 20; ++trial) {
        Lattice l = random_lattice(rng, V2);
        long w = 8;
        if (!window_oracle::lattice_fits(l, w)) continue;
        SplitWindow sp = split_tate(V2, l, w);
        CHECK(sp.retraction * sp.section == FieldMatrix::identity(F2, sp.section.cols()));
        // the section spans exactly the lattice trace on the window
        CHECK(window_oracle::subspace_eq(sp.section, window_oracle::span_of_lattice(l, w)));
        // projector decomposition: image and kernel fill the window
        FieldMatrix proj = sp.section * sp.retraction;
        CHECK(proj * proj == proj);
        CHECK(proj.rank() + kernel(proj).obj.dim == 4 * w);
    }
    CHECK_THROWS_AS(split_tate(V1, Lattice::standard(V1, 5), 2), domain_error);
}

TEST_CASE("directedness of the lattice order") {
    Rng rng(91);
    for (int n = 1; n <= 3; ++n) {
        TateSpace v{n, F2, 32};
        for (int trial = 0; trial < 10; ++trial) {
            Lattice l0 = random_lattice(rng, v), l1 = random_lattice(rng, v);
            Lattice meet = lattice_meet(l0, l1), join = lattice_join(l0, l1);
            CHECK(lattice_leq(meet, l0));
            CHECK(lattice_leq(meet, l1));
            CHECK(lattice_leq(l0, join));
            CHECK(lattice_leq(l1, join));
            // nested quotients are finite torsion modules
            CHECK(total(quotient_dims(meet, l0)) >= 0);
            CHECK(total(quotient_dims(l0, join)) >= 0);
            for (int c = 0; c < 10; ++c) {
                Lattice cand = random_lattice(rng, v);
                if (lattice_leq(cand, l0) && lattice_leq(cand, l1)) CHECK(lattice_leq(cand, meet));
                if (lattice_leq(l0, cand) && lattice_leq(l1, cand)) CHECK(lattice_leq(join, cand));
            }
        }
    }
}

TEST_CASE("base change preserves the lattice order and indices") {
    const FieldInfo* f4 = FieldInfo::extension(2, 2);
    Rng rng(14);
    for (int trial = 0; trial < 15; ++trial) {
        Lattice l0 = random_lattice(rng, V2), l1 = random_lattice(rng, V2);
        Lattice m0 = l0.mapped(f4), m1 = l1.mapped(f4);
        CHECK(lattice_leq(l0, l1) == lattice_leq(m0, m1));
        CHECK(lattice_meet(l0, l1).mapped(f4) == lattice_meet(m0, m1));
        CHECK(lattice_join(l0, l1).mapped(f4) == lattice_join(m0, m1));
        IndexBundle b = index_bundle(l0, l1), bm = index_bundle(m0, m1);
        CHECK(b.pos == bm.pos);
        CHECK(b.neg == bm.neg);
    }
}

TEST_CASE("ambient mismatches are rejected") {
    CHECK_THROWS_AS(lattice_join(Lattice::standard(V1), Lattice::standard(V2)), domain_error);
}
