#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "torsion/chain_complex.hpp"
#include "torsion/errors.hpp"
#include "torsion/generators.hpp"
#include "torsion/group_ring.hpp"
#include "torsion/linalg.hpp"
#include "torsion/sphere.hpp"

using namespace torsion;

namespace {

const RationalMatrix kSwap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};

// D_q written out by hand for S³: q = 1, 2, 3.
ChainComplex hand_hemispheric_s3() {
    const RationalMatrix d1{{1, -1}, {-1, 1}};
    const RationalMatrix d2{{1, 1}, {1, 1}};
    const RationalMatrix d3{{1, -1}, {-1, 1}};
    return ChainComplex({2, 2, 2, 2}, {d1, d2, d3});
}

}  // namespace

TEST_CASE("validate_complex") {
    CHECK_FALSE(validate_complex(ChainComplex::zero({1, 0, 1})).has_value());

    const ChainComplex hemi = hand_hemispheric_s3();
    CHECK_FALSE(validate_complex(hemi).has_value());
    CHECK(hemispheric_complex({3, 1, 1, CellModel::hemispheric}) == hemi);

    const ChainComplex bad({1, 1, 1}, {RationalMatrix{{1}}, RationalMatrix{{1}}});
    const auto v = validate_complex(bad);
    REQUIRE(v.has_value());
    CHECK(v->degree == 1);

    const ChainComplex misshapen({2, 1}, {RationalMatrix{{1}}});
    REQUIRE(validate_complex(misshapen).has_value());
    CHECK(validate_complex(misshapen)->degree == 1);
    CHECK_THROWS_AS(ChainComplex({1, 1}, {}), InputError);
}

TEST_CASE("evaluate_word") {
    const Representation swap(2, {kSwap});
    CHECK(evaluate_word(swap, GroupWord()) == RationalMatrix::identity(2));
    CHECK(evaluate_word(Representation::trivial(3, 2), GroupWord({{0, 5}, {1, -2}, {0, 1}})) == RationalMatrix::identity(3));
    CHECK(evaluate_word(swap, GroupWord::generator(0, 2)) == RationalMatrix::identity(2));
    CHECK(evaluate_word(swap, GroupWord::generator(0, -1)) == kSwap);
    CHECK_THROWS_AS(evaluate_word(swap, GroupWord::generator(1)), InputError);

    const RationalMatrix rotation{{Rational(3, 5), Rational(4, 5)}, {Rational(-4, 5), Rational(3, 5)}};
    const Representation rot(2, {rotation});
    CHECK(evaluate_word(rot, GroupWord::generator(0, -1)) == rotation.transpose());
}

TEST_CASE("representation rejects non-orthogonal images") {
    CHECK_THROWS_AS(Representation(2, {RationalMatrix{{1, 1}, {0, 1}}}), InputError);
    CHECK_THROWS_AS(Representation(2, {RationalMatrix{{1}}}), InputError);
    CHECK_THROWS_AS(Representation(0, {}), InputError);
}

TEST_CASE("group words reduce freely") {
    const GroupWord w({{0, 2}, {0, -2}, {1, 1}, {1, 3}});
    REQUIRE(w.letters().size() == 1);
    CHECK(w.letters()[0] == GroupWord::Letter{1, 4});
    const GroupWord x({{0, 1}, {1, -1}, {2, 3}});
    CHECK((x * x.inverse()).empty());
}

TEST_CASE("twist") {
    for (std::size_t n : {1u, 2u, 5u}) {
        const ChainComplex c = twist(sphere_group_ring_complex(n, CellModel::minimal), Representation::trivial(3));
        std::vector<std::size_t> dims(n + 1, 0);
        dims.front() = 3;
        dims.back() += 3;
        CHECK(c.dims() == dims);
        for (const auto& b : c.boundaries()) CHECK(b.is_zero());
    }

    const RationalMatrix integer{{2, -1, 0}, {0, 3, 1}};
    const ChainComplex rank_one = twist({{2, 3}, {GroupRingMatrix::from_rational(integer)}}, Representation::trivial(1));
    CHECK(rank_one.boundary(1) == integer);

    GroupRingMatrix entry(1, 1);
    entry(0, 0) = GroupRingElement({{Rational(1), GroupWord::generator(0)}, {Rational(-1), GroupWord()}});
    const ChainComplex twisted = twist({{1, 1}, {entry}}, Representation(2, {kSwap}));
    CHECK(twisted.boundary(1) == RationalMatrix{{-1, 1}, {1, -1}});

    // (g − e)(g + e) = g² − e ≠ 0 for ρ(g) of order four, so ∂∂ ≠ 0 after twisting.
    const RationalMatrix quarter{{0, -1}, {1, 0}};
    GroupRingMatrix a(1, 1), b(1, 1);
    a(0, 0) = GroupRingElement({{Rational(1), GroupWord::generator(0)}, {Rational(-1), GroupWord()}});
    b(0, 0) = GroupRingElement({{Rational(1), GroupWord::generator(0)}, {Rational(1), GroupWord()}});
    CHECK_THROWS_AS(twist({{1, 1, 1}, {a, b}}, Representation(2, {quarter})), InputError);
    // With ρ(g) = swap, g² = e and the composite vanishes.
    CHECK_NOTHROW(twist({{1, 1, 1}, {a, b}}, Representation(2, {kSwap})));
}

TEST_CASE("rank_of") {
    CHECK(rank_of(RationalMatrix(3, 4)) == 0);
    CHECK(rank_of(RationalMatrix(0, 0)) == 0);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(rank_of(RationalMatrix::identity(k)) == k);
    for (int q = 1; q <= 4; ++q) {
        const Rational s(q % 2 == 0 ? 1 : -1);
        CHECK(rank_of(RationalMatrix{{Rational(1), s}, {s, Rational(1)}}) == 1);
    }
}

TEST_CASE("rank_of agrees with SVD rank") {
    gen::Rng rng(11);
    std::uniform_int_distribution<int> size(1, 8), entry(-5, 5), inner(1, 4);
    for (int t = 0; t < 500; ++t) {
        const auto rows = static_cast<std::size_t>(size(rng));
        const auto cols = static_cast<std::size_t>(size(rng));
        RationalMatrix m(rows, cols);
        if (t % 2 == 0) {
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(entry(rng));
        } else {
            const auto k = static_cast<std::size_t>(inner(rng));
            RationalMatrix left(rows, k), right(k, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < k; ++j) left(i, j) = Rational(entry(rng));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < cols; ++j) right(i, j) = Rational(entry(rng));
            m = left * right;
        }
        CHECK(rank_of(m) == oracle::svd_rank(m));
    }
}

TEST_CASE("determinant agrees with Leibniz expansion") {
    gen::Rng rng(12);
    std::uniform_int_distribution<int> size(0, 6);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(size(rng));
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = t % 3 == 0 && j == 0 ? Rational(0) : gen::random_rational(rng, 7, 5, false);
        CHECK(determinant(m) == oracle::leibniz_determinant(m));
    }
    CHECK(determinant(RationalMatrix(0, 0)) == Rational(1));
}

TEST_CASE("betti_numbers") {
    CHECK(betti_numbers(minimal_complex({4, 1, 2, CellModel::minimal})) == std::vector<std::size_t>{2, 0, 0, 0, 2});
    CHECK(betti_numbers(minimal_complex({1, 1, 2, CellModel::minimal})) == std::vector<std::size_t>{2, 2});
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<std::size_t> expected(n + 1, 0);
        expected.front() = 1;
        expected.back() += 1;
        CHECK(betti_numbers(hemispheric_complex({n, 1, 1, CellModel::hemispheric})) == expected);
    }
    CHECK(betti_numbers(ChainComplex({1, 1}, {RationalMatrix{{1}}})) == std::vector<std::size_t>{0, 0});
}

TEST_CASE("select_boundary_lift") {
    const ChainComplex c({1, 2}, {RationalMatrix{{1, 1}}});
    const BoundaryLift lift = select_boundary_lift(c, 1);
    CHECK(lift.columns == std::vector<std::size_t>{0});
    CHECK(lift.image == RationalMatrix{{1}});

    CHECK(select_boundary_lift(ChainComplex::zero({2, 3}), 1).columns.empty());

    const ChainComplex hemi = hand_hemispheric_s3();
    for (std::size_t q = 1; q <= 3; ++q) CHECK(select_boundary_lift(hemi, q).columns == std::vector<std::size_t>{0});

    // Leftmost rule skips a dependent column.
    const ChainComplex skip({2, 3}, {RationalMatrix{{1, 2, 0}, {1, 2, 1}}});
    CHECK(select_boundary_lift(skip, 1).columns == std::vector<std::size_t>{0, 2});
}

TEST_CASE("select_boundary_lift columns are independent") {
    gen::Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        const auto based = gen::random_complex(rng, 24);
        for (std::size_t q = 1; q <= based.complex.top_degree(); ++q) {
            const BoundaryLift lift = select_boundary_lift(based.complex, q);
            CHECK(rank_of(lift.image) == lift.columns.size());
            CHECK(lift.columns.size() == rank_of(based.complex.boundary(q)));
        }
    }
}

TEST_CASE("verify_homology_basis") {
    const SphereSpec spec{3, 1, 1, CellModel::minimal};
    const ChainComplex c = minimal_complex(spec);
    const PiRadical root(Rational(2), 2);  // √(2π²)
    GradedBasis h(4);
    h.add(0, {root, {Rational(1)}});
    h.add(3, {PiRadical() / root, {Rational(1)}});
    CHECK_FALSE(verify_homology_basis(c, h).has_value());
    CHECK(h == harmonic_homology_basis(spec));

    GradedBasis zero = h;
    zero.at(0).front().coords = {Rational(0)};
    const auto v = verify_homology_basis(c, zero);
    REQUIRE(v.has_value());
    CHECK(v->degree == 0);
    CHECK(v->message.find("dependent") != std::string::npos);

    const ChainComplex hemi = hand_hemispheric_s3();
    GradedBasis not_cycle = harmonic_homology_basis({3, 1, 1, CellModel::hemispheric});
    not_cycle.at(3).front().coords = {Rational(1), Rational(0)};
    const auto w = verify_homology_basis(hemi, not_cycle);
    REQUIRE(w.has_value());
    CHECK(w->degree == 3);
    CHECK(w->message.find("not a cycle") != std::string::npos);

    GradedBasis missing(4);
    missing.add(0, {root, {Rational(1)}});
    REQUIRE(verify_homology_basis(c, missing).has_value());
    CHECK(verify_homology_basis(c, missing)->degree == 3);

    // A boundary is not a valid homology class.
    GradedBasis boundary_class = harmonic_homology_basis({3, 1, 1, CellModel::hemispheric});
    boundary_class.at(0).front().coords = {Rational(1), Rational(-1)};
    CHECK(verify_homology_basis(hemi, boundary_class).has_value());
}

TEST_CASE("rho(w) rho(w^-1) is the identity") {
    gen::Rng rng(14);
    std::uniform_int_distribution<int> rank(1, 4), gens(1, 3), length(0, 8), exponent(-3, 3);
    for (int t = 0; t < 200; ++t) {
        const auto m = static_cast<std::size_t>(rank(rng));
        const auto g = gens(rng);
        std::vector<RationalMatrix> images;
        for (int i = 0; i < g; ++i) images.push_back(gen::random_rational_orthogonal(rng, m));
        const Representation rep(m, images);
        std::vector<GroupWord::Letter> letters;
        const int len = length(rng);
        for (int i = 0; i < len; ++i)
            letters.push_back({static_cast<std::size_t>(std::uniform_int_distribution<int>(0, g - 1)(rng)), exponent(rng)});
        const GroupWord w(letters);
        CHECK(evaluate_word(rep, w) * evaluate_word(rep, w.inverse()) == RationalMatrix::identity(m));
    }
}
