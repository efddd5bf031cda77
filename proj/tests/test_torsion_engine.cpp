#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "torsion/errors.hpp"
#include "torsion/float_torsion.hpp"
#include "torsion/generators.hpp"
#include "torsion/sphere.hpp"
#include "torsion/torsion.hpp"

using namespace torsion;

namespace {

std::vector<std::vector<std::vector<double>>> float_homology(const gen::BasedComplex& b) {
    std::vector<std::vector<std::vector<double>>> out(b.complex.top_degree() + 1);
    for (std::size_t q = 0; q <= b.complex.top_degree(); ++q) {
        for (const auto& v : b.basis.at(q)) {
            std::vector<double> col;
            const double s = pr_to_float(v.scale);
            for (const auto& x : v.coords) col.push_back(s * x.to_double());
            out[q].push_back(std::move(col));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("torsion_exact on minimal sphere models") {
    auto tau = [](std::size_t n, std::size_t m) {
        const SphereSpec spec{n, 1, m, CellModel::minimal};
        return torsion_exact(minimal_complex(spec), harmonic_homology_basis(spec)).value;
    };
    CHECK(tau(3, 1) == PiRadical(Rational(4), 4));   // 2π²
    CHECK(tau(2, 2) == PiRadical());
    CHECK(tau(1, 2) == PiRadical(Rational(16), 4));  // (2π)²
    CHECK(tau(3, 3) == pr_int_pow(PiRadical(Rational(4), 4), 3));
}

TEST_CASE("torsion_exact trivial complexes") {
    GradedBasis h0(1);
    h0.add(0, {PiRadical(), {Rational(1)}});
    CHECK(torsion_exact(ChainComplex::zero({1}), h0).value == PiRadical());

    GradedBasis h1(2);
    h1.add(1, {PiRadical::from_rational(3), {Rational(1)}});
    const ExactTorsion t = torsion_exact(ChainComplex::zero({0, 1}), h1);
    CHECK(t.value == PiRadical::from_rational(Rational(1, 3)));
    CHECK(t.per_degree == std::vector<PiRadical>{PiRadical(), PiRadical::from_rational(3)});

    // Acyclic 0 → R --2--> R → 0: degree 0 sees (2), degree 1 sees (1).
    CHECK(torsion_exact(ChainComplex({1, 1}, {RationalMatrix{{2}}}), GradedBasis(2)).value == PiRadical::from_rational(2));
    CHECK(torsion_exact(ChainComplex({1, 1}, {RationalMatrix{{-1}}}), GradedBasis(2)).value == PiRadical());
}

TEST_CASE("torsion_exact rejects bad input") {
    const ChainComplex bad({1, 1, 1}, {RationalMatrix{{1}}, RationalMatrix{{1}}});
    CHECK_THROWS_AS(torsion_exact(bad, GradedBasis(3)), InputError);

    const SphereSpec spec{3, 1, 1, CellModel::minimal};
    const ChainComplex c = minimal_complex(spec);
    CHECK_THROWS_AS(torsion_exact(c, GradedBasis(4)), InputError);

    const ChainComplex acyclic({1, 2}, {RationalMatrix{{1, 1}}});
    BoundaryLifts lifts = default_lifts(acyclic);
    GradedBasis h(2);
    h.add(1, {PiRadical(), {Rational(1), Rational(-1)}});
    CHECK_NOTHROW(torsion_exact(acyclic, h, lifts));
    lifts[1] = RationalMatrix{{1}, {-1}};  // a cycle, maps to zero
    CHECK_THROWS_AS(torsion_exact(acyclic, h, lifts), InputError);
    lifts[1] = RationalMatrix(2, 0);
    CHECK_THROWS_AS(torsion_exact(acyclic, h, lifts), InputError);
}

TEST_CASE("torsion_exact matches brute-force oracle") {
    gen::Rng rng(21);
    for (int t = 0; t < 60; ++t) {
        const auto based = gen::random_complex(rng, 12);
        const double expected = oracle::brute_force_torsion(based.complex.dims(), based.complex.boundaries(), float_homology(based));
        const double exact = pr_to_float(torsion_exact(based.complex, based.basis).value);
        CHECK(std::abs(exact - expected) <= 1e-8 * expected);
    }
}

TEST_CASE("torsion_float examples") {
    const SphereSpec spec{3, 1, 1, CellModel::minimal};
    const FloatTorsion t = torsion_float(to_float(minimal_complex(spec)), to_float(harmonic_homology_basis(spec)));
    CHECK(std::abs(t.value - 19.739208802178716) < 1e-12);
    CHECK(t.error_bound >= 0.0);
    CHECK(t.error_bound < 1e-10);

    FloatComplex identity{{1, 1}, {Eigen::MatrixXd::Constant(1, 1, 1.0)}};
    CHECK(torsion_float(identity, FloatBasis(2)).value == doctest::Approx(1.0).epsilon(1e-15));
    FloatComplex scaled{{1, 1}, {Eigen::MatrixXd::Constant(1, 1, 2.0)}};
    CHECK(torsion_float(scaled, FloatBasis(2)).value == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("torsion_float errors") {
    FloatComplex identity{{1, 1}, {Eigen::MatrixXd::Constant(1, 1, 1.0)}};
    CHECK_THROWS_AS(torsion_float(identity, FloatBasis(2), 0.0), InputError);
    CHECK_THROWS_AS(torsion_float(identity, FloatBasis(2), 1e-2), InputError);

    // Two nearly parallel homology vectors.
    FloatComplex zero{{2}, {}};
    FloatBasis h(1);
    Eigen::VectorXd a(2), b(2);
    a << 1.0, 0.0;
    b << 1.0, 1e-22;
    h[0] = {{1.0, a}, {1.0, b}};
    CHECK_THROWS_AS(torsion_float(zero, h, 1e-10), DegenerateBasisError);
    // Just above tol^2 is still accepted.
    b << 1.0, 1e-18;
    h[0] = {{1.0, a}, {1.0, b}};
    CHECK(torsion_float(zero, h, 1e-10).value == doctest::Approx(1e-18).epsilon(1e-6));
    // Wrong vector count.
    h[0].pop_back();
    CHECK_THROWS_AS(torsion_float(zero, h, 1e-10), DegenerateBasisError);
}

TEST_CASE("torsion_float agrees with torsion_exact on random complexes") {
    gen::Rng rng(22);
    for (int t = 0; t < 100; ++t) {
        const auto based = gen::random_complex(rng, 24);
        const double exact = pr_to_float(torsion_exact(based.complex, based.basis).value);
        const double approx = torsion_float(to_float(based.complex), to_float(based.basis)).value;
        CHECK(std::abs(approx - exact) <= 1e-9 * exact);
    }
}

TEST_CASE("scale_basis") {
    const SphereSpec spec{3, 1, 1, CellModel::minimal};
    const ChainComplex c = minimal_complex(spec);
    const GradedBasis h = harmonic_homology_basis(spec);
    const PiRadical base = torsion_exact(c, h).value;
    const PiRadical one;

    CHECK(scale_basis(h, {one, one, one, one}) == h);
    const PiRadical two = PiRadical::from_rational(2);
    const PiRadical five = PiRadical::from_rational(5);
    CHECK(torsion_exact(c, scale_basis(h, {two, one, one, one})).value == base * two);
    CHECK(torsion_exact(c, scale_basis(h, {one, one, one, five})).value == base / five);
    CHECK_THROWS_AS(scale_basis(h, {one}), InputError);

    // Only the first vector of a degree is touched.
    const SphereSpec wide{2, 1, 3, CellModel::minimal};
    const GradedBasis hw = harmonic_homology_basis(wide);
    const GradedBasis scaled = scale_basis(hw, {two, one, one});
    CHECK(scaled.at(0)[0].scale == hw.at(0)[0].scale * two);
    CHECK(scaled.at(0)[1] == hw.at(0)[1]);
}

TEST_CASE("scaling law on random complexes") {
    gen::Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        const auto based = gen::random_complex(rng, 24);
        std::vector<PiRadical> alphas;
        PiRadical expected = torsion_exact(based.complex, based.basis).value;
        for (std::size_t q = 0; q <= based.complex.top_degree(); ++q) {
            alphas.push_back(PiRadical::from_rational(gen::random_rational(rng, 30, 30, true)));
            if (based.basis.at(q).empty()) continue;
            expected = q % 2 == 0 ? expected * alphas.back() : expected / alphas.back();
        }
        CHECK(torsion_exact(based.complex, scale_basis(based.basis, alphas)).value == expected);
    }
}

TEST_CASE("torsion is independent of lifts and orthogonal re-coordinatization") {
    gen::Rng rng(24);
    for (int t = 0; t < 20; ++t) {
        const auto based = gen::random_complex(rng, 24);
        const PiRadical reference = torsion_exact(based.complex, based.basis).value;
        for (int k = 0; k < 10; ++k) {
            CHECK(torsion_exact(based.complex, based.basis, gen::random_lifts(rng, based.complex, based.basis)).value == reference);
            CHECK(torsion_exact(based.complex, gen::random_orthogonal_recoordinatization(rng, based.basis)).value == reference);
        }
        CHECK(pr_to_float(reference) > 0.0);
    }
}
