#include "torsion/sphere.hpp"

#include <cmath>
#include <numbers>

#include "torsion/errors.hpp"

namespace torsion {

namespace {

Rational factorial(std::size_t k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f, mpz_class(1));
}

double simpson_sine_power(std::size_t power, std::size_t panels) {
    const double h = std::numbers::pi / static_cast<double>(panels);
    const auto f = [power](double x) { return std::pow(std::sin(x), static_cast<double>(power)); };
    double sum = f(0.0) + f(std::numbers::pi);
    for (std::size_t i = 1; i < panels; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(h * static_cast<double>(i));
    return sum * h / 3.0;
}

std::vector<Rational> unit_vector(std::size_t length, std::size_t index) {
    std::vector<Rational> v(length, Rational(0));
    v[index] = Rational(1);
    return v;
}

}  // namespace

void validate(const SphereSpec& spec) {
    if (spec.n < 1) throw InputError("sphere dimension must be at least 1");
    if (spec.radius.sign() <= 0) throw InputError("sphere radius must be positive");
    if (spec.rank < 1) throw InputError("representation rank must be at least 1");
}

void validate(const ProductSpec& spec) {
    if (spec.n < 1 || spec.k < 1) throw InputError("sphere dimensions must be at least 1");
    if (spec.a.sign() <= 0 || spec.b.sign() <= 0) throw InputError("sphere radii must be positive");
}

PiRadical gamma_half(std::size_t j) {
    if (j < 1) throw InputError("gamma_half needs j >= 1");
    if (j % 2 == 0) return PiRadical::from_rational(factorial(j / 2 - 1));
    // Γ(m + 1/2) = (2m)! / (4^m m!) · √π
    const std::size_t m = (j - 1) / 2;
    const Rational c = factorial(2 * m) / (Rational(4).pow(static_cast<std::int64_t>(m)) * factorial(m));
    return PiRadical(c * c, 1);
}

PiRadical sphere_volume(std::size_t n, const Rational& radius) {
    if (n < 1) throw InputError("sphere dimension must be at least 1");
    if (radius.sign() <= 0) throw InputError("sphere radius must be positive");
    const PiRadical numerator = PiRadical::from_rational(Rational(2) * radius.pow(static_cast<std::int64_t>(n))) *
                                PiRadical(Rational(1), static_cast<std::int64_t>(n + 1));
    return numerator / gamma_half(n + 1);
}

double volume_quadrature(std::size_t n, const Rational& radius, std::size_t panels) {
    if (n < 1) throw InputError("sphere dimension must be at least 1");
    if (radius.sign() <= 0) throw InputError("sphere radius must be positive");
    if (panels < 64 || panels % 2 != 0) throw InputError("quadrature panels must be even and at least 64");
    double unit = 2.0 * std::numbers::pi;
    std::size_t level_panels = panels;
    for (std::size_t dim = 2; dim <= n; ++dim) {
        unit *= simpson_sine_power(dim - 1, level_panels);
        level_panels *= 2;
    }
    return unit * std::pow(radius.to_double(), static_cast<double>(n));
}

GroupRingComplex sphere_group_ring_complex(std::size_t n, CellModel model) {
    if (n < 1) throw InputError("sphere dimension must be at least 1");
    GroupRingComplex out;
    if (model == CellModel::minimal) {
        out.dims.assign(n + 1, 0);
        out.dims.front() = 1;
        out.dims.back() = 1;
        for (std::size_t q = 1; q <= n; ++q) out.boundaries.emplace_back(out.dims[q - 1], out.dims[q]);
        return out;
    }
    // D_q = [[1, (−1)^q], [(−1)^q, 1]]
    out.dims.assign(n + 1, 2);
    for (std::size_t q = 1; q <= n; ++q) {
        const Rational sign(q % 2 == 0 ? 1 : -1);
        out.boundaries.push_back(GroupRingMatrix::from_rational(RationalMatrix{{Rational(1), sign}, {sign, Rational(1)}}));
    }
    return out;
}

ChainComplex minimal_complex(const SphereSpec& spec) {
    validate(spec);
    if (spec.model != CellModel::minimal) throw InputError("minimal_complex needs the minimal model");
    return twist(sphere_group_ring_complex(spec.n, CellModel::minimal), Representation::trivial(spec.rank));
}

ChainComplex hemispheric_complex(const SphereSpec& spec) {
    validate(spec);
    if (spec.model != CellModel::hemispheric) throw InputError("hemispheric_complex needs the hemispheric model");
    return twist(sphere_group_ring_complex(spec.n, CellModel::hemispheric), Representation::trivial(spec.rank));
}

ChainComplex sphere_complex(const SphereSpec& spec) {
    return spec.model == CellModel::minimal ? minimal_complex(spec) : hemispheric_complex(spec);
}

GradedBasis harmonic_homology_basis(const SphereSpec& spec) {
    validate(spec);
    const std::size_t m = spec.rank;
    const PiRadical root_volume = pr_sqrt(sphere_volume(spec.n, spec.radius));
    const PiRadical inverse_root = PiRadical() / root_volume;
    GradedBasis h(spec.n + 1);
    if (spec.model == CellModel::minimal) {
        for (std::size_t i = 0; i < m; ++i) {
            h.add(0, {root_volume, unit_vector(m, i)});
            h.add(spec.n, {inverse_root, unit_vector(m, i)});
        }
        return h;
    }
    // Each dual top cell is a hemisphere of volume Vol/2; cell i, channel j sits at i*m + j.
    const PiRadical half_root = root_volume * PiRadical::from_rational(Rational(1, 2));
    const Rational top_sign(spec.n % 2 == 0 ? -1 : 1);  // −(−1)^n
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rational> point(2 * m, Rational(0));
        point[j] = Rational(1);
        point[m + j] = Rational(1);
        h.add(0, {half_root, std::move(point)});

        std::vector<Rational> top(2 * m, Rational(0));
        top[j] = Rational(1);
        top[m + j] = top_sign;
        h.add(spec.n, {inverse_root, std::move(top)});
    }
    return h;
}

PiRadical sphere_torsion_closed(const SphereSpec& spec) {
    validate(spec);
    if (spec.n % 2 == 0) return PiRadical();
    return pr_int_pow(sphere_volume(spec.n, spec.radius), static_cast<std::int64_t>(spec.rank));
}

int euler_characteristic(std::size_t n) {
    if (n < 1) throw InputError("sphere dimension must be at least 1");
    return n % 2 == 0 ? 2 : 0;
}

PiRadical product_torsion_closed(const ProductSpec& spec) {
    validate(spec);
    const bool n_even = spec.n % 2 == 0;
    const bool k_even = spec.k % 2 == 0;
    if (n_even && !k_even) return pr_int_pow(sphere_volume(spec.k, spec.b), euler_characteristic(spec.n));
    if (k_even && !n_even) return pr_int_pow(sphere_volume(spec.n, spec.a), euler_characteristic(spec.k));
    return PiRadical();
}

PiRadical weng_you_torsion(std::size_t k, const Rational& radius) {
    if (radius.sign() <= 0) throw InputError("radius must be positive");
    const Rational coefficient = Rational(2) * radius.pow(static_cast<std::int64_t>(2 * k + 1)) / factorial(k);
    return PiRadical::from_rational(coefficient) * PiRadical::pi_power(static_cast<std::int64_t>(k + 1));
}

}  // namespace torsion
