#include "torsion/selfcheck.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <sstream>

#include "torsion/errors.hpp"
#include "torsion/float_torsion.hpp"
#include "torsion/generators.hpp"
#include "torsion/io.hpp"
#include "torsion/linalg.hpp"
#include "torsion/torsion.hpp"

namespace torsion {

namespace {

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++result_.trials;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what;
        }
    }

    SuiteResult finish() { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string describe(const SphereSpec& s) {
    std::ostringstream os;
    os << "S^" << s.n << " radius " << s.radius << " rank " << s.rank << " " << model_name(s.model);
    return os.str();
}

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

SuiteResult scalar_arithmetic(std::uint64_t seed) {
    Suite suite("scalar-arithmetic");
    gen::Rng rng(seed);
    std::uniform_int_distribution<int> exponent(-6, 6);
    for (int t = 0; t < 200; ++t) {
        const PiRadical a(gen::random_rational(rng, 50, 50, true), exponent(rng));
        const PiRadical b(gen::random_rational(rng, 50, 50, true), exponent(rng));
        const PiRadical c(gen::random_rational(rng, 50, 50, true), exponent(rng));
        suite.check(close(pr_to_float(a * b), pr_to_float(a) * pr_to_float(b), 1e-12), "float of product");
        suite.check(a * b == b * a, "commutativity");
        suite.check((a * b) * c == a * (b * c), "associativity");
        suite.check(pr_div(a, b) * b == a, "division inverts multiplication");
        suite.check(pr_sqrt(a * a) == a, "sqrt of square");
        suite.check(io::parse_exact(io::render_exact(a)) == a, "render/parse round trip");
    }
    return suite.finish();
}

SuiteResult rank_agreement(std::uint64_t seed) {
    Suite suite("rank-vs-float");
    gen::Rng rng(seed);
    std::uniform_int_distribution<int> size(1, 8);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int t = 0; t < 500; ++t) {
        const auto rows = static_cast<std::size_t>(size(rng));
        const auto cols = static_cast<std::size_t>(size(rng));
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(entry(rng));
        if (t % 2 == 0) {
            // Low-rank products make rank deficiency common.
            const auto inner = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng));
            RationalMatrix left(rows, inner);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < inner; ++j) left(i, j) = Rational(entry(rng));
            RationalMatrix right(inner, cols);
            for (std::size_t i = 0; i < inner; ++i)
                for (std::size_t j = 0; j < cols; ++j) right(i, j) = Rational(entry(rng));
            m = left * right;
        }
        Eigen::MatrixXd f(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) f(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_double();
        suite.check(rank_of(m) == float_rank(f, 1e-9), "exact rank differs from float rank");
    }
    return suite.finish();
}

SuiteResult word_inverse(std::uint64_t seed) {
    Suite suite("evaluate-word-inverse");
    gen::Rng rng(seed);
    std::uniform_int_distribution<int> rank(1, 4), generators(1, 3), length(0, 6), exponent(-3, 3);
    for (int t = 0; t < 200; ++t) {
        const auto m = static_cast<std::size_t>(rank(rng));
        const auto g = static_cast<std::size_t>(generators(rng));
        std::vector<RationalMatrix> images;
        for (std::size_t i = 0; i < g; ++i) images.push_back(gen::random_rational_orthogonal(rng, m));
        const Representation rep(m, images);
        std::vector<GroupWord::Letter> letters;
        const int len = length(rng);
        for (int i = 0; i < len; ++i) {
            letters.push_back({static_cast<std::size_t>(std::uniform_int_distribution<int>(0, static_cast<int>(g) - 1)(rng)), exponent(rng)});
        }
        const GroupWord w(letters);
        std::vector<GroupWord::Letter> raw = letters;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) raw.push_back({it->generator, -it->exponent});
        suite.check(evaluate_word(rep, GroupWord(raw)) == RationalMatrix::identity(m), "w w^-1 is not the identity");
        suite.check(evaluate_word(rep, w) * evaluate_word(rep, w.inverse()) == RationalMatrix::identity(m),
                    "rho(w) rho(w^-1) is not the identity");
    }
    return suite.finish();
}

SuiteResult builtin_models(std::uint64_t) {
    Suite suite("builtin-models");
    for (const auto& spec : builtin_sphere_specs()) {
        const ChainComplex c = sphere_complex(spec);
        suite.check(!validate_complex(c).has_value(), describe(spec) + ": invalid complex");
        std::vector<std::size_t> expected(spec.n + 1, 0);
        expected.front() = spec.rank;
        expected.back() += spec.rank;
        suite.check(betti_numbers(c) == expected, describe(spec) + ": wrong Betti numbers");
        suite.check(!verify_homology_basis(c, harmonic_homology_basis(spec)).has_value(),
                    describe(spec) + ": harmonic basis rejected");
        for (std::size_t q = 1; q <= c.top_degree(); ++q) {
            const BoundaryLift lift = select_boundary_lift(c, q);
            suite.check(rank_of(lift.image) == lift.columns.size(), describe(spec) + ": dependent lift");
        }
        const GroupRingComplex g = sphere_group_ring_complex(spec.n, spec.model);
        const ChainComplex rank_one = twist(g, Representation::trivial(1));
        for (std::size_t q = 1; q <= spec.n; ++q) {
            bool same = true;
            for (std::size_t r = 0; r < g.boundaries[q - 1].rows(); ++r) {
                for (std::size_t col = 0; col < g.boundaries[q - 1].cols(); ++col) {
                    const auto& terms = g.boundaries[q - 1](r, col).terms();
                    const Rational expected_entry = terms.empty() ? Rational(0) : terms.front().coefficient;
                    same = same && rank_one.boundary(q)(r, col) == expected_entry;
                }
            }
            suite.check(same, describe(spec) + ": rank-1 trivial twist changed a boundary");
        }
    }
    return suite.finish();
}

SuiteResult closed_form_reproduction(std::uint64_t seed) {
    Suite suite("closed-form-reproduction");
    gen::Rng rng(seed);
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::size_t m = 1; m <= 3; ++m) {
            for (int t = 0; t < 3; ++t) {
                const Rational l = gen::random_rational(rng, 9, 9, true);
                const SphereSpec minimal{n, l, m, CellModel::minimal};
                const SphereSpec hemi{n, l, m, CellModel::hemispheric};
                const PiRadical closed = sphere_torsion_closed(minimal);
                const PiRadical a = torsion_exact(minimal_complex(minimal), harmonic_homology_basis(minimal)).value;
                const PiRadical b = torsion_exact(hemispheric_complex(hemi), harmonic_homology_basis(hemi)).value;
                suite.check(a == closed, describe(minimal) + ": engine differs from closed form");
                suite.check(b == a, describe(hemi) + ": hemispheric differs from minimal");
            }
        }
    }
    return suite.finish();
}

SuiteResult volume_identities(std::uint64_t seed) {
    Suite suite("volume-identities");
    gen::Rng rng(seed);
    for (std::size_t k = 0; k <= 10; ++k) {
        for (int t = 0; t < 5; ++t) {
            const Rational l = gen::random_rational(rng, 9, 9, true);
            suite.check(weng_you_torsion(k, l) == sphere_volume(2 * k + 1, l), "Weng-You formula differs from volume");
        }
    }
    for (std::size_t n = 1; n <= 12; ++n) {
        const Rational l = gen::random_rational(rng, 9, 9, true);
        suite.check(sphere_volume(n, l) == PiRadical::from_rational(l.pow(static_cast<std::int64_t>(n))) * sphere_volume(n, 1),
                    "volume scaling law");
        suite.check(sphere_volume(n, l).has_exact_sqrt(), "volume is not rational times a pi power");
    }
    for (std::size_t n = 1; n <= 8; ++n) {
        suite.check(close(volume_quadrature(n, 1, 1024), pr_to_float(sphere_volume(n, 1)), 1e-9),
                    "quadrature disagrees at n = " + std::to_string(n));
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t k = 1; k <= 6; ++k) {
            const Rational a = gen::random_rational(rng, 9, 9, true);
            const Rational b = gen::random_rational(rng, 9, 9, true);
            suite.check(product_torsion_closed({n, k, a, b}) == product_torsion_closed({k, n, b, a}), "product symmetry");
        }
    }
    return suite.finish();
}

SuiteResult scaling_law(std::uint64_t seed) {
    Suite suite("scaling-law");
    gen::Rng rng(seed);
    std::uniform_int_distribution<int> dim(1, 10), rank(1, 3);
    for (int t = 0; t < 50; ++t) {
        const SphereSpec spec{static_cast<std::size_t>(dim(rng)), gen::random_rational(rng, 9, 9, true),
                              static_cast<std::size_t>(rank(rng)), CellModel::minimal};
        const ChainComplex c = minimal_complex(spec);
        const GradedBasis h = harmonic_homology_basis(spec);
        std::vector<PiRadical> alphas;
        PiRadical expected = torsion_exact(c, h).value;
        for (std::size_t q = 0; q <= spec.n; ++q) {
            alphas.push_back(PiRadical::from_rational(gen::random_rational(rng, 20, 20, true)));
            if (h.at(q).empty()) continue;
            expected = q % 2 == 0 ? expected * alphas.back() : expected / alphas.back();
        }
        suite.check(torsion_exact(c, scale_basis(h, alphas)).value == expected, describe(spec) + ": scaling law");
    }
    return suite.finish();
}

SuiteResult invariance(std::uint64_t seed) {
    Suite suite("lift-and-orthogonal-invariance");
    gen::Rng rng(seed);
    std::vector<gen::BasedComplex> corpus;
    for (int i = 0; i < 10; ++i) corpus.push_back(gen::random_complex(rng, 24));
    for (const auto& spec : builtin_sphere_specs()) {
        if (spec.n <= 4) corpus.push_back({sphere_complex(spec), harmonic_homology_basis(spec)});
    }
    for (const auto& [c, h] : corpus) {
        const PiRadical reference = torsion_exact(c, h).value;
        for (int t = 0; t < 10; ++t) {
            suite.check(torsion_exact(c, h, gen::random_lifts(rng, c, h)).value == reference, "lift choice changed torsion");
            suite.check(torsion_exact(c, gen::random_orthogonal_recoordinatization(rng, h)).value == reference,
                        "orthogonal re-coordinatization changed torsion");
        }
    }
    return suite.finish();
}

SuiteResult float_agreement(std::uint64_t) {
    Suite suite("float-exact-agreement");
    for (const auto& spec : builtin_sphere_specs()) {
        const ChainComplex c = sphere_complex(spec);
        if (c.total_dimension() > 64) continue;
        const GradedBasis h = harmonic_homology_basis(spec);
        const double exact = pr_to_float(torsion_exact(c, h).value);
        const double approx = torsion_float(to_float(c), to_float(h)).value;
        suite.check(close(approx, exact, 1e-9), describe(spec) + ": float path disagrees");
    }
    return suite.finish();
}

SuiteResult document_round_trip(std::uint64_t) {
    Suite suite("document-round-trip");
    for (const auto& spec : builtin_sphere_specs()) {
        const ChainComplex c = sphere_complex(spec);
        const GradedBasis h = harmonic_homology_basis(spec);
        const std::string direct = io::render_exact(torsion_exact(c, h).value);
        const auto doc = io::parse_complex_document(io::complex_to_json(c).dump());
        const GradedBasis parsed_basis = io::parse_basis_document(io::basis_to_json(h).dump());
        suite.check(doc.complex == c, describe(spec) + ": complex changed in round trip");
        suite.check(io::render_exact(torsion_exact(doc.complex, parsed_basis).value) == direct,
                    describe(spec) + ": torsion changed in round trip");
        const auto group_doc = io::parse_complex_document(
            io::complex_to_json(sphere_group_ring_complex(spec.n, spec.model), Representation::trivial(spec.rank)).dump());
        suite.check(group_doc.complex == c, describe(spec) + ": group-ring document twists differently");
    }
    return suite.finish();
}

}  // namespace

std::vector<SphereSpec> builtin_sphere_specs() {
    std::vector<SphereSpec> specs;
    for (CellModel model : {CellModel::minimal, CellModel::hemispheric}) {
        for (std::size_t n = 1; n <= 10; ++n) {
            for (std::size_t m = 1; m <= 3; ++m) {
                for (const Rational& l : {Rational(1), Rational(5, 2)}) specs.push_back({n, l, m, model});
            }
        }
    }
    return specs;
}

std::string model_name(CellModel model) { return model == CellModel::minimal ? "minimal" : "hemispheric"; }

CellModel parse_model(const std::string& name) {
    if (name == "minimal") return CellModel::minimal;
    if (name == "hemispheric") return CellModel::hemispheric;
    throw InputError("unknown cell model '" + name + "' (expected minimal or hemispheric)");
}

std::vector<SuiteResult> run_selfcheck(std::uint64_t seed) {
    using SuiteFn = SuiteResult (*)(std::uint64_t);
    const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"scalar-arithmetic", scalar_arithmetic},
        {"rank-vs-float", rank_agreement},
        {"evaluate-word-inverse", word_inverse},
        {"builtin-models", builtin_models},
        {"closed-form-reproduction", closed_form_reproduction},
        {"volume-identities", volume_identities},
        {"scaling-law", scaling_law},
        {"lift-and-orthogonal-invariance", invariance},
        {"float-exact-agreement", float_agreement},
        {"document-round-trip", document_round_trip},
    };
    std::vector<std::future<SuiteResult>> pending;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        pending.push_back(std::async(std::launch::async, [name = suites[i].first, fn = suites[i].second, s = seed + i]() {
            try {
                return fn(s);
            } catch (const std::exception& e) {
                SuiteResult r;
                r.name = name;
                r.passed = false;
                r.detail = std::string("exception: ") + e.what();
                return r;
            }
        }));
    }
    std::vector<SuiteResult> results;
    for (std::size_t i = 0; i < pending.size(); ++i) {
        results.push_back(pending[i].get());
    }
    return results;
}

}  // namespace torsion
