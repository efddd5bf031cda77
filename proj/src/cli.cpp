#include "torsion/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "torsion/errors.hpp"
#include "torsion/float_torsion.hpp"
#include "torsion/io.hpp"
#include "torsion/selfcheck.hpp"
#include "torsion/sphere.hpp"
#include "torsion/torsion.hpp"

namespace torsion {

namespace {

using nlohmann::json;

struct Context {
    std::ostream& out;
    std::ostream& err;
};

json float_or_null(const PiRadical& v) {
    try {
        return pr_to_float(v);
    } catch (const OverflowError&) {
        return nullptr;
    }
}

json exact_value(const PiRadical& v) { return {{"exact", io::render_exact(v)}, {"float", float_or_null(v)}}; }

json per_degree_json(const std::vector<PiRadical>& factors) {
    json out = json::array();
    for (std::size_t q = 0; q < factors.size(); ++q) {
        json entry = exact_value(factors[q]);
        entry["degree"] = q;
        out.push_back(std::move(entry));
    }
    return out;
}

std::string format15(double x) {
    std::ostringstream os;
    os << std::setprecision(15) << x;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content << '\n';
}

Rational parse_radius(const std::string& text) {
    const Rational r = Rational::parse(text);
    if (r.sign() <= 0) throw InputError("radius must be positive, got " + text);
    return r;
}

struct SphereArgs {
    std::size_t dim = 1;
    std::string radius = "1";
    std::size_t rank = 1;
    std::string model = "minimal";
    bool verbose = false;
};

struct ProductArgs {
    std::vector<std::size_t> dims;
    std::vector<std::string> radii{"1", "1"};
};

struct WengYouArgs {
    std::size_t k = 0;
    std::string radius = "1";
};

struct TorsionArgs {
    std::string complex_path;
    std::string basis_path;
    bool use_float = false;
    double tol = 1e-10;
    bool verbose = false;
};

struct VolumeArgs {
    std::size_t dim = 1;
    std::string radius = "1";
    std::size_t panels = 0;
};

struct ModelArgs {
    SphereArgs sphere;
    std::string complex_out;
    std::string basis_out;
    bool group_ring = false;
};

SphereSpec to_spec(const SphereArgs& a) {
    SphereSpec spec{a.dim, parse_radius(a.radius), a.rank, parse_model(a.model)};
    validate(spec);
    return spec;
}

json run_sphere(const SphereArgs& a, Context& ctx) {
    const SphereSpec spec = to_spec(a);
    const ChainComplex c = sphere_complex(spec);
    const GradedBasis h = harmonic_homology_basis(spec);
    const ExactTorsion t = torsion_exact(c, h);
    const PiRadical closed = sphere_torsion_closed(spec);
    if (t.value != closed) {
        throw InconsistencyError("engine torsion " + io::render_exact(t.value) + " differs from closed form " +
                                 io::render_exact(closed));
    }
    json report = {{"input", {{"dim", a.dim}, {"radius", spec.radius.to_string()}, {"rank", a.rank}, {"model", a.model}}},
                   {"betti", betti_numbers(c)},
                   {"volume", exact_value(sphere_volume(spec.n, spec.radius))},
                   {"per_degree", per_degree_json(t.per_degree)},
                   {"torsion", exact_value(t.value)},
                   {"closed_form", exact_value(closed)}};
    ctx.err << "tau(S^" << spec.n << ", radius " << spec.radius << ", rank " << spec.rank << ", " << a.model
            << ") = " << io::render_exact(t.value) << '\n';
    if (a.verbose) {
        for (std::size_t q = 0; q < t.per_degree.size(); ++q) {
            ctx.err << "  |det_" << q << "| = " << io::render_exact(t.per_degree[q]) << '\n';
        }
    }
    return report;
}

json run_product(const ProductArgs& a, Context& ctx) {
    if (a.dims.size() != 2) throw InputError("--dims takes exactly two dimensions");
    if (a.radii.size() != 2) throw InputError("--radii takes exactly two radii");
    const ProductSpec spec{a.dims[0], a.dims[1], parse_radius(a.radii[0]), parse_radius(a.radii[1])};
    validate(spec);
    const PiRadical t = product_torsion_closed(spec);
    std::string which = "n, k same parity";
    if (spec.n % 2 == 0 && spec.k % 2 == 1) which = "n even, k odd";
    if (spec.n % 2 == 1 && spec.k % 2 == 0) which = "n odd, k even";
    ctx.err << "tau(S^" << spec.n << " x S^" << spec.k << ") = " << io::render_exact(t) << " (" << which << ")\n";
    return {{"input", {{"dims", a.dims}, {"radii", {spec.a.to_string(), spec.b.to_string()}}}},
            {"case", which},
            {"torsion", exact_value(t)}};
}

json run_wengyou(const WengYouArgs& a, Context& ctx) {
    const Rational l = parse_radius(a.radius);
    const PiRadical t = weng_you_torsion(a.k, l);
    const PiRadical vol = sphere_volume(2 * a.k + 1, l);
    if (t != vol) {
        throw InconsistencyError("Weng-You value " + io::render_exact(t) + " differs from the volume " + io::render_exact(vol));
    }
    ctx.err << "T(S^" << 2 * a.k + 1 << ", radius " << l << ") = " << io::render_exact(t) << " = Vol\n";
    return {{"input", {{"k", a.k}, {"radius", l.to_string()}}},
            {"torsion", exact_value(t)},
            {"sphere_volume", exact_value(vol)},
            {"agrees", true}};
}

json run_torsion(const TorsionArgs& a, Context& ctx) {
    const io::ComplexDocument doc = io::parse_complex_document(read_file(a.complex_path));
    const GradedBasis h = a.basis_path.empty() ? GradedBasis(doc.complex.top_degree() + 1)
                                               : io::parse_basis_document(read_file(a.basis_path));
    json report = {{"input", {{"complex", a.complex_path}, {"basis", a.basis_path.empty() ? json() : json(a.basis_path)}, {"float", a.use_float}}},
                   {"betti", betti_numbers(doc.complex)}};
    if (a.use_float) {
        report["input"]["tol"] = a.tol;
        const FloatTorsion t = torsion_float(to_float(doc.complex), to_float(h), a.tol);
        json per_degree = json::array();
        for (std::size_t q = 0; q < t.per_degree.size(); ++q) {
            per_degree.push_back({{"degree", q}, {"exact", nullptr}, {"float", t.per_degree[q]}});
        }
        report["per_degree"] = std::move(per_degree);
        report["torsion"] = {{"exact", nullptr}, {"float", t.value}, {"error_bound", t.error_bound}};
        ctx.err << "tau = " << format15(t.value) << " (float, error bound " << t.error_bound << ")\n";
        return report;
    }
    const ExactTorsion t = torsion_exact(doc.complex, h);
    report["per_degree"] = per_degree_json(t.per_degree);
    report["torsion"] = exact_value(t.value);
    ctx.err << "tau = " << io::render_exact(t.value) << '\n';
    if (a.verbose) {
        for (std::size_t q = 0; q < t.per_degree.size(); ++q) {
            ctx.err << "  |det_" << q << "| = " << io::render_exact(t.per_degree[q]) << '\n';
        }
    }
    return report;
}

json run_volume(const VolumeArgs& a, Context& ctx) {
    const Rational l = parse_radius(a.radius);
    const PiRadical vol = sphere_volume(a.dim, l);
    json report = {{"input", {{"dim", a.dim}, {"radius", l.to_string()}}}, {"volume", exact_value(vol)}};
    ctx.err << "Vol(S^" << a.dim << ", radius " << l << ") = " << io::render_exact(vol) << '\n';
    if (a.panels != 0) {
        const double quad = volume_quadrature(a.dim, l, a.panels);
        const double exact = pr_to_float(vol);
        const double rel = std::abs(quad - exact) / exact;
        report["quadrature"] = {{"panels", a.panels}, {"float", quad}, {"relative_error", rel}};
        ctx.err << "  quadrature (" << a.panels << " panels) = " << format15(quad) << ", relative error " << rel << '\n';
    }
    return report;
}

json run_model(const ModelArgs& a, Context& ctx) {
    const SphereSpec spec = to_spec(a.sphere);
    const json complex = a.group_ring ? io::complex_to_json(sphere_group_ring_complex(spec.n, spec.model),
                                                            Representation::trivial(spec.rank))
                                      : io::complex_to_json(sphere_complex(spec));
    const json basis = io::basis_to_json(harmonic_homology_basis(spec));
    json report = {{"input",
                    {{"dim", spec.n}, {"radius", spec.radius.to_string()}, {"rank", spec.rank}, {"model", a.sphere.model},
                     {"group_ring", a.group_ring}}}};
    if (a.complex_out.empty()) {
        report["complex"] = complex;
    } else {
        write_file(a.complex_out, complex.dump(2));
        report["complex_file"] = a.complex_out;
    }
    if (a.basis_out.empty()) {
        report["basis"] = basis;
    } else {
        write_file(a.basis_out, basis.dump(2));
        report["basis_file"] = a.basis_out;
    }
    ctx.err << "wrote " << model_name(spec.model) << " model of S^" << spec.n << '\n';
    return report;
}

void add_sphere_options(CLI::App* cmd, SphereArgs& a) {
    cmd->add_option("--dim", a.dim, "sphere dimension n")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--radius", a.radius, "radius as p/q")->capture_default_str();
    cmd->add_option("--rank", a.rank, "rank of the trivial representation")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--model", a.model, "cell model")->check(CLI::IsMember({"minimal", "hemispheric"}))->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Reidemeister torsion of based chain complexes and round spheres", "torsion-lab"};
    app.require_subcommand(1);

    SphereArgs sphere_args;
    auto* sphere = app.add_subcommand("sphere", "torsion of S^n with its harmonic homology basis");
    add_sphere_options(sphere, sphere_args);
    sphere->add_flag("--verbose", sphere_args.verbose, "print per-degree determinants");

    ProductArgs product_args;
    auto* product = app.add_subcommand("product", "torsion of S^n_a x S^k_b");
    product->add_option("--dims", product_args.dims, "n k")->required()->expected(2);
    product->add_option("--radii", product_args.radii, "a b")->expected(2);

    WengYouArgs wy_args;
    auto* wengyou = app.add_subcommand("wengyou", "analytic torsion 2 pi^(k+1) l^(2k+1) / k! of S^(2k+1)");
    wengyou->add_option("--k", wy_args.k, "k >= 0")->required();
    wengyou->add_option("--radius", wy_args.radius, "radius as p/q")->capture_default_str();

    TorsionArgs torsion_args;
    auto* torsion_cmd = app.add_subcommand("torsion", "torsion of a complex document with a basis document");
    torsion_cmd->add_option("--complex", torsion_args.complex_path, "complex document")->required();
    torsion_cmd->add_option("--basis", torsion_args.basis_path, "basis document (omit for an acyclic complex)");
    torsion_cmd->add_flag("--float", torsion_args.use_float, "use the floating-point path");
    torsion_cmd->add_option("--tol", torsion_args.tol, "relative rank tolerance for --float")->capture_default_str();
    torsion_cmd->add_flag("--verbose", torsion_args.verbose, "print per-degree determinants");

    VolumeArgs volume_args;
    auto* volume = app.add_subcommand("volume", "exact volume of S^n_l");
    volume->add_option("--dim", volume_args.dim, "sphere dimension n")->required()->check(CLI::PositiveNumber);
    volume->add_option("--radius", volume_args.radius, "radius as p/q")->capture_default_str();
    volume->add_option("--quadrature", volume_args.panels, "also integrate numerically with this many panels");

    ModelArgs model_args;
    auto* model = app.add_subcommand("model", "write the complex and harmonic basis documents of a sphere model");
    add_sphere_options(model, model_args.sphere);
    model->add_option("--complex-out", model_args.complex_out, "complex document path (default: embed in report)");
    model->add_option("--basis-out", model_args.basis_out, "basis document path (default: embed in report)");
    model->add_flag("--group-ring", model_args.group_ring, "emit the group-ring form with its representation");

    auto* selfcheck = app.add_subcommand("selfcheck", "run every property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, err, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    Context ctx{out, err};
    json report = {{"schema", io::kSchema}};
    const auto start = std::chrono::steady_clock::now();
    int exit_code = kExitOk;
    std::string command;
    try {
        json body;
        if (*sphere) {
            command = "sphere";
            body = run_sphere(sphere_args, ctx);
        } else if (*product) {
            command = "product";
            body = run_product(product_args, ctx);
        } else if (*wengyou) {
            command = "wengyou";
            body = run_wengyou(wy_args, ctx);
        } else if (*torsion_cmd) {
            command = "torsion";
            body = run_torsion(torsion_args, ctx);
        } else if (*volume) {
            command = "volume";
            body = run_volume(volume_args, ctx);
        } else if (*model) {
            command = "model";
            body = run_model(model_args, ctx);
        } else if (*selfcheck) {
            command = "selfcheck";
            json suites = json::array();
            bool all = true;
            for (const SuiteResult& r : run_selfcheck()) {
                suites.push_back({{"name", r.name}, {"passed", r.passed}, {"trials", r.trials}, {"detail", r.detail}});
                all = all && r.passed;
                ctx.err << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.trials << " checks)";
                if (!r.passed) ctx.err << ": " << r.detail;
                ctx.err << '\n';
            }
            body = {{"suites", std::move(suites)}};
            if (!all) exit_code = kExitSelfcheckFailed;
        }
        report.update(body);
        report["status"] = exit_code == kExitOk ? "ok" : "failed";
    } catch (const InconsistencyError& e) {
        exit_code = kExitInconsistency;
        report["status"] = "error";
        report["error"] = {{"kind", "internal-inconsistency"}, {"message", e.what()}};
        ctx.err << "internal inconsistency: " << e.what() << '\n';
    } catch (const std::exception& e) {
        // InputError, DomainError, OverflowError and DegenerateBasisError all trace back to the input.
        exit_code = kExitInputError;
        report["status"] = "error";
        report["error"] = {{"kind", "input"}, {"message", e.what()}};
        ctx.err << "error: " << e.what() << '\n';
    }
    report["command"] = command;
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    report["timing_ms"] = elapsed.count();
    out << report.dump(2) << '\n';
    return exit_code;
}

}  // namespace torsion
