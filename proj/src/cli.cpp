#include "mme/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mme/approx_mme.hpp"
#include "mme/errors.hpp"
#include "mme/gaussian_mme.hpp"
#include "mme/instance_io.hpp"
#include "mme/int_mme.hpp"
#include "mme/rat_mme.hpp"

namespace mme::cli {

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string backend = "horner";
    std::optional<unsigned long> s_override;
    std::optional<unsigned long> t_override;
};

InstanceMode mode_of_subcommand(const std::string& name) {
    if (name == "eval-int") return InstanceMode::Int;
    if (name == "eval-approx") return InstanceMode::Approx;
    if (name == "eval-approx-complex") return InstanceMode::ApproxComplex;
    return InstanceMode::Rat;
}

int fail_input(const std::string& message) {
    std::cerr << "mme: " << message << "\n";
    return 1;
}

std::vector<std::string> evaluate(const InstanceFile& inst,
                                  const MmeBackend& backend) {
    std::vector<std::string> lines;
    switch (inst.mode) {
        case InstanceMode::Int: {
            IntMmeInstance typed(
                DensePolynomial<BigInt>(inst.m, inst.d, inst.int_coeffs),
                inst.int_points, *inst.s);
            for (const auto& b : mme_integers(typed, backend))
                lines.push_back(b.to_string());
            break;
        }
        case InstanceMode::Rat: {
            RatMmeInstance typed(
                DensePolynomial<Rational>(inst.m, inst.d, inst.rat_coeffs),
                inst.rat_points, *inst.s);
            for (const auto& value : mme_rationals(typed, backend))
                lines.push_back(value.to_string());
            break;
        }
        case InstanceMode::Approx: {
            DensePolynomial<OraclePtr> f(inst.m, inst.d);
            for (std::size_t i = 0; i < inst.rat_coeffs.size(); ++i)
                f[i] = make_rational_oracle(inst.rat_coeffs[i]);
            std::vector<std::vector<OraclePtr>> points(
                inst.rat_points.size());
            for (std::size_t i = 0; i < inst.rat_points.size(); ++i)
                for (const auto& x : inst.rat_points[i])
                    points[i].push_back(make_rational_oracle(x));
            const unsigned long t = *inst.t;
            ApproxInstance typed(std::move(f), std::move(points), t);
            for (const auto& b : approx_mme_real(typed, backend))
                lines.push_back(Dyadic(b, t).to_string());
            break;
        }
        case InstanceMode::ApproxComplex: {
            DensePolynomial<GaussianOracle> f(inst.m, inst.d);
            for (std::size_t i = 0; i < inst.complex_coeffs.size(); ++i)
                f[i] = {make_rational_oracle(inst.complex_coeffs[i].re),
                        make_rational_oracle(inst.complex_coeffs[i].im)};
            std::vector<std::vector<GaussianOracle>> points(
                inst.complex_points.size());
            for (std::size_t i = 0; i < inst.complex_points.size(); ++i)
                for (const auto& x : inst.complex_points[i])
                    points[i].push_back({make_rational_oracle(x.re),
                                         make_rational_oracle(x.im)});
            GaussianApproxInstance typed(std::move(f), std::move(points),
                                         *inst.t);
            for (const auto& value : approx_mme_complex(typed))
                lines.push_back(value.re.to_string() + "," +
                                value.im.to_string());
            break;
        }
    }
    return lines;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"multivariate multipoint polynomial evaluation"};
    app.require_subcommand(1);

    Options opts;
    for (const char* name :
         {"eval-int", "eval-approx", "eval-approx-complex", "eval-rat"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--input", opts.input, "instance file")->required();
        sub->add_option("--output", opts.output,
                        "result file (default: stdout)");
        sub->add_option("--backend", opts.backend,
                        "prime-field backend: horner or monomial");
        sub->add_option("--s", opts.s_override, "override the s header");
        sub->add_option("--t", opts.t_override, "override the t header");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const std::string sub_name = app.get_subcommands().front()->get_name();

    std::ifstream in(opts.input);
    if (!in) return fail_input("cannot open input file: " + opts.input);
    std::ostringstream buffer;
    buffer << in.rdbuf();

    std::vector<std::string> lines;
    try {
        InstanceFile inst = parse_instance(buffer.str());
        if (inst.mode != mode_of_subcommand(sub_name))
            return fail_input("instance mode '" +
                              std::string(to_string(inst.mode)) +
                              "' does not match subcommand " + sub_name);
        if (opts.s_override) inst.s = opts.s_override;
        if (opts.t_override) inst.t = opts.t_override;
        auto backend = make_backend(opts.backend);
        lines = evaluate(inst, *backend);
    } catch (const ParseError& e) {
        return fail_input(std::string("parse error: ") + e.what());
    } catch (const BoundViolationError& e) {
        std::cerr << "mme: " << e.what() << "\n";
        return 2;
    } catch (const ReconstructionFailedError& e) {
        std::cerr << "mme: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        return fail_input(e.what());
    }

    if (opts.output.empty()) {
        for (const auto& line : lines) std::cout << line << "\n";
    } else {
        std::ofstream out(opts.output);
        if (!out)
            return fail_input("cannot open output file: " + opts.output);
        for (const auto& line : lines) out << line << "\n";
    }
    return 0;
}

}  // namespace mme::cli
