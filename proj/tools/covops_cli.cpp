// covops - build the covariant operators and run the verification suites
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "covops/bernstein.hpp"
#include "covops/classical.hpp"
#include "covops/omega.hpp"
#include "covops/serialize.hpp"
#include "covops/suites.hpp"

namespace {

long parse_long(const std::string& piece, const std::string& spec) {
    try {
        std::size_t used = 0;
        long v = std::stol(piece, &used);
        if (used != piece.size()) throw std::invalid_argument(piece);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "bad range '" + spec + "'");
    }
}

// ranges are "A..B", a comma list, or a single value
std::vector<long> parse_range(const std::string& spec) {
    std::vector<long> out;
    auto dots = spec.find("..");
    if (dots != std::string::npos) {
        long a = parse_long(spec.substr(0, dots), spec);
        long b = parse_long(spec.substr(dots + 2), spec);
        if (b < a) throw CLI::ValidationError("range", "descending range '" + spec + "'");
        for (long v = a; v <= b; ++v) out.push_back(v);
        return out;
    }
    size_t pos = 0;
    while (pos < spec.size()) {
        auto comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        out.push_back(parse_long(spec.substr(pos, comma - pos), spec));
        pos = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("range", "empty range '" + spec + "'");
    return out;
}

std::vector<int> parse_range_int(const std::string& spec) {
    std::vector<int> out;
    for (long v : parse_range(spec)) out.push_back(static_cast<int>(v));
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw CLI::ValidationError("--out", "cannot open '" + out_path + "'");
    os << text;
    if (!text.empty() && text.back() != '\n') os << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct and verify covariant differential operators on matrix space"};
    app.require_subcommand(1);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
    std::string suite = "all", m_spec = "1..2", k_spec = "1..2", out_path;
    std::string lam_spec = "-2..3", mu_spec = "-2..3";
    std::uint64_t seed = 20260815;
    int samples = 20;
    bool inject = false, timing = false;
    std::string names;
    for (const auto& n : covops::suite_names()) names += (names.empty() ? "" : ", ") + n;
    verify->add_option("--suite", suite, "suite name (" + names + ", all)")->capture_default_str();
    verify->add_option("--m", m_spec, "matrix sizes, e.g. 1..3 or 1,2")->capture_default_str();
    verify->add_option("--k", k_spec, "bracket depths")->capture_default_str();
    verify->add_option("--lambda", lam_spec, "integer lambda grid")->capture_default_str();
    verify->add_option("--mu", mu_spec, "integer mu grid")->capture_default_str();
    verify->add_option("--samples", samples, "sample count per check family")->capture_default_str();
    verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
    verify->add_option("--out", out_path, "report path (default stdout)");
    verify->add_flag("--inject-fault", inject, "append a deliberately broken identity (self-test)");
    verify->add_flag("--timing", timing, "include elapsed time in the report");

    // ---- build ----
    auto* build = app.add_subcommand("build", "construct an operator and write its text form");
    std::string kind;
    int bm = 1, bk = 1;
    bool has_k = false, has_lam = false, has_mu = false;
    long blam = 0, bmu = 0;
    std::string bout;
    build->add_option("--kind", kind, "one of H, D, B, omega")->required();
    build->add_option("--m", bm, "matrix size")->capture_default_str();
    auto* kopt = build->add_option("--k", bk, "bracket depth (kind B)");
    auto* lopt = build->add_option("--lambda", blam, "specialize lambda");
    auto* mopt = build->add_option("--mu", bmu, "specialize mu");
    build->add_option("--out", bout, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            covops::SuiteConfig cfg;
            cfg.ms = parse_range_int(m_spec);
            cfg.ks = parse_range_int(k_spec);
            cfg.lambdas = parse_range(lam_spec);
            cfg.mus = parse_range(mu_spec);
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.inject_fault = inject;
            cfg.timing = timing;
            covops::Report r = covops::run_suite(suite, cfg);
            emit(r.dump(2), out_path);
            bool failed = covops::report_has_failure(r);
            std::cerr << "suite " << suite << ": " << (failed ? "FAIL" : "ok") << '\n';
            return failed ? 1 : 0;
        }

        has_k = kopt->count() > 0;
        has_lam = lopt->count() > 0;
        has_mu = mopt->count() > 0;
        if (has_lam != has_mu) throw CLI::ValidationError("--lambda/--mu", "specialize both or neither");

        covops::OperatorMeta meta;
        meta.kind = kind;
        meta.symbolic = !has_lam;
        if (has_lam) {
            meta.lambda_mu = true;
            meta.s_val = covops::Rational(blam);
            meta.t_val = covops::Rational(bmu);
        }
        std::string text;
        if (kind == "H") {
            covops::DiffOperator H = covops::build_H(bm);
            if (has_lam)
                H = covops::specialize_params(H, covops::Rational(bm - blam), covops::Rational(bm - bmu));
            text = covops::operator_to_string(H, meta);
        } else if (kind == "D") {
            text = has_lam ? covops::operator_to_string(
                                 covops::build_D_at(bm, covops::Rational(blam), covops::Rational(bmu)), meta)
                           : covops::operator_to_string(covops::build_D(bm), meta);
        } else if (kind == "B") {
            if (!has_k) throw CLI::ValidationError("--k", "kind B needs --k");
            meta.k = bk;
            meta.scalar_dropped = "(i/(2*pi))^" + std::to_string(bm);
            text = has_lam
                       ? covops::operator_to_string(
                             covops::build_B_at(bm, bk, covops::Rational(blam), covops::Rational(bmu)), meta)
                       : covops::operator_to_string(covops::build_B(bm, bk), meta);
        } else if (kind == "omega") {
            covops::DiffOperator W = covops::omega::cayley_omega(bm);
            meta.symbolic = false;
            text = covops::operator_to_string(W, meta);
        } else {
            throw CLI::ValidationError("--kind", "unknown kind '" + kind + "'");
        }
        emit(text, bout);
        return 0;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
