// Command-line front end: entropy, volume, and entropy/volume ratio of
// once-punctured-torus mapping classes, batch surveys, the block-length-1
// scan, Penner-construction dilatations, and the geometric constants.

#include <cstdio>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "entvol/penner.hpp"
#include "entvol/solver.hpp"
#include "entvol/survey.hpp"

namespace {

std::string fmt(double x) { return entvol::detail::fmt15(x); }

int run(int argc, char** argv) {
    CLI::App app{"entropy and hyperbolic volume of once-punctured-torus bundles"};
    app.require_subcommand(1);

    entvol::SolverConfig config;
    app.add_option("--tol", config.grad_tol, "projected gradient tolerance");
    app.add_option("--max-iter", config.max_iter, "Newton iteration cap");
    app.add_option("--residual-tol", config.residual_tol, "gluing residual acceptance");

    std::string word_text;
    auto* cmd_entropy = app.add_subcommand("entropy", "log dilatation of an L/R word");
    cmd_entropy->add_option("word", word_text, "cyclic word over {L,R}")->required();
    auto* cmd_volume = app.add_subcommand("volume", "hyperbolic volume of the mapping torus");
    cmd_volume->add_option("word", word_text, "cyclic word over {L,R}")->required();
    auto* cmd_ratio = app.add_subcommand("ratio", "entropy / volume");
    cmd_ratio->add_option("word", word_text, "cyclic word over {L,R}")->required();

    int min_len = 2, max_len = 8, jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    std::string out_path, format = "csv", stats_path;
    auto* cmd_survey = app.add_subcommand("survey", "batch (volume, entropy) computation");
    cmd_survey->add_option("--min-len", min_len, "minimum word length")->capture_default_str();
    cmd_survey->add_option("--max-len", max_len, "maximum word length")->capture_default_str();
    cmd_survey->add_option("--out", out_path, "output path")->required();
    cmd_survey->add_option("--format", format, "csv | scatter")
        ->check(CLI::IsMember({"csv", "scatter"}))
        ->capture_default_str();
    cmd_survey->add_option("--stats-out", stats_path, "running-minima CSV path");
    cmd_survey->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    int max_mn = 31;
    auto* cmd_scan = app.add_subcommand("scan-block1", "scan L^m R^n with m*n <= M");
    cmd_scan->add_option("--max-mn", max_mn, "cap on m*n")->capture_default_str();

    std::string system_path, twist_text;
    int family_k = 0;
    auto* cmd_penner = app.add_subcommand("penner", "Penner-construction dilatation");
    cmd_penner->add_option("--system", system_path, "intersection system file")->required();
    cmd_penner->add_option("--word", twist_text, "twist word, e.g. \"A1 B1\"")->required();
    cmd_penner->add_option("--family-k", family_k, "also print A1^k-prefixed family up to k");

    auto* cmd_constants = app.add_subcommand("constants", "geometric reference constants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*cmd_constants) {
        const double v3 = entvol::ideal_tetrahedron_volume();
        const double v8 = entvol::ideal_octahedron_volume();
        std::cout << "v3 = " << fmt(v3) << "\n";
        std::cout << "v8 = " << fmt(v8) << "\n";
        std::cout << "thm52_bound = " << fmt(std::log((3.0 + std::sqrt(5.0)) / 2.0) / (2.0 * v8))
                  << "\n";
        return 0;
    }

    if (*cmd_entropy || *cmd_volume || *cmd_ratio) {
        const entvol::CyclicWord w = entvol::CyclicWord::parse(word_text);
        if (*cmd_entropy) {
            std::cout << "entropy = " << fmt(entvol::entropy(w)) << "\n";
            std::cout << "dilatation = " << fmt(entvol::dilatation(w)) << "\n";
            return 0;
        }
        if (*cmd_volume) {
            const entvol::VolumeResult res = entvol::volume(w, config);
            std::cout << "volume = " << fmt(res.volume) << "\n";
            std::cout << "residual = " << fmt(res.residual) << "\n";
            std::cout << "min_angle = " << fmt(res.min_angle) << "\n";
            std::cout << "iterations = " << res.iterations << "\n";
            return 0;
        }
        const double ent = entvol::entropy(w);
        const entvol::VolumeResult res = entvol::volume(w, config);
        std::cout << "ratio = " << fmt(ent / res.volume) << "\n";
        std::cout << "entropy = " << fmt(ent) << "\n";
        std::cout << "volume = " << fmt(res.volume) << "\n";
        return 0;
    }

    if (*cmd_survey) {
        const auto records = entvol::survey_run(min_len, max_len, config, jobs);
        if (format == "csv") entvol::emit_csv(records, out_path);
        else entvol::emit_scatter(records, out_path);
        if (!stats_path.empty()) entvol::emit_stats_csv(entvol::survey_stats(records), stats_path);
        std::size_t failed = 0;
        for (const auto& r : records)
            if (!r.error.empty()) ++failed;
        std::cout << records.size() << " classes written to " << out_path;
        if (failed > 0) std::cout << " (" << failed << " solver failures marked)";
        std::cout << "\n";
        return failed > 0 ? 3 : 0;
    }

    if (*cmd_scan) {
        const auto rows = entvol::scan_block1(max_mn, config);
        std::cout << "m n dilatation volume ratio\n";
        const entvol::Block1Row* best = nullptr;
        for (const auto& r : rows) {
            std::cout << r.m << ' ' << r.n << ' ' << fmt(r.dilatation) << ' ' << fmt(r.volume)
                      << ' ' << fmt(r.ratio) << "\n";
            if (!best || r.ratio < best->ratio) best = &r;
        }
        std::cout << "minimum ratio " << fmt(best->ratio) << " at (m,n) = (" << best->m << ","
                  << best->n << ")\n";
        return 0;
    }

    if (*cmd_penner) {
        const entvol::IntersectionSystem sys = entvol::IntersectionSystem::load(system_path);
        const entvol::TwistWord tw = entvol::parse_twist_word(twist_text, sys);
        entvol::validate_pA(tw, sys);
        const entvol::PennerMatrix m = entvol::word_product(sys, tw);
        const entvol::PerronResult pr = entvol::spectral_radius(m);
        std::cout << "dilatation = " << fmt(pr.lambda) << "\n";
        std::cout << "entropy = " << fmt(std::log(pr.lambda)) << "\n";
        if (family_k >= 1) {
            for (const auto& [k, lam] : entvol::family(sys, tw, family_k))
                std::cout << "k=" << k << " dilatation = " << fmt(lam) << "\n";
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const entvol::solver_no_convergence& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 3;
    } catch (const entvol::degenerate_geometry& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 3;
    } catch (const entvol::internal_gluing_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
