#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tgcert/tgcert.hpp"

namespace {

using tgcert::AnalysisConfig;
using tgcert::CertKind;
using tgcert::Matrix;
using tgcert::MatrixDocument;
using tgcert::MatrixReport;
using tgcert::SubspaceCertificate;
using tgcert::SweepCurve;

bool is_exp_kind(CertKind k) {
    return k == CertKind::PairAngleExp || k == CertKind::JordanExp ||
           k == CertKind::OffDiagonalExp;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) std::cout << content;
    else tgcert::write_text_file(out_path, content);
}

double exp_horizon(const Matrix& m, const AnalysisConfig& cfg) {
    return cfg.t_max > 0.0 ? cfg.t_max : tgcert::default_t_max(m, cfg.tol);
}

// Oracle confirmation status strings, one per certificate.
std::vector<std::string> oracle_statuses(const Matrix& m, const MatrixReport& r,
                                         const AnalysisConfig& cfg) {
    bool need_exp = false, need_pow = false;
    for (const SubspaceCertificate& c : r.certificates) {
        if (!c.verdict) continue;
        (is_exp_kind(c.kind) ? need_exp : need_pow) = true;
    }
    const double lift = 1.0 + cfg.oracle_margin;
    bool exp_exceeded = false, int_exceeded = false, cont_exceeded = false;
    bool cont_supported = true;
    if (need_exp)
        exp_exceeded = tgcert::sweep_exp(m, exp_horizon(m, cfg), cfg.steps, cfg.tol).peak.norm > lift;
    if (need_pow) {
        int_exceeded = tgcert::sweep_pow(m, cfg.n_max).peak.norm > lift;
        try {
            const double s_max = cfg.t_max > 0.0 ? cfg.t_max : tgcert::default_s_max(m, cfg.tol);
            cont_exceeded =
                tgcert::sweep_pow_continuous(m, s_max, cfg.steps, cfg.tol).peak.norm > lift;
        } catch (const std::exception&) {
            cont_supported = false;
        }
    }
    std::vector<std::string> out;
    out.reserve(r.certificates.size());
    for (const SubspaceCertificate& c : r.certificates) {
        if (!c.verdict) {
            out.emplace_back("n/a");
        } else if (is_exp_kind(c.kind)) {
            out.emplace_back(exp_exceeded ? "confirmed" : "not-observed");
        } else if (!cont_supported) {
            out.emplace_back(int_exceeded ? "confirmed-integer" : "unsupported");
        } else if (cont_exceeded) {
            out.emplace_back(int_exceeded ? "confirmed" : "continuous-only");
        } else {
            out.emplace_back("not-observed");
        }
    }
    return out;
}

int run_analyze(const std::string& path, const AnalysisConfig& cfg, double cluster_tol,
                const std::string& mode, const std::string& out_path) {
    const MatrixDocument doc = tgcert::read_matrix_document(path);
    MatrixReport r = tgcert::scan(doc.matrix, cluster_tol, cfg.tol);
    if (mode == "pow") {
        const double fro = tgcert::frobenius_norm(doc.matrix);
        for (const tgcert::EigenPair& p : r.eigenpairs)
            if (std::abs(p.value) <= 1e-14 * fro)
                throw std::domain_error("analyze --mode pow: matrix is numerically singular");
    }
    if (mode != "both") {
        std::vector<SubspaceCertificate> kept;
        for (SubspaceCertificate& c : r.certificates)
            if ((mode == "exp") == is_exp_kind(c.kind)) kept.push_back(std::move(c));
        r.certificates = std::move(kept);
    }
    const std::vector<std::string> status = oracle_statuses(doc.matrix, r, cfg);
    emit(tgcert::report_to_json(doc.name, r, status).dump(2) + "\n", out_path);
    return 0;
}

int run_numrange(const std::string& path, const AnalysisConfig& cfg, const std::string& out_path) {
    const MatrixDocument doc = tgcert::read_matrix_document(path);
    const std::vector<tgcert::cplx> pts =
        tgcert::nr_boundary_sample(doc.matrix, static_cast<std::size_t>(cfg.boundary_points));
    const double omega = tgcert::numerical_abscissa(doc.matrix);
    if (doc.matrix.rows() == 2) {
        const tgcert::EllipseNR e = tgcert::ellipse_2x2(doc.matrix);
        emit(tgcert::boundary_csv(pts, omega, &e), out_path);
    } else {
        emit(tgcert::boundary_csv(pts, omega), out_path);
    }
    return 0;
}

int run_sweep(const std::string& path, const AnalysisConfig& cfg, const std::string& mode,
              const std::string& out_path) {
    const MatrixDocument doc = tgcert::read_matrix_document(path);
    SweepCurve curve;
    if (mode == "exp") {
        curve = tgcert::sweep_exp(doc.matrix, exp_horizon(doc.matrix, cfg), cfg.steps, cfg.tol);
    } else if (mode == "pow") {
        curve = tgcert::sweep_pow(doc.matrix, cfg.n_max);
    } else if (mode == "pow-continuous") {
        const double s_max =
            cfg.t_max > 0.0 ? cfg.t_max : tgcert::default_s_max(doc.matrix, cfg.tol);
        curve = tgcert::sweep_pow_continuous(doc.matrix, s_max, cfg.steps, cfg.tol);
    } else {
        throw std::invalid_argument("sweep: mode must be exp, pow, or pow-continuous");
    }
    emit(tgcert::curve_csv(curve, mode), out_path);
    return 0;
}

int run_demo(double theta, const AnalysisConfig& cfg) {
    namespace fs = std::filesystem;
    std::string dir = cfg.output_dir;
    if (dir.empty()) {
        const char* env = std::getenv("TGCERT_OUTPUT_DIR");
        dir = (env != nullptr && *env != '\0') ? env : ".";
    }
    fs::create_directories(dir);
    const tgcert::cplx l1{-0.1, 0.9}, l2{-0.4, -0.5};
    MatrixDocument doc;
    doc.name = "demo-pair";
    doc.matrix = tgcert::upper_pair_matrix(l1, l2, theta, 0.0);

    const std::string matrix_path = (fs::path(dir) / "matrix.json").string();
    tgcert::write_matrix_document(doc, matrix_path);

    const std::vector<tgcert::cplx> pts =
        tgcert::nr_boundary_sample(doc.matrix, static_cast<std::size_t>(cfg.boundary_points));
    const tgcert::EllipseNR e = tgcert::ellipse_2x2(doc.matrix);
    const std::string numrange_path = (fs::path(dir) / "numrange.csv").string();
    tgcert::write_text_file(numrange_path,
                            tgcert::boundary_csv(pts, tgcert::numerical_abscissa(doc.matrix), &e));

    const SweepCurve curve =
        tgcert::sweep_exp(doc.matrix, exp_horizon(doc.matrix, cfg), cfg.steps, cfg.tol);
    const std::string sweep_path = (fs::path(dir) / "sweep_exp.csv").string();
    tgcert::write_text_file(sweep_path, tgcert::curve_csv(curve, "exp"));

    const MatrixReport r = tgcert::scan(doc.matrix, -1.0, cfg.tol);
    const std::vector<std::string> status = oracle_statuses(doc.matrix, r, cfg);
    const std::string report_path = (fs::path(dir) / "report.json").string();
    tgcert::write_text_file(report_path, tgcert::report_to_json(doc.name, r, status).dump(2) + "\n");

    bool certified = false;
    for (const SubspaceCertificate& c : r.certificates) certified = certified || c.verdict;
    std::cout << "wrote " << matrix_path << "\n"
              << "wrote " << numrange_path << "\n"
              << "wrote " << sweep_path << "\n"
              << "wrote " << report_path << "\n"
              << "transient certified: " << (certified ? "yes" : "no") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transient-growth certification for matrix exponentials and powers"};
    app.require_subcommand(1);

    AnalysisConfig cfg;
    double cluster_tol = -1.0;
    std::string mode = "both";
    std::string sweep_mode = "exp";
    std::string out_path;
    double theta = 2.0 * tgcert::pi_const() / 7.0;
    std::string input;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cluster-tol", cluster_tol, "eigenvalue clustering tolerance");
        sub->add_option("--t-max", cfg.t_max, "sweep horizon (0 = auto)");
        sub->add_option("--n-max", cfg.n_max, "integer power sweep horizon");
        sub->add_option("--steps", cfg.steps, "sweep grid steps");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--boundary-points", cfg.boundary_points, "boundary sample count");
        sub->add_option("--invariance-tol", cfg.tol.invariance, "subspace invariance tolerance");
        sub->add_option("--oracle-threshold", cfg.oracle_margin, "oracle exceedance margin");
        sub->add_option("--output-dir", cfg.output_dir, "output directory");
        sub->add_option("-o,--output", out_path, "output file (default: stdout)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "certificate scan with oracle confirmation");
    analyze->add_option("file", input, "matrix document")->required();
    analyze->add_option("--mode", mode, "exp, pow, or both")
        ->check(CLI::IsMember({"exp", "pow", "both"}));
    add_common(analyze);

    CLI::App* numrange = app.add_subcommand("numrange", "numerical-range boundary points");
    numrange->add_option("file", input, "matrix document")->required();
    add_common(numrange);

    CLI::App* sweep = app.add_subcommand("sweep", "direct norm sweep");
    sweep->add_option("file", input, "matrix document")->required();
    sweep->add_option("--mode", sweep_mode, "exp, pow, or pow-continuous")
        ->check(CLI::IsMember({"exp", "pow", "pow-continuous"}));
    add_common(sweep);

    CLI::App* demo = app.add_subcommand("demo", "end-to-end example scenario");
    demo->add_option("--theta", theta, "eigenvector angle in radians");
    add_common(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);  // prints usage/help text
        return rc == 0 ? 0 : 2;     // exit-code contract: input errors are 2
    }

    try {
        if (analyze->parsed()) return run_analyze(input, cfg, cluster_tol, mode, out_path);
        if (numrange->parsed()) return run_numrange(input, cfg, out_path);
        if (sweep->parsed()) return run_sweep(input, cfg, sweep_mode, out_path);
        if (demo->parsed()) return run_demo(theta, cfg);
    } catch (const tgcert::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
