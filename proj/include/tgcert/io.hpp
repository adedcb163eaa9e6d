#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "tgcert/certify.hpp"
#include "tgcert/complex_matrix.hpp"
#include "tgcert/numrange.hpp"
#include "tgcert/sweep.hpp"

namespace tgcert {

// A named matrix loaded from (or destined for) a structured document.
struct MatrixDocument {
    std::string name;
    Matrix matrix;
    std::string source_path;
};

inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline nlohmann::json complex_to_json(cplx z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

inline cplx complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return cplx{j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("matrix entry must be a [re, im] pair");
    return cplx{j[0].get<double>(), j[1].get<double>()};
}

inline nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
    const std::size_t nrows = j.size();
    const std::size_t ncols = j[0].is_array() ? j[0].size() : 0;
    if (ncols == 0) throw std::invalid_argument("matrix rows must be nonempty arrays");
    Matrix m(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
        if (!j[i].is_array() || j[i].size() != ncols)
            throw std::invalid_argument("matrix rows must have equal length");
        for (std::size_t c = 0; c < ncols; ++c) m(i, c) = complex_from_json(j[i][c]);
    }
    if (!m.square()) throw std::invalid_argument("matrix must be square");
    if (!m.finite()) throw std::invalid_argument("matrix entries must be finite");
    return m;
}

inline MatrixDocument read_matrix_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed document " + path + ": " + e.what());
    }
    MatrixDocument doc;
    doc.source_path = path;
    if (j.is_object()) {
        doc.name = j.value("name", std::string{});
        if (!j.contains("matrix")) throw std::invalid_argument("document missing \"matrix\" field");
        doc.matrix = matrix_from_json(j.at("matrix"));
    } else {
        doc.matrix = matrix_from_json(j);  // bare array form
    }
    if (doc.name.empty()) doc.name = "matrix";
    return doc;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline void write_matrix_document(const MatrixDocument& doc, const std::string& path) {
    nlohmann::ordered_json j;
    j["name"] = doc.name;
    j["matrix"] = matrix_to_json(doc.matrix);
    write_text_file(path, j.dump(2) + "\n");
}

// CSV with `# key: value` metadata lines, full round-trip precision.
inline std::string curve_csv(const SweepCurve& curve, const std::string& mode) {
    std::ostringstream os;
    os << "# mode: " << mode << "\n";
    os << "# peak_parameter: " << format_g17(curve.peak.parameter) << "\n";
    os << "# peak_norm: " << format_g17(curve.peak.norm) << "\n";
    os << curve.parameter_name << ",norm\n";
    for (const SweepCurve::Sample& s : curve.samples)
        os << format_g17(s.parameter) << "," << format_g17(s.norm) << "\n";
    return os.str();
}

inline std::string boundary_csv(const std::vector<cplx>& points, double omega,
                                const EllipseNR* ellipse = nullptr) {
    std::ostringstream os;
    os << "# omega: " << format_g17(omega) << "\n";
    if (ellipse != nullptr) {
        os << "# center: " << format_g17(ellipse->center.real()) << " "
           << format_g17(ellipse->center.imag()) << "\n";
        os << "# major_axis: " << format_g17(ellipse->major_axis) << "\n";
        os << "# minor_axis: " << format_g17(ellipse->minor_axis) << "\n";
    }
    os << "re,im\n";
    for (cplx p : points)
        os << format_g17(p.real()) << "," << format_g17(p.imag()) << "\n";
    return os.str();
}

// Machine-readable analysis report. oracle_status must be empty or have one
// entry per certificate.
inline nlohmann::ordered_json report_to_json(const std::string& name, const MatrixReport& r,
                                             const std::vector<std::string>& oracle_status = {}) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["dimension"] = r.eigenpairs.empty() ? 0 : r.eigenpairs.front().vector.size();
    j["stable_exp"] = r.stable_exp;
    j["stable_pow"] = r.stable_pow;
    j["omega"] = r.omega_full;
    nlohmann::ordered_json eps = nlohmann::ordered_json::array();
    for (const EigenPair& p : r.eigenpairs) {
        nlohmann::ordered_json e;
        e["value"] = complex_to_json(p.value);
        e["chain_length"] = p.chain_length;
        nlohmann::ordered_json vec = nlohmann::ordered_json::array();
        for (cplx z : p.vector) vec.push_back(nlohmann::ordered_json::array({z.real(), z.imag()}));
        e["vector"] = std::move(vec);
        eps.push_back(std::move(e));
    }
    j["eigenpairs"] = std::move(eps);
    nlohmann::ordered_json certs = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.certificates.size(); ++i) {
        const SubspaceCertificate& c = r.certificates[i];
        nlohmann::ordered_json cj;
        cj["kind"] = cert_kind_name(c.kind);
        cj["eig_indices"] = c.eig_indices;
        if (c.theta) cj["theta"] = *c.theta;
        if (c.threshold) cj["threshold"] = *c.threshold;
        cj["omega_restricted"] = c.omega_restricted;
        cj["verdict"] = c.verdict;
        if (i < oracle_status.size()) cj["oracle"] = oracle_status[i];
        certs.push_back(std::move(cj));
    }
    j["certificates"] = std::move(certs);
    bool any = false;
    for (const SubspaceCertificate& c : r.certificates) any = any || c.verdict;
    j["transient_certified"] = any;
    if (!any) j["note"] = "no certificate found (conditions are sufficient, not necessary)";
    return j;
}

}  // namespace tgcert
