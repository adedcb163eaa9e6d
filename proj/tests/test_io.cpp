#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "testutil.hpp"
#include "tgcert/tgcert.hpp"

using namespace tgcert;

namespace {

std::filesystem::path work_dir() {
#ifdef TGCERT_WORK_DIR
    std::filesystem::path p = std::filesystem::path(TGCERT_WORK_DIR) / "io";
#else
    const char* env = std::getenv("TGCERT_WORK_DIR");
    std::filesystem::path p = env ? std::filesystem::path(env) / "io"
                                  : std::filesystem::temp_directory_path() / "tgcert_io";
#endif
    std::filesystem::create_directories(p);
    return p;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("matrix documents round-trip bitwise") {
    std::mt19937_64 rng(31);
    MatrixDocument out;
    out.name = "sample";
    out.matrix = testutil::random_matrix(rng, 4);
    const Matrix& m = out.matrix;
    const std::filesystem::path path = work_dir() / "roundtrip.json";
    write_matrix_document(out, path.string());
    const MatrixDocument doc = read_matrix_document(path.string());
    CHECK(doc.name == "sample");
    REQUIRE(doc.matrix.rows() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(doc.matrix(i, j).real() == m(i, j).real());
            CHECK(doc.matrix(i, j).imag() == m(i, j).imag());
        }
    const std::filesystem::path path2 = work_dir() / "roundtrip2.json";
    write_matrix_document(doc, path2.string());
    CHECK(slurp(path) == slurp(path2));
}

TEST_CASE("matrix documents accept bare arrays and real scalars") {
    const std::filesystem::path path = work_dir() / "bare.json";
    write_text_file(path.string(), "[[1, [0,2]],[0, -3.5]]\n");
    const MatrixDocument doc = read_matrix_document(path.string());
    REQUIRE(doc.matrix.rows() == 2);
    CHECK(doc.matrix(0, 0) == cplx{1, 0});
    CHECK(doc.matrix(0, 1) == cplx{0, 2});
    CHECK(doc.matrix(1, 1) == cplx{-3.5, 0});
    CHECK_FALSE(doc.name.empty());
}

TEST_CASE("matrix document validation failures") {
    const std::filesystem::path dir = work_dir();
    const auto expect_throw = [&](const char* fname, const char* text) {
        const std::filesystem::path p = dir / fname;
        write_text_file(p.string(), text);
        CHECK_THROWS_AS(read_matrix_document(p.string()), std::invalid_argument);
    };
    expect_throw("ragged.json", "[[1,2],[3]]");
    expect_throw("nonsquare.json", "[[1,2,3],[4,5,6]]");
    expect_throw("empty.json", "[]");
    expect_throw("notjson.json", "{\"name\": ");
    expect_throw("badcell.json", "[[\"x\"]]");
    expect_throw("nanvalue.json", "{\"name\":\"n\",\"matrix\":[[1e999]]}");
    CHECK_THROWS_AS(read_matrix_document((dir / "missing_file.json").string()),
                    std::invalid_argument);
}

TEST_CASE("report serialization carries verdicts and eigenstructure") {
    const Matrix a = testutil::showcase_matrix();
    const MatrixReport rep = scan(a);
    const nlohmann::ordered_json doc = report_to_json("fig", rep, {});
    CHECK(doc.at("name") == "fig");
    CHECK(doc.at("dimension") == 2);
    CHECK(doc.at("stable_exp").get<bool>());
    CHECK(doc.at("omega").get<double>() > 0.0);
    CHECK(doc.at("transient_certified").get<bool>());
    REQUIRE(doc.at("eigenpairs").size() == 2);
    for (const auto& ep : doc.at("eigenpairs")) {
        CHECK(ep.contains("value"));
        CHECK(ep.at("chain_length") == 1);
        CHECK(ep.at("vector").size() == 2);
    }
    bool saw_true = false;
    for (const auto& c : doc.at("certificates"))
        if (c.at("kind") == "pair-angle-exp" && c.at("verdict").get<bool>()) saw_true = true;
    CHECK(saw_true);

    // identical input → identical serialization
    CHECK(doc.dump(2) == report_to_json("fig", scan(a), {}).dump(2));
}

TEST_CASE("report serialization and oracle annotations") {
    const Matrix a = testutil::showcase_matrix();
    const MatrixReport rep = scan(a);
    std::vector<std::string> statuses(rep.certificates.size(), "n/a");
    for (std::size_t i = 0; i < rep.certificates.size(); ++i)
        if (rep.certificates[i].verdict) statuses[i] = "confirmed";
    const nlohmann::ordered_json doc = report_to_json("fig", rep, statuses);
    for (const auto& c : doc.at("certificates")) {
        REQUIRE(c.contains("oracle"));
        if (c.at("verdict").get<bool>()) CHECK(c.at("oracle") == "confirmed");
        else CHECK(c.at("oracle") == "n/a");
    }
}

TEST_CASE("curve csv preserves doubles to full precision") {
    const Matrix a = testutil::showcase_matrix();
    const SweepCurve c = sweep_exp(a, 5.0, 64);
    const std::string csv = curve_csv(c, "exp");
    CHECK(csv.find("# mode: exp") != std::string::npos);
    CHECK(csv.find("peak_norm") != std::string::npos);

    std::istringstream lines(csv);
    std::string line;
    std::size_t row = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line == "t,norm") continue;  // header row
        const std::size_t comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        const double p = std::strtod(line.substr(0, comma).c_str(), nullptr);
        const double n = std::strtod(line.substr(comma + 1).c_str(), nullptr);
        REQUIRE(row < c.samples.size());
        CHECK(p == c.samples[row].parameter);
        CHECK(n == c.samples[row].norm);
        ++row;
    }
    CHECK(row == c.samples.size());
}

TEST_CASE("boundary csv carries metadata") {
    const Matrix a = testutil::showcase_matrix();
    const std::vector<cplx> pts = nr_boundary_sample(a, 90);
    const EllipseNR e = ellipse_2x2(a);
    const std::string csv = boundary_csv(pts, numerical_abscissa(a), &e);
    CHECK(csv.find("# omega:") != std::string::npos);
    CHECK(csv.find("# center:") != std::string::npos);
    CHECK(csv.find("# major_axis:") != std::string::npos);
    std::istringstream lines(csv);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line == "re,im") continue;
        ++rows;
    }
    CHECK(rows == 90);
}

TEST_CASE("format_g17 round-trips doubles through text") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const double x = std::ldexp(u(rng), k % 40 - 20);
        const std::string s = format_g17(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}
