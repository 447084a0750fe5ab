#include "jradii/certificate.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace jradii {

using nlohmann::json;

Certificate make_certificate(const SubsetBasis& basis, const Recipe& recipe) {
    Certificate cert;
    cert.j = basis.j();
    cert.d = basis.d();
    cert.basis = basis.rows();
    cert.recipe = recipe;
    cert.residuals = check_gsb(basis.rows());
    return cert;
}

std::string certificate_to_json(const Certificate& cert) {
    json doc;
    doc["schema_version"] = cert.schema_version;
    doc["j"] = cert.j;
    doc["d"] = cert.d;
    json basis = json::array();
    for (Eigen::Index l = 0; l < cert.basis.rows(); ++l) {
        json row = json::array();
        for (Eigen::Index k = 0; k < cert.basis.cols(); ++k) row.push_back(cert.basis(l, k));
        basis.push_back(std::move(row));
    }
    doc["basis"] = std::move(basis);
    json recipe = json::array();
    for (const RecipeStep& step : cert.recipe)
        recipe.push_back(json{{"rule", step.rule}, {"args", step.args}});
    doc["recipe"] = std::move(recipe);
    doc["residuals"] = {
        {"orthonormality", cert.residuals.orthonormality_defect},
        {"row_sum", cert.residuals.max_row_sum},
        {"column_square_sum", cert.residuals.max_column_square_deviation},
    };
    return doc.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw CertificateFormatError(std::string("certificate: invalid JSON: ") + e.what());
    }
    try {
        Certificate cert;
        cert.schema_version = doc.at("schema_version").get<int>();
        if (cert.schema_version != 1)
            throw CertificateFormatError("certificate: unsupported schema_version");
        cert.j = doc.at("j").get<int>();
        cert.d = doc.at("d").get<int>();
        if (cert.j < 1 || cert.d < cert.j)
            throw CertificateFormatError("certificate: need 1 <= j <= d");
        const json& basis = doc.at("basis");
        if (!basis.is_array() || static_cast<int>(basis.size()) != cert.j)
            throw CertificateFormatError("certificate: basis must have j rows");
        cert.basis.resize(cert.j, cert.d + 1);
        for (int l = 0; l < cert.j; ++l) {
            const json& row = basis.at(l);
            if (!row.is_array() || static_cast<int>(row.size()) != cert.d + 1)
                throw CertificateFormatError("certificate: basis rows must have d+1 entries");
            for (int k = 0; k <= cert.d; ++k) cert.basis(l, k) = row.at(k).get<double>();
        }
        for (const json& step : doc.at("recipe")) {
            RecipeStep rs;
            rs.rule = step.at("rule").get<std::string>();
            rs.args = step.at("args").get<std::vector<long long>>();
            cert.recipe.push_back(std::move(rs));
        }
        const json& res = doc.at("residuals");
        cert.residuals.orthonormality_defect = res.at("orthonormality").get<double>();
        cert.residuals.max_row_sum = res.at("row_sum").get<double>();
        cert.residuals.max_column_square_deviation = res.at("column_square_sum").get<double>();
        return cert;
    } catch (const json::exception& e) {
        throw CertificateFormatError(std::string("certificate: schema violation: ") + e.what());
    }
}

void save_certificate(const Certificate& cert, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << certificate_to_json(cert);
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

Certificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return certificate_from_json(buf.str());
}

}  // namespace jradii
