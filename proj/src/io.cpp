// SPDX-License-Identifier: Apache-2.0
#include "framealias/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace framealias {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string filterbank_to_json(const Filterbank& fb) {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["stride"] = fb.stride;
    doc["signal_length"] = fb.signal_length;
    auto kernels = nlohmann::json::array();
    for (const auto& kernel : fb.kernels) {
        auto row = nlohmann::json::array();
        for (const auto& v : kernel) row.push_back({v.real(), v.imag()});
        kernels.push_back(std::move(row));
    }
    doc["kernels"] = std::move(kernels);
    return doc.dump(2) + "\n";
}

Filterbank filterbank_from_json(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.contains("stride") || !doc.contains("signal_length") || !doc.contains("kernels"))
        throw std::invalid_argument("filterbank json: missing required field");
    const int stride = doc.at("stride").get<int>();
    const int signal_length = doc.at("signal_length").get<int>();
    std::vector<ComplexVector> kernels;
    for (const auto& row : doc.at("kernels")) {
        ComplexVector kernel;
        kernel.reserve(row.size());
        for (const auto& pair : row) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("filterbank json: kernel entries must be [re, im]");
            kernel.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
        kernels.push_back(std::move(kernel));
    }
    return make_filterbank(std::move(kernels), stride, signal_length);
}

Filterbank read_filterbank_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open filterbank file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return filterbank_from_json(buffer.str());
}

void write_filterbank_json(const std::string& path, const Filterbank& fb) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write filterbank file: " + path);
    out << filterbank_to_json(fb);
}

namespace {

std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << "# schema_version " << kSchemaVersion << "\n";
    return out;
}

}  // namespace

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
    std::ofstream out = open_csv(path);
    out << "iter,condition,recon_error,objective\n";
    for (const auto& p : traj.points)
        out << p.iteration << ',' << format_double(p.condition_number) << ','
            << format_double(p.reconstruction_error) << ',' << format_double(p.objective_value)
            << '\n';
}

void write_moments_csv(const std::string& path, const MomentTable& closed,
                       const MomentTable& empirical) {
    if (closed.expected.rows() != empirical.expected.rows() ||
        closed.expected.cols() != empirical.expected.cols())
        throw std::invalid_argument("write_moments_csv: table shapes disagree");
    std::ofstream out = open_csv(path);
    out << "n,k,E_closed_re,E_closed_im,V_closed,E_emp_re,E_emp_im,V_emp,SE\n";
    for (Eigen::Index n = 0; n < closed.expected.rows(); ++n)
        for (Eigen::Index k = 0; k < closed.expected.cols(); ++k)
            out << n << ',' << k << ',' << format_double(closed.expected(n, k).real()) << ','
                << format_double(closed.expected(n, k).imag()) << ','
                << format_double(closed.variance(n, k)) << ','
                << format_double(empirical.expected(n, k).real()) << ','
                << format_double(empirical.expected(n, k).imag()) << ','
                << format_double(empirical.variance(n, k)) << ','
                << format_double(empirical.se_mean(n, k)) << '\n';
}

void write_alias_csv(const std::string& path, const AliasingSpectrum& alias) {
    std::ofstream out = open_csv(path);
    out << "n,k,re,im\n";
    for (int n = 0; n < alias.stride; ++n)
        for (int k = 0; k < alias.length; ++k)
            out << n << ',' << k << ',' << format_double(alias.terms[n][k].real()) << ','
                << format_double(alias.terms[n][k].imag()) << '\n';
}

}  // namespace framealias
