#include "symmsum/matrix_io.hpp"

#include "symmsum/errors.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <system_error>

namespace symmsum {

using nlohmann::json;

namespace {

std::size_t read_count(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0) {
        throw input_error(std::string("matrix JSON: '") + key + "' must be a non-negative integer");
    }
    return j.at(key).get<std::size_t>();
}

} // namespace

AnyMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw input_error("matrix JSON: expected an object");
    const std::size_t rows = read_count(j, "rows");
    const std::size_t cols = read_count(j, "cols");
    if (!j.contains("entries") || !j.at("entries").is_array()) {
        throw input_error("matrix JSON: 'entries' must be an array of rows");
    }
    const json& entries = j.at("entries");
    if (entries.size() != rows) {
        throw input_error("matrix JSON: 'rows' is " + std::to_string(rows) + " but entries has " +
                          std::to_string(entries.size()) + " rows");
    }
    bool any_float = false;
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != cols) {
            throw input_error("matrix JSON: every row must be an array of " + std::to_string(cols) + " entries");
        }
        for (const auto& x : row) {
            if (x.is_number_float()) {
                any_float = true;
            } else if (!x.is_number_integer() && !x.is_string()) {
                throw input_error("matrix JSON: entries must be integers, floats or \"p/q\" strings");
            }
        }
    }

    if (any_float) {
        Matrix<double> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t jj = 0; jj < cols; ++jj) {
                const json& x = entries[i][jj];
                m(i, jj) = x.is_string() ? parse_rational(x.get<std::string>()).get_d() : x.get<double>();
            }
        }
        return m;
    }
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t jj = 0; jj < cols; ++jj) {
            const json& x = entries[i][jj];
            if (x.is_string()) {
                m(i, jj) = parse_rational(x.get<std::string>());
            } else if (x.is_number_unsigned()) {
                m(i, jj) = Rational(BigInt(std::to_string(x.get<unsigned long long>())));
            } else {
                m(i, jj) = Rational(BigInt(std::to_string(x.get<long long>())));
            }
        }
    }
    return m;
}

AnyMatrix read_matrix_file(const std::filesystem::path& path) {
    return matrix_from_json(read_json_file(path));
}

json matrix_to_json(const Matrix<Rational>& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            if (x.get_den() == 1 && x.get_num().fits_slong_p()) {
                row.push_back(x.get_num().get_si());
            } else {
                row.push_back(to_string(x));
            }
        }
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json matrix_to_json(const Matrix<double>& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json matrix_to_json(const AnyMatrix& m) {
    return std::visit([](const auto& x) { return matrix_to_json(x); }, m);
}

Matrix<double> to_float(const AnyMatrix& m) {
    if (const auto* d = std::get_if<Matrix<double>>(&m)) return *d;
    return map_entries<double>(std::get<Matrix<Rational>>(m), [](const Rational& q) { return q.get_d(); });
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

json scan_report_to_json(const ScanReport& report) {
    const ScanConfig& c = report.config;
    json per_k = json::array();
    for (const auto& s : report.per_k) {
        per_k.push_back({{"k", s.k},
                         {"min_coeff", s.min_coeff},
                         {"argmin_trial", s.argmin_trial},
                         {"argmin_digest", s.argmin_digest}});
    }
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back(
            {{"trial", v.trial}, {"k", v.k}, {"index", v.index}, {"value", v.value}, {"exact", v.exact}});
    }
    return json{{"config",
                 {{"r", c.r},
                  {"m", c.m},
                  {"k", c.ks},
                  {"trials", c.trials},
                  {"seed", c.seed},
                  {"tolerance", c.tolerance},
                  {"ring", to_string(c.ring)}}},
                {"per_k", std::move(per_k)},
                {"violations", std::move(violations)},
                {"escalations", report.escalations},
                {"elapsed_seconds", report.elapsed_seconds}};
}

ScanReport scan_report_from_json(const json& j) {
    try {
        ScanReport report;
        const json& c = j.at("config");
        report.config.r = c.at("r").get<std::size_t>();
        report.config.m = c.at("m").get<unsigned>();
        report.config.ks = c.at("k").get<std::vector<std::size_t>>();
        report.config.trials = c.at("trials").get<std::uint64_t>();
        report.config.seed = c.at("seed").get<std::uint64_t>();
        report.config.tolerance = c.at("tolerance").get<double>();
        report.config.ring = parse_scan_ring(c.at("ring").get<std::string>());
        for (const auto& s : j.at("per_k")) {
            report.per_k.push_back(PerKSummary{s.at("k").get<std::size_t>(), s.at("min_coeff").get<double>(),
                                               s.at("argmin_trial").get<std::uint64_t>(),
                                               s.at("argmin_digest").get<std::string>()});
        }
        for (const auto& v : j.at("violations")) {
            report.violations.push_back(Violation{v.at("trial").get<std::uint64_t>(), v.at("k").get<std::size_t>(),
                                                  v.at("index").get<std::size_t>(), v.at("value").get<double>(),
                                                  v.at("exact").get<std::string>()});
        }
        report.escalations = j.at("escalations").get<std::uint64_t>();
        report.elapsed_seconds = j.at("elapsed_seconds").get<double>();
        return report;
    } catch (const json::exception& e) {
        throw input_error(std::string("scan report JSON: ") + e.what());
    }
}

std::string scan_report_body(const ScanReport& report) {
    json j = scan_report_to_json(report);
    j.erase("elapsed_seconds");
    return j.dump();
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open '" + path.string() + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) throw input_error("failed writing '" + path.string() + "'");
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("'" + path.string() + "': " + e.what());
    }
}

} // namespace symmsum
