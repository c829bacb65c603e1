#include "frozen/io.hpp"

#include "frozen/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace frozen {

using nlohmann::json;

namespace {

std::string format_row(double x, cplx v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", x, v.real(), v.imag());
    return buf;
}

struct Row {
    double x;
    cplx value;
};

Row parse_row(const std::string& line, std::size_t lineno) {
    double x = 0;
    double re = 0;
    double im = 0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf%c", &x, &re, &im, &tail) != 3) {
        throw InvalidInput("line " + std::to_string(lineno) + ": expected 'x,re,im', got '" + line + "'");
    }
    return {x, {re, im}};
}

std::vector<Row> read_rows(std::istream& is, std::string& header) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<Row> rows;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (header.empty()) header = line;
            continue;
        }
        rows.push_back(parse_row(line, lineno));
    }
    return rows;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

int int_field(const json& obj, const char* key) {
    if (!obj.contains(key) || !obj[key].is_number_integer()) {
        throw InvalidInput(std::string("missing integer field '") + key + "'");
    }
    return obj[key].get<int>();
}

}  // namespace

void write_grid_csv(std::ostream& os, const GridFunction& g) {
    os << "# k=" << g.k() << " m=" << g.m() << '\n';
    for (std::size_t i = 0; i < g.size(); ++i) os << format_row(g.x(i), g[i]) << '\n';
}

GridFunction read_grid_csv(std::istream& is) {
    std::string header;
    const auto rows = read_rows(is, header);
    int k = 0;
    int m = 0;
    if (std::sscanf(header.c_str(), "# k=%d m=%d", &k, &m) != 2 || k < 1 || m < 1) {
        throw InvalidInput("grid CSV needs a '# k=<k> m=<m>' header");
    }
    GridFunction g(k, m);
    if (rows.size() != g.size()) {
        throw InvalidInput("grid CSV has " + std::to_string(rows.size()) + " rows, header implies " +
                           std::to_string(g.size()));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (std::abs(rows[i].x - g.x(i)) > 1e-9 * g.step()) {
            throw InvalidInput("row " + std::to_string(i) + " is not at the midpoint x=" + format_row(g.x(i), 0.0));
        }
        g[i] = rows[i].value;
    }
    return g;
}

void write_profile_csv(std::ostream& os, std::span<const cplx> f, int k) {
    const double b = 1.0 / k;
    os << "# m=" << f.size() << '\n';
    for (std::size_t p = 0; p < f.size(); ++p) os << format_row((p + 0.5) * b / f.size(), f[p]) << '\n';
}

std::vector<cplx> read_profile_csv(std::istream& is) {
    std::string header;
    const auto rows = read_rows(is, header);
    if (rows.empty()) throw InvalidInput("profile CSV has no rows");
    std::vector<cplx> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.value);
    return out;
}

std::string config_to_json(const ProblemConfig& config) {
    return json{{"alpha", config.alpha}, {"beta", config.beta}, {"j", config.j}, {"k", config.k}}.dump();
}

ProblemConfig config_from_json(std::string_view text) {
    json doc = parse_json(text);
    if (doc.is_object() && doc.contains("config")) doc = doc["config"];
    if (!doc.is_object()) throw InvalidInput("config must be a JSON object");
    return make_config(int_field(doc, "alpha"), int_field(doc, "beta"), int_field(doc, "j"), int_field(doc, "k"));
}

std::string spectrum_to_json(const Spectrum& spec) {
    json eig = json::array();
    for (const cplx& v : spec.eigenvalues) eig.push_back({v.real(), v.imag()});
    return json{{"alpha", spec.alpha}, {"beta", spec.beta}, {"eigenvalues", eig}}.dump();
}

Spectrum spectrum_from_json(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw InvalidInput("spectrum must be a JSON object");
    Spectrum spec{int_field(doc, "alpha"), int_field(doc, "beta"), {}};
    if ((spec.alpha != 0 && spec.alpha != 1) || (spec.beta != 0 && spec.beta != 1)) {
        throw InvalidInput("spectrum flags must be 0 or 1");
    }
    if (!doc.contains("eigenvalues") || !doc["eigenvalues"].is_array()) {
        throw InvalidInput("spectrum needs an 'eigenvalues' array");
    }
    for (const auto& e : doc["eigenvalues"]) {
        if (e.is_number()) {
            spec.eigenvalues.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            spec.eigenvalues.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw InvalidInput("eigenvalue entries must be numbers or [re,im] pairs");
        }
    }
    return spec;
}

void write_eigs_csv(std::ostream& os, const Spectrum& spec) {
    os << "n,re,im\n";
    char buf[96];
    for (std::size_t n = 0; n < spec.count(); ++n) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g", n + 1, spec.eigenvalues[n].real(),
                      spec.eigenvalues[n].imag());
        os << buf << '\n';
    }
}

std::string RunManifest::to_json() const {
    json doc{{"command", command},
             {"config", {{"alpha", config.alpha}, {"beta", config.beta}, {"j", config.j}, {"k", config.k}}},
             {"inputs", inputs},
             {"outputs", outputs},
             {"grid", {{"k", k}, {"m", m}}},
             {"tolerances", tolerances},
             {"wall_time_s", wall_time_s}};
    return doc.dump(2);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << text;
}

}  // namespace frozen
