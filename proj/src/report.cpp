#include "disquant/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace disquant {

std::string fmt_num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : cols_(header.size())
{
    for (std::size_t i = 0; i < header.size(); ++i) header_ += (i ? "," : "") + header[i];
    header_ += '\n';
}

void CsvWriter::comment(const std::string& line) { comments_ += "# " + line + '\n'; }

void CsvWriter::row(const std::vector<double>& values)
{
    std::vector<std::string> s;
    s.reserve(values.size());
    for (double v : values) s.push_back(fmt_num(v));
    row_text(s);
}

namespace {

std::string quoted(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

} // namespace

void CsvWriter::row_text(const std::vector<std::string>& values)
{
    if (values.size() != cols_) throw std::logic_error("csv row width does not match header");
    for (std::size_t i = 0; i < values.size(); ++i) body_ += (i ? "," : "") + quoted(values[i]);
    body_ += '\n';
}

std::string CsvWriter::str() const { return comments_ + header_ + body_; }

nlohmann::ordered_json to_json(const VerificationReport& r)
{
    nlohmann::ordered_json j;
    j["schema"] = schema_tag;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["tol_scale"] = r.tol_scale;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.records) {
        nlohmann::ordered_json e;
        e["suite"] = c.suite;
        e["id"] = c.id;
        e["reference"] = c.reference;
        e["residual"] = c.residual;
        e["tolerance"] = c.tolerance;
        e["pass"] = c.pass;
        e["seed"] = c.seed;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["summary"] = {{"total", r.records.size()}, {"passed", r.passed()}, {"failed", r.failed()}};
    j["notes"] = r.notes;
    return j;
}

std::string to_csv(const VerificationReport& r)
{
    CsvWriter w({"suite", "id", "reference", "residual", "tolerance", "pass", "seed"});
    for (const auto& c : r.records)
        w.row_text({c.suite, c.id, c.reference, fmt_num(c.residual), fmt_num(c.tolerance), c.pass ? "1" : "0",
                    std::to_string(c.seed)});
    return w.str();
}

nlohmann::ordered_json to_json(const HelixSolution& h)
{
    nlohmann::ordered_json j;
    j["b"] = h.b;
    j["phase"] = h.phase;
    j["w0"] = h.w0;
    j["omega"] = h.omega;
    j["Omega"] = h.Omega;
    j["m_dcr"] = h.m_dcr;
    j["a_dcr"] = h.a_dcr;
    j["v"] = h.v;
    j["omega_dcr"] = h.omega_dcr;
    j["zeta"] = h.zeta;
    j["beta"] = h.beta;
    j["units"] = units_json(h.params.m, h.params.hbar, h.params.c);
    return j;
}

HelixSolution helix_from_json(const nlohmann::ordered_json& j)
{
    HelixSolution h;
    h.b = j.at("b").get<double>();
    h.phase = j.at("phase").get<double>();
    h.w0 = j.at("w0").get<double>();
    h.omega = j.at("omega").get<double>();
    h.Omega = j.at("Omega").get<double>();
    h.m_dcr = j.at("m_dcr").get<double>();
    h.a_dcr = j.at("a_dcr").get<double>();
    h.v = j.at("v").get<double>();
    h.omega_dcr = j.at("omega_dcr").get<double>();
    h.zeta = j.at("zeta").get<double>();
    h.beta = j.at("beta").get<double>();
    const auto& u = j.at("units");
    h.params.m = u.at("m").get<double>();
    h.params.hbar = u.at("hbar").get<double>();
    h.params.c = u.at("c").get<double>();
    return h;
}

nlohmann::ordered_json units_json(double m, double hbar, double c)
{
    nlohmann::ordered_json u;
    u["m"] = m;
    u["hbar"] = hbar;
    u["c"] = c;
    u["convention"] = (m == 1.0 && hbar == 1.0 && c == 1.0) ? "natural (m = hbar = c = 1)" : "user supplied";
    return u;
}

} // namespace disquant
