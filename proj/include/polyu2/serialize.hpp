#ifndef POLYU2_SERIALIZE_HPP
#define POLYU2_SERIALIZE_HPP

#include <json.hpp>

#include "polyu2/bargmann.hpp"

namespace polyu2 {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// --- scalar entries -------------------------------------------------------
// Exact entries serialize as [numerator, denominator, radicand-num,
// radicand-den] quadruples (decimal strings, since values like f(n)! exceed
// 64-bit); float entries as decimal strings with 17 significant digits.

inline json entry_to_json(const RadicalScalar& x) {
    return json::array({x.coeff().get_num().get_str(), x.coeff().get_den().get_str(),
                        x.radicand().get_str(), "1"});
}

inline json entry_to_json(double x) { return fmt17(x); }

template <class S>
S entry_from_json(const json& e);

template <>
inline RadicalScalar entry_from_json<RadicalScalar>(const json& e) {
    if (!e.is_array() || e.size() != 4)
        throw InvalidArgument("exact entry must be a [num, den, rad-num, rad-den] quadruple");
    mpz_class num(e[0].get<std::string>()), den(e[1].get<std::string>());
    mpz_class rad_num(e[2].get<std::string>()), rad_den(e[3].get<std::string>());
    if (den == 0 || rad_den == 0) throw InvalidArgument("zero denominator in entry");
    Rational coeff(num, den);
    coeff.canonicalize();
    Rational radicand(rad_num, rad_den);
    radicand.canonicalize();
    return RadicalScalar(coeff, radicand);
}

template <>
inline double entry_from_json<double>(const json& e) {
    if (!e.is_string()) throw InvalidArgument("float entry must be a decimal string");
    return std::stod(e.get<std::string>());
}

// --- kappa ----------------------------------------------------------------
// Exact kappas render as canonical "p/q" strings, float kappas as numbers.

inline json kappa_to_json(const KappaVector<RadicalScalar>& kappa) {
    json a = json::array();
    for (const auto& k : kappa) a.push_back(rational_to_string(k.rational_value()));
    return a;
}

inline json kappa_to_json(const KappaVector<double>& kappa) {
    json a = json::array();
    for (double k : kappa) a.push_back(k);
    return a;
}

template <class S>
KappaVector<S> kappa_from_json(const json& a);

template <>
inline KappaVector<RadicalScalar> kappa_from_json<RadicalScalar>(const json& a) {
    KappaVector<RadicalScalar> out;
    for (const auto& k : a) out.push_back(RadicalScalar(parse_rational(k.get<std::string>())));
    return out;
}

template <>
inline KappaVector<double> kappa_from_json<double>(const json& a) {
    KappaVector<double> out;
    for (const auto& k : a) out.push_back(k.get<double>());
    return out;
}

// --- matrices ---------------------------------------------------------------

template <class S>
json matrix_to_json(const OperatorMatrix<S>& m) {
    json doc;
    doc["label"] = op_label_name(m.label());
    doc["dim"] = m.dim();
    if (m.basis()) {
        doc["basis"] = {{"j_twice", m.basis()->j.twice()}, {"levels", m.basis()->levels}};
    } else {
        doc["basis"] = nullptr;
    }
    json rows = json::array();
    for (int r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(entry_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc;
}

template <class S>
OperatorMatrix<S> matrix_from_json(const json& doc) {
    int dim = doc.at("dim").get<int>();
    std::optional<RepBasis> basis;
    if (!doc.at("basis").is_null()) {
        RepBasis b;
        b.j = HalfInt::from_twice(doc["basis"].at("j_twice").get<int>());
        b.levels = doc["basis"].at("levels").get<std::vector<int>>();
        basis = std::move(b);
    }
    OperatorMatrix<S> m(dim, op_label_from_name(doc.at("label").get<std::string>()),
                        std::move(basis));
    const json& rows = doc.at("entries");
    if (static_cast<int>(rows.size()) != dim) throw InvalidArgument("entry row count != dim");
    for (int r = 0; r < dim; ++r) {
        if (static_cast<int>(rows[r].size()) != dim)
            throw InvalidArgument("entry column count != dim");
        for (int c = 0; c < dim; ++c) m.at(r, c) = entry_from_json<S>(rows[r][c]);
    }
    return m;
}

// --- verification reports ---------------------------------------------------

inline json report_to_json(const VerificationReport& report) {
    json doc;
    doc["passed"] = report.passed();
    json checks = json::array();
    for (const auto& c : report.checks) {
        json jc;
        jc["identity"] = c.identity;
        jc["passed"] = c.passed;
        jc["residual"] = c.residual;
        if (c.witness) {
            jc["witness"] = {{"row", c.witness->row},
                             {"col", c.witness->col},
                             {"expected", c.witness->expected},
                             {"actual", c.witness->actual}};
        } else {
            jc["witness"] = nullptr;
        }
        checks.push_back(std::move(jc));
    }
    doc["checks"] = std::move(checks);
    doc["notes"] = report.notes;
    return doc;
}

inline VerificationReport report_from_json(const json& doc) {
    VerificationReport report;
    for (const auto& jc : doc.at("checks")) {
        CheckResult c;
        c.identity = jc.at("identity").get<std::string>();
        c.passed = jc.at("passed").get<bool>();
        c.residual = jc.at("residual").get<double>();
        if (!jc.at("witness").is_null()) {
            const json& w = jc["witness"];
            c.witness = Witness{w.at("row").get<int>(), w.at("col").get<int>(),
                                w.at("expected").get<std::string>(),
                                w.at("actual").get<std::string>()};
        }
        report.checks.push_back(std::move(c));
    }
    report.notes = doc.at("notes").get<std::vector<std::string>>();
    return report;
}

// --- documents ---------------------------------------------------------------

template <class S>
json rep_document(const Representation<S>& rep) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "representation";
    doc["mode"] = scalar_traits<S>::mode_name;
    doc["j_twice"] = rep.basis.j.twice();
    doc["kappa"] = kappa_to_json(rep.kappa);
    doc["dim"] = rep.dim();
    doc["matrices"] = {{"J0", matrix_to_json(rep.j0)},
                       {"J3", matrix_to_json(rep.j3)},
                       {"Jplus", matrix_to_json(rep.jplus)},
                       {"Jminus", matrix_to_json(rep.jminus)}};
    return doc;
}

template <class S>
json verify_document(const Representation<S>& rep, const VerificationReport& report) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "verification";
    doc["mode"] = scalar_traits<S>::mode_name;
    doc["j_twice"] = rep.basis.j.twice();
    doc["kappa"] = kappa_to_json(rep.kappa);
    doc["dim"] = rep.dim();
    doc["passed"] = report.passed();
    doc["verification"] = report_to_json(report);
    return doc;
}

template <class S>
json contraction_to_json(const ContractionTable<S>& table) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "contraction_table";
    doc["mode"] = scalar_traits<S>::mode_name;
    doc["kappa"] = kappa_to_json(table.kappa);
    doc["n_max"] = table.n_max;
    json rows = json::array();
    for (const auto& r : table.rows)
        rows.push_back({{"j_twice", r.j.twice()},
                        {"n", r.n},
                        {"contracted", r.contracted},
                        {"limit", r.limit},
                        {"abs_error", r.abs_error}});
    doc["rows"] = std::move(rows);
    return doc;
}

template <class S>
ContractionTable<S> contraction_from_json(const json& doc) {
    ContractionTable<S> table;
    table.kappa = kappa_from_json<S>(doc.at("kappa"));
    table.n_max = doc.at("n_max").get<int>();
    for (const auto& r : doc.at("rows"))
        table.rows.push_back({HalfInt::from_twice(r.at("j_twice").get<int>()),
                              r.at("n").get<int>(), r.at("contracted").get<double>(),
                              r.at("limit").get<double>(), r.at("abs_error").get<double>()});
    return table;
}

// CSV with header j,n,contracted,limit,abs_error; decimal, 17 significant
// digits, LF line endings.
template <class S>
std::string contraction_to_csv(const ContractionTable<S>& table) {
    std::string out = "j,n,contracted,limit,abs_error\n";
    for (const auto& r : table.rows) {
        out += fmt17(r.j.to_double());
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += fmt17(r.contracted);
        out += ',';
        out += fmt17(r.limit);
        out += ',';
        out += fmt17(r.abs_error);
        out += '\n';
    }
    return out;
}

template <class S>
json sector_report_to_json(const TwoModeSpace<S>& space, const SectorMap& map,
                           const VerificationReport* verification = nullptr) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "higgs_report";
    doc["mode"] = scalar_traits<S>::mode_name;
    if constexpr (scalar_traits<S>::exact)
        doc["kappa"] = rational_to_string(space.kappa.rational_value());
    else
        doc["kappa"] = space.kappa;
    doc["cap"] = space.cap;
    doc["closed"] = space.closed;
    doc["total_dim"] = map.total_dim;
    json sectors = json::array();
    for (const auto& sec : map.sectors)
        sectors.push_back({{"j_twice", sec.j.twice()},
                           {"dim", sec.dim()},
                           {"m_lo_twice", sec.m_lo.twice()},
                           {"m_hi_twice", sec.m_hi.twice()}});
    doc["sectors"] = std::move(sectors);
    if (verification) doc["verification"] = report_to_json(*verification);
    return doc;
}

template <class S>
json coherent_to_json(const CoherentState<S>& cs) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "coherent_state";
    doc["mode"] = scalar_traits<S>::mode_name;
    doc["j_twice"] = cs.j.twice();
    if constexpr (scalar_traits<S>::exact) {
        doc["kappa"] = rational_to_string(cs.kappa.rational_value());
        doc["z"] = {rational_to_string(cs.z_re.rational_value()),
                    rational_to_string(cs.z_im.rational_value())};
        doc["norm2"] = rational_to_string(cs.norm2.rational_value());
    } else {
        doc["kappa"] = cs.kappa;
        doc["z"] = {cs.z_re, cs.z_im};
        doc["norm2"] = cs.norm2;
    }
    json coeffs = json::array();
    for (const auto& a : cs.a) coeffs.push_back(entry_to_json(a));
    doc["coeffs"] = std::move(coeffs);
    return doc;
}

} // namespace polyu2

#endif
