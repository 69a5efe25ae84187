#include "polyu2.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <variant>

#include "polyu2/serialize.hpp"

namespace {

using namespace polyu2;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pu2_status status_of(const std::exception& e) {
    g_last_error = e.what();
    if (dynamic_cast<const InvalidArgument*>(&e)) return PU2_INVALID_ARGUMENT;
    if (dynamic_cast<const NonUnitarizable*>(&e)) return PU2_DOMAIN_ERROR;
    if (dynamic_cast<const UnsupportedKappa*>(&e)) return PU2_DOMAIN_ERROR;
    if (dynamic_cast<const DomainTooSmall*>(&e)) return PU2_DOMAIN_ERROR;
    if (dynamic_cast<const SectorTruncated*>(&e)) return PU2_DOMAIN_ERROR;
    if (dynamic_cast<const NegativeLadder*>(&e)) return PU2_DOMAIN_ERROR;
    if (dynamic_cast<const OutOfSector*>(&e)) return PU2_DOMAIN_ERROR;
    return PU2_INTERNAL_ERROR;
}

template <class Fn>
pu2_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const std::exception& e) {
        return status_of(e);
    } catch (...) {
        g_last_error = "unknown error";
        return PU2_INTERNAL_ERROR;
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

double parse_float_scalar(const std::string& token) {
    // rationals stay exact even on the float path
    if (token.find('/') != std::string::npos) return parse_rational(token).get_d();
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("bad numeric literal '" + token + "'");
    }
    if (used != token.size()) throw InvalidArgument("bad numeric literal '" + token + "'");
    return value;
}

template <class S>
KappaVector<S> parse_kappa(const char* text) {
    KappaVector<S> out;
    if (text == nullptr) return out;
    std::string s(text);
    if (s.empty()) return out;
    for (const std::string& token : split_list(s)) {
        if constexpr (scalar_traits<S>::exact)
            out.push_back(RadicalScalar(parse_rational(token)));
        else
            out.push_back(parse_float_scalar(token));
    }
    return out;
}

template <class S>
S parse_single_kappa(const char* text) {
    KappaVector<S> list = parse_kappa<S>(text);
    if (list.size() != 1)
        throw InvalidArgument("expected exactly one kappa parameter");
    return list.front();
}

HalfInt checked_halfint(int twice, const char* what) {
    if (twice < 0) throw InvalidArgument(std::string(what) + " must be nonnegative");
    return HalfInt::from_twice(twice);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

template <class S>
TwoModeSpace<S> build_space_auto_cap(const S& kappa, int cap) {
    if (cap == 0) {
        double kd = scalar_traits<S>::to_double(kappa);
        if (scalar_traits<S>::sign_classified(kappa, std::fabs(kd)) < 0)
            cap = static_cast<int>(std::lround(1.0 - 1.0 / kd));
        else
            throw InvalidArgument("cap is required for kappa >= 0 (infinite Fock space)");
    }
    return build_two_mode(kappa, cap);
}

} // namespace

struct pu2_rep {
    std::variant<Representation<RadicalScalar>, Representation<double>> v;
};

struct pu2_space {
    std::variant<TwoModeSpace<RadicalScalar>, TwoModeSpace<double>> v;
};

struct pu2_report {
    VerificationReport r;
};

extern "C" {

const char* pu2_version(void) { return "1.0.0"; }

const char* pu2_last_error(void) { return g_last_error.c_str(); }

void pu2_string_free(char* s) { std::free(s); }
void pu2_rep_free(pu2_rep* rep) { delete rep; }
void pu2_space_free(pu2_space* space) { delete space; }
void pu2_report_free(pu2_report* report) { delete report; }

pu2_status pu2_phi(int j_twice, int m_twice, const char* kappa, double* out) {
    return guarded([&]() {
        *out = phi(HalfInt::from_twice(j_twice), HalfInt::from_twice(m_twice),
                   parse_kappa<double>(kappa));
        return PU2_OK;
    });
}

pu2_status pu2_g(int j_twice, int m_twice, const char* kappa, double* out) {
    return guarded([&]() {
        *out = g_fn(HalfInt::from_twice(j_twice), HalfInt::from_twice(m_twice),
                    parse_kappa<double>(kappa));
        return PU2_OK;
    });
}

pu2_status pu2_f_wh(int n, const char* kappa, double* out) {
    return guarded([&]() {
        *out = f_wh(n, parse_single_kappa<double>(kappa));
        return PU2_OK;
    });
}

pu2_status pu2_f_higgs(int n, int j_twice, const char* kappa, double* out) {
    return guarded([&]() {
        *out = f_higgs(n, checked_halfint(j_twice, "j"), parse_single_kappa<double>(kappa));
        return PU2_OK;
    });
}

pu2_status pu2_phi_inf(int n, const char* kappa, double* out) {
    return guarded([&]() {
        *out = phi_inf(n, parse_kappa<double>(kappa));
        return PU2_OK;
    });
}

pu2_status pu2_dimension(int j_twice, const char* kappa, pu2_mode mode, int* out_dim,
                         int* out_clean) {
    return guarded([&]() {
        HalfInt j = checked_halfint(j_twice, "j");
        LevelScan scan = mode == PU2_MODE_EXACT
                             ? admissible_levels(j, parse_kappa<RadicalScalar>(kappa))
                             : admissible_levels(j, parse_kappa<double>(kappa));
        *out_dim = scan.dim();
        if (out_clean) *out_clean = scan.clean ? 1 : 0;
        return PU2_OK;
    });
}

pu2_status pu2_rep_build(int j_twice, const char* kappa, pu2_mode mode, pu2_rep** out) {
    return guarded([&]() {
        HalfInt j = checked_halfint(j_twice, "j");
        auto rep = std::make_unique<pu2_rep>();
        if (mode == PU2_MODE_EXACT)
            rep->v = build_rep(j, parse_kappa<RadicalScalar>(kappa));
        else
            rep->v = build_rep(j, parse_kappa<double>(kappa));
        *out = rep.release();
        return PU2_OK;
    });
}

int pu2_rep_dimension(const pu2_rep* rep) {
    return std::visit([](const auto& r) { return r.dim(); }, rep->v);
}

pu2_status pu2_rep_nilpotency(const pu2_rep* rep, int* out) {
    return guarded([&]() {
        *out = std::visit([](const auto& r) { return nilpotency_index(r); }, rep->v);
        return PU2_OK;
    });
}

pu2_status pu2_rep_verify(const pu2_rep* rep, pu2_report** out) {
    return guarded([&]() {
        auto report = std::make_unique<pu2_report>();
        report->r = std::visit([](const auto& r) { return verify_structure(r); }, rep->v);
        *out = report.release();
        return PU2_OK;
    });
}

pu2_status pu2_rep_to_json(const pu2_rep* rep, char** out) {
    return guarded([&]() {
        json doc = std::visit([](const auto& r) { return rep_document(r); }, rep->v);
        *out = dup_string(dump(doc));
        return PU2_OK;
    });
}

pu2_status pu2_rep_verify_json(const pu2_rep* rep, char** out, int* out_passed) {
    return guarded([&]() {
        VerificationReport report =
            std::visit([](const auto& r) { return verify_structure(r); }, rep->v);
        json doc = std::visit([&report](const auto& r) { return verify_document(r, report); },
                              rep->v);
        *out = dup_string(dump(doc));
        if (out_passed) *out_passed = report.passed() ? 1 : 0;
        return report.passed() ? PU2_OK : PU2_VERIFY_FAILED;
    });
}

int pu2_report_passed(const pu2_report* report) { return report->r.passed() ? 1 : 0; }

double pu2_report_max_residual(const pu2_report* report) { return report->r.max_residual(); }

pu2_status pu2_report_to_json(const pu2_report* report, char** out) {
    return guarded([&]() {
        *out = dup_string(dump(report_to_json(report->r)));
        return PU2_OK;
    });
}

pu2_status pu2_schwinger_check(int j_max_twice, pu2_mode mode, pu2_report** out) {
    return guarded([&]() {
        HalfInt j_max = checked_halfint(j_max_twice, "j_max");
        auto report = std::make_unique<pu2_report>();
        report->r = mode == PU2_MODE_EXACT ? schwinger_u2_check<RadicalScalar>(j_max)
                                           : schwinger_u2_check<double>(j_max);
        *out = report.release();
        return PU2_OK;
    });
}

pu2_status pu2_contract_table(int n_max, const char* kappa, const int* j_twice_list, int j_count,
                              pu2_mode mode, int as_csv, char** out) {
    return guarded([&]() {
        if (j_twice_list == nullptr || j_count <= 0)
            throw InvalidArgument("contract table needs at least one j");
        std::vector<HalfInt> j_list;
        for (int i = 0; i < j_count; ++i)
            j_list.push_back(checked_halfint(j_twice_list[i], "j"));
        std::string text;
        if (mode == PU2_MODE_EXACT) {
            auto table = contract_table(n_max, parse_kappa<RadicalScalar>(kappa), j_list);
            text = as_csv ? contraction_to_csv(table) : dump(contraction_to_json(table));
        } else {
            auto table = contract_table(n_max, parse_kappa<double>(kappa), j_list);
            text = as_csv ? contraction_to_csv(table) : dump(contraction_to_json(table));
        }
        *out = dup_string(text);
        return PU2_OK;
    });
}

pu2_status pu2_a_kappa_check(const char* kappa, int n_cap, pu2_mode mode, pu2_report** out) {
    return guarded([&]() {
        auto report = std::make_unique<pu2_report>();
        report->r = mode == PU2_MODE_EXACT
                        ? a_kappa_check(parse_single_kappa<RadicalScalar>(kappa), n_cap)
                        : a_kappa_check(parse_single_kappa<double>(kappa), n_cap);
        *out = report.release();
        return PU2_OK;
    });
}

pu2_status pu2_space_build(const char* kappa, int cap, pu2_mode mode, pu2_space** out) {
    return guarded([&]() {
        auto space = std::make_unique<pu2_space>();
        if (mode == PU2_MODE_EXACT)
            space->v = build_space_auto_cap(parse_single_kappa<RadicalScalar>(kappa), cap);
        else
            space->v = build_space_auto_cap(parse_single_kappa<double>(kappa), cap);
        *out = space.release();
        return PU2_OK;
    });
}

int pu2_space_dim(const pu2_space* space) {
    return std::visit([](const auto& s) { return s.dim(); }, space->v);
}

int pu2_space_cap(const pu2_space* space) {
    return std::visit([](const auto& s) { return s.cap; }, space->v);
}

int pu2_space_closed(const pu2_space* space) {
    return std::visit([](const auto& s) { return s.closed ? 1 : 0; }, space->v);
}

pu2_status pu2_space_verify(const pu2_space* space, pu2_report** out) {
    return guarded([&]() {
        auto report = std::make_unique<pu2_report>();
        report->r = std::visit([](const auto& s) { return verify_higgs(s); }, space->v);
        *out = report.release();
        return PU2_OK;
    });
}

pu2_status pu2_sector_ladder_check(const pu2_space* space, int j_twice, pu2_report** out) {
    return guarded([&]() {
        HalfInt j = checked_halfint(j_twice, "j");
        auto report = std::make_unique<pu2_report>();
        report->r =
            std::visit([j](const auto& s) { return sector_ladder_check(s, j); }, space->v);
        *out = report.release();
        return PU2_OK;
    });
}

pu2_status pu2_space_report_json(const pu2_space* space, char** out, int* out_passed) {
    return guarded([&]() {
        bool passed = false;
        json doc = std::visit(
            [&passed](const auto& s) {
                SectorMap map = sector_decomposition(s);
                VerificationReport report = verify_higgs(s);
                passed = report.passed();
                return sector_report_to_json(s, map, &report);
            },
            space->v);
        *out = dup_string(dump(doc));
        if (out_passed) *out_passed = passed ? 1 : 0;
        return passed ? PU2_OK : PU2_VERIFY_FAILED;
    });
}

pu2_status pu2_coherent_json(int j_twice, const char* kappa, const char* z, pu2_mode mode,
                             char** out) {
    return guarded([&]() {
        HalfInt j = checked_halfint(j_twice, "j");
        json doc;
        if (mode == PU2_MODE_EXACT) {
            RadicalScalar z_re(0);
            if (z != nullptr && *z != '\0') {
                std::string zs(z);
                if (zs.find(',') != std::string::npos)
                    throw InvalidArgument("exact mode restricts z to rationals (no imaginary part)");
                z_re = RadicalScalar(parse_rational(zs));
            }
            doc = coherent_to_json(coherent_state(j, parse_single_kappa<RadicalScalar>(kappa),
                                                  z_re, RadicalScalar(0)));
        } else {
            double z_re = 0.0, z_im = 0.0;
            if (z != nullptr && *z != '\0') {
                auto parts = split_list(z);
                if (parts.size() > 2) throw InvalidArgument("z must be 're' or 're,im'");
                z_re = parse_float_scalar(parts[0]);
                if (parts.size() == 2) z_im = parse_float_scalar(parts[1]);
            }
            doc = coherent_to_json(
                coherent_state(j, parse_single_kappa<double>(kappa), z_re, z_im));
        }
        *out = dup_string(dump(doc));
        return PU2_OK;
    });
}

pu2_status pu2_normalization2(int j_twice, const char* kappa, double z_abs2, double* out) {
    return guarded([&]() {
        if (z_abs2 < 0) throw InvalidArgument("|z|^2 must be nonnegative");
        *out = normalization2(z_abs2, checked_halfint(j_twice, "j"),
                              parse_single_kappa<double>(kappa));
        return PU2_OK;
    });
}

} // extern "C"
