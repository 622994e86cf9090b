#include "gbd/gbd.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gbd/decide.hpp"
#include "gbd/errors.hpp"
#include "gbd/parser.hpp"
#include "gbd/pham.hpp"
#include "gbd/report.hpp"
#include "gbd/theory.hpp"

struct gbd_system {
    gbd::SystemFile value;
};

struct gbd_report {
    gbd::DecisionReport value;
    gbd::SystemFile system; // for rendering
};

namespace {

thread_local std::string tl_error;

void set_error(const std::string& msg) {
    tl_error = msg;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gbd_status to_status(const std::exception& e) {
    set_error(e.what());
    if (dynamic_cast<const gbd::ParseError*>(&e))
        return GBD_ERR_PARSE;
    if (dynamic_cast<const gbd::PreconditionError*>(&e))
        return GBD_ERR_PRECONDITION;
    if (dynamic_cast<const gbd::CheckFailure*>(&e))
        return GBD_ERR_CHECK_FAILED;
    if (dynamic_cast<const gbd::InvalidArgument*>(&e) ||
        dynamic_cast<const gbd::ContextMismatch*>(&e) ||
        dynamic_cast<const gbd::FieldMismatch*>(&e) ||
        dynamic_cast<const gbd::OverflowError*>(&e))
        return GBD_ERR_INVALID_ARGUMENT;
    return GBD_ERR_INTERNAL;
}

template <typename F>
gbd_status guarded(F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return to_status(e);
    } catch (...) {
        set_error("unknown error");
        return GBD_ERR_INTERNAL;
    }
}

gbd_status require(bool ok, const char* msg) {
    if (!ok) {
        set_error(msg);
        return GBD_ERR_INVALID_ARGUMENT;
    }
    return GBD_OK;
}

} // namespace

extern "C" {

const char* gbd_version(void) {
    return "1.0.0";
}

const char* gbd_last_error(void) {
    return tl_error.c_str();
}

void gbd_string_free(char* s) {
    std::free(s);
}

gbd_status gbd_system_parse(const char* text, gbd_system** out) {
    if (auto s = require(text && out, "NULL argument"))
        return s;
    return guarded([&] {
        *out = new gbd_system{gbd::parse_system(text)};
        return GBD_OK;
    });
}

void gbd_system_free(gbd_system* sys) {
    delete sys;
}

gbd_status gbd_system_serialize(const gbd_system* sys, char** out_text) {
    if (auto s = require(sys && out_text, "NULL argument"))
        return s;
    return guarded([&] {
        *out_text = dup_string(gbd::serialize_system(sys->value));
        return GBD_OK;
    });
}

int gbd_system_size(const gbd_system* sys) {
    return sys ? static_cast<int>(sys->value.size()) : -1;
}

gbd_status gbd_system_set_order(gbd_system* sys, const char* spec) {
    if (auto s = require(sys && spec, "NULL argument"))
        return s;
    return guarded([&] {
        sys->value.order = gbd::parse_order_spec(spec, sys->value.ring);
        return GBD_OK;
    });
}

gbd_status gbd_decide(const gbd_system* sys, const char* mode, int b3_rereduce, int threads,
                      gbd_report** out) {
    if (auto s = require(sys && mode && out, "NULL argument"))
        return s;
    return guarded([&] {
        auto m = gbd::mode_from(mode);
        if (!m) {
            set_error(std::string("unknown mode '") + mode + "'");
            return GBD_ERR_INVALID_ARGUMENT;
        }
        gbd::DecideOptions opt;
        opt.b3_rereduce = b3_rereduce != 0;
        opt.threads = threads > 0 ? threads : 1;
        *out = new gbd_report{gbd::decide(sys->value, *m, opt), sys->value};
        return GBD_OK;
    });
}

void gbd_report_free(gbd_report* report) {
    delete report;
}

int gbd_report_is_groebner(const gbd_report* report) {
    return report ? (report->value.is_groebner ? 1 : 0) : -1;
}

long gbd_report_reductions(const gbd_report* report) {
    return report ? report->value.reductions : -1;
}

gbd_status gbd_report_json(const gbd_report* report, char** out_text) {
    if (auto s = require(report && out_text, "NULL argument"))
        return s;
    return guarded([&] {
        *out_text = dup_string(gbd::report_to_json(report->value, report->system));
        return GBD_OK;
    });
}

gbd_status gbd_report_text(const gbd_report* report, char** out_text) {
    if (auto s = require(report && out_text, "NULL argument"))
        return s;
    return guarded([&] {
        *out_text = dup_string(gbd::report_to_text(report->value, report->system));
        return GBD_OK;
    });
}

gbd_status gbd_generate_pham_like(int m, int extra_vars, unsigned long long seed, int make_gb,
                                  int trivial_p, gbd_system** out_sys, char** out_factors) {
    return guarded([&] {
        gbd::PhamGenParams params;
        params.m = m;
        params.extra_vars = extra_vars;
        params.seed = seed;
        params.make_gb = make_gb != 0;
        params.trivial_p = trivial_p != 0;
        gbd::GeneratedPham gen = gbd::generate_pham_like(params);
        if (out_factors) {
            std::string sidecar;
            if (params.make_gb) {
                sidecar += "# hidden common factor of the generated system\n";
                sidecar += "# d = " + gen.factorization.d.to_string(gen.system.ring) + "\n";
                sidecar += "factor 1 " + std::to_string(m) + " " +
                           gen.common_factor.to_string(gen.system.ring, gen.system.order) + "\n";
            }
            *out_factors = dup_string(sidecar);
        }
        if (out_sys)
            *out_sys = new gbd_system{std::move(gen.system)};
        return GBD_OK;
    });
}

gbd_status gbd_check_theory(const gbd_system* sys, const char* factors_text, char** out_json) {
    if (auto s = require(sys != nullptr, "NULL argument"))
        return s;
    return guarded([&] {
        std::vector<gbd::FactorEntry> entries;
        if (factors_text && *factors_text)
            entries = gbd::parse_factors(factors_text, sys->value);
        gbd::TheoryReport report = gbd::run_theory_checks(sys->value, entries);
        if (out_json)
            *out_json = dup_string(gbd::theory_report_to_json(report, sys->value));
        if (!report.pass) {
            set_error("a theory check assertion failed");
            return GBD_ERR_CHECK_FAILED;
        }
        return GBD_OK;
    });
}

} // extern "C"
