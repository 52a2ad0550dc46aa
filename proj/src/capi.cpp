#include "fatcantor.h"

#include "fatcantor/serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fc_status fail(fc_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Runs the body, mapping exceptions onto status codes.
template <typename Fn>
fc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return FC_OK;
    } catch (const std::out_of_range& e) {
        return fail(FC_ERROR_DEPTH, e.what());
    } catch (const std::domain_error& e) {
        return fail(FC_ERROR_ARGUMENT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FC_ERROR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(FC_ERROR_INTERNAL, e.what());
    }
}

}  // namespace

struct fc_params {
    fc::ParamSequence seq;
};

namespace {

fc_status verify_common(const fc_params* p, int max_level, int* fail_count_out, char** out,
                        bool junit) {
    if (!p || !out) return fail(FC_ERROR_ARGUMENT, "fc_verify: NULL argument");
    return guarded([&] {
        fc::VerificationReport rep = fc::run_full_verification(p->seq, max_level);
        if (fail_count_out) *fail_count_out = rep.fail_count();
        *out = dup_string(junit ? fc::verification_junit(rep)
                                : fc::verification_json(rep).dump(2));
    });
}

}  // namespace

extern "C" {

fc_status fc_params_create(int depth, fc_params** out) {
    if (!out) return fail(FC_ERROR_ARGUMENT, "fc_params_create: out is NULL");
    *out = nullptr;
    return guarded([&] { *out = new fc_params{fc::generate_params(depth)}; });
}

void fc_params_free(fc_params* p) {
    delete p;
}

int fc_params_depth(const fc_params* p) {
    return p ? p->seq.depth : 0;
}

fc_status fc_params_entry(const fc_params* p, int k, char** w_out, char** eps_out) {
    if (!p) return fail(FC_ERROR_ARGUMENT, "fc_params_entry: NULL handle");
    if (k < 1 || k > p->seq.depth) return fail(FC_ERROR_DEPTH, "fc_params_entry: k out of range");
    return guarded([&] {
        if (w_out) *w_out = dup_string(p->seq.width(k).str());
        if (eps_out) *eps_out = dup_string(p->seq.epsilon(k).str());
    });
}

fc_status fc_params_json(const fc_params* p, char** json_out) {
    if (!p || !json_out) return fail(FC_ERROR_ARGUMENT, "fc_params_json: NULL argument");
    return guarded([&] { *json_out = dup_string(fc::params_json(p->seq).dump(2)); });
}

fc_status fc_intervals_json(const fc_params* p, int level, char** json_out) {
    if (!p || !json_out) return fail(FC_ERROR_ARGUMENT, "fc_intervals_json: NULL argument");
    return guarded([&] {
        *json_out = dup_string(fc::intervals_json(fc::build_intervals(p->seq, level)).dump(2));
    });
}

fc_status fc_intervals_csv(const fc_params* p, int level, char** csv_out) {
    if (!p || !csv_out) return fail(FC_ERROR_ARGUMENT, "fc_intervals_csv: NULL argument");
    return guarded([&] {
        *csv_out = dup_string(fc::intervals_csv(fc::build_intervals(p->seq, level)));
    });
}

fc_status fc_gaps_json(const fc_params* p, int level, char** json_out) {
    if (!p || !json_out) return fail(FC_ERROR_ARGUMENT, "fc_gaps_json: NULL argument");
    return guarded([&] {
        *json_out = dup_string(fc::gaps_json(fc::build_intervals(p->seq, level)).dump(2));
    });
}

fc_status fc_measure_json(const fc_params* p, int level_max, char** json_out) {
    if (!p || !json_out) return fail(FC_ERROR_ARGUMENT, "fc_measure_json: NULL argument");
    return guarded([&] { *json_out = dup_string(fc::measure_json(p->seq, level_max).dump(2)); });
}

fc_status fc_eval_json(const fc_params* p, const char* x, const char* tol, char map_name,
                       char** json_out) {
    if (!p || !x || !json_out) return fail(FC_ERROR_ARGUMENT, "fc_eval_json: NULL argument");
    if (map_name != 'f' && map_name != 'g')
        return fail(FC_ERROR_ARGUMENT, "fc_eval_json: map must be 'f' or 'g'");
    return guarded([&] {
        fc::Rational xr = fc::Rational::parse(x);
        fc::Rational tr = tol ? fc::Rational::parse(tol) : fc::pow2(-(p->seq.depth - 2));
        fc::CertifiedValue v = fc::eval_limit(p->seq, xr, tr);
        if (map_name == 'g') v = fc::g_value(v);
        *json_out = dup_string(fc::eval_json(xr, map_name, v).dump(2));
    });
}

fc_status fc_plf_json(const fc_params* p, int level, char** json_out) {
    if (!p || !json_out) return fail(FC_ERROR_ARGUMENT, "fc_plf_json: NULL argument");
    return guarded([&] {
        *json_out = dup_string(fc::plf_json(fc::build_fk(p->seq, level)).dump(2));
    });
}

fc_status fc_plot_csv(const fc_params* p, int level, int sample_points, char** csv_out) {
    if (!p || !csv_out) return fail(FC_ERROR_ARGUMENT, "fc_plot_csv: NULL argument");
    return guarded([&] { *csv_out = dup_string(fc::plot_csv(p->seq, level, sample_points)); });
}

fc_status fc_similitude_json(const char* maps_spec, int depth, char** json_out) {
    if (!maps_spec || !json_out) return fail(FC_ERROR_ARGUMENT, "fc_similitude_json: NULL argument");
    fc_status st = guarded([&] {
        fc::SimilitudeIFS ifs = fc::parse_similitude_spec(maps_spec);
        *json_out = dup_string(fc::similitude_json(ifs, depth).dump(2));
    });
    return st;
}

fc_status fc_verify_json(const fc_params* p, int max_level, int* fail_count_out, char** json_out) {
    return verify_common(p, max_level, fail_count_out, json_out, false);
}

fc_status fc_verify_junit(const fc_params* p, int max_level, int* fail_count_out, char** xml_out) {
    return verify_common(p, max_level, fail_count_out, xml_out, true);
}

const char* fc_last_error(void) {
    return g_last_error.c_str();
}

void fc_string_free(char* s) {
    std::free(s);
}

}  // extern "C"
