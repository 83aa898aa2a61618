#include "torusmirror/torusmirror.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "commands.hpp"
#include "errors.hpp"
#include "series_json.hpp"
#include "theta.hpp"

struct tm_series {
    tmirror::LaurentSeries value;
};

struct tm_report {
    tmirror::cli::Report value;
};

namespace {

thread_local std::string last_error;

tm_status fail(tm_status status, const char* message)
{
    last_error = message;
    return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
tm_status guarded(Body&& body) noexcept
{
    try {
        return body();
    } catch (const tmirror::CheckFailed& e) {
        return fail(TM_CHECK_FAILED, e.what());
    } catch (const tmirror::PrecisionError& e) {
        return fail(TM_ERR_PRECISION, e.what());
    } catch (const tmirror::InvalidArgument& e) {
        return fail(TM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const tmirror::DomainError& e) {
        return fail(TM_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(TM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TM_ERR_INTERNAL, "unknown error");
    }
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what)
{
    if (p == nullptr) {
        throw tmirror::InvalidArgument(std::string("null ") + what);
    }
}

tm_status emit(tm_series** out, tmirror::LaurentSeries s)
{
    require(out, "output pointer");
    *out = new tm_series{std::move(s)};
    return TM_OK;
}

template <typename Run>
tm_status run_report(tm_report** out, Run&& run)
{
    if (out != nullptr) {
        *out = nullptr;
    }
    return guarded([&] {
        require(out, "output pointer");
        auto* r = new tm_report{run()};
        *out = r;
        if (!r->value.passed) {
            last_error = r->value.command + ": a check failed";
            return TM_CHECK_FAILED;
        }
        return TM_OK;
    });
}

template <typename Fn>
tm_status series_op(tm_series** out, Fn&& fn)
{
    if (out != nullptr) {
        *out = nullptr;
    }
    return guarded([&] { return emit(out, fn()); });
}

} // namespace

extern "C" {

const char* tm_version(void)
{
    return "1.0.0";
}

const char* tm_status_string(tm_status status)
{
    switch (status) {
    case TM_OK: return "ok";
    case TM_CHECK_FAILED: return "check failed";
    case TM_ERR_PRECISION: return "precision exhausted";
    case TM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TM_ERR_DOMAIN: return "domain error";
    case TM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* tm_last_error(void)
{
    return last_error.c_str();
}

void tm_string_free(char* s)
{
    std::free(s);
}

tm_status tm_series_theta(char family, long long index, long long order_y, tm_series** out)
{
    return series_op(out, [&] {
        return tmirror::theta::family_series(tmirror::theta::parse_family(family), index, order_y);
    });
}

tm_status tm_series_from_json(const char* record, tm_series** out)
{
    return series_op(out, [&] {
        require(record, "record");
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(record);
        } catch (const nlohmann::json::exception& e) {
            throw tmirror::InvalidArgument(std::string("malformed JSON: ") + e.what());
        }
        auto p = tmirror::parse_series_record(parsed);
        return p.x_base ? tmirror::stretch(p.series, 4) : p.series;
    });
}

tm_status tm_series_add(const tm_series* a, const tm_series* b, tm_series** out)
{
    return series_op(out, [&] {
        require(a, "series");
        require(b, "series");
        return a->value + b->value;
    });
}

tm_status tm_series_mul(const tm_series* a, const tm_series* b, tm_series** out)
{
    return series_op(out, [&] {
        require(a, "series");
        require(b, "series");
        return a->value * b->value;
    });
}

tm_status tm_series_inv(const tm_series* a, tm_series** out)
{
    return series_op(out, [&] {
        require(a, "series");
        return tmirror::inverse(a->value);
    });
}

tm_status tm_series_pow(const tm_series* a, unsigned n, tm_series** out)
{
    return series_op(out, [&] {
        require(a, "series");
        return tmirror::pow(a->value, n);
    });
}

long long tm_series_valuation(const tm_series* s)
{
    return s == nullptr ? 0 : s->value.valuation();
}

long long tm_series_truncation(const tm_series* s)
{
    return s == nullptr ? 0 : s->value.truncation();
}

tm_status tm_series_coeff(const tm_series* s, long long exponent, char** out)
{
    if (out != nullptr) {
        *out = nullptr;
    }
    return guarded([&] {
        require(s, "series");
        require(out, "output pointer");
        *out = copy_string(tmirror::fraction_string(s->value.coeff(exponent)));
        return TM_OK;
    });
}

tm_status tm_series_eq_to_order(const tm_series* a, const tm_series* b, long long order_y, int* equal)
{
    return guarded([&] {
        require(a, "series");
        require(b, "series");
        require(equal, "output pointer");
        *equal = tmirror::eq_to_order(a->value, b->value, order_y) ? 1 : 0;
        return TM_OK;
    });
}

tm_status tm_series_to_json(const tm_series* s, int prefer_x, char** out)
{
    if (out != nullptr) {
        *out = nullptr;
    }
    return guarded([&] {
        require(s, "series");
        require(out, "output pointer");
        const auto rec = prefer_x ? tmirror::series_record_preferring_x(s->value) : tmirror::series_record(s->value);
        *out = copy_string(rec.dump());
        return TM_OK;
    });
}

void tm_series_free(tm_series* s)
{
    delete s;
}

tm_status tm_run_theta(char family, long long index, long long order_x, tm_report** out)
{
    return run_report(out, [&] {
        return tmirror::cli::run_theta(tmirror::theta::parse_family(family), index, order_x);
    });
}

tm_status tm_run_verify(const char* which, long long order_x, tm_report** out)
{
    return run_report(out, [&] {
        require(which, "verification name");
        return tmirror::cli::run_verify(which, order_x);
    });
}

tm_status tm_run_jcheck(long long order_x, int n_terms, tm_report** out)
{
    return run_report(out, [&] { return tmirror::cli::run_jcheck(order_x, n_terms); });
}

tm_status tm_run_matrix(long long order_x, tm_report** out)
{
    return run_report(out, [&] { return tmirror::cli::run_matrix(order_x); });
}

tm_status tm_run_relation(long long order_x, tm_report** out)
{
    return run_report(out, [&] { return tmirror::cli::run_relation(order_x); });
}

long long tm_jcheck_required_order_x(int n_terms)
{
    return n_terms < 1 ? 0 : tmirror::cli::required_order_x(n_terms);
}

int tm_report_passed(const tm_report* r)
{
    return (r != nullptr && r->value.passed) ? 1 : 0;
}

tm_status tm_report_render(const tm_report* r, tm_format format, char** out)
{
    if (out != nullptr) {
        *out = nullptr;
    }
    return guarded([&] {
        require(r, "report");
        require(out, "output pointer");
        switch (format) {
        case TM_FORMAT_TEXT: *out = copy_string(r->value.text); break;
        case TM_FORMAT_JSON: *out = copy_string(r->value.json.dump(2) + "\n"); break;
        default: throw tmirror::InvalidArgument("unknown report format");
        }
        return TM_OK;
    });
}

void tm_report_free(tm_report* r)
{
    delete r;
}

} // extern "C"
