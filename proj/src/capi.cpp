#include "lpadic/lpadic.h"

#include "core/registry.hpp"
#include "core/selftest.hpp"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

using nlohmann::ordered_json;

struct lp_ctx {
    lpadic::MNContext mn;
    lpadic::SigmaCtx sc;
    lpadic::Expansions ex;
    lp_ctx(long p, bool alt) : mn(p, alt), sc(mn), ex(sc) {}
};

namespace {

char* dup_cstr(const std::string& s) {
    char* out = (char*)std::malloc(s.size() + 1);
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int code_of(lpadic::Err e) { return (int)e; }

char* error_json(int code, const std::string& message, int* err) {
    if (err) *err = code;
    ordered_json j;
    j["error"] = lp_errstr(code);
    j["code"] = code;
    j["message"] = message;
    return dup_cstr(j.dump());
}

// run `fn`, mapping engine exceptions onto the C error codes
char* guarded(int* err, const std::function<std::string()>& fn) {
    try {
        std::string s = fn();
        if (err) *err = LP_OK;
        return dup_cstr(s);
    } catch (const lpadic::EngineError& e) {
        return error_json(code_of(e.code()), e.what(), err);
    } catch (const std::exception& e) {
        return error_json(LP_EINTERNAL, e.what(), err);
    }
}

ordered_json wrap_mn(const lp_ctx* c, const char* name, const lpadic::MNElement& a) {
    ordered_json j;
    j["name"] = name;
    j["kind"] = "mn";
    j["element"] = lpadic::mn_json(c->mn, a);
    return j;
}

ordered_json wrap_sigma(const lp_ctx* c, const char* name, const lpadic::SigmaElement& a) {
    ordered_json j;
    j["name"] = name;
    j["kind"] = "sigma";
    j["element"] = lpadic::sigma_json(c->sc, a);
    return j;
}

} // namespace

extern "C" {

lp_ctx* lp_ctx_new(long p, int alt_modulus, int* err) {
    if (!lpadic::is_odd_prime(p)) {
        if (err) *err = LP_EINVAL;
        return nullptr;
    }
    try {
        lp_ctx* c = new lp_ctx(p, alt_modulus != 0);
        if (err) *err = LP_OK;
        return c;
    } catch (...) {
        if (err) *err = LP_EINTERNAL;
        return nullptr;
    }
}

void lp_ctx_free(lp_ctx* ctx) { delete ctx; }

char* lp_verify(lp_ctx* ctx, const char* id, int* err) {
    if (!ctx) return error_json(LP_EINVAL, "null context", err);
    return guarded(err, [&]() {
        ordered_json arr = ordered_json::array();
        if (id) {
            arr.push_back(lpadic::report_json(lpadic::verify_identity(id, ctx->mn.p(), false)));
        } else {
            for (const auto& r : lpadic::verify_all(ctx->mn.p(), false))
                arr.push_back(lpadic::report_json(r));
        }
        return arr.dump();
    });
}

char* lp_registry(lp_ctx* ctx, int* err) {
    if (!ctx) return error_json(LP_EINVAL, "null context", err);
    return guarded(err, [&]() {
        ordered_json arr = ordered_json::array();
        for (const auto& id : lpadic::registry_ids()) {
            ordered_json e;
            e["id"] = id;
            e["method"] = lpadic::method_str(lpadic::registry_method(id));
            e["params"] = lpadic::registry_params(id);
            arr.push_back(e);
        }
        return arr.dump();
    });
}

char* lp_expand(lp_ctx* ctx, const char* name, long n, long beta, long sigma_terms, int* err) {
    if (!ctx) return error_json(LP_EINVAL, "null context", err);
    if (!name) return error_json(LP_EINVAL, "null expansion name", err);
    if (n == -1) n = 2;
    if (beta == -1) beta = 0;
    if (sigma_terms == -1) sigma_terms = 3;
    std::string nm = name;
    return guarded(err, [&, nm]() -> std::string {
        const lpadic::Expansions& ex = ctx->ex;
        long p = ctx->mn.p();
        lpadic::Rat e1(lpadic::Int(1), lpadic::Int(p - 1));
        lpadic::Rat T = lpadic::Rat(2) + lpadic::Rat(2) * e1; // default finite window
        if (nm == "U") {
            ordered_json j;
            j["name"] = "U";
            j["kind"] = "rational";
            j["p"] = p;
            j["value"] = lpadic::report_num(ex.U());
            return j.dump();
        }
        if (nm == "lambda") return wrap_mn(ctx, name, ex.lambda(T)).dump();
        if (nm == "Lambda") return wrap_mn(ctx, name, ex.Lambda(T)).dump();
        if (nm == "Lambda-hat") return wrap_mn(ctx, name, ex.Lambda_hat(T)).dump();
        if (nm == "Lambda-tilde") return wrap_mn(ctx, name, ex.Lambda_tilde(T)).dump();
        if (nm == "Lambda-hat-tilde") return wrap_mn(ctx, name, ex.Lambda_hat_tilde(T)).dump();
        if (nm == "Lambda-tilde-plus") return wrap_mn(ctx, name, ex.Lambda_tilde_plus(T)).dump();
        if (nm == "eta") return wrap_mn(ctx, name, ex.eta(T)).dump();
        if (nm == "kappa") return wrap_mn(ctx, name, ex.kappa(T)).dump();
        if (nm == "zeta-p2-approx") {
            if (n < 0) lpadic::fail(lpadic::Err::InvalidArg, "approximation index must be >= 0");
            return wrap_mn(ctx, name, ex.zeta_p2_approx(n, e1)).dump();
        }
        if (nm == "sigma") {
            if (n < 1 || sigma_terms < 1)
                lpadic::fail(lpadic::Err::InvalidArg, "sigma needs level >= 1 and terms >= 1");
            return wrap_mn(ctx, name, ctx->sc.sigma_concrete(n, sigma_terms)).dump();
        }
        if (nm == "mu0") return wrap_sigma(ctx, name, ex.mu0(lpadic::Rat(2))).dump();
        if (nm == "mu") return wrap_sigma(ctx, name, ex.mu(lpadic::Rat(2))).dump();
        if (nm == "W") return wrap_sigma(ctx, name, ex.W(lpadic::Rat(1) + lpadic::Rat(2) * e1)).dump();
        if (nm == "M") return wrap_sigma(ctx, name, ex.M()).dump();
        if (nm == "A-beta") return wrap_sigma(ctx, name, ex.A_beta(n, beta)).dump();
        if (nm == "zeta-p2-first") return wrap_sigma(ctx, name, ex.zeta_p2_first()).dump();
        if (nm == "zeta-p2") return wrap_sigma(ctx, name, ex.zeta_p2()).dump();
        if (nm == "zeta-pn") return wrap_sigma(ctx, name, ex.zeta_pn(n)).dump();
        lpadic::fail(lpadic::Err::InvalidArg, "unknown expansion name: " + nm);
    });
}

char* lp_newton(lp_ctx* ctx, long n, long steps, const char* target_trunc, int* err) {
    if (!ctx) return error_json(LP_EINVAL, "null context", err);
    return guarded(err, [&]() -> std::string {
        if (n < 1) lpadic::fail(lpadic::Err::InvalidArg, "cyclotomic level n must be >= 1");
        if (steps < 1 || steps > 500)
            lpadic::fail(lpadic::Err::InvalidArg, "steps must be in [1, 500]");
        lpadic::Rat target(steps + ctx->mn.p() + 4);
        if (target_trunc) {
            try {
                target = lpadic::Rat::parse(target_trunc);
            } catch (const std::exception&) {
                lpadic::fail(lpadic::Err::InvalidArg,
                             std::string("not an exact rational: ") + target_trunc);
            }
        }
        lpadic::MNPoly P =
            lpadic::phi_cyclotomic(ctx->mn, n, lpadic::Rat(steps + ctx->mn.p() + 5));
        lpadic::NewtonResult res = lpadic::newton_run(ctx->mn, P, target, steps);
        return lpadic::newton_trace_json(ctx->mn, res).dump();
    });
}

char* lp_uniformizer(lp_ctx* ctx, long m, int* err) {
    if (!ctx) return error_json(LP_EINVAL, "null context", err);
    return guarded(err, [&]() -> std::string {
        if (m < 2) lpadic::fail(lpadic::Err::InvalidArg, "uniformizer level m must be >= 2");
        lpadic::Expansions::Uniformizer u = ctx->ex.uniformizer(m);
        ordered_json j;
        j["m"] = u.m;
        j["valuation"] = lpadic::report_num(u.valuation);
        j["element"] = lpadic::sigma_json(ctx->sc, u.elem);
        return j.dump();
    });
}

char* lp_residual(lp_ctx* ctx, long n, long sigma_terms, int* err) {
    if (!ctx) return error_json(LP_EINVAL, "null context", err);
    return guarded(err, [&]() {
        return lpadic::report_json(lpadic::residual_check(ctx->mn.p(), n, sigma_terms)).dump();
    });
}

int lp_selftest(char** log) {
    std::string text;
    bool ok = false;
    try {
        ok = lpadic::run_selftest(text);
    } catch (const std::exception& e) {
        text += std::string("FAIL selftest aborted: ") + e.what() + "\n";
        ok = false;
    }
    if (log) *log = dup_cstr(text);
    return ok ? LP_OK : LP_EINTERNAL;
}

void lp_string_free(char* s) { std::free(s); }

const char* lp_errstr(int err) {
    switch (err) {
    case LP_OK: return "ok";
    case LP_EINVAL: return "invalid argument";
    case LP_EDOMAIN: return "domain error";
    case LP_EPRECISION: return "insufficient precision";
    case LP_ENOROOT: return "no residue root";
    case LP_EINTERNAL: return "internal error";
    }
    return "unknown error";
}

} // extern "C"
