// lp: command-line driver over the shared-library C API.
//
// Subcommands: verify, expand, newton, uniformizer, selftest.
// Exit codes: 0 success / all PASS, 1 failed check or runtime error,
// 2 usage error (bad flags, non-prime, unknown id or name).

#include "lpadic/lpadic.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>
#include <string>

using nlohmann::ordered_json;

namespace {

// RAII for strings returned by the C API
struct CStr {
    char* s = nullptr;
    ~CStr() { lp_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

struct Ctx {
    lp_ctx* c = nullptr;
    ~Ctx() { lp_ctx_free(c); }
};

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int runtime_error_msg(const std::string& payload) {
    // payload is the {"error","code","message"} JSON from the API
    auto j = ordered_json::parse(payload, nullptr, false);
    if (j.is_object() && j.contains("message"))
        std::cerr << "error: " << j["message"].get<std::string>() << "\n";
    else
        std::cerr << "error: " << payload << "\n";
    return 1;
}

// Dispatch an API failure to the right exit code.
int api_error(int err, const CStr& out) {
    if (err == LP_EINVAL) {
        auto j = ordered_json::parse(out.str(), nullptr, false);
        std::string msg = (j.is_object() && j.contains("message"))
                              ? j["message"].get<std::string>()
                              : out.str();
        return usage_error(msg);
    }
    return runtime_error_msg(out.str());
}

std::string pow_str(const std::string& exp) {
    if (exp == "0") return "";
    return " p^(" + exp + ")";
}

// [d] p^(e) + ... + O(p^(t))
std::string mn_text(const ordered_json& j) {
    std::string out;
    for (const auto& t : j.at("terms")) {
        if (!out.empty()) out += " + ";
        out += "[" + t.at("digit").get<std::string>() + "]" +
               pow_str(t.at("exp").get<std::string>());
    }
    if (out.empty()) out = "0";
    out += " + O(p^(" + j.at("trunc").get<std::string>() + "))";
    return out;
}

std::string sigma_text(const ordered_json& j) {
    long level = j.at("level").get<long>();
    std::string out =
        "sigma-level " + std::to_string(level) + ", trunc " + j.at("trunc").get<std::string>() + "\n";
    for (const auto& c : j.at("coeffs")) {
        if (c.at("terms").empty()) continue;
        long d = c.at("degree").get<long>();
        out += "  ";
        if (d == 0)
            out += "1        : ";
        else if (d == 1)
            out += "sigma_" + std::to_string(level) + "  : ";
        else
            out += "sigma_" + std::to_string(level) + "^" + std::to_string(d) + ": ";
        out += mn_text(c) + "\n";
    }
    return out;
}

void print_report_text(const ordered_json& r) {
    std::cout << r.at("id").get<std::string>() << "  p=" << r.at("p").get<long>();
    if (r.contains("params"))
        std::cout << "  (" << r.at("params").get<std::string>() << ")";
    std::cout << "  " << r.at("status").get<std::string>() << "\n";
    for (const auto& w : r.at("witness")) {
        std::cout << "    " << w.at("q").get<std::string>() << ": required "
                  << w.at("required").get<std::string>() << ", achieved "
                  << w.at("achieved").get<std::string>() << ", slack "
                  << w.at("slack").get<std::string>();
        if (w.contains("ok") && !w.at("ok").get<bool>()) std::cout << "  [FAILED]";
        std::cout << "\n";
    }
}

int cmd_verify(long prime, const std::string& id, bool json_out) {
    int err = 0;
    Ctx ctx;
    ctx.c = lp_ctx_new(prime, 0, &err);
    if (!ctx.c) return usage_error("--prime must be an odd prime");
    CStr out;
    out.s = lp_verify(ctx.c, id.empty() ? nullptr : id.c_str(), &err);
    if (err != LP_OK) return api_error(err, out);
    auto arr = ordered_json::parse(out.str());
    bool all_pass = true;
    for (const auto& r : arr)
        if (r.at("status").get<std::string>() != "PASS") all_pass = false;
    if (json_out) {
        std::cout << out.str() << "\n";
    } else {
        for (const auto& r : arr) print_report_text(r);
        std::cout << (all_pass ? "all reports PASS" : "NOT all reports PASS") << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_expand(long prime, const std::string& name, long n, long beta, long terms,
               const std::string& format) {
    int err = 0;
    Ctx ctx;
    ctx.c = lp_ctx_new(prime, 0, &err);
    if (!ctx.c) return usage_error("--prime must be an odd prime");
    CStr out;
    out.s = lp_expand(ctx.c, name.c_str(), n, beta, terms, &err);
    if (err != LP_OK) return api_error(err, out);
    if (format == "json") {
        std::cout << out.str() << "\n";
        return 0;
    }
    auto j = ordered_json::parse(out.str());
    std::string kind = j.at("kind").get<std::string>();
    std::cout << j.at("name").get<std::string>() << " (p=" << prime << "):\n";
    if (kind == "rational")
        std::cout << "  " << j.at("value").get<std::string>() << "\n";
    else if (kind == "mn")
        std::cout << "  " << mn_text(j.at("element")) << "\n";
    else
        std::cout << sigma_text(j.at("element"));
    return 0;
}

int cmd_newton(long prime, long n, long steps, const std::string& trunc, bool json_out) {
    int err = 0;
    Ctx ctx;
    ctx.c = lp_ctx_new(prime, 0, &err);
    if (!ctx.c) return usage_error("--prime must be an odd prime");
    CStr out;
    out.s = lp_newton(ctx.c, n, steps, trunc.empty() ? nullptr : trunc.c_str(), &err);
    if (err != LP_OK) return api_error(err, out);
    if (json_out) {
        std::cout << out.str() << "\n";
        return 0;
    }
    auto j = ordered_json::parse(out.str());
    std::cout << "newton run at p=" << prime << ", level n=" << n << "\n";
    for (const auto& s : j.at("steps")) {
        std::cout << "  step " << s.at("iter").get<long>() << ": slope "
                  << s.at("slope").get<std::string>() << ", mult " << s.at("mult").get<long>()
                  << ", digit " << s.at("digit").get<std::string>() << ", v(remainder) "
                  << s.at("v_after").get<std::string>() << "\n";
    }
    std::cout << "root: " << mn_text(j.at("root")) << "\n";
    std::cout << "slope bound reached: " << j.at("reached").get<std::string>()
              << (j.at("exact").get<bool>() ? " (exact root)" : "") << "\n";
    return 0;
}

int cmd_uniformizer(long prime, long m, bool json_out) {
    int err = 0;
    Ctx ctx;
    ctx.c = lp_ctx_new(prime, 0, &err);
    if (!ctx.c) return usage_error("--prime must be an odd prime");
    CStr out;
    out.s = lp_uniformizer(ctx.c, m, &err);
    if (err != LP_OK) return api_error(err, out);
    if (json_out) {
        std::cout << out.str() << "\n";
        return 0;
    }
    auto j = ordered_json::parse(out.str());
    std::cout << "uniformizer for m=" << m << " at p=" << prime << "\n";
    std::cout << "valuation: " << j.at("valuation").get<std::string>() << "\n";
    std::cout << "element:\n" << sigma_text(j.at("element"));
    return 0;
}

int cmd_selftest() {
    char* log = nullptr;
    int rc = lp_selftest(&log);
    if (log) {
        std::cout << log;
        lp_string_free(log);
    }
    std::cout << (rc == LP_OK ? "selftest PASS" : "selftest FAIL") << "\n";
    return rc == LP_OK ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for truncated p-adic Mal'cev-Neumann expansions: "
                 "verification registry, named expansions, Newton solver."};
    app.require_subcommand(1);

    long prime = 0, n = -1, beta = -1, terms = -1, steps = 0, m = 0;
    std::string id, name, format = "text", trunc;
    bool all = false, json_out = false;

    auto* v = app.add_subcommand("verify", "Run registry checks and print reports");
    v->add_option("--prime", prime, "odd prime p")->required();
    auto* oid = v->add_option("--id", id, "single identity id");
    auto* oall = v->add_flag("--all", all, "run the whole registry (default)");
    oid->excludes(oall);
    oall->excludes(oid);
    v->add_flag("--json", json_out, "emit the JSON report array");

    auto* e = app.add_subcommand("expand", "Print a named closed-form expansion");
    e->add_option("--name", name, "expansion name")->required();
    e->add_option("--prime", prime, "odd prime p")->required();
    e->add_option("--n", n, "level / approximation index (default 2)");
    e->add_option("--beta", beta, "beta parameter (default 0)");
    e->add_option("--sigma-terms", terms, "tail terms for the concrete sigma sum (default 3)");
    e->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* nw = app.add_subcommand("newton", "Iterate the slope-digit root solver");
    nw->add_option("--prime", prime, "odd prime p")->required();
    nw->add_option("--n", n, "cyclotomic level (Phi_{p^n})")->required();
    nw->add_option("--steps", steps, "maximum iterations")->required();
    nw->add_option("--trunc", trunc, "target slope bound, exact rational like 1/2");
    nw->add_flag("--json", json_out, "emit the JSON trace");

    auto* u = app.add_subcommand("uniformizer", "Certified fractional-valuation uniformizer");
    u->add_option("--prime", prime, "odd prime p")->required();
    u->add_option("--m", m, "level m >= 2")->required();
    u->add_flag("--json", json_out, "emit JSON");

    app.add_subcommand("selftest", "Run the reduced-size property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& h) {
        return app.exit(h); // prints help, exit 0
    } catch (const CLI::ParseError& pe) {
        std::cerr << "error: " << pe.what() << "\n";
        return 2;
    }

    if (app.got_subcommand("verify")) return cmd_verify(prime, id, json_out);
    if (app.got_subcommand("expand")) return cmd_expand(prime, name, n, beta, terms, format);
    if (app.got_subcommand("newton")) return cmd_newton(prime, n, steps, trunc, json_out);
    if (app.got_subcommand("uniformizer")) return cmd_uniformizer(prime, m, json_out);
    if (app.got_subcommand("selftest")) return cmd_selftest();
    return 2;
}
