#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/registry.hpp"

using namespace lpadic;

namespace {

const std::vector<std::string> kAllIds = {
    "cor-12551",     "coro-38801", "coro-46486",        "coro-5955",
    "it-1",          "it-2",       "it-3",              "it-4",
    "it-a",          "it-b",       "it-x",              "lem-13884",
    "lem-16960",     "lem-2239",   "lem-23648",         "lem-23892",
    "lem-26652-premise", "lem-29041new", "lem-36099",   "lem-38120",
    "lem-43810",     "lem-52893",  "lem-fenmu",         "lem-monter",
    "lemma-55108",   "prop-35904", "prop-47112",        "prop-51912",
    "prop-truncatedfinal", "thm-harmonic", "thm-mainexpansion"};

} // namespace

TEST_CASE("catalog: ids, sorting, methods, parameter notes") {
    CHECK(registry_ids() == kAllIds);
    for (size_t i = 1; i < kAllIds.size(); ++i) CHECK(kAllIds[i - 1] < kAllIds[i]);
    CHECK(registry_has("thm-harmonic"));
    CHECK(!registry_has("thm-nonsense"));
    CHECK(registry_method("thm-harmonic") == Method::Congruence);
    CHECK(registry_method("it-a") == Method::MNExact);
    CHECK(registry_method("lemma-55108") == Method::MNExact);
    CHECK(registry_method("thm-mainexpansion") == Method::SigmaSymbolic);
    CHECK(registry_method("cor-12551") == Method::SigmaSymbolic);
    CHECK(registry_method("prop-47112") == Method::SlopeBound);
    CHECK(registry_method("lem-26652-premise") == Method::SlopeBound);
    CHECK_THROWS_AS(registry_method("thm-nonsense"), EngineError);

    CHECK(registry_params("thm-harmonic") == "");
    CHECK(registry_params("cor-12551") == "(n,m) in {(1,1),(1,2),(2,1)}");
    CHECK(registry_params("coro-5955") == "n=2, beta in {0,1,2}");
    CHECK(registry_params("prop-51912") == "n=2, beta in {0,1,2}");
    CHECK(registry_params("lem-29041new") == "n=2, beta in {0,1,2}, k=1..2p-1");
    CHECK(registry_params("lem-fenmu") == "n=2");
    CHECK(registry_params("prop-truncatedfinal") == "n in {2,3}");

    long counts[4] = {0, 0, 0, 0};
    for (const auto& id : kAllIds) counts[(int)registry_method(id)]++;
    CHECK(counts[(int)Method::Congruence] == 10);
    CHECK(counts[(int)Method::MNExact] == 6);
    CHECK(counts[(int)Method::SigmaSymbolic] == 13);
    CHECK(counts[(int)Method::SlopeBound] == 2);
}

TEST_CASE("status and method names") {
    CHECK(status_str(Status::Pass) == "PASS");
    CHECK(status_str(Status::Fail) == "FAIL");
    CHECK(status_str(Status::NeedsReview) == "NEEDS-REVIEW");
    CHECK(status_str(Status::Error) == "ERROR");
    CHECK(method_str(Method::Congruence) == "congruence");
    CHECK(method_str(Method::MNExact) == "mn-exact");
    CHECK(method_str(Method::SigmaSymbolic) == "sigma-symbolic");
    CHECK(method_str(Method::SlopeBound) == "slope-bound");
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(11));
    CHECK(!is_odd_prime(2));
    CHECK(!is_odd_prime(4));
    CHECK(!is_odd_prime(9));
    CHECK(!is_odd_prime(1));
    CHECK(!is_odd_prime(-3));
}

TEST_CASE("every identity passes at p = 3") {
    for (const auto& rep : verify_all(3)) {
        INFO(rep.id);
        CHECK(rep.status == Status::Pass);
        for (const auto& w : rep.witness) {
            INFO(rep.id << " / " << w.quantity);
            CHECK(w.ok);
        }
    }
}

TEST_CASE("every identity passes at p = 5") {
    for (const auto& rep : verify_all(5)) {
        INFO(rep.id);
        CHECK(rep.status == Status::Pass);
    }
}

TEST_CASE("congruence family passes at p = 11") {
    for (const auto& rep : verify_method(Method::Congruence, 11)) {
        INFO(rep.id);
        CHECK(rep.status == Status::Pass);
    }
}

TEST_CASE("harmonic congruences: the frozen p = 7 witness") {
    VerificationReport rep = verify_identity("thm-harmonic", 7);
    CHECK(rep.status == Status::Pass);
    REQUIRE(rep.witness.size() == 6);
    for (long k = 1; k <= 6; ++k)
        CHECK(rep.witness[k - 1].quantity == "k=" + std::to_string(k));
    // the one strict surplus in the grid: k = 4 carries an extra factor of 7
    const WitnessLine& w4 = rep.witness[3];
    CHECK(w4.required == "1");
    CHECK(w4.achieved == "2");
    CHECK(w4.slack == "1");
    for (long k : {1, 2, 3, 5, 6}) CHECK(rep.witness[k - 1].achieved == "1");

    nlohmann::ordered_json j = report_json(rep);
    CHECK(j["id"] == "thm-harmonic");
    CHECK(j["p"] == 7);
    CHECK(j["status"] == "PASS");
    CHECK(!j.contains("params"));
    CHECK(j["witness"][3] == nlohmann::ordered_json(
                                 {{"q", "k=4"}, {"required", "1"}, {"achieved", "2"}, {"slack", "1"}}));
    // passing lines never carry an explicit ok flag
    for (const auto& w : j["witness"]) CHECK(!w.contains("ok"));
}

TEST_CASE("parameterized reports expose their parameter note") {
    VerificationReport rep = verify_identity("cor-12551", 3);
    CHECK(rep.status == Status::Pass);
    nlohmann::ordered_json j = report_json(rep);
    CHECK(j.contains("params"));
    CHECK(j["params"] == "(n,m) in {(1,1),(1,2),(2,1)}");
    auto keys = std::vector<std::string>();
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"id", "p", "params", "status", "witness"});
}

TEST_CASE("non-prime inputs produce ERROR reports, unknown ids throw") {
    VerificationReport rep = verify_identity("thm-harmonic", 4);
    CHECK(rep.status == Status::Error);
    REQUIRE(!rep.witness.empty());
    CHECK(!rep.witness[0].ok);
    CHECK(verify_identity("it-1", 9).status == Status::Error);
    CHECK(verify_identity("it-1", 2).status == Status::Error);
    CHECK_THROWS_AS(verify_identity("thm-nonsense", 3), EngineError);
}

TEST_CASE("verify_method returns exactly its family, sorted") {
    auto reps = verify_method(Method::SlopeBound, 3);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].id == "lem-26652-premise");
    CHECK(reps[1].id == "prop-47112");
    for (const auto& r : reps) CHECK(r.status == Status::Pass);
}

TEST_CASE("residual runs: substituted root vs independent Newton rerun") {
    VerificationReport rep = residual_check(3, 2, 2);
    CHECK(rep.id == "residual-check");
    CHECK(rep.params == "n=2, K=2");
    CHECK(rep.status == Status::Pass);
    VerificationReport rep32 = residual_check(3, 3, 1);
    CHECK(rep32.status == Status::Pass);
    // domain guards: ERROR reports, not crashes
    CHECK(residual_check(4, 2, 2).status == Status::Error);
    CHECK(residual_check(3, 1, 2).status == Status::Error);
    CHECK(residual_check(3, 2, 0).status == Status::Error);
}

TEST_CASE("verdicts are independent of the residue-field presentation") {
    // rerun a cross-section under the alternative modulus at p = 3
    for (const char* id : {"thm-harmonic", "it-a", "lem-13884", "thm-mainexpansion",
                           "prop-47112", "cor-12551"}) {
        const std::string sid(id);
        VerificationReport rep = verify_identity(sid, 3, true);
        INFO(sid);
        CHECK(rep.status == Status::Pass);
    }
}

TEST_CASE("report JSON is byte-stable across independent runs") {
    std::string a = report_json(verify_identity("thm-mainexpansion", 3)).dump();
    std::string b = report_json(verify_identity("thm-mainexpansion", 3)).dump();
    CHECK(a == b);
    std::string c, d;
    for (const auto& r : verify_method(Method::Congruence, 5)) c += report_json(r).dump();
    for (const auto& r : verify_method(Method::Congruence, 5)) d += report_json(r).dump();
    CHECK(c == d);
}
