#include <catch2/catch_amalgamated.hpp>

#include "umemura/errata.hpp"

#include <algorithm>
#include <set>
#include <string>

using namespace umemura;

TEST_CASE("ledger covers the known display divergences") {
    const auto& entries = errata_ledger();
    std::set<std::string> ids;
    for (const Erratum& e : entries) ids.insert(e.id);
    CHECK(ids.size() == entries.size());
    for (const char* required : {"T2_FACTOR2", "EVI_BRACKET_SQUARE", "H0_SQRT_SIGN",
                                 "REM2_SIGN_PATTERN", "LEM1_AB_SWAP"}) {
        INFO(required);
        CHECK(ids.count(required) == 1);
    }
}

TEST_CASE("every entry's witness confirms") {
    for (const Erratum& e : errata_ledger()) {
        INFO(e.id);
        const ErratumWitness w = e.check();
        CHECK(w.confirmed);
        CHECK_FALSE(w.evidence.empty());
        CHECK_FALSE(e.display.empty());
        CHECK_FALSE(e.corrected.empty());
    }
}

TEST_CASE("witness evidence carries the measured constants") {
    const auto& entries = errata_ledger();
    auto find = [&](const std::string& id) -> const Erratum& {
        auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const Erratum& e) { return e.id == id; });
        REQUIRE(it != entries.end());
        return *it;
    };
    CHECK(find("T2_FACTOR2").check().evidence.find("2 x recurrence value") != std::string::npos);
    CHECK(find("REM2_SIGN_PATTERN").check().evidence.find("0:+ 2:-") != std::string::npos);
    CHECK(find("LEM1_AB_SWAP").check().evidence.find("a<->b exchange") != std::string::npos);
    CHECK(find("QM_PARAM_PAIRING").check().evidence.find("fam0|brace|solved-map") !=
          std::string::npos);
}

TEST_CASE("ledger serializes as data") {
    const nlohmann::ordered_json j = errata_json();
    REQUIRE(j.is_array());
    REQUIRE(j.size() == errata_ledger().size());
    CHECK(j.front()["id"] == "T2_FACTOR2");
    for (const auto& entry : j) {
        INFO(entry["id"].get<std::string>());
        CHECK(entry["confirmed"].get<bool>());
        CHECK_FALSE(entry["evidence"].get<std::string>().empty());
    }
    const std::string dump = j.front().dump();
    CHECK(dump.find("{\"id\":") == 0);
}
