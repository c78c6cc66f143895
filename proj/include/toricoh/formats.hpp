#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "toricoh/cohomology.hpp"
#include "toricoh/toric_fan.hpp"

namespace toricoh {

using Json = nlohmann::json;

struct FanDoc {
    long dim = 0;
    std::vector<std::vector<long>> rays;
    std::vector<std::vector<long>> max_cones;  ///< 1-based, as in documents
    std::optional<std::vector<std::vector<long>>> phi;
    friend bool operator==(const FanDoc&, const FanDoc&) = default;
};

struct RingDoc {
    long n = 0;
    std::optional<std::vector<std::vector<long>>> rho;
    /// Free rows first, then one row per torsion order.
    std::optional<std::vector<std::vector<long>>> phi;
    std::vector<long> torsion;
    std::vector<std::vector<long>> gens;
    friend bool operator==(const RingDoc&, const RingDoc&) = default;
};

struct BettiDoc {
    long j = 0;
    std::vector<long> alpha;
    long mult = 1;
    friend bool operator==(const BettiDoc&, const BettiDoc&) = default;
};

struct ModuleDoc {
    std::optional<std::vector<std::vector<long>>> shifts;
    std::optional<std::vector<std::vector<long>>> quotient;
    std::optional<std::vector<BettiDoc>> betti;
    friend bool operator==(const ModuleDoc&, const ModuleDoc&) = default;
};

/// The input file: a fan, or a ring with an ideal; optionally a module and a
/// field characteristic.
struct InputDocument {
    std::optional<FanDoc> fan;
    std::optional<RingDoc> ring;
    std::optional<ModuleDoc> module;
    std::optional<long> characteristic;
    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws InvalidInput with the offending key on malformed documents.
InputDocument parse_input(const Json& j);
Json to_json(const InputDocument& doc);
ModuleDoc parse_module(const Json& j);
Json to_json(const ModuleDoc& doc);

/// Everything a command needs, built from an input document.
struct Problem {
    std::optional<ToricData> toric;
    std::unique_ptr<CohomologyEngine> engine;
    /// Sheaf indexing for fans, local indexing for rings.
    Indexing indexing = Indexing::Local;
};

Problem build_problem(const InputDocument& doc, Characteristic ch);

ModuleSpec build_module(const ModuleDoc& doc, const Grading& g);

struct CommandOptions {
    std::optional<int> i;
    std::optional<std::vector<long>> delta;
    std::optional<long> ell;
    std::optional<long> characteristic;
    std::optional<ModuleDoc> module;
    bool verify = false;
    bool profile = false;
    bool force_local = false;
    /// Corrupts the dual Sigma table before --verify compares it (testing only).
    bool inject_fault = false;
};

/// Runs sigma | cohom | bound | finiteness | oracle-check and returns the
/// report without the digest field. Throws InvalidInput, FinitenessViolation
/// or CrossCheckFailure.
Json run_command(const std::string& operation, const InputDocument& doc, const CommandOptions& opts);

Json sigma_to_json(const SigmaTable& t);
Json grading_to_json(const Grading& g);

/// Compact deterministic serialization (sorted keys, two-space indent, trailing newline).
std::string dump_report(const Json& report);

/// Exit status for an exception escaping run_command.
int exit_code_for(const std::exception& e);

std::string library_version();

}  // namespace toricoh
