#pragma once

// Runs every check on one instance and collects a machine-readable report.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualpolar/forms.hpp"
#include "dualpolar/lattice.hpp"

namespace dualpolar::verify {

struct InstanceSpec {
    forms::Family family = forms::Family::C;
    int d = 2;
    int r = 2;

    std::string name() const { return forms::instance_name(family, d, r); }
};

/// C_2(2), C_3(2), B_2(3), D_3(2), 2D_3(2), 2A_3(2), 2A_4(2).
std::vector<InstanceSpec> default_matrix();

/// |X| = a_0 from the product formula, before any enumeration.
BigInt predicted_vertex_count(const InstanceSpec& spec);

enum class Status { Pass, Fail, Skipped };
std::string_view status_name(Status s) noexcept;

struct CheckRecord {
    std::string id;
    std::string title;
    Status status = Status::Skipped;
    std::string reason; // failure message or skip reason
    nlohmann::json data = nlohmann::json::object();
    double seconds = 0;
};

struct VerificationReport {
    InstanceSpec spec;
    nlohmann::json parameters;
    std::vector<CheckRecord> checks;

    /// No check failed.
    bool ok() const;
    const CheckRecord& check(std::string_view id) const;
    nlohmann::json to_json(bool timings = true) const;
};

struct Options {
    int lattice_pair_limit = 5000;   // elements of L for exhaustive pair checks
    int lattice_samples = 10000;
    int base_spaces = 20;            // W per instance for the isotropic counts
    int random_vectors = 100;
    std::uint64_t seed = 20240601;
};

/// Check ids in report order.
const std::vector<std::string>& check_ids();

VerificationReport verify_instance(const InstanceSpec& spec, const Options& opt = {});
/// Same checks on an already built lattice (e.g. reloaded from JSON).
VerificationReport verify_lattice(std::shared_ptr<const lattice::PolarLattice> lat, const Options& opt = {});

} // namespace dualpolar::verify
