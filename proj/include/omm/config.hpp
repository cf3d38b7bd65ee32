#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omm/params.hpp"
#include "omm/pipeline.hpp"

namespace omm {

/// Parse failure with the offending location baked into the message.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class AxisScale { Linear, Log };

/// A numeric config value; detuning values may be given in multiples of
/// omega_b (token suffix "omega_b"), resolved against the final omega_b of
/// the assignment sequence.
struct ValueToken {
    double value = 0.0;
    bool omega_b_units = false;
};

struct KeyAssignment {
    std::string key;
    std::string raw;   // verbatim right-hand side (string-valued keys)
    ValueToken number; // numeric keys
    int line = 0;
};

struct AxisLine {
    std::string key;
    ValueToken min;
    ValueToken max;
    int points = 0;
    AxisScale scale = AxisScale::Linear;
    int line = 0;
};

struct SweepSection {
    std::string panel;  // optional label
    std::vector<AxisLine> axes;
    std::vector<std::string> measures;  // empty = all
    int line = 0;
};

struct ConfigData {
    std::vector<KeyAssignment> model;
    std::vector<SweepSection> sweeps;
};

ConfigData parse_config_text(const std::string& text, const std::string& source_name);
ConfigData parse_config_file(const std::filesystem::path& path);

/// Splits "KEY=VALUE" (one --set argument) into an assignment.
KeyAssignment parse_override(const std::string& key_equals_value);

/// Key sets of the model schema.
bool is_effective_key(const std::string& key);
bool is_physical_key(const std::string& key);
bool is_model_key(const std::string& key);  // either of the above, plus flags

/// The full documented key list (for --help output), one "key  description"
/// pair per entry.
const std::vector<std::pair<std::string, std::string>>& model_key_docs();

/// Base parameters plus the assignment sequence from config file and --set
/// overrides, resolved into ready-to-use records.
struct ResolvedModel {
    EffectiveParams effective;
    std::optional<PhysicalDriveParams> physical;  // set when the physical keys are complete
};

/// Applies model assignments over an optional preset base. Effective-mode
/// resolution requires every effective key to be covered by preset or
/// assignment; physical mode additionally requires the drive-level keys.
/// Throws ConfigError on unknown keys, bad values, or missing keys.
ResolvedModel resolve_model(const std::optional<std::string>& preset,
                            const std::vector<KeyAssignment>& config_entries,
                            const std::vector<KeyAssignment>& overrides,
                            bool physical_mode);

/// Applies one already-resolved external-unit value (Hz, K, ...) onto the
/// effective record. Used by the sweep engine for axis substitution.
void apply_effective_key(EffectiveParams& p, const std::string& key, double external_value);

/// Keys that can serve as sweep axes (the numeric effective-parameter keys).
bool is_sweepable_key(const std::string& key);

}  // namespace omm
