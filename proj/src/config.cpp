#include "omm/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace omm {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
    throw ConfigError(source + ":" + std::to_string(line) + ": " + what);
}

// Numeric value with optional "omega_b" unit suffix ("-1omega_b", "2 * omega_b").
ValueToken parse_value_token(const std::string& source, int line, const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) fail(source, line, "empty value");
    const char* begin = t.c_str();
    char* end = nullptr;
    ValueToken tok;
    tok.value = std::strtod(begin, &end);
    if (end == begin) fail(source, line, "expected a number, got '" + t + "'");
    std::string rest = trim(std::string(end));
    if (!rest.empty() && rest.front() == '*') rest = trim(rest.substr(1));
    if (rest == "omega_b") {
        tok.omega_b_units = true;
    } else if (!rest.empty()) {
        fail(source, line, "trailing characters after number: '" + rest + "'");
    }
    if (!std::isfinite(tok.value)) fail(source, line, "value must be finite");
    return tok;
}

const std::set<std::string> effective_keys = {
    "omega_b_hz", "kappa_a_hz", "kappa_c_hz", "kappa_m_hz", "gamma_b_hz", "T_K",
    "G_a_hz", "G_c_hz", "G_m_hz", "Delta_a_hz", "Delta_c_hz", "Delta_m_hz", "omega_m_hz",
};

const std::set<std::string> physical_keys = {
    "P_a_W", "P_c_W", "lambda_L_m", "omega_0_hz", "B_d_T", "N_d",
    "g_a_hz", "g_c_hz", "g_m_hz", "Delta_a0_hz", "Delta_c0_hz", "Delta_m0_hz",
};

const std::set<std::string> flag_keys = {
    "drift_convention", "nbar_m_override", "nbar_b_override",
};

const std::set<std::string> detuning_keys = {
    "Delta_a_hz", "Delta_c_hz", "Delta_m_hz", "Delta_a0_hz", "Delta_c0_hz", "Delta_m0_hz",
};

bool is_string_key(const std::string& key) { return key == "drift_convention"; }

}  // namespace

bool is_effective_key(const std::string& key) { return effective_keys.count(key) > 0; }
bool is_physical_key(const std::string& key) { return physical_keys.count(key) > 0; }
bool is_model_key(const std::string& key) {
    return is_effective_key(key) || is_physical_key(key) || flag_keys.count(key) > 0;
}
bool is_sweepable_key(const std::string& key) { return is_effective_key(key); }

const std::vector<std::pair<std::string, std::string>>& model_key_docs() {
    static const std::vector<std::pair<std::string, std::string>> docs = {
        {"omega_b_hz", "phonon frequency omega_b/2pi [Hz]"},
        {"kappa_a_hz", "cavity a decay kappa_a/2pi [Hz]"},
        {"kappa_c_hz", "cavity c decay kappa_c/2pi [Hz]"},
        {"kappa_m_hz", "magnon decay kappa_m/2pi [Hz]"},
        {"gamma_b_hz", "phonon decay gamma_b/2pi [Hz]"},
        {"T_K", "bath temperature [K]"},
        {"G_a_hz", "effective coupling G_a/2pi [Hz]"},
        {"G_c_hz", "effective coupling G_c/2pi [Hz]"},
        {"G_m_hz", "effective coupling G_m/2pi [Hz]"},
        {"Delta_a_hz", "effective detuning Delta_a/2pi [Hz]; accepts 'omega_b' unit token"},
        {"Delta_c_hz", "effective detuning Delta_c/2pi [Hz]; accepts 'omega_b' unit token"},
        {"Delta_m_hz", "effective detuning Delta_m/2pi [Hz]; accepts 'omega_b' unit token"},
        {"omega_m_hz", "magnon frequency omega_m/2pi [Hz], thermal occupation only (default 10 GHz)"},
        {"drift_convention", "'paper' (couplings in X rows, default) or 'symmetric' (Y rows)"},
        {"nbar_m_override", "override computed magnon thermal occupation (testing)"},
        {"nbar_b_override", "override computed phonon thermal occupation (testing)"},
        {"P_a_W", "physical mode: laser power into cavity a [W]"},
        {"P_c_W", "physical mode: laser power into cavity c [W]"},
        {"lambda_L_m", "physical mode: laser wavelength [m] (default 1550e-9)"},
        {"omega_0_hz", "physical mode: microwave drive frequency omega_0/2pi [Hz]"},
        {"B_d_T", "physical mode: microwave field amplitude [T]"},
        {"N_d", "physical mode: total spin count (>= 1)"},
        {"g_a_hz", "physical mode: single-photon coupling g_a/2pi [Hz]"},
        {"g_c_hz", "physical mode: single-photon coupling g_c/2pi [Hz]"},
        {"g_m_hz", "physical mode: single-magnon coupling g_m/2pi [Hz]"},
        {"Delta_a0_hz", "physical mode: bare detuning Delta_a0/2pi [Hz]; accepts 'omega_b'"},
        {"Delta_c0_hz", "physical mode: bare detuning Delta_c0/2pi [Hz]; accepts 'omega_b'"},
        {"Delta_m0_hz", "physical mode: bare detuning Delta_m0/2pi [Hz]; accepts 'omega_b'"},
    };
    return docs;
}

ConfigData parse_config_text(const std::string& text, const std::string& source_name) {
    ConfigData data;
    std::istringstream in(text);
    std::string raw_line;
    int line_no = 0;
    SweepSection* current_sweep = nullptr;

    while (std::getline(in, raw_line)) {
        ++line_no;
        std::string line = raw_line;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(source_name, line_no, "unterminated section header");
            const std::string section = trim(line.substr(1, line.size() - 2));
            if (section != "sweep")
                fail(source_name, line_no, "unknown section '" + section + "' (only [sweep] exists)");
            data.sweeps.push_back(SweepSection{});
            data.sweeps.back().line = line_no;
            current_sweep = &data.sweeps.back();
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(source_name, line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(source_name, line_no, "empty key");

        if (current_sweep == nullptr) {
            if (!is_model_key(key)) fail(source_name, line_no, "unknown key '" + key + "'");
            KeyAssignment kv;
            kv.key = key;
            kv.raw = value;
            kv.line = line_no;
            if (!is_string_key(key)) {
                kv.number = parse_value_token(source_name, line_no, value);
                if (kv.number.omega_b_units && detuning_keys.count(key) == 0)
                    fail(source_name, line_no, "'omega_b' unit token is only valid for detunings");
            }
            data.model.push_back(kv);
        } else {
            if (key == "panel") {
                current_sweep->panel = value;
            } else if (key == "axis") {
                const auto parts = split_commas(value);
                if (parts.size() != 5)
                    fail(source_name, line_no, "axis needs 'key, min, max, points, scale'");
                AxisLine ax;
                ax.key = parts[0];
                if (!is_sweepable_key(ax.key))
                    fail(source_name, line_no, "'" + ax.key + "' is not a sweepable parameter");
                ax.min = parse_value_token(source_name, line_no, parts[1]);
                ax.max = parse_value_token(source_name, line_no, parts[2]);
                if ((ax.min.omega_b_units || ax.max.omega_b_units) && detuning_keys.count(ax.key) == 0)
                    fail(source_name, line_no, "'omega_b' unit token is only valid for detunings");
                char* end = nullptr;
                ax.points = static_cast<int>(std::strtol(parts[3].c_str(), &end, 10));
                if (end == parts[3].c_str() || *end != '\0' || ax.points < 2)
                    fail(source_name, line_no, "axis point count must be an integer >= 2");
                if (parts[4] == "linear") ax.scale = AxisScale::Linear;
                else if (parts[4] == "log") ax.scale = AxisScale::Log;
                else fail(source_name, line_no, "axis scale must be 'linear' or 'log'");
                ax.line = line_no;
                if (current_sweep->axes.size() >= 2)
                    fail(source_name, line_no, "at most two axes per sweep");
                current_sweep->axes.push_back(ax);
            } else if (key == "measures") {
                current_sweep->measures = split_commas(value);
                static const std::set<std::string> known = {
                    "E_am", "E_cm", "E_ac", "R_min", "dC_am", "dC_cm", "stability"};
                for (const auto& m : current_sweep->measures)
                    if (known.count(m) == 0)
                        fail(source_name, line_no, "unknown measure '" + m + "'");
            } else {
                fail(source_name, line_no, "unknown sweep key '" + key + "'");
            }
        }
    }

    for (const auto& sweep : data.sweeps)
        if (sweep.axes.empty())
            fail(source_name, sweep.line, "[sweep] section needs at least one axis line");
    return data;
}

ConfigData parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path.filename().string());
}

KeyAssignment parse_override(const std::string& key_equals_value) {
    const auto eq = key_equals_value.find('=');
    if (eq == std::string::npos)
        throw ConfigError("--set expects KEY=VALUE, got '" + key_equals_value + "'");
    const std::string key = trim(key_equals_value.substr(0, eq));
    const std::string value = trim(key_equals_value.substr(eq + 1));
    if (!is_model_key(key)) throw ConfigError("--set: unknown key '" + key + "'");
    KeyAssignment kv;
    kv.key = key;
    kv.raw = value;
    kv.line = 0;
    if (!is_string_key(key)) {
        kv.number = parse_value_token("--set " + key, 0, value);
        if (kv.number.omega_b_units && detuning_keys.count(key) == 0)
            throw ConfigError("--set: 'omega_b' unit token is only valid for detunings");
    }
    return kv;
}

void apply_effective_key(EffectiveParams& p, const std::string& key, double v) {
    if (key == "omega_b_hz") p.omega_b = hz_to_rad(v);
    else if (key == "kappa_a_hz") p.kappa_a = hz_to_rad(v);
    else if (key == "kappa_c_hz") p.kappa_c = hz_to_rad(v);
    else if (key == "kappa_m_hz") p.kappa_m = hz_to_rad(v);
    else if (key == "gamma_b_hz") p.gamma_b = hz_to_rad(v);
    else if (key == "T_K") p.T = v;
    else if (key == "G_a_hz") p.G_a = hz_to_rad(v);
    else if (key == "G_c_hz") p.G_c = hz_to_rad(v);
    else if (key == "G_m_hz") p.G_m = hz_to_rad(v);
    else if (key == "Delta_a_hz") p.Delta_a = hz_to_rad(v);
    else if (key == "Delta_c_hz") p.Delta_c = hz_to_rad(v);
    else if (key == "Delta_m_hz") p.Delta_m = hz_to_rad(v);
    else if (key == "omega_m_hz") p.omega_m = hz_to_rad(v);
    else throw ConfigError("apply_effective_key: '" + key + "' is not an effective parameter");
}

ResolvedModel resolve_model(const std::optional<std::string>& preset,
                            const std::vector<KeyAssignment>& config_entries,
                            const std::vector<KeyAssignment>& overrides,
                            bool physical_mode) {
    std::vector<KeyAssignment> sequence = config_entries;
    sequence.insert(sequence.end(), overrides.begin(), overrides.end());

    // The omega_b unit token always refers to the final omega_b of the
    // assignment sequence.
    EffectiveParams eff;
    eff.omega_m = hz_to_rad(10e9);
    std::set<std::string> covered;
    if (preset) {
        eff = load_preset(*preset);
        for (const auto& k : effective_keys) covered.insert(k);
    }
    double omega_b_hz = rad_to_hz(eff.omega_b);
    for (const auto& kv : sequence) {
        if (kv.key == "omega_b_hz") {
            if (kv.number.omega_b_units)
                throw ConfigError("omega_b_hz cannot be given in omega_b units");
            omega_b_hz = kv.number.value;
        }
    }
    if (omega_b_hz <= 0.0) throw ConfigError("omega_b_hz must be set to a positive value");

    auto resolved = [&](const ValueToken& tok) {
        return tok.omega_b_units ? tok.value * omega_b_hz : tok.value;
    };

    PhysicalDriveParams phys;
    phys.omega_L = two_pi * PhysicalConstants::c_light / 1550e-9;
    std::set<std::string> phys_covered = {"lambda_L_m"};
    bool any_physical = false;

    for (const auto& kv : sequence) {
        const double v = is_string_key(kv.key) ? 0.0 : resolved(kv.number);
        if (is_effective_key(kv.key)) {
            apply_effective_key(eff, kv.key, v);
            covered.insert(kv.key);
        } else if (is_physical_key(kv.key)) {
            any_physical = true;
            phys_covered.insert(kv.key);
            if (kv.key == "P_a_W") phys.P_a = v;
            else if (kv.key == "P_c_W") phys.P_c = v;
            else if (kv.key == "lambda_L_m") {
                if (v <= 0.0) throw ConfigError("lambda_L_m must be > 0");
                phys.omega_L = two_pi * PhysicalConstants::c_light / v;
            } else if (kv.key == "omega_0_hz") phys.omega_0 = hz_to_rad(v);
            else if (kv.key == "B_d_T") phys.B_d = v;
            else if (kv.key == "N_d") phys.N_d = v;
            else if (kv.key == "g_a_hz") phys.g_a = hz_to_rad(v);
            else if (kv.key == "g_c_hz") phys.g_c = hz_to_rad(v);
            else if (kv.key == "g_m_hz") phys.g_m = hz_to_rad(v);
            else if (kv.key == "Delta_a0_hz") phys.Delta_a0 = hz_to_rad(v);
            else if (kv.key == "Delta_c0_hz") phys.Delta_c0 = hz_to_rad(v);
            else if (kv.key == "Delta_m0_hz") phys.Delta_m0 = hz_to_rad(v);
        } else if (kv.key == "drift_convention") {
            eff.convention = drift_convention_from_string(kv.raw);
        } else if (kv.key == "nbar_m_override") {
            eff.nbar_m_override = v;
        } else if (kv.key == "nbar_b_override") {
            eff.nbar_b_override = v;
        }
    }

    ResolvedModel out;
    if (physical_mode) {
        std::vector<std::string> missing;
        for (const auto& k : physical_keys)
            if (phys_covered.count(k) == 0) missing.push_back(k);
        for (const std::string k : {"omega_b_hz", "kappa_a_hz", "kappa_c_hz", "kappa_m_hz",
                                    "gamma_b_hz", "T_K"})
            if (covered.count(k) == 0) missing.push_back(k);
        if (!missing.empty()) {
            std::string msg = "physical mode is missing keys:";
            for (const auto& k : missing) msg += " " + k;
            throw ConfigError(msg);
        }
        phys.omega_b = eff.omega_b;
        phys.kappa_a = eff.kappa_a;
        phys.kappa_c = eff.kappa_c;
        phys.kappa_m = eff.kappa_m;
        phys.gamma_b = eff.gamma_b;
        phys.T = eff.T;
        phys.validate();
        out.physical = phys;
    } else {
        (void)any_physical;  // physical keys are inert extras in effective mode
        std::vector<std::string> missing;
        for (const auto& k : effective_keys)
            if (covered.count(k) == 0 && k != "omega_m_hz") missing.push_back(k);
        if (!missing.empty()) {
            std::string msg = "missing effective-parameter keys (or use --preset):";
            for (const auto& k : missing) msg += " " + k;
            throw ConfigError(msg);
        }
    }
    eff.validate();
    out.effective = eff;
    return out;
}

}  // namespace omm
