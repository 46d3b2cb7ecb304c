#include "armkin/config.hpp"

#include "armkin/errors.hpp"
#include "armkin/units.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace armkin {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view text) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw ConfigError(fmt::format("config key '{}': '{}' is not a finite number", key, text));
    }
    return v;
}

std::string number(double v) { return fmt::format("{:.15g}", v); }

// One entry per key: how to read it into a config and how to print it back.
struct Field {
    std::string key;
    std::function<void(ArmConfig&, std::string_view)> read;
    std::function<std::string(const ArmConfig&)> write;
};

template <typename Ref>
Field plain(std::string key, Ref ref) {
    return {key,
            [key, ref](ArmConfig& c, std::string_view v) { ref(c) = parse_number(key, v); },
            [ref](const ArmConfig& c) { return number(ref(c)); }};
}

template <typename Ref>
Field degrees(std::string key, Ref ref) {
    return {key,
            [key, ref](ArmConfig& c, std::string_view v) { ref(c) = deg_to_rad(parse_number(key, v)); },
            [ref](const ArmConfig& c) { return number(rad_to_deg(ref(c))); }};
}

const std::vector<Field>& fields() {
    static const std::vector<Field> table = [] {
        std::vector<Field> f;
        f.push_back(plain("links.a0", [](auto& c) -> auto& { return c.links.a0; }));
        f.push_back(plain("links.a1", [](auto& c) -> auto& { return c.links.a1; }));
        f.push_back(plain("links.a2", [](auto& c) -> auto& { return c.links.a2; }));
        f.push_back(plain("links.a3", [](auto& c) -> auto& { return c.links.a3; }));
        f.push_back(plain("workspace.z_floor", [](auto& c) -> auto& { return c.workspace.z_floor; }));
        f.push_back(plain("workspace.x_min_when_y_negative",
                          [](auto& c) -> auto& { return c.workspace.x_min_when_y_negative; }));
        f.push_back(plain("workspace.x_threshold_when_y_positive",
                          [](auto& c) -> auto& { return c.workspace.x_threshold_when_y_positive; }));
        f.push_back(plain("workspace.x_clamp_when_y_positive",
                          [](auto& c) -> auto& { return c.workspace.x_clamp_when_y_positive; }));
        for (std::size_t i = 0; i < 3; ++i) {
            const std::string s = fmt::format("servo{}.", i + 1);
            f.push_back(degrees(s + "min_deg", [i](auto& c) -> auto& { return c.servos[i].min_angle; }));
            f.push_back(degrees(s + "max_deg", [i](auto& c) -> auto& { return c.servos[i].max_angle; }));
            f.push_back(degrees(s + "max_velocity_dps",
                                [i](auto& c) -> auto& { return c.servos[i].max_velocity; }));
            f.push_back(plain(s + "pulse_min_us", [i](auto& c) -> auto& { return c.servos[i].pulse_min; }));
            f.push_back(plain(s + "pulse_max_us", [i](auto& c) -> auto& { return c.servos[i].pulse_max; }));
        }
        for (std::size_t i = 0; i < 3; ++i) {
            const std::string j = fmt::format("joints.t{}_", i + 1);
            f.push_back(degrees(j + "min_deg", [i](auto& c) -> auto& { return c.joint_limits.joints[i].min; }));
            f.push_back(degrees(j + "max_deg", [i](auto& c) -> auto& { return c.joint_limits.joints[i].max; }));
        }
        for (std::size_t i = 0; i < 3; ++i) {
            f.push_back(degrees(fmt::format("home.t{}_deg", i + 1), [i](auto& c) -> decltype(auto) { return c.home[i]; }));
        }
        f.push_back({"ik.domain_mode",
                     [](ArmConfig& c, std::string_view v) {
                         const auto m = parse_domain_mode(v);
                         if (!m) throw ConfigError(fmt::format("config key 'ik.domain_mode': unknown mode '{}'", v));
                         c.domain_mode = *m;
                     },
                     [](const ArmConfig& c) { return std::string(to_string(c.domain_mode)); }});
        f.push_back({"ik.branch_mode",
                     [](ArmConfig& c, std::string_view v) {
                         const auto m = parse_branch_mode(v);
                         if (!m) throw ConfigError(fmt::format("config key 'ik.branch_mode': unknown mode '{}'", v));
                         c.branch_mode = *m;
                     },
                     [](const ArmConfig& c) { return std::string(to_string(c.branch_mode)); }});
        f.push_back(plain("sweep.max_error_rel", [](auto& c) -> auto& { return c.sweep_max_error_rel; }));
        return f;
    }();
    return table;
}

} // namespace

void validate(const ArmConfig& config) {
    try {
        validate(config.arm_model());
        validate(config.joint_limits);
        initial_state(config.arm_model(), config.home);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    }
    if (!std::isfinite(config.sweep_max_error_rel) || !(config.sweep_max_error_rel > 0.0)) {
        throw ConfigError("invalid config: sweep.max_error_rel must be positive");
    }
}

ArmConfig parse_config(std::string_view text) {
    std::map<std::string_view, const Field*> by_key;
    for (const Field& f : fields()) {
        by_key.emplace(f.key, &f);
    }

    ArmConfig config;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(fmt::format("config line {}: expected 'key = value'", line_no));
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        const auto it = by_key.find(key);
        if (it == by_key.end()) {
            throw ConfigError(fmt::format("config line {}: unknown key '{}'", line_no, key));
        }
        if (!seen.emplace(key).second) {
            throw ConfigError(fmt::format("config line {}: duplicate key '{}'", line_no, key));
        }
        it->second->read(config, value);
    }
    validate(config);
    return config;
}

ArmConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ArmConfig& config) {
    std::string out;
    for (const Field& f : fields()) {
        out += fmt::format("{} = {}\n", f.key, f.write(config));
    }
    return out;
}

} // namespace armkin
