#include "armkin/service.hpp"

#include "armkin/units.hpp"

#include <httplib.h>

#include <cmath>
#include <condition_variable>

namespace armkin {

using nlohmann::json;

namespace {

json degrees(const JointAngles& q) { return json::array({rad_to_deg(q.t1), rad_to_deg(q.t2), rad_to_deg(q.t3)}); }

json rule_list(const ClampReport& report) {
    json rules = json::array();
    for (ClampRule r : report.rules_applied) {
        rules.push_back(std::string(to_string(r)));
    }
    return rules;
}

bool finite_number(const json& body, const char* key) {
    return body.contains(key) && body[key].is_number() && std::isfinite(body[key].get<double>());
}

} // namespace

json to_json(const CartesianTarget& p) { return {{"x", p.x}, {"y", p.y}, {"z", p.z}}; }

json to_json(const ArmConfig& c) {
    json servos = json::array();
    for (const auto& s : c.servos) {
        servos.push_back({{"min_deg", rad_to_deg(s.min_angle)},
                          {"max_deg", rad_to_deg(s.max_angle)},
                          {"max_velocity_dps", rad_to_deg(s.max_velocity)},
                          {"pulse_min_us", s.pulse_min},
                          {"pulse_max_us", s.pulse_max}});
    }
    json joints = json::array();
    for (const auto& j : c.joint_limits.joints) {
        joints.push_back({{"min_deg", rad_to_deg(j.min)}, {"max_deg", rad_to_deg(j.max)}});
    }
    return {
        {"links", {{"a0", c.links.a0}, {"a1", c.links.a1}, {"a2", c.links.a2}, {"a3", c.links.a3}}},
        {"workspace",
         {{"z_floor", c.workspace.z_floor},
          {"x_min_when_y_negative", c.workspace.x_min_when_y_negative},
          {"x_threshold_when_y_positive", c.workspace.x_threshold_when_y_positive},
          {"x_clamp_when_y_positive", c.workspace.x_clamp_when_y_positive}}},
        {"servos", servos},
        {"joints", joints},
        {"home_deg", degrees(c.home)},
        {"domain_mode", std::string(to_string(c.domain_mode))},
        {"branch_mode", std::string(to_string(c.branch_mode))},
    };
}

ArmService::ArmService(ArmConfig config, bool run_ticker)
    : config_(std::move(config)), model_(config_.arm_model()), state_(initial_state(model_, config_.home)) {
    if (run_ticker) {
        ticker_ = std::jthread([this](std::stop_token stop) { run(stop); });
    }
}

ArmService::~ArmService() {
    if (ticker_.joinable()) {
        ticker_.request_stop();
        ticker_.join();
    }
}

void ArmService::run(std::stop_token stop) {
    std::mutex sleep_mutex;
    std::condition_variable_any cv;
    auto next = std::chrono::steady_clock::now();
    while (!stop.stop_requested()) {
        next += kTick;
        {
            std::unique_lock lock(sleep_mutex);
            cv.wait_until(lock, stop, next, [] { return false; });
        }
        if (stop.stop_requested()) {
            break;
        }
        tick();
    }
}

ArmState ArmService::snapshot() const {
    std::lock_guard lock(mutex_);
    return state_;
}

json ArmService::state_document() const {
    const ArmState s = snapshot();
    json last_clamp = nullptr;
    if (s.last_clamp) {
        last_clamp = {{"applied", rule_list(*s.last_clamp)},
                      {"original", to_json(s.last_clamp->original)},
                      {"clamped", to_json(s.last_clamp->clamped)}};
    }
    return {
        {"joints_deg", degrees(s.current)},
        {"goal_deg", degrees(s.goal)},
        {"position", to_json(fk(model_.links, s.current).position)},
        {"moving", s.moving},
        {"last_clamp", last_clamp},
        {"sim_time", s.sim_time},
    };
}

json ArmService::config_document() const { return to_json(config_); }

ArmService::Reply ArmService::post_target(const std::string& body) {
    const json request = json::parse(body, nullptr, false);
    if (request.is_discarded() || !request.is_object() || !finite_number(request, "x") ||
        !finite_number(request, "y") || !finite_number(request, "z")) {
        return {400, {{"accepted", false}, {"clamp", json::array()}, {"reason", "body must be {\"x\": number, \"y\": number, \"z\": number}"}}};
    }
    const CartesianTarget target{request["x"].get<double>(), request["y"].get<double>(), request["z"].get<double>()};

    std::lock_guard lock(mutex_);
    CommandResult result = command_target(model_, state_, target);
    if (!result.accepted) {
        return {422, {{"accepted", false}, {"clamp", rule_list(result.clamp)}, {"reason", result.reason}}};
    }
    state_ = std::move(result.state);
    return {200, {{"accepted", true}, {"clamp", rule_list(result.clamp)}}};
}

ArmService::Reply ArmService::post_estop() {
    std::lock_guard lock(mutex_);
    state_ = estop(state_);
    return {200, {{"stopped", true}}};
}

void ArmService::tick() {
    std::lock_guard lock(mutex_);
    state_ = step(model_, state_, kTickSeconds);
}

void mount_routes(httplib::Server& server, ArmService& service) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});

    auto send = [](httplib::Response& res, int status, const json& body) {
        res.status = status;
        res.set_content(body.dump(), "application/json");
    };

    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.Get("/api/state", [&service, send](const httplib::Request&, httplib::Response& res) {
        send(res, 200, service.state_document());
    });
    server.Get("/api/config", [&service, send](const httplib::Request&, httplib::Response& res) {
        send(res, 200, service.config_document());
    });
    server.Post("/api/target", [&service, send](const httplib::Request& req, httplib::Response& res) {
        const auto reply = service.post_target(req.body);
        send(res, reply.status, reply.body);
    });
    server.Post("/api/estop", [&service, send](const httplib::Request&, httplib::Response& res) {
        const auto reply = service.post_estop();
        send(res, reply.status, reply.body);
    });
}

} // namespace armkin
