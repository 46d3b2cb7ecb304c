#pragma once

#include "armkin/arm_sim.hpp"
#include "armkin/config.hpp"

#include <json.hpp>

#include <chrono>
#include <mutex>
#include <string>
#include <thread>

namespace httplib {
class Server;
}

namespace armkin {

nlohmann::json to_json(const CartesianTarget& p);
nlohmann::json to_json(const ArmConfig& config);

/**
 * Owns one simulated arm and the clock that drives it.
 *
 * Every mutation (commands, e-stop, ticks) runs under a single lock, so
 * overlapping commands are processed one at a time and readers always see
 * a state between two mutations.
 */
class ArmService {
public:
    static constexpr std::chrono::milliseconds kTick{20};
    static constexpr double kTickSeconds = 0.020;

    struct Reply {
        int status = 200;
        nlohmann::json body;
    };

    /// With `run_ticker` false the caller advances time through tick().
    explicit ArmService(ArmConfig config, bool run_ticker = true);
    ~ArmService();

    ArmService(const ArmService&) = delete;
    ArmService& operator=(const ArmService&) = delete;

    ArmState snapshot() const;

    /// joints_deg, goal_deg, position, moving, last_clamp, sim_time.
    nlohmann::json state_document() const;
    nlohmann::json config_document() const;

    /// Body `{"x": .., "y": .., "z": ..}`. 200 accepted, 400 malformed, 422 rejected.
    Reply post_target(const std::string& body);
    Reply post_estop();

    /// Advances the simulation by one kTickSeconds step.
    void tick();

private:
    void run(std::stop_token stop);

    const ArmConfig config_;
    const ArmModel model_;
    mutable std::mutex mutex_;
    ArmState state_;
    std::jthread ticker_;
};

/// Registers the /api routes (plus permissive CORS) on `server`.
void mount_routes(httplib::Server& server, ArmService& service);

} // namespace armkin
