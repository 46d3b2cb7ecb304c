#include "armkin/cli.hpp"

#include "armkin/config.hpp"
#include "armkin/errors.hpp"
#include "armkin/service.hpp"
#include "armkin/units.hpp"
#include "armkin/validator.hpp"
#include "armkin/workspace_guard.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <httplib.h>

#include <csignal>
#include <ostream>
#include <pthread.h>

namespace armkin::cli {

namespace {

std::string triple(double a, double b, double c) {
    return fixed6(a) + " " + fixed6(b) + " " + fixed6(c);
}

int cmd_fk(const ArmConfig& config, const std::vector<double>& deg, std::ostream& out) {
    const JointAngles q{deg_to_rad(deg[0]), deg_to_rad(deg[1]), deg_to_rad(deg[2])};
    const CartesianTarget p = fk(config.links, q, config.joint_limits).position;
    out << triple(p.x, p.y, p.z) << '\n';
    return kOk;
}

int cmd_ik(const ArmConfig& config, const std::vector<double>& xyz, std::ostream& out, std::ostream& err) {
    const ClampReport clamp = clamp_target({xyz[0], xyz[1], xyz[2]}, config.workspace);
    for (ClampRule rule : clamp.rules_applied) {
        err << "clamp " << to_string(rule) << ": (" << triple(clamp.original.x, clamp.original.y, clamp.original.z)
            << ") -> (" << triple(clamp.clamped.x, clamp.clamped.y, clamp.clamped.z) << ")\n";
    }
    const IkSolution sol = ik(config.links, clamp.clamped, config.domain_mode, config.branch_mode);
    if (sol.rear_reach) {
        err << "note: solution reaches over the back of the waist\n";
    }
    if (sol.domain_fixes > 0) {
        err << "note: " << sol.domain_fixes << " trig argument(s) outside [-1, 1] were normalized ("
            << to_string(config.domain_mode) << ")\n";
    }
    out << triple(rad_to_deg(sol.angles.t1), rad_to_deg(sol.angles.t2), rad_to_deg(sol.angles.t3)) << '\n';
    return kOk;
}

int cmd_sweep(const ArmConfig& config, const SweepOptions& options, std::ostream& out, std::ostream& err) {
    const SweepSummary s = sweep(config.links, options);
    out << to_csv(s);
    err << "histogram:";
    for (std::size_t i = 0; i < s.histogram.size(); ++i) {
        if (i < kHistogramEdges.size()) {
            err << fmt::format(" <{:g}:{}", kHistogramEdges[i], s.histogram[i]);
        } else {
            err << fmt::format(" >={:g}:{}", kHistogramEdges.back(), s.histogram[i]);
        }
    }
    err << '\n';
    const double threshold = config.sweep_max_error_rel * config.links.reach();
    if (s.failures > 0 || s.max_error > threshold) {
        err << fmt::format("sweep failed: {} failure(s), max_error {:.6e} (threshold {:.6e})\n", s.failures,
                           s.max_error, threshold);
        return kDomain;
    }
    return kOk;
}

int cmd_serve(const ArmConfig& config, const std::string& host, int port, std::ostream& err) {
    // Signals are taken synchronously below; every thread started from here inherits the mask.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    ArmService service(config);
    httplib::Server server;
    mount_routes(server, service);
    // httplib defaults to SO_REUSEPORT, which would let a second instance share the port.
    server.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });
    if (!server.bind_to_port(host, port)) {
        err << fmt::format("cannot listen on {}:{} (port in use?)\n", host, port);
        return kRuntime;
    }
    err << fmt::format("serving on http://{}:{}\n", host, port);
    err.flush();

    std::thread listener([&server] { server.listen_after_bind(); });
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
    listener.join();
    err << "shutting down\n";
    return kOk;
}

CartesianTarget to_target(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

} // namespace

std::string fixed6(double v) {
    // Anything that rounds to zero prints unsigned.
    if (std::abs(v) < 5e-7) {
        v = 0.0;
    }
    return fmt::format("{:.6f}", v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"3-DOF arm kinematics: forward/inverse kinematics, validation sweeps, simulator service"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string domain_mode;
    std::string branch_mode;
    app.add_option("--config", config_path, "Arm configuration file")->check(CLI::ExistingFile);
    app.add_option("--domain-mode", domain_mode, "Out-of-range trig argument fix")
        ->check(CLI::IsMember({"paper", "clamp"}));
    app.add_option("--branch-mode", branch_mode, "Shoulder triangle closed form")
        ->check(CLI::IsMember({"paper", "robust"}));

    std::vector<double> angles;
    auto* fk_cmd = app.add_subcommand("fk", "Joint angles (degrees) to tool position");
    fk_cmd->add_option("angles", angles, "t1 t2 t3 in degrees")->expected(3)->required();

    std::vector<double> xyz;
    auto* ik_cmd = app.add_subcommand("ik", "Tool position to joint angles (degrees)");
    ik_cmd->add_option("target", xyz, "x y z in mm")->expected(3)->required();

    std::string sampler = "joint";
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    std::vector<double> box_min;
    std::vector<double> box_max;
    auto* sweep_cmd = app.add_subcommand("sweep", "Seeded IK/FK round-trip statistics");
    sweep_cmd->add_option("--sampler", sampler, "joint | box")->check(CLI::IsMember({"joint", "box"}));
    sweep_cmd->add_option("--n", n, "Number of samples")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", seed, "RNG seed");
    sweep_cmd->add_option("--box-min", box_min, "Box sampler lower corner x y z")->expected(3);
    sweep_cmd->add_option("--box-max", box_max, "Box sampler upper corner x y z")->expected(3);

    int port = 8080;
    std::string host = "127.0.0.1";
    auto* serve_cmd = app.add_subcommand("serve", "Run the simulator HTTP API");
    serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
    serve_cmd->add_option("--host", host, "Bind address");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    ArmConfig config;
    try {
        if (!config_path.empty()) {
            config = load_config(config_path);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfig;
    }
    if (!domain_mode.empty()) {
        config.domain_mode = *parse_domain_mode(domain_mode);
    }
    if (!branch_mode.empty()) {
        config.branch_mode = *parse_branch_mode(branch_mode);
    }

    try {
        if (fk_cmd->parsed()) {
            return cmd_fk(config, angles, out);
        }
        if (ik_cmd->parsed()) {
            return cmd_ik(config, xyz, out, err);
        }
        if (sweep_cmd->parsed()) {
            if (box_min.empty() != box_max.empty()) {
                err << "--box-min and --box-max must be given together\n";
                return kUsage;
            }
            SweepOptions options;
            options.sampler = sampler == "joint" ? Sampler::JOINT_SPACE : Sampler::CARTESIAN_BOX;
            options.n = n;
            options.seed = seed;
            options.domain = config.domain_mode;
            options.branch = config.branch_mode;
            options.joint_limits = config.joint_limits;
            if (!box_min.empty()) {
                options.box = Box{to_target(box_min), to_target(box_max)};
            }
            return cmd_sweep(config, options, out, err);
        }
        if (serve_cmd->parsed()) {
            return cmd_serve(config, host, port, err);
        }
    } catch (const KinematicsError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}

} // namespace armkin::cli
