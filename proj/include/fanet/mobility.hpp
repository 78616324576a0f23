#pragma once

#include <cstdint>
#include <vector>

#include "fanet/geom.hpp"
#include "fanet/rng.hpp"

namespace fanet {

/// Radial law for the random motion vector inside the group ball.
/// VolumeUniform draws d = R * U^(1/3) (points uniform by volume);
/// RadiusUniform draws d = R * U (concentrates near the center).
enum class RadialLaw { VolumeUniform, RadiusUniform };

/// Constants of the Gauss-Markov kinematic process and the group ball.
/// Angles are radians, speeds m/s, tick seconds, group_radius meters.
struct MobilityParams {
    double alpha = 0.5;
    double mean_speed = 200.0;
    double mean_azimuth = 0.0;
    double mean_elevation = 0.0;
    double sigma_speed = 0.0;
    double sigma_azimuth = 0.2;
    double sigma_elevation = 0.02;
    double tick = 0.1;
    double group_radius = 100.0;
    RadialLaw radial_law = RadialLaw::VolumeUniform;

    /// Throws std::invalid_argument listing every violated constraint.
    void validate() const;
};

/// Kinematic state of a group reference (leader) node.
struct LeaderState {
    Vec3 position;
    double speed = 0.0;     // m/s, kept >= 0
    double azimuth = 0.0;   // radians, wrapped to [0, 2*pi)
    double elevation = 0.0; // radians, clamped to [-pi/2, pi/2]
};

enum class Role { Leader, Ordinary };

struct NodeState {
    int node_id = 0;
    int group_id = 0;
    Role role = Role::Ordinary;
    Vec3 position;
};

/// One Gauss-Markov update. The position advances with the pre-update
/// kinematics (x_{t+1} depends on v_t, theta_t, phi_t); speed/azimuth/
/// elevation then relax toward their means with memory factor alpha.
/// Consumes exactly three gaussian draws: speed, azimuth, elevation.
LeaderState step_leader(const LeaderState& state, const MobilityParams& params,
                        RandomStream& rng);

/// Samples a random motion vector within the ball of radius `radius`.
/// Draw order: length, azimuth, elevation.
Vec3 sample_ball_offset(double radius, RadialLaw law, RandomStream& rng);

/// New position of an ordinary node: leader's advanced position plus a
/// fresh ball offset, independent of the node's previous locations.
Vec3 step_ordinary(const Vec3& leader_new_position,
                   const MobilityParams& params, RandomStream& rng);

/// The plain GM baseline applies the same update law to a free node.
inline LeaderState step_gm_baseline(const LeaderState& state,
                                    const MobilityParams& params,
                                    RandomStream& rng) {
    return step_leader(state, params, rng);
}

enum class MobilityModel { Gmg, Gm, Rpg };

/// Law of the RPG group reference point (the paper leaves it open).
enum class RpgReferenceLaw { GaussMarkov, Stationary };

/// Line-abreast formation: group g's reference starts at
/// origin + (0, g * group_spacing, 0); members start at a fresh ball
/// offset from it.
struct FormationConfig {
    int groups = 6;
    int nodes_per_group = 6;
    double group_spacing = 200.0;
    Vec3 origin;
};

/// Positions for all nodes of a scenario, advanced tick by tick.
///
/// Gmg: one GM leader per group; ordinary nodes ride the leader plus a
///      fresh ball offset each tick (the leader is the reference).
/// Gm:  every node follows its own independent GM process.
/// Rpg: a virtual reference point per group follows the configured
///      reference law; every node, the leader included, takes a fresh
///      ball offset from it each tick.
///
/// Randomness comes from per-(node, tick) substreams of the run seed, so
/// node updates are order-independent and trajectories reproducible.
class MobilitySim {
public:
    MobilitySim(MobilityModel model, const FormationConfig& formation,
                const MobilityParams& params, std::uint64_t run_seed,
                RpgReferenceLaw rpg_law = RpgReferenceLaw::GaussMarkov);

    /// Advances from tick (k-1) to tick k. Must be called with k = 1, 2, ...
    void step(int tick_index);

    const std::vector<NodeState>& nodes() const { return nodes_; }
    const MobilityParams& params() const { return params_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int group_count() const { return formation_.groups; }
    int leader_of(int group_id) const {
        return group_id * formation_.nodes_per_group;
    }
    /// Reference position a group's members are sampled around this tick.
    const Vec3& reference_position(int group_id) const {
        return reference_positions_[group_id];
    }

private:
    RandomStream node_stream(int node_id, int tick) const;
    RandomStream reference_stream(int group_id, int tick) const;

    MobilityModel model_;
    FormationConfig formation_;
    MobilityParams params_;
    std::uint64_t run_seed_;
    RpgReferenceLaw rpg_law_;
    std::vector<NodeState> nodes_;
    std::vector<LeaderState> kinematics_; // per group (gmg/rpg) or per node (gm)
    std::vector<Vec3> reference_positions_; // per group
};

} // namespace fanet
