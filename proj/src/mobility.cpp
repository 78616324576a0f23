#include "fanet/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fanet {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double wrap_azimuth(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0)
        a += kTwoPi;
    return a;
}

double clamp_elevation(double e) { return std::clamp(e, -kPi / 2.0, kPi / 2.0); }

} // namespace

void MobilityParams::validate() const {
    std::string errors;
    auto add = [&](const char* msg) {
        if (!errors.empty())
            errors += "; ";
        errors += msg;
    };
    if (!(alpha >= 0.0 && alpha <= 1.0))
        add("alpha must be in [0,1]");
    if (sigma_speed < 0.0)
        add("sigma_speed must be >= 0");
    if (sigma_azimuth < 0.0)
        add("sigma_azimuth must be >= 0");
    if (sigma_elevation < 0.0)
        add("sigma_elevation must be >= 0");
    if (!(group_radius > 0.0))
        add("group_radius must be > 0");
    if (!(tick > 0.0))
        add("tick must be > 0");
    if (!std::isfinite(mean_speed) || mean_speed < 0.0)
        add("mean_speed must be finite and >= 0");
    if (!errors.empty())
        throw std::invalid_argument("invalid MobilityParams: " + errors);
}

LeaderState step_leader(const LeaderState& state, const MobilityParams& params,
                        RandomStream& rng) {
    const double t = params.tick;
    LeaderState next;
    // Position advances with the pre-update kinematics.
    next.position.x = state.position.x + state.speed * t *
                                             std::cos(state.azimuth) *
                                             std::cos(state.elevation);
    next.position.y = state.position.y + state.speed * t *
                                             std::sin(state.azimuth) *
                                             std::cos(state.elevation);
    next.position.z =
        state.position.z + state.speed * t * std::sin(state.elevation);

    const double a = params.alpha;
    const double noise = std::sqrt(1.0 - a * a);
    const double kappa = rng.gaussian(0.0, params.sigma_speed);
    const double rho = rng.gaussian(0.0, params.sigma_azimuth);
    const double zeta = rng.gaussian(0.0, params.sigma_elevation);

    next.speed = a * state.speed + (1.0 - a) * params.mean_speed + noise * kappa;
    next.azimuth =
        a * state.azimuth + (1.0 - a) * params.mean_azimuth + noise * rho;
    next.elevation =
        a * state.elevation + (1.0 - a) * params.mean_elevation + noise * zeta;

    next.speed = std::max(next.speed, 0.0);
    next.azimuth = wrap_azimuth(next.azimuth);
    next.elevation = clamp_elevation(next.elevation);
    return next;
}

Vec3 sample_ball_offset(double radius, RadialLaw law, RandomStream& rng) {
    const double u = rng.uniform();
    const double d =
        law == RadialLaw::VolumeUniform ? radius * std::cbrt(u) : radius * u;
    const double gamma = rng.uniform(0.0, kTwoPi);
    const double delta = rng.uniform(-kPi / 2.0, kPi / 2.0);
    return {d * std::cos(delta) * std::cos(gamma),
            d * std::cos(delta) * std::sin(gamma), d * std::sin(delta)};
}

Vec3 step_ordinary(const Vec3& leader_new_position,
                   const MobilityParams& params, RandomStream& rng) {
    return leader_new_position +
           sample_ball_offset(params.group_radius, params.radial_law, rng);
}

MobilitySim::MobilitySim(MobilityModel model, const FormationConfig& formation,
                         const MobilityParams& params, std::uint64_t run_seed,
                         RpgReferenceLaw rpg_law)
    : model_(model), formation_(formation), params_(params),
      run_seed_(run_seed), rpg_law_(rpg_law) {
    params_.validate();
    if (formation_.groups < 1 || formation_.nodes_per_group < 1)
        throw std::invalid_argument("formation must have >= 1 group and node");

    const int npg = formation_.nodes_per_group;
    nodes_.resize(static_cast<std::size_t>(formation_.groups) * npg);
    reference_positions_.resize(formation_.groups);

    for (int g = 0; g < formation_.groups; ++g) {
        const Vec3 ref = formation_.origin +
                         Vec3{0.0, g * formation_.group_spacing, 0.0};
        reference_positions_[g] = ref;
        for (int i = 0; i < npg; ++i) {
            const int id = g * npg + i;
            NodeState& n = nodes_[id];
            n.node_id = id;
            n.group_id = g;
            n.role = i == 0 ? Role::Leader : Role::Ordinary;
            if (i == 0 && model_ != MobilityModel::Rpg) {
                n.position = ref;
            } else {
                RandomStream rng = stream_for(
                    run_seed_, StreamKind::InitPlacement, static_cast<std::uint64_t>(id));
                n.position =
                    ref + sample_ball_offset(params_.group_radius,
                                             params_.radial_law, rng);
            }
        }
    }

    // Initial kinematics default to the long-run means.
    LeaderState init;
    init.speed = params_.mean_speed;
    init.azimuth = wrap_azimuth(params_.mean_azimuth);
    init.elevation = clamp_elevation(params_.mean_elevation);

    if (model_ == MobilityModel::Gm) {
        kinematics_.resize(nodes_.size(), init);
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            kinematics_[i].position = nodes_[i].position;
    } else {
        kinematics_.resize(formation_.groups, init);
        for (int g = 0; g < formation_.groups; ++g)
            kinematics_[g].position = reference_positions_[g];
    }
}

RandomStream MobilitySim::node_stream(int node_id, int tick) const {
    return stream_for(run_seed_, StreamKind::Mobility,
                      static_cast<std::uint64_t>(node_id),
                      static_cast<std::uint64_t>(tick));
}

RandomStream MobilitySim::reference_stream(int group_id, int tick) const {
    // Reference points are not nodes; their ids start past the node range.
    return stream_for(run_seed_, StreamKind::Mobility,
                      static_cast<std::uint64_t>(node_count() + group_id),
                      static_cast<std::uint64_t>(tick));
}

void MobilitySim::step(int tick_index) {
    const int npg = formation_.nodes_per_group;
    switch (model_) {
    case MobilityModel::Gm:
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            RandomStream rng = node_stream(static_cast<int>(i), tick_index);
            kinematics_[i] = step_leader(kinematics_[i], params_, rng);
            nodes_[i].position = kinematics_[i].position;
        }
        break;
    case MobilityModel::Gmg:
        for (int g = 0; g < formation_.groups; ++g) {
            const int leader = leader_of(g);
            RandomStream leader_rng = node_stream(leader, tick_index);
            kinematics_[g] = step_leader(kinematics_[g], params_, leader_rng);
            reference_positions_[g] = kinematics_[g].position;
            nodes_[leader].position = reference_positions_[g];
            for (int i = 1; i < npg; ++i) {
                const int id = g * npg + i;
                RandomStream rng = node_stream(id, tick_index);
                nodes_[id].position =
                    step_ordinary(reference_positions_[g], params_, rng);
            }
        }
        break;
    case MobilityModel::Rpg:
        for (int g = 0; g < formation_.groups; ++g) {
            if (rpg_law_ == RpgReferenceLaw::GaussMarkov) {
                RandomStream ref_rng = reference_stream(g, tick_index);
                kinematics_[g] = step_leader(kinematics_[g], params_, ref_rng);
                reference_positions_[g] = kinematics_[g].position;
            }
            for (int i = 0; i < npg; ++i) {
                const int id = g * npg + i;
                RandomStream rng = node_stream(id, tick_index);
                nodes_[id].position =
                    step_ordinary(reference_positions_[g], params_, rng);
            }
        }
        break;
    }
}

} // namespace fanet
