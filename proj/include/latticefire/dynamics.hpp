#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "latticefire/lattice.hpp"
#include "latticefire/model.hpp"
#include "latticefire/rng.hpp"

namespace latticefire {

// Infection mechanics. Contact: co-location infects instantly, recovery
// marks act only on particles alone at a site. Jump-time: infection is
// carried by jumps (mixed sites allowed), recovery marks act unconditionally.
enum class Variant { kInstantaneousContact, kJumpTime };

struct RecoveryRegime {
  enum class Kind { kNone, kRate, kInstant } kind = Kind::kNone;
  double lambda = 0.0;

  static RecoveryRegime none() { return {Kind::kNone, 0.0}; }
  static RecoveryRegime rate(double lambda);
  static RecoveryRegime instant() { return {Kind::kInstant, 0.0}; }

  bool operator==(const RecoveryRegime&) const = default;
  std::string to_string() const;
  static RecoveryRegime parse(const std::string& text);
};

// Sorted recovery-mark times on [0, horizon).
struct RecoveryMarks {
  std::vector<double> times;
};

RecoveryMarks sample_recovery_marks(double lambda, double horizon,
                                    RngStream stream);

struct Step {
  double t;
  Site pos;
};

// Piecewise-constant path; first entry is the birth position. Positions are
// unwrapped (true Z^d coordinates even on a torus).
struct Trajectory {
  std::vector<Step> steps;

  Site position_at(double t) const;
  double birth_time() const { return steps.empty() ? 0.0 : steps.front().t; }
};

// Rate-1 simple random walk path on [t0, t1] starting at `start`. Same draw
// order as the simulator, so free clouds and simulated particles share one
// jump law.
Trajectory sample_walk_path(RngStream& stream, int d, Site start, double t0,
                            double t1);

struct ParticleTrace {
  ParticleId id;
  Trajectory traj;
  std::vector<double> marks;
};

struct SpaceTimeWindow {
  Site lo = origin_site();
  Site hi = origin_site();
  double t0 = 0.0;
  double t1 = 0.0;

  bool contains_site(const Site& x, int d) const {
    for (int k = 0; k < d; ++k)
      if (x[k] < lo[k] || x[k] > hi[k]) return false;
    return true;
  }
};

// Restricted view of a run: every particle inside window.lo..hi at window.t0,
// with trajectory and marks over [t0, t1].
struct TraceSet {
  int d = 1;
  LatticeDomain domain;
  SpaceTimeWindow window;
  std::vector<ParticleTrace> particles;
};

struct TrialParams {
  LatticeDomain domain;
  double rho = 1.0;
  Variant variant = Variant::kInstantaneousContact;
  RecoveryRegime recovery = RecoveryRegime::none();
  double horizon = 100.0;
  bool seed_infection = true;
  bool record = false;
  bool validate = false;

  void validate_fields() const;
};

// Default halo margin for a horizon: rate-1 walks outrun 4t only with
// exponentially small probability.
int default_halo_margin(double horizon);

struct TrialOutcome {
  std::optional<double> extinct_at;
  bool survived_to_horizon = false;
  std::vector<std::pair<double, double>> origin_infected_intervals;
  bool boundary_contaminated = false;
};

// Event-driven state of one run. Strictly sequential; replicas parallelize
// at a higher level.
class SimState {
 public:
  SimState(const TrialParams& params, std::uint64_t master_seed);

  // Processes every event in (time, t_end]; time advances to t_end.
  void evolve(double t_end);

  // Runs to the horizon, optionally stopping at extinction.
  void run(bool stop_on_extinction);

  // Mark-based recovery applied to one particle: contact variant heals only
  // if the particle is alone, jump-time heals unconditionally. Healthy
  // particles are untouched (marks fire regardless of status). With
  // instantaneous recovery this resolves the recover-if-alone rule at the
  // particle's site instead.
  void apply_recovery(std::int32_t particle, double t);

  double next_event_time() const;
  // Processes all events scheduled exactly at t (must be next_event_time()).
  void process_events_at(double t);

  double time() const { return time_; }
  double horizon() const { return params_.horizon; }
  const TrialParams& params() const { return params_; }
  std::int64_t infected_count() const { return infected_total_; }
  std::int64_t particle_count() const {
    return static_cast<std::int64_t>(particles_.size());
  }
  std::int64_t total_count() const { return particle_count(); }
  std::int64_t occupancy(std::int64_t cell) const {
    return static_cast<std::int64_t>(site_particles_[cell].size());
  }
  std::int64_t infected_at_cell(std::int64_t cell) const {
    return site_infected_[cell];
  }
  const ParticleId& id_of(std::int32_t p) const { return particles_[p].id; }
  bool is_infected(std::int32_t p) const { return particles_[p].infected; }
  Site position_of(std::int32_t p) const { return particles_[p].pos; }
  std::int64_t cell_of_particle(std::int32_t p) const {
    return particles_[p].cell;
  }
  bool contaminated() const { return contaminated_; }

  Configuration snapshot() const;
  TrialOutcome outcome() const;
  TraceSet record_trace(const SpaceTimeWindow& window) const;

  // Batch-touch tracking for lockstep coupled checks.
  void begin_touch_batch();
  const std::vector<std::int64_t>& touched_cells() const {
    return touched_cells_;
  }
  const std::vector<std::int32_t>& touched_particles() const {
    return touched_particles_;
  }

  // Full-state invariant scan (site purity, no-lone-infected, conservation).
  // Throws std::logic_error on violation.
  void check_invariants_full() const;

 private:
  struct Particle {
    ParticleId id;
    Site pos;
    std::int64_t cell;
    bool infected;
    double next_jump;
    double next_mark;
    RngStream walk;
    RngStream mark_stream;
  };

  enum : int { kJumpEvent = 0, kMarkEvent = 1 };

  struct Ev {
    double t;
    std::int32_t p;
    std::int8_t kind;
  };
  struct EvLater {
    bool operator()(const Ev& a, const Ev& b) const {
      if (a.t != b.t) return a.t > b.t;
      if (a.p != b.p) return a.p > b.p;
      return a.kind > b.kind;
    }
  };

  void add_particle(const ParticleId& id, const Site& pos, bool infected);
  void schedule(std::int32_t p);
  void step_event(const Ev& ev);
  void process_jump(std::int32_t p, double t);
  void process_mark(std::int32_t p, double t);
  void infect_site(std::int64_t cell, double t);
  void set_infected(std::int32_t p, bool value, double t);
  void resolve_instant_recovery_at(std::int64_t cell, double t);
  void note_touch(std::int64_t cell, std::int32_t p);
  void check_invariants_local(std::int64_t cell) const;

  TrialParams params_;
  std::uint64_t master_seed_;
  double time_ = 0.0;
  std::vector<Particle> particles_;
  std::vector<std::vector<std::int32_t>> site_particles_;
  std::vector<std::int64_t> site_infected_;
  std::int64_t infected_total_ = 0;
  std::int64_t initial_total_ = 0;
  std::int64_t origin_cell_ = 0;
  bool contaminated_ = false;
  std::priority_queue<Ev, std::vector<Ev>, EvLater> queue_;

  // Origin-interval bookkeeping.
  std::vector<std::pair<double, double>> origin_intervals_;
  bool origin_open_ = false;
  double origin_open_since_ = 0.0;
  std::optional<double> extinct_at_;

  // Recording (enabled via params.record).
  std::vector<std::vector<Step>> rec_steps_;
  std::vector<std::vector<double>> rec_marks_;

  std::vector<std::int64_t> touched_cells_;
  std::vector<std::int32_t> touched_particles_;
};

TrialOutcome run_trial(const TrialParams& params, std::uint64_t seed);

}  // namespace latticefire
