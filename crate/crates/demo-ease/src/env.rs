//! The reaching MDP: workspace partition geometry, the symmetry maps
//! phi/psi, observation assembly, reward, termination, collision checks, and
//! episode samplers for the demo/train/test stages.
//!
//! The workspace splits into four quadrants about the base yaw axis.
//! `phi_state` maps an observation between quadrants by adding quarter turns
//! to the yaw angle and rotating every Cartesian quantity (goal, reaching
//! error, obstacle) by the same amount; `psi_action` is the identity because
//! joint-velocity commands are expressed in the rotating frame. Together
//! they commute with the deterministic simulator step, which is what makes
//! recorded transitions duplicable across quadrants.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::math::{norm3, norm4, rotate_quarter, sub3, wrap_angle, Vec3, Vec4};
use crate::robot::{self, ArmPose, JointState, RobotModel};
use crate::rng::Stream;

/// Angular slack on quadrant edges for the demo-stage membership check.
/// P2P-O episodes start exactly on a quadrant edge and inverse kinematics
/// lands the end-effector a hair on either side of it.
pub const PARTITION_EDGE_TOL: f64 = 1e-3;

const SAMPLE_RETRIES: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnvError {
    #[error("point lies outside the workspace")]
    OutOfWorkspace,
    #[error("episode sampling failed after {SAMPLE_RETRIES} retries")]
    SamplingFailed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TaskKind {
    P2p,
    P2pO,
}

impl TaskKind {
    pub fn has_obstacle(self) -> bool {
        matches!(self, TaskKind::P2pO)
    }

    /// Flat observation length: 22 for P2P, 25 for P2P-O.
    pub fn obs_dim(self) -> usize {
        if self.has_obstacle() {
            25
        } else {
            22
        }
    }
}

/// A point in base-frame polar coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    /// Rotation angle, wrapped into `[-pi, pi)`.
    pub theta: f64,
    /// Radius from the yaw axis (m), >= 0.
    pub rho: f64,
    /// Height (m).
    pub z: f64,
}

impl PolarPoint {
    pub fn new(theta: f64, rho: f64, z: f64) -> Self {
        Self {
            theta: wrap_angle(theta),
            rho,
            z,
        }
    }

    pub fn to_cartesian(self) -> Vec3 {
        [
            self.rho * self.theta.cos(),
            self.rho * self.theta.sin(),
            self.z,
        ]
    }

    pub fn from_cartesian(p: Vec3) -> Self {
        Self {
            theta: wrap_angle(p[1].atan2(p[0])),
            rho: (p[0] * p[0] + p[1] * p[1]).sqrt(),
            z: p[2],
        }
    }
}

/// Shape of the lateral safety boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundaryShape {
    /// Square of half-side `boundary_radius` centered on the yaw axis.
    Box,
    /// Disc of radius `boundary_radius`.
    Disc,
}

/// The partitioned workspace: an annular tube split into `partitions`
/// equal quadrants about the yaw axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Workspace {
    /// Number of symmetric partitions; v1 supports exactly 4.
    pub partitions: usize,
    /// Radial extent of the sampled tube `[min, max]` (m).
    pub rho_range: [f64; 2],
    /// Height extent of the sampled tube `[min, max]` (m).
    pub z_range: [f64; 2],
    pub boundary: BoundaryShape,
    /// Lateral extent of the safety boundary (m).
    pub boundary_radius: f64,
}

impl Default for Workspace {
    fn default() -> Self {
        Self {
            partitions: 4,
            rho_range: [0.3, 0.7],
            z_range: [0.25, 0.65],
            boundary: BoundaryShape::Disc,
            boundary_radius: 0.9,
        }
    }
}

impl Workspace {
    pub fn validate(&self) -> Result<(), String> {
        if self.partitions != 4 {
            return Err(format!(
                "partitions = {} unsupported: quarter-turn symmetry requires 4",
                self.partitions
            ));
        }
        if !(self.rho_range[0] < self.rho_range[1]) || self.rho_range[0] < 0.0 {
            return Err("rho_range must be a nonempty nonnegative interval".into());
        }
        if !(self.z_range[0] < self.z_range[1]) {
            return Err("z_range must be a nonempty interval".into());
        }
        if !(self.boundary_radius > 0.0) {
            return Err("boundary_radius must be > 0".into());
        }
        Ok(())
    }

    /// Maximum radius allowed by the safety boundary at angle `theta`.
    pub fn boundary_rho(&self, theta: f64) -> f64 {
        match self.boundary {
            BoundaryShape::Disc => self.boundary_radius,
            BoundaryShape::Box => {
                let c = theta.cos().abs();
                let s = theta.sin().abs();
                self.boundary_radius / c.max(s)
            }
        }
    }

    pub fn contains(&self, p: Vec3) -> bool {
        let polar = PolarPoint::from_cartesian(p);
        polar.z > 0.0 && polar.rho <= self.boundary_rho(polar.theta)
    }
}

/// Quadrant index of a point, using the half-open convention: an angle on a
/// quadrant edge belongs to the higher quadrant.
pub fn partition_of(ws: &Workspace, p: Vec3) -> Result<usize, EnvError> {
    if !ws.contains(p) {
        return Err(EnvError::OutOfWorkspace);
    }
    Ok(sector_of(ws.partitions, p))
}

/// Quadrant index by angle only, without workspace-bounds validation.
pub fn sector_of(partitions: usize, p: Vec3) -> usize {
    let theta = p[1].atan2(p[0]).rem_euclid(2.0 * PI);
    let width = 2.0 * PI / partitions as f64;
    ((theta / width) as usize).min(partitions - 1)
}

/// Sector membership with angular slack on both edges.
pub fn in_partition(partitions: usize, k: usize, p: Vec3, tol: f64) -> bool {
    let width = 2.0 * PI / partitions as f64;
    let center = (k as f64 + 0.5) * width;
    let theta = p[1].atan2(p[0]);
    wrap_angle(theta - center).abs() <= width / 2.0 + tol
}

/// The flat state of the task MDP.
///
/// Flattened order: q (4), sin q (4), cos q (4), qdot (4), goal (3),
/// err (3), obstacle (3, P2P-O only).
#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    pub q: Vec4,
    pub sin_q: Vec4,
    pub cos_q: Vec4,
    pub qdot: Vec4,
    pub goal: Vec3,
    pub err: Vec3,
    pub obstacle: Option<Vec3>,
}

impl Observation {
    pub fn assemble(state: &JointState, goal: Vec3, err: Vec3, obstacle: Option<Vec3>) -> Self {
        let mut sin_q = [0.0; 4];
        let mut cos_q = [0.0; 4];
        for j in 0..4 {
            let (s, c) = state.q[j].sin_cos();
            sin_q[j] = s;
            cos_q[j] = c;
        }
        Self {
            q: state.q,
            sin_q,
            cos_q,
            qdot: state.qdot,
            goal,
            err,
            obstacle,
        }
    }

    pub fn dim(&self) -> usize {
        if self.obstacle.is_some() {
            25
        } else {
            22
        }
    }

    pub fn end_effector(&self) -> Vec3 {
        sub3(self.goal, self.err)
    }

    pub fn joint_state(&self) -> JointState {
        JointState {
            q: self.q,
            qdot: self.qdot,
        }
    }

    pub fn flatten(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.dim());
        v.extend_from_slice(&self.q);
        v.extend_from_slice(&self.sin_q);
        v.extend_from_slice(&self.cos_q);
        v.extend_from_slice(&self.qdot);
        v.extend_from_slice(&self.goal);
        v.extend_from_slice(&self.err);
        if let Some(o) = self.obstacle {
            v.extend_from_slice(&o);
        }
        v
    }

    pub fn from_flat(v: &[f64]) -> Option<Self> {
        let obstacle = match v.len() {
            22 => None,
            25 => Some([v[22], v[23], v[24]]),
            _ => return None,
        };
        let grab4 = |at: usize| [v[at], v[at + 1], v[at + 2], v[at + 3]];
        Some(Self {
            q: grab4(0),
            sin_q: grab4(4),
            cos_q: grab4(8),
            qdot: grab4(12),
            goal: [v[16], v[17], v[18]],
            err: [v[19], v[20], v[21]],
            obstacle,
        })
    }

    /// Max absolute component difference across the flattened vectors.
    pub fn inf_distance(&self, other: &Observation) -> f64 {
        self.flatten()
            .iter()
            .zip(other.flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Map an observation into the quadrant `quarter_turns` to the left: the
/// yaw angle gains `quarter_turns * pi/2` (wrapped) and every Cartesian
/// quantity rotates with it. Joint velocities are unchanged.
pub fn phi_state(obs: &Observation, quarter_turns: u8) -> Observation {
    let mut q = obs.q;
    q[0] = wrap_angle(q[0] + quarter_turns as f64 * FRAC_PI_2);
    let state = JointState { q, qdot: obs.qdot };
    Observation::assemble(
        &state,
        rotate_quarter(obs.goal, quarter_turns),
        rotate_quarter(obs.err, quarter_turns),
        obs.obstacle.map(|o| rotate_quarter(o, quarter_turns)),
    )
}

/// The action map paired with `phi_state`: joint-velocity commands live in
/// the rotating frame, so it is the identity.
pub fn psi_action(a: Vec4) -> Vec4 {
    a
}

/// Reward shaping constants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RewardParams {
    /// Reaching-error penalty gain.
    pub alpha1: f64,
    /// Actuation-effort penalty gain.
    pub alpha2: f64,
    /// Bonus for reaching the goal.
    pub r1: f64,
    /// Penalty for a collision.
    pub r2: f64,
    /// Tolerated reaching error (m).
    pub epsilon: f64,
}

impl Default for RewardParams {
    fn default() -> Self {
        Self {
            alpha1: 2e-3,
            alpha2: 1e-3,
            r1: 10.0,
            r2: 2.0,
            epsilon: 0.05,
        }
    }
}

impl RewardParams {
    pub fn validate(&self) -> Result<(), String> {
        for (name, v) in [
            ("alpha1", self.alpha1),
            ("alpha2", self.alpha2),
            ("r1", self.r1),
            ("r2", self.r2),
            ("epsilon", self.epsilon),
        ] {
            if !(v > 0.0) {
                return Err(format!("reward parameter {name} must be > 0"));
            }
        }
        Ok(())
    }
}

/// Per-step reward: error penalty, effort penalty, reaching bonus,
/// collision penalty.
pub fn reward(err: Vec3, tau_hat: Vec4, reached: bool, collided: bool, p: &RewardParams) -> f64 {
    let mut r = -p.alpha1 * norm3(err) - p.alpha2 * norm4(tau_hat);
    if reached {
        r += p.r1;
    }
    if collided {
        r -= p.r2;
    }
    r
}

/// Cubic-obstacle geometry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CollisionParams {
    /// Half the obstacle edge length (m).
    pub obstacle_half_size: f64,
    /// Inflation margin around the cube for the segment test (m).
    pub margin: f64,
}

impl Default for CollisionParams {
    fn default() -> Self {
        Self {
            obstacle_half_size: 0.02,
            margin: 0.01,
        }
    }
}

/// Minimum distance from segment `a`-`b` to the axis-aligned cube at
/// `center` with half-extent `half`. Zero when the segment intersects it.
pub fn segment_aabb_distance(a: Vec3, b: Vec3, center: Vec3, half: f64) -> f64 {
    let point_dist = |t: f64| -> f64 {
        let mut d2 = 0.0;
        for k in 0..3 {
            let p = a[k] + t * (b[k] - a[k]);
            let excess = (p - center[k]).abs() - half;
            if excess > 0.0 {
                d2 += excess * excess;
            }
        }
        d2.sqrt()
    };
    // distance to a convex set along a line is convex in t: ternary search
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..64 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if point_dist(m1) <= point_dist(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    point_dist(0.5 * (lo + hi))
        .min(point_dist(0.0))
        .min(point_dist(1.0))
}

/// True when any link segment comes within `margin` of the cube or any
/// joint point dips below the ground plane.
pub fn collision_check(pose: &ArmPose, obstacle: Option<Vec3>, params: &CollisionParams) -> bool {
    if pose.joint_points.iter().any(|p| p[2] < 0.0) {
        return true;
    }
    if let Some(center) = obstacle {
        for i in 0..4 {
            let d = segment_aabb_distance(
                pose.joint_points[i],
                pose.joint_points[i + 1],
                center,
                params.obstacle_half_size,
            );
            if d < params.margin {
                return true;
            }
        }
    }
    false
}

/// Why a step ended (or did not end) the episode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cause {
    Running,
    Reached,
    Timeout,
    Collision,
    LeftPartition,
}

impl Cause {
    pub fn as_str(self) -> &'static str {
        match self {
            Cause::Running => "running",
            Cause::Reached => "reached",
            Cause::Timeout => "timeout",
            Cause::Collision => "collision",
            Cause::LeftPartition => "left-partition",
        }
    }
}

/// Result of one environment step.
#[derive(Debug, Clone, PartialEq)]
pub struct StepOutcome {
    pub obs_next: Observation,
    pub reward: f64,
    /// Episode-ending flag; set exactly when `cause != Running`.
    pub zeta: bool,
    pub cause: Cause,
    /// Normalized torque proxy of the executed step.
    pub tau_hat: Vec4,
}

/// Initial joint angles, goal, optional obstacle, and (demo stage only) the
/// quadrant the episode is confined to.
#[derive(Debug, Clone, PartialEq)]
pub struct EpisodeConfig {
    pub q0: Vec4,
    pub goal: Vec3,
    pub obstacle: Option<Vec3>,
    pub partition: Option<usize>,
}

/// Sampling stage: which distributions the initial state, goal, and
/// obstacle are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    DemoP2p,
    DemoP2pO,
    Train,
    TestP2p,
    TestP2pO,
}

/// Stage-specific sampling constants. Angular offsets of the quadrant
/// geometry are structural and not configurable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SamplingParams {
    /// Demo-stage start radius / height (m).
    pub demo_rho0: f64,
    pub demo_z0: f64,
    /// Demo-stage goal radial and height ranges.
    pub demo_goal_rho: [f64; 2],
    pub demo_goal_z: [f64; 2],
    /// Train-stage fixed start (theta, rho, z).
    pub train_theta0: f64,
    pub train_rho0: f64,
    pub train_z0: f64,
    /// Obstacle radial range (all stages).
    pub obstacle_rho: [f64; 2],
    /// Obstacle height half-window around the goal height (m).
    pub obstacle_dz: f64,
    /// Test-stage fixed starts.
    pub test_theta0_p2p: f64,
    pub test_theta0_p2po: f64,
    pub test_rho0: f64,
    pub test_z0: f64,
}

impl Default for SamplingParams {
    fn default() -> Self {
        Self {
            demo_rho0: 0.52,
            demo_z0: 0.42,
            demo_goal_rho: [0.4, 0.6],
            demo_goal_z: [0.35, 0.55],
            train_theta0: FRAC_PI_4,
            train_rho0: 0.52,
            train_z0: 0.42,
            obstacle_rho: [0.4, 0.6],
            obstacle_dz: 0.1,
            test_theta0_p2p: -FRAC_PI_4,
            test_theta0_p2po: -FRAC_PI_2,
            test_rho0: 0.5,
            test_z0: 0.45,
        }
    }
}

/// Everything static about the MDP; episode state lives in [`Env`].
#[derive(Debug, Clone, PartialEq)]
pub struct EnvParams {
    pub model: RobotModel,
    pub workspace: Workspace,
    pub reward: RewardParams,
    pub collision: CollisionParams,
    pub sampling: SamplingParams,
    pub task: TaskKind,
    /// Maximum episode length in steps.
    pub n_tau: usize,
}

impl EnvParams {
    pub fn new(task: TaskKind, n_tau: usize) -> Self {
        Self {
            model: RobotModel::default(),
            workspace: Workspace::default(),
            reward: RewardParams::default(),
            collision: CollisionParams::default(),
            sampling: SamplingParams::default(),
            task,
            n_tau,
        }
    }

    /// One deterministic simulator step from an arbitrary state.
    ///
    /// `t_next` is the step count after this transition (for the timeout
    /// check); `enforce_partition` is set during demonstration recording.
    pub fn transition(
        &self,
        state: &JointState,
        goal: Vec3,
        obstacle: Option<Vec3>,
        action: &Vec4,
        t_next: usize,
        enforce_partition: Option<usize>,
    ) -> (JointState, StepOutcome) {
        let (next, tau_hat) = robot::step(&self.model, state, action);
        let pose = robot::forward_kinematics(&self.model, &next.q);
        let ee = pose.end_effector();
        let err = sub3(goal, ee);
        let collided = collision_check(&pose, obstacle, &self.collision);
        let reached = norm3(err) < self.reward.epsilon;
        let timeout = t_next >= self.n_tau;
        let left = enforce_partition
            .is_some_and(|k| !in_partition(self.workspace.partitions, k, ee, PARTITION_EDGE_TOL));
        let cause = if collided {
            Cause::Collision
        } else if reached {
            Cause::Reached
        } else if timeout {
            Cause::Timeout
        } else if left {
            Cause::LeftPartition
        } else {
            Cause::Running
        };
        let r = reward(err, tau_hat, reached, collided, &self.reward);
        let obs_next = Observation::assemble(&next, goal, err, obstacle);
        (
            next,
            StepOutcome {
                obs_next,
                reward: r,
                zeta: cause != Cause::Running,
                cause,
                tau_hat,
            },
        )
    }
}

/// A live episode. Owns its state; safe to run many instances in parallel.
#[derive(Debug, Clone)]
pub struct Env {
    pub params: EnvParams,
    state: JointState,
    goal: Vec3,
    obstacle: Option<Vec3>,
    t: usize,
    enforce_partition: Option<usize>,
    active: bool,
}

impl Env {
    pub fn new(params: EnvParams) -> Self {
        Self {
            params,
            state: JointState::at_rest([0.0; 4]),
            goal: [0.0; 3],
            obstacle: None,
            t: 0,
            enforce_partition: None,
            active: false,
        }
    }

    pub fn reset(&mut self, config: &EpisodeConfig) -> Observation {
        self.state = JointState::at_rest(config.q0);
        self.goal = config.goal;
        self.obstacle = config.obstacle;
        self.t = 0;
        self.enforce_partition = config.partition;
        self.active = true;
        self.observe()
    }

    pub fn observe(&self) -> Observation {
        let pose = robot::forward_kinematics(&self.params.model, &self.state.q);
        let err = sub3(self.goal, pose.end_effector());
        Observation::assemble(&self.state, self.goal, err, self.obstacle)
    }

    pub fn step(&mut self, action: &Vec4) -> StepOutcome {
        assert!(self.active, "step on a finished episode; call reset first");
        let (next, outcome) = self.params.transition(
            &self.state,
            self.goal,
            self.obstacle,
            action,
            self.t + 1,
            self.enforce_partition,
        );
        self.state = next;
        self.t += 1;
        if outcome.zeta {
            self.active = false;
        }
        outcome
    }

    pub fn steps_taken(&self) -> usize {
        self.t
    }

    pub fn is_active(&self) -> bool {
        self.active
    }
}

/// Seed for the inverse-kinematics solve of a start configuration.
fn ik_seed(theta: f64) -> Vec4 {
    [theta, 0.6, -0.6, 0.3]
}

fn uniform(rng: &mut Stream, range: [f64; 2]) -> f64 {
    rng.random_range(range[0]..range[1])
}

/// Draw an episode configuration for the given stage.
///
/// Starts are obtained via inverse kinematics of the stage's polar start
/// point; the whole draw is retried on an unreachable solve.
pub fn sample_episode(
    params: &EnvParams,
    stage: Stage,
    rng: &mut Stream,
) -> Result<EpisodeConfig, EnvError> {
    for _ in 0..SAMPLE_RETRIES {
        if let Some(cfg) = try_sample(params, stage, rng) {
            return Ok(cfg);
        }
    }
    Err(EnvError::SamplingFailed)
}

fn try_sample(params: &EnvParams, stage: Stage, rng: &mut Stream) -> Option<EpisodeConfig> {
    let s = &params.sampling;
    let ws = &params.workspace;
    match stage {
        Stage::DemoP2p => {
            let j = rng.random_range(0..4u8) as f64;
            let theta0 = j * FRAC_PI_2 - FRAC_PI_4;
            let theta_g = rng.random_range(j * FRAC_PI_2 - FRAC_PI_2..j * FRAC_PI_2);
            let goal = PolarPoint::new(
                theta_g,
                uniform(rng, s.demo_goal_rho),
                uniform(rng, s.demo_goal_z),
            );
            let start = PolarPoint::new(theta0, s.demo_rho0, s.demo_z0);
            let q0 =
                robot::inverse_kinematics(&params.model, start.to_cartesian(), &ik_seed(start.theta))
                    .ok()?;
            Some(EpisodeConfig {
                q0,
                goal: goal.to_cartesian(),
                obstacle: None,
                partition: Some(sector_of(ws.partitions, goal.to_cartesian())),
            })
        }
        Stage::DemoP2pO => {
            let j = rng.random_range(0..4u8) as f64;
            let theta0 = j * FRAC_PI_2;
            let theta_g = rng.random_range(j * FRAC_PI_2 - FRAC_PI_4..j * FRAC_PI_2);
            let goal = PolarPoint::new(
                theta_g,
                uniform(rng, s.demo_goal_rho),
                uniform(rng, s.demo_goal_z),
            );
            let theta_o = rng.random_range(theta_g - PI / 6.0..theta_g - PI / 12.0);
            let z_o = rng.random_range(goal.z - s.obstacle_dz..goal.z + s.obstacle_dz);
            let obstacle = PolarPoint::new(theta_o, uniform(rng, s.obstacle_rho), z_o);
            let start = PolarPoint::new(theta0, s.demo_rho0, s.demo_z0);
            let q0 =
                robot::inverse_kinematics(&params.model, start.to_cartesian(), &ik_seed(start.theta))
                    .ok()?;
            Some(EpisodeConfig {
                q0,
                goal: goal.to_cartesian(),
                obstacle: Some(obstacle.to_cartesian()),
                partition: Some(sector_of(ws.partitions, goal.to_cartesian())),
            })
        }
        Stage::Train | Stage::TestP2p | Stage::TestP2pO => {
            let (theta0, rho0, z0) = match stage {
                Stage::Train => (s.train_theta0, s.train_rho0, s.train_z0),
                Stage::TestP2p => (s.test_theta0_p2p, s.test_rho0, s.test_z0),
                _ => (s.test_theta0_p2po, s.test_rho0, s.test_z0),
            };
            let theta_g = rng.random_range(-PI..PI);
            let goal = PolarPoint::new(theta_g, uniform(rng, ws.rho_range), uniform(rng, ws.z_range));
            let obstacle = if params.task.has_obstacle() {
                let u: f64 = rng.random_range(0.0..1.0);
                let v = rng.random_range(PI / 12.0..PI / 6.0);
                let theta_b = theta_g + (u - 0.5).signum() * v;
                let z_b = rng.random_range(goal.z - s.obstacle_dz..goal.z + s.obstacle_dz);
                Some(PolarPoint::new(theta_b, uniform(rng, s.obstacle_rho), z_b).to_cartesian())
            } else {
                None
            };
            let start = PolarPoint::new(theta0, rho0, z0);
            let q0 =
                robot::inverse_kinematics(&params.model, start.to_cartesian(), &ik_seed(start.theta))
                    .ok()?;
            Some(EpisodeConfig {
                q0,
                goal: goal.to_cartesian(),
                obstacle,
                partition: None,
            })
        }
    }
}
