//! Deterministic kinematics and simplified dynamics of a 4-DoF arm.
//!
//! The chain is a base yaw joint followed by three pitch joints: joint 1
//! rotates about the world z-axis, joints 2-4 rotate about the base-frame
//! y-axis rotated by the yaw angle. At the zero pose every link points
//! straight up, so the end-effector sits at `base_height + sum(link_lengths)`
//! on the z-axis.
//!
//! The yaw joint is treated as continuous: integration and inverse
//! kinematics wrap it into `[-pi, pi)` instead of clamping, which is what
//! makes quarter-turn rotations of the workspace commute with the dynamics.
//! Pitch joints clamp at their limits with the velocity zeroed on contact.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::math::{add3, clamp, cross3, norm3, scale3, solve3, sub3, wrap_angle, Vec3, Vec4};

pub const GRAVITY: f64 = 9.81;
/// Velocity-command tracking time constant (s).
pub const VEL_TRACK_TAU: f64 = 0.1;

const IK_MAX_ITERS: usize = 200;
const IK_DAMPING: f64 = 0.05;
const IK_STEP_CAP: f64 = 0.2;
const IK_TOL: f64 = 1e-4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RobotError {
    #[error("inverse kinematics did not converge within {IK_MAX_ITERS} iterations")]
    Unreachable,
}

/// Link geometry, joint/velocity/torque limits, and dynamics-proxy
/// parameters of the 4-DoF arm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobotModel {
    /// Height of the base column from the origin to the first pitch joint (m).
    pub base_height: f64,
    /// Lengths of the three moving links (m).
    pub link_lengths: [f64; 3],
    /// `[lo, hi]` per joint (rad). The yaw entry defines the wrap domain.
    pub joint_limits: [[f64; 2]; 4],
    /// Velocity limit per joint (rad/s).
    pub vel_limit: f64,
    /// Maximum actuation torque per joint (N·m).
    pub tau_max: [f64; 4],
    /// Proxy masses: base column plus the three links, lumped at link ends (kg).
    pub link_masses: [f64; 4],
    /// Viscous damping per joint (N·m·s/rad).
    pub damping: [f64; 4],
    /// Control period (s).
    pub dt: f64,
}

impl Default for RobotModel {
    fn default() -> Self {
        Self {
            base_height: 0.15,
            link_lengths: [0.30, 0.30, 0.25],
            joint_limits: [
                [-std::f64::consts::PI, std::f64::consts::PI],
                [-2.4, 2.4],
                [-2.4, 2.4],
                [-2.4, 2.4],
            ],
            vel_limit: 1.0,
            tau_max: [39.0, 39.0, 39.0, 9.0],
            link_masses: [2.0, 1.5, 1.5, 1.0],
            damping: [0.5, 0.5, 0.5, 0.2],
            dt: 0.05,
        }
    }
}

impl RobotModel {
    /// Total length of the moving chain (m).
    pub fn reach(&self) -> f64 {
        self.link_lengths.iter().sum()
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(self.base_height > 0.0) {
            return Err("base_height must be > 0".into());
        }
        if self.link_lengths.iter().any(|l| !(*l > 0.0)) {
            return Err("link_lengths must be > 0".into());
        }
        if !(self.vel_limit > 0.0) {
            return Err("vel_limit must be > 0".into());
        }
        if self.tau_max.iter().any(|t| !(*t > 0.0)) {
            return Err("tau_max must be > 0".into());
        }
        if self.joint_limits.iter().any(|[lo, hi]| !(lo < hi)) {
            return Err("joint_limits must satisfy lo < hi".into());
        }
        if !(self.dt > 0.0) {
            return Err("dt must be > 0".into());
        }
        Ok(())
    }
}

/// Joint angles and velocities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointState {
    pub q: Vec4,
    pub qdot: Vec4,
}

impl JointState {
    pub fn at_rest(q: Vec4) -> Self {
        Self { q, qdot: [0.0; 4] }
    }
}

/// Cartesian positions of the base, the three intermediate joints, and the
/// end-effector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArmPose {
    pub joint_points: [Vec3; 5],
}

impl ArmPose {
    pub fn end_effector(&self) -> Vec3 {
        self.joint_points[4]
    }
}

/// Positions of every joint point for the given joint angles.
pub fn forward_kinematics(model: &RobotModel, q: &Vec4) -> ArmPose {
    let (sy, cy) = q[0].sin_cos();
    let mut points = [[0.0; 3]; 5];
    points[1] = [0.0, 0.0, model.base_height];
    let mut pitch = 0.0;
    for i in 0..3 {
        pitch += q[i + 1];
        let (sp, cp) = pitch.sin_cos();
        let dir = [sp * cy, sp * sy, cp];
        points[i + 2] = add3(points[i + 1], scale3(dir, model.link_lengths[i]));
    }
    ArmPose {
        joint_points: points,
    }
}

/// 3x4 end-effector Jacobian: column j is the derivative of the
/// end-effector position with respect to joint j (m/rad).
pub fn jacobian(model: &RobotModel, q: &Vec4) -> [[f64; 4]; 3] {
    let pose = forward_kinematics(model, q);
    let ee = pose.end_effector();
    let mut j = [[0.0; 4]; 3];
    // yaw column: rotation about the world z-axis through the origin
    let col = cross3([0.0, 0.0, 1.0], ee);
    for r in 0..3 {
        j[r][0] = col[r];
    }
    // pitch columns: rotation about the yawed y-axis through each pivot
    let axis = [-q[0].sin(), q[0].cos(), 0.0];
    for c in 1..4 {
        let pivot = pose.joint_points[c];
        let col = cross3(axis, sub3(ee, pivot));
        for r in 0..3 {
            j[r][c] = col[r];
        }
    }
    j
}

/// Damped least-squares inverse kinematics from a seed configuration.
///
/// Pitch joints are clamped to their limits every iteration; the yaw joint
/// runs unclamped and is wrapped into `[-pi, pi)` at the end so targets on
/// the far side of the seam stay solvable.
pub fn inverse_kinematics(
    model: &RobotModel,
    target: Vec3,
    q_seed: &Vec4,
) -> Result<Vec4, RobotError> {
    let mut q = *q_seed;
    for _ in 0..IK_MAX_ITERS {
        let pose = forward_kinematics(model, &q);
        let err = sub3(target, pose.end_effector());
        if norm3(err) <= IK_TOL {
            q[0] = wrap_angle(q[0]);
            return Ok(q);
        }
        let j = jacobian(model, &q);
        // Solve (J J^T + damping^2 I) y = err, then dq = J^T y.
        let mut jjt = [[0.0; 3]; 3];
        for r in 0..3 {
            for c in 0..3 {
                let mut s = 0.0;
                for k in 0..4 {
                    s += j[r][k] * j[c][k];
                }
                jjt[r][c] = s;
            }
            jjt[r][r] += IK_DAMPING * IK_DAMPING;
        }
        let Some(y) = solve3(jjt, err) else {
            return Err(RobotError::Unreachable);
        };
        for c in 0..4 {
            let dq = clamp(
                j[0][c] * y[0] + j[1][c] * y[1] + j[2][c] * y[2],
                -IK_STEP_CAP,
                IK_STEP_CAP,
            );
            q[c] += dq;
        }
        for c in 1..4 {
            q[c] = clamp(q[c], model.joint_limits[c][0], model.joint_limits[c][1]);
        }
    }
    Err(RobotError::Unreachable)
}

/// One control period of first-order velocity tracking.
///
/// Returns the next joint state and the normalized torque proxy
/// `|I qddot + b qdot + g(q)| / tau_max` per joint, where inertia uses the
/// lumped link masses at their current lever arms and gravity acts on the
/// same point masses.
pub fn step(model: &RobotModel, st: &JointState, action: &Vec4) -> (JointState, Vec4) {
    let alpha = (model.dt / VEL_TRACK_TAU).min(1.0);
    let mut q_next = [0.0; 4];
    let mut qdot_next = [0.0; 4];
    for j in 0..4 {
        let a = clamp(action[j], -model.vel_limit, model.vel_limit);
        let mut v = st.qdot[j] + alpha * (a - st.qdot[j]);
        let mut qj = st.q[j] + v * model.dt;
        if j == 0 {
            qj = wrap_angle(qj);
        } else {
            let [lo, hi] = model.joint_limits[j];
            if qj <= lo {
                qj = lo;
                v = 0.0;
            } else if qj >= hi {
                qj = hi;
                v = 0.0;
            }
        }
        q_next[j] = qj;
        qdot_next[j] = v;
    }

    let pose = forward_kinematics(model, &st.q);
    let mut tau_hat = [0.0; 4];
    for j in 0..4 {
        let qddot = (qdot_next[j] - st.qdot[j]) / model.dt;
        let tau = inertia_about_joint(model, &pose, j) * qddot
            + model.damping[j] * qdot_next[j]
            + gravity_torque(model, &pose, j);
        tau_hat[j] = tau.abs() / model.tau_max[j];
    }

    (
        JointState {
            q: q_next,
            qdot: qdot_next,
        },
        tau_hat,
    )
}

/// Point-mass inertia about joint `j`'s axis at the current pose (kg·m²).
///
/// Mass `i` (the link driven by joint `i`) sits at joint point `i + 1`. All
/// lever arms are perpendicular distances to the joint axis, which makes the
/// result invariant under base-yaw rotation.
fn inertia_about_joint(model: &RobotModel, pose: &ArmPose, j: usize) -> f64 {
    let mut inertia = 0.0;
    for i in j..4 {
        let p = pose.joint_points[i + 1];
        let d2 = if j == 0 {
            // perpendicular distance to the z-axis
            p[0] * p[0] + p[1] * p[1]
        } else {
            // chain lies in the vertical yaw plane, so the pivot offset is
            // already perpendicular to the pitch axis
            let r = sub3(p, pose.joint_points[j]);
            r[0] * r[0] + r[1] * r[1] + r[2] * r[2]
        };
        inertia += model.link_masses[i] * d2;
    }
    inertia
}

/// Gravity torque about joint `j`'s axis at the current pose (N·m).
fn gravity_torque(model: &RobotModel, pose: &ArmPose, j: usize) -> f64 {
    if j == 0 {
        // vertical axis: gravity has no moment about it
        return 0.0;
    }
    let pivot = pose.joint_points[j];
    let mut tau = 0.0;
    for i in j..4 {
        let p = pose.joint_points[i + 1];
        let dx = p[0] - pivot[0];
        let dy = p[1] - pivot[1];
        // horizontal lever arm in the arm plane
        let arm = (dx * dx + dy * dy).sqrt();
        tau += model.link_masses[i] * GRAVITY * arm;
    }
    tau
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};

    fn random_q(rng: &mut crate::rng::Stream, model: &RobotModel) -> Vec4 {
        let mut q = [0.0; 4];
        for j in 0..4 {
            let [lo, hi] = model.joint_limits[j];
            q[j] = rng.random_range(lo..hi);
        }
        q
    }

    /// Independent FK oracle: chain of 4x4 homogeneous transforms
    /// Rz(q1)·Tz(h)·Ry(q2)·Tz(l1)·Ry(q3)·Tz(l2)·Ry(q4)·Tz(l3).
    fn fk_oracle(model: &RobotModel, q: &Vec4) -> Vec3 {
        fn matmul(a: [[f64; 4]; 4], b: [[f64; 4]; 4]) -> [[f64; 4]; 4] {
            let mut m = [[0.0; 4]; 4];
            for r in 0..4 {
                for c in 0..4 {
                    for k in 0..4 {
                        m[r][c] += a[r][k] * b[k][c];
                    }
                }
            }
            m
        }
        fn rz(t: f64) -> [[f64; 4]; 4] {
            let (s, c) = t.sin_cos();
            [
                [c, -s, 0.0, 0.0],
                [s, c, 0.0, 0.0],
                [0.0, 0.0, 1.0, 0.0],
                [0.0, 0.0, 0.0, 1.0],
            ]
        }
        fn ry(t: f64) -> [[f64; 4]; 4] {
            let (s, c) = t.sin_cos();
            [
                [c, 0.0, s, 0.0],
                [0.0, 1.0, 0.0, 0.0],
                [-s, 0.0, c, 0.0],
                [0.0, 0.0, 0.0, 1.0],
            ]
        }
        fn tz(d: f64) -> [[f64; 4]; 4] {
            [
                [1.0, 0.0, 0.0, 0.0],
                [0.0, 1.0, 0.0, 0.0],
                [0.0, 0.0, 1.0, d],
                [0.0, 0.0, 0.0, 1.0],
            ]
        }
        let mut t = matmul(rz(q[0]), tz(model.base_height));
        for i in 0..3 {
            t = matmul(t, ry(q[i + 1]));
            t = matmul(t, tz(model.link_lengths[i]));
        }
        [t[0][3], t[1][3], t[2][3]]
    }

    #[test]
    fn fk_zero_pose_is_vertical() {
        let model = RobotModel::default();
        let pose = forward_kinematics(&model, &[0.0; 4]);
        let ee = pose.end_effector();
        assert!((ee[0]).abs() < 1e-15);
        assert!((ee[1]).abs() < 1e-15);
        assert!((ee[2] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn fk_right_angle_pitch_lays_chain_along_x() {
        let model = RobotModel::default();
        let ee = forward_kinematics(&model, &[0.0, FRAC_PI_2, 0.0, 0.0]).end_effector();
        assert!((ee[0] - 0.85).abs() < 1e-12);
        assert!(ee[1].abs() < 1e-12);
        assert!((ee[2] - 0.15).abs() < 1e-12);
    }

    #[test]
    fn fk_matches_transform_chain_oracle() {
        let model = RobotModel::default();
        // value frozen from the pre-build transform-chain computation
        let q = [FRAC_PI_4, FRAC_PI_3, -FRAC_PI_6, FRAC_PI_6];
        let ee = forward_kinematics(&model, &q).end_effector();
        assert!((ee[0] - 0.4428708568106692).abs() < 1e-12);
        assert!((ee[1] - 0.44287085681066907).abs() < 1e-12);
        assert!((ee[2] - 0.6848076211353317).abs() < 1e-12);

        let mut rng = crate::rng::stream(11);
        for _ in 0..200 {
            let q = random_q(&mut rng, &model);
            let got = forward_kinematics(&model, &q).end_effector();
            let want = fk_oracle(&model, &q);
            for r in 0..3 {
                assert!((got[r] - want[r]).abs() < 1e-12, "q={q:?}");
            }
        }
    }

    #[test]
    fn fk_chain_lengths_are_preserved() {
        let model = RobotModel::default();
        let mut rng = crate::rng::stream(7);
        for _ in 0..10_000 {
            let q = random_q(&mut rng, &model);
            let pose = forward_kinematics(&model, &q);
            let mut lengths = vec![model.base_height];
            lengths.extend_from_slice(&model.link_lengths);
            for i in 0..4 {
                let d = norm3(sub3(pose.joint_points[i + 1], pose.joint_points[i]));
                assert!((d - lengths[i]).abs() < 1e-9, "q={q:?} link {i}");
            }
        }
    }

    #[test]
    fn fk_is_base_yaw_equivariant() {
        let model = RobotModel::default();
        let mut rng = crate::rng::stream(13);
        for _ in 0..1000 {
            let q = random_q(&mut rng, &model);
            let delta: f64 = rng.random_range(-PI..PI);
            let mut q2 = q;
            q2[0] += delta;
            let rotated = forward_kinematics(&model, &q2).end_effector();
            let base = forward_kinematics(&model, &q).end_effector();
            let (s, c) = delta.sin_cos();
            let want = [
                c * base[0] - s * base[1],
                s * base[0] + c * base[1],
                base[2],
            ];
            for r in 0..3 {
                assert!((rotated[r] - want[r]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn jacobian_yaw_column_vanishes_on_axis() {
        let model = RobotModel::default();
        let j = jacobian(&model, &[0.0; 4]);
        for r in 0..3 {
            assert!(j[r][0].abs() < 1e-15);
        }
    }

    #[test]
    fn jacobian_yaw_column_sweeps_x_toward_y() {
        let model = RobotModel::default();
        let j = jacobian(&model, &[0.0, FRAC_PI_2, 0.0, 0.0]);
        assert!(j[0][0].abs() < 1e-12);
        assert!((j[1][0] - 0.85).abs() < 1e-12);
        assert!(j[2][0].abs() < 1e-12);
    }

    #[test]
    fn jacobian_matches_central_differences() {
        let model = RobotModel::default();
        let mut rng = crate::rng::stream(29);
        let h = 1e-6;
        for _ in 0..1000 {
            let q = random_q(&mut rng, &model);
            let j = jacobian(&model, &q);
            for c in 0..4 {
                let mut qp = q;
                let mut qm = q;
                qp[c] += h;
                qm[c] -= h;
                let fp = forward_kinematics(&model, &qp).end_effector();
                let fm = forward_kinematics(&model, &qm).end_effector();
                for r in 0..3 {
                    let fd = (fp[r] - fm[r]) / (2.0 * h);
                    assert!((j[r][c] - fd).abs() < 1e-5, "q={q:?} entry ({r},{c})");
                }
            }
        }
    }

    #[test]
    fn ik_round_trips_random_reachable_targets() {
        let model = RobotModel::default();
        let mut rng = crate::rng::stream(31);
        for _ in 0..200 {
            let mut q_star = random_q(&mut rng, &model);
            // keep targets away from the fully folded interior
            q_star[1] = rng.random_range(0.3..1.4);
            q_star[2] = rng.random_range(-1.0..1.0);
            q_star[3] = rng.random_range(-1.0..1.0);
            let target = forward_kinematics(&model, &q_star).end_effector();
            let mut seed = q_star;
            for s in seed.iter_mut() {
                *s += 0.05;
            }
            let q = inverse_kinematics(&model, target, &seed).expect("reachable");
            let err = norm3(sub3(forward_kinematics(&model, &q).end_effector(), target));
            assert!(err <= 1e-3, "residual {err}");
            for j in 1..4 {
                assert!(q[j] >= model.joint_limits[j][0] && q[j] <= model.joint_limits[j][1]);
            }
        }
    }

    #[test]
    fn ik_zero_pose_target_keeps_seed() {
        let model = RobotModel::default();
        let q = inverse_kinematics(&model, [0.0, 0.0, 1.0], &[0.0; 4]).unwrap();
        for j in 0..4 {
            assert!(q[j].abs() < 1e-9);
        }
    }

    #[test]
    fn ik_rejects_target_beyond_reach() {
        let model = RobotModel::default();
        let err = inverse_kinematics(&model, [2.0, 0.0, 0.4], &[0.0; 4]).unwrap_err();
        assert_eq!(err, RobotError::Unreachable);
    }

    #[test]
    fn step_statics_leave_state_unchanged() {
        let model = RobotModel::default();
        let st = JointState::at_rest([0.3, 0.8, -0.4, 0.2]);
        let (next, tau_hat) = step(&model, &st, &[0.0; 4]);
        assert_eq!(next.q, st.q);
        assert_eq!(next.qdot, [0.0; 4]);
        let pose = forward_kinematics(&model, &st.q);
        for j in 0..4 {
            let want = gravity_torque(&model, &pose, j).abs() / model.tau_max[j];
            assert!((tau_hat[j] - want).abs() < 1e-15);
        }
        assert_eq!(tau_hat[0], 0.0);
    }

    #[test]
    fn step_clamps_pitch_at_limit_and_zeroes_velocity() {
        let model = RobotModel::default();
        let mut st = JointState::at_rest([0.0; 4]);
        st.q[1] = model.joint_limits[1][1];
        st.qdot[1] = 0.5;
        let (next, _) = step(&model, &st, &[0.0, 1.0, 0.0, 0.0]);
        assert_eq!(next.q[1], model.joint_limits[1][1]);
        assert_eq!(next.qdot[1], 0.0);
    }

    #[test]
    fn step_first_order_filter_arithmetic() {
        let model = RobotModel::default();
        let st = JointState::at_rest([0.0; 4]);
        let (next, _) = step(&model, &st, &[0.0, 1.0, 0.0, 0.0]);
        assert!((next.qdot[1] - 0.5).abs() < 1e-15);
        assert!((next.q[1] - 0.025).abs() < 1e-15);
    }

    #[test]
    fn step_wraps_yaw_instead_of_clamping() {
        let model = RobotModel::default();
        let st = JointState {
            q: [PI - 0.01, 0.5, 0.0, 0.0],
            qdot: [1.0, 0.0, 0.0, 0.0],
        };
        let (next, _) = step(&model, &st, &[1.0, 0.0, 0.0, 0.0]);
        assert!(next.q[0] < 0.0, "yaw should wrap to the negative side");
        assert!((next.qdot[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn step_is_deterministic() {
        let model = RobotModel::default();
        let st = JointState {
            q: [0.1, 0.2, 0.3, 0.4],
            qdot: [0.05, -0.02, 0.0, 0.01],
        };
        let a = [0.6, -0.3, 0.2, -0.9];
        let (n1, t1) = step(&model, &st, &a);
        let (n2, t2) = step(&model, &st, &a);
        assert_eq!(n1, n2);
        assert_eq!(t1, t2);
    }

    #[test]
    fn commanded_velocity_is_clamped() {
        let model = RobotModel::default();
        let st = JointState::at_rest([0.0; 4]);
        let (fast, _) = step(&model, &st, &[0.0, 5.0, 0.0, 0.0]);
        let (capped, _) = step(&model, &st, &[0.0, 1.0, 0.0, 0.0]);
        assert_eq!(fast.qdot[1], capped.qdot[1]);
    }
}
