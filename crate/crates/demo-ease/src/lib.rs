//! Off-policy actor-critic learning for robot-arm reaching, accelerated by
//! PID-generated demonstrations that are duplicated across the four symmetric
//! quadrants of the workspace and injected through a Q-filtered behavior
//! cloning loss.
//!
//! The crate is organized around the three pipeline stages exposed by the
//! `demo-ease` binary:
//!
//! * `demo`  — record PID demonstration episodes in a single workspace
//!   quadrant and store each transition together with its three rotated
//!   duplicates in dual replay buffers ([`demo`], [`replay`]).
//! * `train` — DDPG with target networks and the combined actor loss
//!   (policy-gradient term plus Q-filtered behavior cloning) ([`agent`],
//!   [`nn`]).
//! * `eval`  — noiseless test rollouts with success/effort/error metrics
//!   ([`metrics`]).
//!
//! The simulated plant is a 4-DoF arm (base yaw plus three pitch joints)
//! with velocity-command tracking and a normalized torque proxy ([`robot`]),
//! wrapped in a point-to-point reaching MDP with optional cubic obstacle
//! ([`env`]).
//!
//! All randomness flows through seeded ChaCha streams; identical seeds give
//! byte-identical buffers, checkpoints, and CSV logs. With the default
//! `parallel` feature, evaluation trials, demonstration episodes, and
//! per-sample gradient work fan out over rayon while preserving those exact
//! bytes (order-preserving maps, sequential reductions).

pub mod agent;
pub mod cli;
pub mod config;
pub mod demo;
pub mod env;
pub mod exec;
pub mod math;
pub mod metrics;
pub mod nn;
pub mod replay;
pub mod robot;
pub mod rng;
pub mod wire;
