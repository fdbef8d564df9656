#![allow(dead_code)]

use convex_domset::io::{gen_figure1_with, gen_random, Family, Figure1Options, GenParams, Law};
use convex_domset::{Instance, Mode, SolverConfig};

pub const FAMILIES: [Family; 3] = [Family::Circle, Family::Ellipse, Family::PerturbedPolygon];

pub const RADIUS_LAWS: [Law; 4] = [
    Law::Uniform(0.2, 1.2),
    Law::LogNormal(-0.7, 0.6),
    Law::Uniform(0.05, 2.0),
    Law::Uniform(0.4, 0.9),
];

pub const WEIGHT_LAWS: [Law; 3] = [Law::Uniform(1.0, 10.0), Law::LogNormal(0.0, 0.5), Law::UNIT];

/// Deterministic mixed-parameter instance number `seed` with `n` points.
pub fn random_params(seed: u64, n: usize) -> GenParams {
    GenParams {
        n,
        seed,
        family: FAMILIES[(seed % 3) as usize],
        radius_law: RADIUS_LAWS[((seed / 3) % 4) as usize],
        weight_law: WEIGHT_LAWS[((seed / 12) % 3) as usize],
    }
}

pub fn random_instance(seed: u64, n: usize, mode: Mode) -> Instance {
    gen_random(&random_params(seed, n))
        .unwrap()
        .to_instance(mode)
        .unwrap()
}

/// Large-disk instances: sizes 5..=13, three arcs each, both alternation
/// phases.
pub fn figure1_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 5..=13 {
        for variant in 0..3 {
            let opts = Figure1Options {
                n,
                span_degrees: 100.0 + 30.0 * variant as f64 + (n % 3) as f64,
                avoid_first: (n + variant) % 2 == 1,
                rotation_degrees: 17.0 * (n * 3 + variant) as f64,
            };
            out.push(
                gen_figure1_with(&opts)
                    .unwrap()
                    .to_instance(Mode::Unweighted)
                    .unwrap(),
            );
        }
    }
    out
}

pub fn checked() -> SolverConfig {
    SolverConfig {
        check_invariants: true,
        ..SolverConfig::default()
    }
}

pub fn fast() -> SolverConfig {
    SolverConfig {
        check_invariants: false,
        ..SolverConfig::default()
    }
}
