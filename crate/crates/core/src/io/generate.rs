//! Seeded convex-position instance generators.
//!
//! Randomness comes from xoshiro256++ seeded through SplitMix64
//! (`Xoshiro256PlusPlus::seed_from_u64`). A uniform draw on `[0, 1)` is
//! `(next_u64 >> 11) * 2^-53`; normal draws use the Box–Muller cosine branch
//! with `u1` replaced by `1 - u1`.

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use super::{InstanceDocument, IoError};
use crate::geometry::WeightedDisk;

const CURVE_RADIUS: f64 = 3.0;
const ELLIPSE_AXES: (f64, f64) = (3.0, 2.0);
const POLYGON_SQUASH: f64 = 0.8;
const POLYGON_JITTER: f64 = 0.3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Circle,
    Ellipse,
    PerturbedPolygon,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Circle => "circle",
            Family::Ellipse => "ellipse",
            Family::PerturbedPolygon => "perturbed-polygon",
        })
    }
}

impl FromStr for Family {
    type Err = IoError;

    fn from_str(s: &str) -> Result<Self, IoError> {
        match s {
            "circle" => Ok(Family::Circle),
            "ellipse" => Ok(Family::Ellipse),
            "perturbed-polygon" => Ok(Family::PerturbedPolygon),
            _ => Err(IoError::BadParams(format!("unknown family `{s}`"))),
        }
    }
}

/// Distribution of radii or weights.
///
/// Text form: `unit`, `const:C`, `uniform:A,B`, `lognormal:MU,SIGMA`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Law {
    Constant(f64),
    Uniform(f64, f64),
    LogNormal(f64, f64),
}

impl Law {
    pub const UNIT: Law = Law::Constant(1.0);

    fn sample(&self, rng: &mut Draws) -> f64 {
        match *self {
            Law::Constant(c) => c,
            Law::Uniform(a, b) => a + (b - a) * rng.uniform(),
            Law::LogNormal(mu, sigma) => (mu + sigma * rng.normal()).exp(),
        }
    }

    fn validate(&self, what: &str, positive: bool) -> Result<(), IoError> {
        let bad = |msg: &str| Err(IoError::BadParams(format!("{what} law {self}: {msg}")));
        let ok_value = |v: f64| v.is_finite() && if positive { v > 0.0 } else { v >= 0.0 };
        match *self {
            Law::Constant(c) if !ok_value(c) => bad("value out of range"),
            Law::Uniform(a, b) if !(ok_value(a) && ok_value(b)) => bad("bounds out of range"),
            Law::Uniform(a, b) if a > b => bad("lower bound exceeds upper bound"),
            Law::LogNormal(mu, sigma) if !(mu.is_finite() && sigma.is_finite() && sigma >= 0.0) => {
                bad("parameters out of range")
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Law::Constant(c) if *c == 1.0 => write!(f, "unit"),
            Law::Constant(c) => write!(f, "const:{c}"),
            Law::Uniform(a, b) => write!(f, "uniform:{a},{b}"),
            Law::LogNormal(m, s) => write!(f, "lognormal:{m},{s}"),
        }
    }
}

impl FromStr for Law {
    type Err = IoError;

    fn from_str(s: &str) -> Result<Self, IoError> {
        let bad = || IoError::BadParams(format!("cannot parse law `{s}`"));
        if s == "unit" {
            return Ok(Law::UNIT);
        }
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<f64> = args
            .split(',')
            .map(|a| a.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        match (kind, nums.as_slice()) {
            ("const", [c]) => Ok(Law::Constant(*c)),
            ("uniform", [a, b]) => Ok(Law::Uniform(*a, *b)),
            ("lognormal", [m, sd]) => Ok(Law::LogNormal(*m, *sd)),
            _ => Err(bad()),
        }
    }
}

struct Draws(Xoshiro256PlusPlus);

impl Draws {
    fn new(seed: u64) -> Self {
        Draws(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    fn uniform(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn normal(&mut self) -> f64 {
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        (-2.0 * u1.ln()).sqrt() * (TAU * u2).cos()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenParams {
    pub n: usize,
    pub seed: u64,
    pub family: Family,
    pub radius_law: Law,
    pub weight_law: Law,
}

/// Sorted angles in `[rot, rot + 2π)` with consecutive gaps (cyclically)
/// of at least `2π / (4n)`.
fn spread_angles(n: usize, rng: &mut Draws) -> Vec<f64> {
    let min_gap = TAU / (4 * n) as f64;
    let raw: Vec<f64> = (0..n).map(|_| rng.uniform() + 1e-3).collect();
    let total: f64 = raw.iter().sum();
    let free = TAU - min_gap * n as f64;
    let rotation = TAU * rng.uniform();
    let mut angle = rotation;
    raw.iter()
        .map(|g| {
            let a = angle;
            angle += min_gap + free * g / total;
            a
        })
        .collect()
}

fn polygon_angles(n: usize, rng: &mut Draws) -> Vec<f64> {
    let step = TAU / n as f64;
    let rotation = TAU * rng.uniform();
    (0..n)
        .map(|k| rotation + step * (k as f64 + POLYGON_JITTER * (2.0 * rng.uniform() - 1.0)))
        .collect()
}

/// `n` disks with centers on a strictly convex curve.
pub fn gen_random(params: &GenParams) -> Result<InstanceDocument, IoError> {
    if params.n == 0 {
        return Err(IoError::BadParams("n must be at least 1".into()));
    }
    params.radius_law.validate("radius", false)?;
    params.weight_law.validate("weight", true)?;

    let mut rng = Draws::new(params.seed);
    let n = params.n;
    let centers: Vec<(f64, f64)> = match params.family {
        Family::Circle => spread_angles(n, &mut rng)
            .into_iter()
            .map(|a| (CURVE_RADIUS * a.cos(), CURVE_RADIUS * a.sin()))
            .collect(),
        Family::Ellipse => spread_angles(n, &mut rng)
            .into_iter()
            .map(|a| (ELLIPSE_AXES.0 * a.cos(), ELLIPSE_AXES.1 * a.sin()))
            .collect(),
        Family::PerturbedPolygon => polygon_angles(n, &mut rng)
            .into_iter()
            .map(|a| {
                (
                    CURVE_RADIUS * a.cos(),
                    CURVE_RADIUS * POLYGON_SQUASH * a.sin(),
                )
            })
            .collect(),
    };
    let disks: Vec<WeightedDisk> = centers
        .into_iter()
        .map(|(x, y)| {
            let r = params.radius_law.sample(&mut rng);
            let w = params.weight_law.sample(&mut rng);
            WeightedDisk::new(x, y, r, w)
        })
        .collect();

    let metadata = BTreeMap::from([
        ("generator".to_string(), "random".to_string()),
        ("family".to_string(), params.family.to_string()),
        ("n".to_string(), n.to_string()),
        ("seed".to_string(), params.seed.to_string()),
        ("radius_law".to_string(), params.radius_law.to_string()),
        ("weight_law".to_string(), params.weight_law.to_string()),
    ]);
    Ok(InstanceDocument::from_disks(&disks, metadata))
}

/// Layout of the large-disk construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Figure1Options {
    /// Total number of disks, large one included.
    pub n: usize,
    /// Angular extent of the arc of small centers, in degrees, below 180.
    pub span_degrees: f64,
    /// Whether the first small disk avoids the large one.
    pub avoid_first: bool,
    /// Rotation of the whole picture, in degrees.
    pub rotation_degrees: f64,
}

impl Figure1Options {
    pub fn new(n: usize) -> Self {
        Figure1Options {
            n,
            span_degrees: 150.0,
            avoid_first: false,
            rotation_degrees: 0.0,
        }
    }
}

/// A large disk at the origin and `n - 1` small pairwise disjoint disks on
/// an arc around it that alternately intersect and avoid it.
pub fn gen_figure1(n: usize) -> Result<InstanceDocument, IoError> {
    gen_figure1_with(&Figure1Options::new(n))
}

pub fn gen_figure1_with(opts: &Figure1Options) -> Result<InstanceDocument, IoError> {
    if opts.n < 5 {
        return Err(IoError::BadParams(format!(
            "figure-1 layout needs n >= 5, got {}",
            opts.n
        )));
    }
    if !(opts.span_degrees > 0.0 && opts.span_degrees < 180.0) || !opts.rotation_degrees.is_finite()
    {
        return Err(IoError::BadParams(
            "span must lie in (0, 180) degrees".into(),
        ));
    }
    let small = opts.n - 1;
    let rho = 10.0;
    let span = opts.span_degrees * PI / 180.0;
    let step = span / (small - 1) as f64;
    let chord = 2.0 * rho * (step / 2.0).sin();
    let (r_meet, r_avoid) = (0.3 * chord, 0.1 * chord);
    let big = rho - 0.2 * chord;
    let rot = opts.rotation_degrees * PI / 180.0;

    let mut disks = vec![WeightedDisk::unit(0.0, 0.0, big)];
    for k in 0..small {
        let a = rot - span / 2.0 + step * k as f64;
        let avoids = (k % 2 == 0) == opts.avoid_first;
        let r = if avoids { r_avoid } else { r_meet };
        disks.push(WeightedDisk::unit(rho * a.cos(), rho * a.sin(), r));
    }
    let metadata = BTreeMap::from([
        ("generator".to_string(), "figure1".to_string()),
        ("n".to_string(), opts.n.to_string()),
        ("span_degrees".to_string(), opts.span_degrees.to_string()),
        ("avoid_first".to_string(), opts.avoid_first.to_string()),
        (
            "rotation_degrees".to_string(),
            opts.rotation_degrees.to_string(),
        ),
    ]);
    Ok(InstanceDocument::from_disks(&disks, metadata))
}
