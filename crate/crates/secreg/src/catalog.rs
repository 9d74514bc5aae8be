//! Named example surfaces with tabulated reference values.

use rand::Rng as _;
use serde_json::json;

use crate::coeffs::{derive_rng, Field};
use crate::cohom::{classify_degree_r_plus_1, InvariantReport};
use crate::error::{Error, Result};
use crate::geom::{Surface, SurfaceKind};
use crate::verify::{verify_surface, ArtifactOptions, Artifacts, VerificationReport};

const F35: &str = "s^4*t+s^3*t^2+s^2*t^3+s*t^4";
const F38_1: &str = "s^7*t+s^6*t^2+s^5*t^3+s^4*t^4+s^3*t^5+s^2*t^6+s*t^7";
const F38_2: &str = "s^7*t+s^6*t^2+s^5*t^3+s^4*t^4+s^3*t^5+s^2*t^6";
const F38_3: &str = "s^7*t+s^6*t^2+s^5*t^3+s^4*t^4";
const F39_1: &str = "s^8*t+s^7*t^2+s^6*t^3+s^5*t^4+s^4*t^5+s^3*t^6+s^2*t^7+s*t^8";
const F39_2: &str = "s^8*t+s^7*t^2+s^6*t^3+s^5*t^4+s^4*t^5+s^3*t^6+s^2*t^7";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    TypeI { d: u32 },
    TypeII { a: u32, b: u32, f: &'static str },
}

impl Family {
    pub fn kind(&self) -> SurfaceKind {
        match *self {
            Family::TypeI { d } => SurfaceKind::TypeI { d },
            Family::TypeII { a, b, f } => SurfaceKind::TypeII { a, b, f: f.to_string() },
        }
    }
}

/// A surface together with the values known for it.
#[derive(Clone, Debug)]
pub struct Example {
    pub id: &'static str,
    pub family: Family,
    /// Nonzero rows `(j, β_{1,j}, β_{2,j}, …)`.
    pub betti: &'static [(i64, &'static [usize])],
    pub tau: Option<(usize, usize)>,
    pub e: Option<i64>,
    /// `None` here means nothing is tabulated; `Some(None)` would be `-∞`.
    pub normality: Option<i64>,
    /// `(i, j, h^i(I_X(j)))`.
    pub cohomology: &'static [(usize, i64, i64)],
}

const T1_D8_H1: &[(usize, i64, i64)] = &[
    (1, -1, 0),
    (1, 0, 0),
    (1, 1, 4),
    (1, 2, 9),
    (1, 3, 12),
    (1, 4, 10),
    (1, 5, 0),
    (1, 6, 0),
];

const A3B5_COH: &[(usize, i64, i64)] = &[
    (2, -2, 6),
    (2, -1, 6),
    (2, 0, 6),
    (2, 1, 3),
    (2, 2, 1),
    (2, 3, 0),
    (2, 4, 0),
    (1, 1, 0),
    (3, -2, 7),
];

pub const EXAMPLES: &[Example] = &[
    Example {
        id: "type1_d8",
        family: Family::TypeI { d: 8 },
        betti: &[(1, &[3, 2]), (5, &[21, 70, 87, 48, 10])],
        tau: None,
        e: Some(0),
        normality: Some(4),
        cohomology: T1_D8_H1,
    },
    Example {
        id: "type1_d9",
        family: Family::TypeI { d: 9 },
        betti: &[(1, &[3, 2]), (6, &[28, 96, 123, 70, 15])],
        tau: None,
        e: None,
        normality: None,
        cohomology: &[],
    },
    Example {
        id: "type1_d10",
        family: Family::TypeI { d: 10 },
        betti: &[(1, &[3, 2]), (7, &[36, 126, 165, 96, 21])],
        tau: None,
        e: None,
        normality: None,
        cohomology: &[],
    },
    Example {
        id: "type2_a3_b5",
        family: Family::TypeII { a: 3, b: 5, f: F35 },
        betti: &[(1, &[6, 8, 3]), (2, &[4, 12, 12, 4]), (4, &[1, 4, 6, 4, 1])],
        tau: Some((2, 3)),
        e: Some(6),
        normality: None,
        cohomology: A3B5_COH,
    },
    Example {
        id: "type2_a3_b8_f1",
        family: Family::TypeII { a: 3, b: 8, f: F38_1 },
        betti: &[(1, &[6, 8, 3]), (3, &[4, 12, 12, 4]), (5, &[1, 4, 6, 4, 1]), (7, &[1, 4, 6, 4, 1])],
        tau: Some((2, 2)),
        e: None,
        normality: None,
        cohomology: &[],
    },
    Example {
        id: "type2_a3_b8_f2",
        family: Family::TypeII { a: 3, b: 8, f: F38_2 },
        betti: &[
            (1, &[5, 5]),
            (2, &[1, 0, 1]),
            (3, &[1, 9, 11, 4]),
            (4, &[4, 18, 32, 28, 12, 2]),
            (7, &[1, 4, 6, 4, 1]),
        ],
        tau: Some((1, 1)),
        e: None,
        normality: None,
        cohomology: &[],
    },
    Example {
        id: "type2_a3_b8_f3",
        family: Family::TypeII { a: 3, b: 8, f: F38_3 },
        betti: &[(1, &[3, 2]), (2, &[10, 27, 24, 7]), (7, &[1, 4, 6, 4, 1])],
        tau: Some((2, 3)),
        e: None,
        normality: None,
        cohomology: &[],
    },
    Example {
        id: "type2_a3_b9_f1",
        family: Family::TypeII { a: 3, b: 9, f: F39_1 },
        betti: &[
            (1, &[6, 8, 3]),
            (3, &[2, 4]),
            (4, &[1, 4, 10, 6, 1]),
            (6, &[1, 4, 6, 4, 1]),
            (8, &[1, 4, 6, 4, 1]),
        ],
        tau: Some((2, 2)),
        e: None,
        normality: None,
        cohomology: &[],
    },
    Example {
        id: "type2_a3_b9_f2",
        family: Family::TypeII { a: 3, b: 9, f: F39_2 },
        betti: &[
            (1, &[5, 5]),
            (2, &[0, 0, 1]),
            (3, &[5, 15, 15, 5]),
            (5, &[5, 23, 42, 38, 17, 3]),
            (8, &[1, 4, 6, 4, 1]),
        ],
        tau: Some((1, 1)),
        e: None,
        normality: None,
        cohomology: &[],
    },
];

pub fn example(id: &str) -> Option<&'static Example> {
    EXAMPLES.iter().find(|e| e.id == id)
}

impl Example {
    /// Reference triples `(i, j, β_{i,j})`, zeros dropped.
    pub fn betti_triples(&self) -> Vec<[i64; 3]> {
        let mut out = Vec::new();
        for (j, row) in self.betti {
            for (k, &b) in row.iter().enumerate() {
                if b > 0 {
                    out.push([k as i64 + 1, *j, b as i64]);
                }
            }
        }
        out.sort();
        out
    }

    /// Compares the artifacts with the tabulated values, then runs the
    /// general checks for the surface family.
    pub fn verify(&self, surface_spec: &crate::geom::SurfaceSpec, a: &Artifacts) -> VerificationReport {
        let mut rep = VerificationReport::default();
        rep.check_eq(
            "table.betti",
            "β_{i,j}(X) = tabulated values",
            json!(self.betti_triples()),
            a.betti.as_ref().map(|b| {
                let mut t: Vec<[i64; 3]> =
                    b.nonzero().filter(|t| t.0 > 0).map(|(i, j, v)| [i as i64, j, v as i64]).collect();
                t.sort();
                json!(t)
            }),
        );
        if let Some(tau) = self.tau {
            let computed = a.betti.as_ref().zip(a.union_betti.as_ref()).map(|(x, y)| json!((x.depth(), y.depth())));
            rep.check_eq("table.tau", "τ(X) = (depth S/I_X, depth S/I_Y)", json!(tau), computed);
        }
        let cohom = a.cohomology.as_ref();
        if let Some(e) = self.e {
            rep.check_eq("table.e", "e(X) = h²(I_X(j)) for j ≪ 0", json!(e), cohom.and_then(|t| t.e).map(|x| json!(x)));
        }
        if let Some(n) = self.normality {
            rep.check_eq(
                "table.normality",
                "N(X) = max{j : h¹(I_X(j)) ≠ 0}",
                json!(n),
                cohom.map(|t| t.normality.map_or(json!("-inf"), |x| json!(x))),
            );
        }
        if !self.cohomology.is_empty() {
            let expected: Vec<_> = self.cohomology.iter().map(|&(i, j, h)| json!([i, j, h])).collect();
            let computed = cohom.map(|t| {
                json!(self
                    .cohomology
                    .iter()
                    .map(|&(i, j, _)| json!([i, j, if t.lo <= j && j <= t.hi { t.get(i, j) } else { -1 }]))
                    .collect::<Vec<_>>())
            });
            rep.check_eq("table.cohomology", "h^i(I_X(j)) = tabulated values", json!(expected), computed);
        }
        rep.extend(verify_surface(surface_spec, a));
        rep.prefixed(self.id)
    }
}

/// Builds, computes and checks one example.
pub fn run_example<F: Field>(field: &F, ex: &Example, opts: ArtifactOptions) -> Result<VerificationReport> {
    let surface = Surface::build(field, &ex.family.kind())?;
    let artifacts = Artifacts::compute(&surface, opts)?;
    Ok(ex.verify(&surface.spec, &artifacts))
}

/// A degree-`b` binary form with seeded coefficients in `1..=997`.
pub fn generic_form(b: u32, seed: u64) -> String {
    let mut rng = derive_rng(seed, 0xf0f0);
    (0..=b)
        .map(|i| format!("{}*s^{}*t^{}", rng.random_range(1..=997u32), b - i, i))
        .collect::<Vec<_>>()
        .join("+")
}

/// Classification of the two degree `r + 1` examples: a type II surface with
/// `(a, b) = (3, 4)` and a generic form, and the type I sextic.
pub fn classification_checks<F: Field>(field: &F, seed: u64) -> Result<VerificationReport> {
    let mut rep = VerificationReport::default();
    let f = generic_form(4, seed);
    let cases: [(&str, SurfaceKind, u8, [i64; 6]); 2] = [
        ("classify/type2_a3_b4_generic", SurfaceKind::TypeII { a: 3, b: 4, f }, 8, [4, 2, 0, 3, 0, 0]),
        ("classify/type1_d6", SurfaceKind::TypeI { d: 6 }, 9, [4, 1, 0, 0, 2, 3]),
    ];
    for (id, kind, case, tuple) in cases {
        let s = Surface::build(field, &kind)?;
        let y = s.union()?;
        let inv = InvariantReport::compute(&s.ideal, y.as_ref(), 3, seed)?;
        let got = classify_degree_r_plus_1(&inv);
        let computed = [inv.sreg, inv.depth as i64, inv.sigma, inv.e, inv.h1.0, inv.h1.1];
        rep.check_eq(
            id,
            "case of (sreg, depth, σ, e, h¹(I_X(1)), h¹(I_X(2))) in the degree r+1 table",
            json!({ "case": case, "invariants": tuple }),
            Some(json!({
                "case": match got {
                    Ok(c) => json!(c.0),
                    Err(Error::Unclassified(m)) => json!(format!("unclassified {m}")),
                    Err(e) => return Err(e),
                },
                "invariants": computed,
            })),
        );
    }
    Ok(rep)
}
