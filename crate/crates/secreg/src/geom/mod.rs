//! Surface constructors and secant-line geometry.

mod secant;
mod univariate;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use secant::{
    plucker, plucker_span, sample_secant_lines, secant_length, secant_length_by_hilbert, Line, PluckerSpan,
    SecantLength, SecantSample,
};

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::gb::{intersect, kernel_of_map, Ideal};
use crate::poly::{MonomialOrder, PolyRing, Polynomial};

/// Which family a surface comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurfaceKind {
    /// Divisor of degree `d` on the Segre threefold `P^1 × P^2 ⊂ P^5`.
    TypeI { d: u32 },
    /// Projection `[u s^a : … : u t^a : v s^b : v f : v t^b]` of `S(a, b)`.
    TypeII { a: u32, b: u32, f: String },
    Scroll { degrees: Vec<u32> },
}

/// A constructed surface (or scroll) with its parametrization data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub kind: SurfaceKind,
    /// Ambient `P^r`.
    pub r: u32,
    /// Expected degree.
    pub d: u32,
    /// Images of the coordinates, as text in `s, t, u, v`.
    pub images: Vec<String>,
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SurfaceKind::TypeI { d } => write!(f, "type I surface of degree {d} in P^5"),
            SurfaceKind::TypeII { a, b, f: g } => write!(f, "type II surface (a, b) = ({a}, {b}), f = {g}"),
            SurfaceKind::Scroll { degrees } => write!(f, "scroll S{degrees:?}"),
        }
    }
}

const HEADER: &str = "# surface ";

impl SurfaceSpec {
    /// Comment line recording the construction in an ideal file.
    pub fn header_line(&self) -> String {
        format!("{HEADER}{}", serde_json::to_string(self).expect("plain data"))
    }

    /// Recovers the spec from an ideal file written by [`SurfaceSpec::header_line`].
    pub fn from_ideal_text(text: &str) -> Option<Result<SurfaceSpec>> {
        let line = text.lines().find_map(|l| l.trim().strip_prefix(HEADER))?;
        Some(serde_json::from_str(line).map_err(Error::from))
    }
}

/// A constructed surface: its ideal and, for type II, the extremal plane.
#[derive(Clone, Debug)]
pub struct Surface<F: Field> {
    pub spec: SurfaceSpec,
    pub ideal: Ideal<F>,
    pub plane: Option<Ideal<F>>,
}

impl<F: Field> Surface<F> {
    pub fn build(field: &F, kind: &SurfaceKind) -> Result<Self> {
        match kind {
            SurfaceKind::TypeI { d } => {
                let (spec, ideal) = type1_surface(field, *d)?;
                Ok(Surface { spec, ideal, plane: None })
            }
            SurfaceKind::TypeII { a, b, f } => {
                let (spec, ideal, plane) = type2_surface(field, *a, *b, f)?;
                Ok(Surface { spec, ideal, plane: Some(plane) })
            }
            SurfaceKind::Scroll { degrees } => {
                let ideal = scroll_ideal(field, degrees)?;
                let d: u32 = degrees.iter().sum();
                let spec = SurfaceSpec {
                    kind: kind.clone(),
                    r: ideal.ring().nvars() as u32 - 1,
                    d,
                    images: Vec::new(),
                };
                Ok(Surface { spec, ideal, plane: None })
            }
        }
    }

    /// Ideal of `X ∪ F` when the extremal plane is known.
    pub fn union(&self) -> Result<Option<Ideal<F>>> {
        self.plane.as_ref().map(|p| union_with_plane(&self.ideal, p)).transpose()
    }
}

/// Ideal of 2×2 minors of the block matrix of `S(a_1, …, a_k)` in
/// `Σ a_i + k` variables named `x0, x1, …`.
pub fn scroll_ideal<F: Field>(field: &F, degrees: &[u32]) -> Result<Ideal<F>> {
    if degrees.is_empty() || degrees.iter().all(|&a| a == 0) {
        return Err(Error::Precondition("scroll needs some a_i > 0".into()));
    }
    let n: usize = degrees.iter().map(|&a| a as usize + 1).sum();
    let ring = PolyRing::standard(field.clone(), "x", n)?;
    scroll_ideal_in(&ring, degrees, 0)
}

fn scroll_ideal_in<F: Field>(ring: &Arc<PolyRing<F>>, degrees: &[u32], first: usize) -> Result<Ideal<F>> {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    let mut v = first;
    for &a in degrees {
        for k in 0..a as usize {
            top.push(v + k);
            bottom.push(v + k + 1);
        }
        v += a as usize + 1;
    }
    let mut gens = Vec::new();
    for i in 0..top.len() {
        for j in i + 1..top.len() {
            let m = ring.var(top[i]).mul(&ring.var(bottom[j]))?.sub(&ring.var(top[j]).mul(&ring.var(bottom[i]))?)?;
            if !m.is_zero() {
                gens.push(m);
            }
        }
    }
    Ideal::new(ring, gens)
}

fn param_ring<F: Field>(field: &F) -> Result<Arc<PolyRing<F>>> {
    PolyRing::new(field.clone(), ["s", "t", "u", "v"].map(String::from).to_vec(), MonomialOrder::Grevlex)
}

fn implicitize<F: Field>(field: &F, images: &[Polynomial<F>], d: u32) -> Result<Ideal<F>> {
    let target = PolyRing::standard(field.clone(), "x", images.len())?;
    let ideal = kernel_of_map(&target, images)?;
    let dd = ideal.dim_degree()?;
    if dd != (2, d as i64) {
        return Err(Error::Construction(format!(
            "expected a surface of degree {d}, got (dim, degree) = {dd:?}"
        )));
    }
    Ok(ideal)
}

/// Coordinates `u^{d-1}s, u^{d-1}t, v s^{d-1}, v s^{d-2}t, v s t^{d-2}, v t^{d-1}`.
pub fn type1_images(d: u32) -> Vec<String> {
    let e = d - 1;
    vec![
        format!("u^{e}*s"),
        format!("u^{e}*t"),
        format!("v*s^{e}"),
        format!("v*s^{}*t", e - 1),
        format!("v*s*t^{}", e - 1),
        format!("v*t^{e}"),
    ]
}

/// Ideal of the segre threefold `P^1 × P^2 ⊂ P^5` containing the type I
/// surfaces: minors of `[[x0, x2, x4], [x1, x3, x5]]`.
pub fn segre_threefold<F: Field>(ring: &Arc<PolyRing<F>>) -> Result<Ideal<F>> {
    scroll_ideal_in(ring, &[1, 1, 1], 0)
}

/// Degree-`d` type I surface in `P^5`, `d ≥ 5`.
pub fn type1_surface<F: Field>(field: &F, d: u32) -> Result<(SurfaceSpec, Ideal<F>)> {
    if d < 5 {
        return Err(Error::Precondition(format!("type I surfaces need d ≥ 5, got {d}")));
    }
    let p = param_ring(field)?;
    let texts = type1_images(d);
    let images = texts.iter().map(|s| p.parse(s)).collect::<Result<Vec<_>>>()?;
    let ideal = implicitize(field, &images, d)?;
    if !ideal.contains_ideal(&segre_threefold(ideal.ring())?)? {
        return Err(Error::Construction("surface does not lie on the Segre threefold".into()));
    }
    let spec = SurfaceSpec { kind: SurfaceKind::TypeI { d }, r: 5, d, images: texts };
    Ok((spec, ideal))
}

/// Type II surface `X_f ⊂ P^{a+3}` and the ideal `(x_0, …, x_a)` of its
/// extremal plane. `f` is a binary form of degree `b` in `s, t`.
pub fn type2_surface<F: Field>(field: &F, a: u32, b: u32, f: &str) -> Result<(SurfaceSpec, Ideal<F>, Ideal<F>)> {
    if a < 3 || b < a {
        return Err(Error::Precondition(format!("need 3 ≤ a ≤ b, got a = {a}, b = {b}")));
    }
    let p = param_ring(field)?;
    let fp = p.parse(f)?;
    if fp.is_zero() || !fp.is_homogeneous() || fp.degree() != Some(b) || fp.variables_used().iter().any(|&v| v > 1) {
        return Err(Error::Precondition(format!("f must be a binary form of degree {b} in s, t")));
    }
    // f must not be a combination of s^b and t^b, or the plane curve degenerates
    let (sb, tb) = (p.parse(&format!("s^{b}"))?, p.parse(&format!("t^{b}"))?);
    if fp.terms().iter().all(|(m, _)| Some(m) == sb.lead_monomial() || Some(m) == tb.lead_monomial()) {
        return Err(Error::Precondition("f must have a mixed term s^i t^j with i, j > 0".into()));
    }
    let mut texts: Vec<String> = (0..=a).map(|i| format!("u*s^{}*t^{}", a - i, i)).collect();
    texts.push(format!("v*s^{b}"));
    texts.push(format!("v*({f})"));
    texts.push(format!("v*t^{b}"));
    let images = texts.iter().map(|s| p.parse(s)).collect::<Result<Vec<_>>>()?;
    let ideal = implicitize(field, &images, a + b)?;
    let ring = ideal.ring().clone();
    let plane = Ideal::new(&ring, (0..=a as usize).map(|i| ring.var(i)).collect())?;
    let spec = SurfaceSpec {
        kind: SurfaceKind::TypeII { a, b, f: fp.to_string() },
        r: a + 3,
        d: a + b,
        images: texts,
    };
    Ok((spec, ideal, plane))
}

/// Ideal of `X ∪ P`, where `plane` is generated by `r - 2` independent
/// linear forms.
pub fn union_with_plane<F: Field>(ideal: &Ideal<F>, plane: &Ideal<F>) -> Result<Ideal<F>> {
    let n = ideal.ring().nvars();
    let gb = plane.groebner();
    if !plane.gens().iter().all(|g| g.is_linear_form()) || gb.len() + 3 != n {
        return Err(Error::Precondition("second ideal must define a plane".into()));
    }
    Ok(intersect(ideal, plane)?.minimalized_gens())
}

#[cfg(test)]
mod tests;
