use super::*;
use crate::coeffs::PrimeField;

fn fp() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

const F35: &str = "s^4*t+s^3*t^2+s^2*t^3+s*t^4";

#[test]
fn scrolls() {
    let i = scroll_ideal(&fp(), &[1, 2]).unwrap();
    assert_eq!(i.dim_degree().unwrap(), (2, 3));
    let i = scroll_ideal(&fp(), &[3, 5]).unwrap();
    assert_eq!(i.gens().len(), 28);
    assert_eq!(i.dim_degree().unwrap(), (2, 8));
}

#[test]
fn type2_rejects_pure_powers() {
    assert!(type2_surface(&fp(), 3, 5, "s^5+t^5").is_err());
    assert!(type2_surface(&fp(), 3, 5, "s^4").is_err());
    assert!(type2_surface(&fp(), 2, 5, F35).is_err());
}

#[test]
fn type2_secants_are_plane_curve_sections() {
    let (spec, x, plane) = type2_surface(&fp(), 3, 5, F35).unwrap();
    assert_eq!((spec.r, spec.d), (6, 8));
    assert_eq!(plane.gens().len(), 4);
    let samples = sample_secant_lines(&spec, &x, 8, 3).unwrap();
    for s in &samples {
        assert_eq!(s.length, SecantLength::Finite(5));
        assert_eq!(secant_length_by_hilbert(&x, &s.line).unwrap(), s.length);
    }
    let pts: Vec<_> = samples.iter().map(|s| s.plucker.clone()).collect();
    let span = plucker_span(&fp(), &pts).unwrap();
    assert_eq!(span.span_dim, 2);
    assert_eq!(span.quadric_dim, 0);
    assert!(span.quadric_check);
}

#[test]
fn type1_line_sections() {
    let (spec, x) = type1_surface(&fp(), 8).unwrap();
    let samples = sample_secant_lines(&spec, &x, 20, 0).unwrap();
    for s in &samples {
        assert_eq!(s.length, SecantLength::Finite(6));
    }
    assert_eq!(secant_length_by_hilbert(&x, &samples[0].line).unwrap(), SecantLength::Finite(6));
    let pts: Vec<_> = samples.iter().map(|s| s.plucker.clone()).collect();
    let span = plucker_span(&fp(), &pts).unwrap();
    assert_eq!((span.span_dim, span.quadric_dim, span.fit, span.holdout), (5, 6, 15, 5));
    assert!(span.quadric_check);
}

#[test]
fn sampling_is_seeded() {
    let (spec, x, _) = type2_surface(&fp(), 3, 5, F35).unwrap();
    let a = sample_secant_lines(&spec, &x, 3, 11).unwrap();
    let b = sample_secant_lines(&spec, &x, 3, 11).unwrap();
    assert!(a.iter().zip(&b).all(|(u, v)| u.line == v.line));
    assert!(sample_secant_lines(&spec, &x, 0, 11).is_err());
}

#[test]
fn lines_on_the_surface_are_infinite() {
    // the ruling {s = 0} of the scroll S(1, 2) lies on it
    let x = scroll_ideal(&fp(), &[1, 2]).unwrap();
    let f = fp();
    let line = Line::new(&f, vec![0, 1, 0, 0, 0], vec![0, 0, 0, 0, 1]).unwrap();
    assert_eq!(secant_length(&x, &line).unwrap(), SecantLength::Infinite);
    assert_eq!(secant_length_by_hilbert(&x, &line).unwrap(), SecantLength::Infinite);
    assert!(Line::new(&f, vec![1, 2, 0, 0, 0], vec![2, 4, 0, 0, 0]).is_err());
}

#[test]
fn plucker_of_coordinate_line() {
    let f = fp();
    assert_eq!(plucker(&f, &[1, 0, 0], &[0, 1, 0]), vec![1, 0, 0]);
}

#[test]
fn two_lines_of_a_pencil_span_a_line() {
    let f = fp();
    let a = plucker(&f, &[1, 0, 0, 0], &[0, 1, 0, 0]);
    let b = plucker(&f, &[1, 0, 0, 0], &[0, 3, 1, 0]);
    assert_eq!(plucker_span(&f, &[a, b]).unwrap().span_dim, 1);
    assert!(plucker_span(&f, &[vec![1, 0, 0]]).is_err());
}
