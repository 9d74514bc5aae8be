use super::*;
use crate::coeffs::PrimeField;

fn ring(n: usize) -> Arc<PolyRing<PrimeField>> {
    PolyRing::standard(PrimeField::new(32003).unwrap(), "x", n).unwrap()
}

fn resolve(r: &Arc<PolyRing<PrimeField>>, gens: &[&str]) -> (FreeResolution<PrimeField>, BettiTable) {
    let i = Ideal::from_strings(r, gens).unwrap();
    let res = minimal_resolution(&i).unwrap();
    assert!(res.is_minimal());
    assert!(res.is_complex().unwrap());
    let b = res.betti_table().unwrap();
    assert_eq!(b, betti_from_frame(&i).unwrap());
    assert!(b.euler_check(&i.hilbert_series().unwrap()));
    (res, b)
}

#[test]
fn koszul() {
    let r = ring(6);
    let (res, b) = resolve(&r, &["x0", "x1"]);
    assert_eq!(b.get(1, 0), 2);
    assert_eq!(b.get(2, 0), 1);
    assert_eq!(b.pd(), 2);
    assert_eq!(b.depth(), 4);
    assert!(res.is_exact_up_to(3).unwrap());
}

#[test]
fn twisted_cubic_and_scroll() {
    let r = ring(4);
    let (res, b) = resolve(&r, &["x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2"]);
    assert_eq!(b.row(1, 2), vec![3, 2]);
    assert!(res.is_exact_up_to(4).unwrap());
    let r = ring(6);
    let (res, b) = resolve(&r, &["x0*x3-x1*x2", "x0*x5-x1*x4", "x2*x5-x3*x4"]);
    assert_eq!(b.row(1, 3), vec![3, 2, 0]);
    assert_eq!(b.n2p_index(), 2);
    assert!(res.is_exact_up_to(4).unwrap());
}

#[test]
fn non_linear_strands() {
    // complete intersection of two quadrics plus a cubic, and a hyperplane
    let r = ring(4);
    let (_, b) = resolve(&r, &["x0^2+x1*x2", "x1^2-x3^2", "x2^3+x0*x1*x3"]);
    assert_eq!(b.get(1, 1), 2);
    assert_eq!(b.get(1, 2), 1);
    assert_eq!(b.get(3, 4), 1);
    assert_eq!(b.pd(), 3);
    let (_, b) = resolve(&r, &["x0+x1+x2"]);
    assert_eq!(b.reg_subscheme(), 1);
}

#[test]
fn generator_order_does_not_matter() {
    let r = ring(5);
    let gens = ["x0*x2-x1^2", "x1*x3-x2^2", "x0*x4^2-x3^3", "x2*x4-x3^2+x0*x1"];
    let (_, b1) = resolve(&r, &gens);
    let rev: Vec<&str> = gens.iter().rev().copied().collect();
    let (_, b2) = resolve(&r, &rev);
    assert_eq!(b1, b2);
}

#[test]
fn syzygy_matrices() {
    let r = ring(3);
    let m = GradedMatrix::from_rows(&r, vec![0], None, vec![vec![r.parse("x0").unwrap(), r.parse("x1").unwrap()]])
        .unwrap();
    let s = syzygies(&m).unwrap();
    assert_eq!(s.ncols(), 1);
    assert_eq!(s.col_degrees(), &[2]);
    assert!(m.compose(&s).unwrap().is_zero());

    let r = ring(4);
    let q: Vec<_> = ["x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2"].iter().map(|s| r.parse(s).unwrap()).collect();
    let m = GradedMatrix::from_rows(&r, vec![0], None, vec![q]).unwrap();
    let s = syzygies(&m).unwrap();
    assert_eq!(s.col_degrees(), &[3, 3]);
    assert!(m.compose(&s).unwrap().is_zero());
    assert_eq!(syzygies(&s).unwrap().ncols(), 0);
}
