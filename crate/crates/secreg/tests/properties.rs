use std::sync::Arc;

use proptest::prelude::*;
use secreg::coeffs::{Field, PrimeField};
use secreg::cohom::DeficiencyModules;
use secreg::gb::{ideal_equal, read_ideal, write_ideal, Ideal};
use secreg::geom::{scroll_ideal, secant_length, secant_length_by_hilbert, Line};
use secreg::linalg::{rank, SparseRow};
use secreg::poly::{Monomial, PolyRing, Polynomial};
use secreg::resolve::{minimal_resolution, BettiTable};

fn fp() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn ring(n: usize) -> Arc<PolyRing<PrimeField>> {
    PolyRing::standard(fp(), "x", n).unwrap()
}

/// A homogeneous polynomial of degree `deg` in `n` variables with up to
/// `terms` terms.
fn homogeneous(n: usize, deg: u32, terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, u32)>> {
    let exps = proptest::collection::vec(0..=deg, n - 1).prop_map(move |mut v| {
        // distribute `deg` by clamping the running sum
        let mut left = deg;
        for e in v.iter_mut() {
            *e = (*e).min(left);
            left -= *e;
        }
        v.push(left);
        v
    });
    proptest::collection::vec((exps, 1..32003u32), 1..=terms)
}

fn poly(r: &Arc<PolyRing<PrimeField>>, t: &[(Vec<u32>, u32)]) -> Polynomial<PrimeField> {
    let f = r.field();
    let terms = t
        .iter()
        .map(|(e, c)| (Monomial::from_exponents(e).unwrap(), f.from_i64(*c as i64)))
        .collect();
    Polynomial::from_terms(r.clone(), terms)
}

fn random_ideal() -> impl Strategy<Value = Vec<Vec<(Vec<u32>, u32)>>> {
    proptest::collection::vec((2u32..=3).prop_flat_map(|d| homogeneous(4, d, 4)), 1..=4)
}

fn build(gens: &[Vec<(Vec<u32>, u32)>]) -> Option<Ideal<PrimeField>> {
    let r = ring(4);
    let gens: Vec<_> = gens.iter().map(|g| poly(&r, g)).filter(|p| !p.is_zero()).collect();
    if gens.is_empty() {
        return None;
    }
    Ideal::new(&r, gens).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn spairs_reduce_to_zero(g in random_ideal()) {
        let Some(i) = build(&g) else { return Ok(()) };
        let gb = i.groebner();
        prop_assert!(gb.verify());
        for f in i.gens() {
            prop_assert!(gb.normal_form(f).unwrap().is_zero());
        }
    }

    #[test]
    fn resolution_is_exact_and_matches_hilbert(g in random_ideal()) {
        let Some(i) = build(&g) else { return Ok(()) };
        prop_assume!(!i.is_unit());
        let res = minimal_resolution(&i).unwrap();
        prop_assert!(res.is_minimal());
        prop_assert!(res.is_complex().unwrap());
        let b = res.betti_table().unwrap();
        prop_assert!(res.is_exact_up_to(b.reg() + 2).unwrap());
        prop_assert!(res.euler_check(&i.hilbert_series().unwrap()).unwrap());
        prop_assert!(b.pd() <= 4);
    }

    #[test]
    fn ideal_files_round_trip(g in random_ideal()) {
        let Some(i) = build(&g) else { return Ok(()) };
        let again = read_ideal(&write_ideal(&i), fp()).unwrap();
        prop_assert_eq!(again.gens(), i.gens());
    }

    #[test]
    fn polynomials_print_and_parse(t in homogeneous(5, 4, 6)) {
        let r = ring(5);
        let p = poly(&r, &t);
        prop_assert_eq!(r.parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn betti_numbers_survive_coordinate_changes(c in proptest::collection::vec(1..32003i64, 25)) {
        // S(1,2) under a random (almost surely invertible) linear change
        let f = fp();
        let i = scroll_ideal(&f, &[1, 2]).unwrap();
        let r = i.ring().clone();
        let images: Vec<_> = (0..5)
            .map(|k| r.linear_form(&c[5 * k..5 * k + 5].iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>()))
            .collect();
        let rows: Vec<SparseRow<u32>> = (0..5)
            .map(|k| (0..5).map(|j| (j, f.from_i64(c[5 * k + j]))).filter(|t| t.1 != 0).collect())
            .collect();
        prop_assume!(rank(&f, rows) == 5);
        let moved = Ideal::new(&r, i.gens().iter().map(|g| g.substitute(&images).unwrap()).collect()).unwrap();
        let b0: BettiTable = minimal_resolution(&i).unwrap().betti_table().unwrap();
        let b1 = minimal_resolution(&moved).unwrap().betti_table().unwrap();
        prop_assert_eq!(b0, b1);
    }

    #[test]
    fn field_inverse(a in 1..32003i64, b in 0..32003i64) {
        let f = fp();
        let x = f.from_i64(a);
        prop_assert!(f.is_one(&f.mul(&x, &f.inv(&x).unwrap())));
        let y = f.from_i64(b);
        prop_assert_eq!(f.sub(&f.add(&x, &y), &y), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    // Auslander-Buchsbaum against the first nonvanishing K^i on cones over
    // finite point sets in P^2: depth is always 1 and K^1 carries h^1(I_Z(j)).
    #[test]
    fn depth_from_deficiency_modules(pts in proptest::collection::vec(proptest::collection::vec(0..32003i64, 3), 2..6)) {
        let f = fp();
        let r = ring(3);
        let mut i: Option<Ideal<PrimeField>> = None;
        for p in &pts {
            let p: Vec<u32> = p.iter().map(|&x| f.from_i64(x)).collect();
            prop_assume!(p.iter().any(|x| *x != 0));
            // ideal of a point: 2x2 minors of [x; p]
            let mut gens = Vec::new();
            for a in 0..3 {
                for b in a + 1..3 {
                    let g = r.var(a).scale(&p[b]).sub(&r.var(b).scale(&p[a])).unwrap();
                    if !g.is_zero() {
                        gens.push(g);
                    }
                }
            }
            let q = Ideal::new(&r, gens).unwrap();
            i = Some(match i {
                None => q,
                Some(prev) => secreg::gb::intersect(&prev, &q).unwrap(),
            });
        }
        let i = i.unwrap();
        let def = DeficiencyModules::new(&i).unwrap();
        let b = def.betti_table();
        prop_assert_eq!(def.first_nonzero(-8, 8).unwrap(), Some(b.depth()));
        prop_assert!(ideal_equal(&i, &i).unwrap());
    }
}

#[test]
fn secant_oracles_agree_on_random_lines() {
    // lines through two random points of P^4 meet the cubic scroll in at
    // most a point unless they are rulings; both oracles must agree
    let f = fp();
    let i = scroll_ideal(&f, &[1, 2]).unwrap();
    let mut rng = secreg::coeffs::derive_rng(7, 0);
    for _ in 0..10 {
        let p: Vec<u32> = (0..5).map(|_| f.random(&mut rng)).collect();
        let q: Vec<u32> = (0..5).map(|_| f.random(&mut rng)).collect();
        let line = Line::new(&f, p, q).unwrap();
        assert_eq!(secant_length(&i, &line).unwrap(), secant_length_by_hilbert(&i, &line).unwrap());
    }
}
