use super::*;
use crate::coeffs::PrimeField;
use crate::gb::kernel_of_map;

fn fp() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn curve(exps: &[(u32, u32)]) -> Ideal<PrimeField> {
    let p = PolyRing::new(fp(), vec!["s".into(), "t".into()], crate::poly::MonomialOrder::Grevlex).unwrap();
    let imgs: Vec<_> = exps.iter().map(|(a, b)| p.parse(&format!("s^{a}*t^{b}")).unwrap()).collect();
    let x = PolyRing::standard(fp(), "x", imgs.len()).unwrap();
    kernel_of_map(&x, &imgs).unwrap()
}

// dim Ext^k_m by plain per-degree ranks of the dual maps
fn ext_by_ranks(def: &DeficiencyModules<PrimeField>, k: usize, m: i64) -> i64 {
    let res = def.resolution();
    let ring = res.ring();
    if k > res.len() {
        return 0;
    }
    let free: Vec<i64> = res.twists(k).iter().map(|t| -t).collect();
    let mut dim = graded_dimension(ring, &free, m) as i64;
    if k >= 1 {
        dim -= res.maps()[k - 1].transpose().rank_in_degree(m) as i64;
    }
    if let Some(next) = res.maps().get(k) {
        dim -= next.transpose().rank_in_degree(m) as i64;
    }
    dim
}

// S(1,2) ⊂ P^4
fn scroll_12() -> Ideal<PrimeField> {
    let r = PolyRing::standard(fp(), "x", 5).unwrap();
    Ideal::from_strings(&r, &["x0*x3-x1*x2", "x0*x4-x1*x3", "x2*x4-x3^2"]).unwrap()
}

#[test]
fn rational_quartic() {
    let i = curve(&[(4, 0), (3, 1), (1, 3), (0, 4)]);
    let def = DeficiencyModules::new(&i).unwrap();
    for k in 0..=4 {
        for m in -8..=2 {
            assert_eq!(def.ext_dim(k, m), ext_by_ranks(&def, k, m), "Ext^{k} in degree {m}");
        }
    }
    // h^1(I_C(j)) is 1 at j = 1 only
    let h1: Vec<i64> = (-2..=4).map(|j| def.deficiency_dim(1, -j).unwrap()).collect();
    assert_eq!(h1, vec![0, 0, 0, 1, 0, 0, 0]);
    assert_eq!(def.minimal_generators(1).unwrap(), [(-1, 1)].into());
    // h^2(I_C(j)) = h^1(O_C(j)) = h^1(O_P1(4j)) = -4j-1 for j < 0
    assert_eq!(def.deficiency_dim(2, 2).unwrap(), 7);
    assert!(is_saturated(&i).unwrap());
}

#[test]
fn cohen_macaulay_scroll() {
    let i = scroll_12();
    let (table, def) = sheaf_cohomology_table(&i, -5, 4).unwrap();
    assert!(table.h1.iter().chain(&table.h2).all(|&v| v == 0));
    assert_eq!(e_invariant(&def).unwrap(), 0);
    assert_eq!(index_of_normality(&def).unwrap(), None);
    // h^2(O_X(j)) = h^0(K + |j|H) on the blown-up plane, H = 2L - E
    assert_eq!(table.get(3, -1), 0);
    assert_eq!(table.get(3, -2), 2);
    assert_eq!(table.get(3, -3), 7);
    for k in 0..=5 {
        for m in -6..=1 {
            assert_eq!(def.ext_dim(k, m), ext_by_ranks(&def, k, m));
        }
    }
}

#[test]
fn euler_h3_matches_k3() {
    let i = scroll_12();
    let def = DeficiencyModules::new(&i).unwrap();
    for m in -3..=6 {
        assert_eq!(def.k3_by_euler(m).unwrap(), def.deficiency_dim(3, m).unwrap(), "degree {m}");
    }
    let c = curve(&[(4, 0), (3, 1), (1, 3), (0, 4)]);
    assert!(DeficiencyModules::new(&c).unwrap().k3_by_euler(0).is_err());
}

#[test]
fn sections_of_the_scroll() {
    let i = scroll_12();
    let r = i.ring().clone();
    let h = r.parse("x0+2*x1-x2+5*x3+x4").unwrap();
    let c = hyperplane_section(&i, &h).unwrap();
    assert_eq!(c.ring().nvars(), 4);
    assert_eq!(c.dim_degree().unwrap(), (1, 3));
    let (sreg, all) = sectional_regularity(&i, 3, 7).unwrap();
    assert_eq!(sreg, 2);
    assert_eq!(all.len(), 3);
    assert_eq!(sectional_genus(&i, 7).unwrap(), 0);
    let c = hyperplane_section(&i, &r.var(4)).unwrap();
    assert_eq!(c.ring().names().len(), 4);
    assert!(hyperplane_section(&i, &r.parse("x0^2").unwrap()).is_err());
}

#[test]
fn unsaturated_input_is_rejected() {
    let r = PolyRing::standard(fp(), "x", 3).unwrap();
    let i = Ideal::from_strings(&r, &["x0^2", "x0*x1", "x0*x2"]).unwrap();
    assert!(matches!(sheaf_cohomology_table(&i, -1, 1), Err(Error::NotSaturated)));
}
