use super::*;
use crate::catalog::{example, run_example};
use crate::coeffs::PrimeField;
use crate::geom::Surface;

fn fp() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn opts() -> ArtifactOptions {
    ArtifactOptions { secant_samples: 8, seed: 1 }
}

#[test]
fn type2_a3_b5_passes() {
    let rep = run_example(&fp(), example("type2_a3_b5").unwrap(), opts()).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.count(Verdict::Skipped), 0, "{rep}");
}

#[test]
fn type1_d8_passes() {
    let o = ArtifactOptions { secant_samples: 20, seed: 1 };
    let rep = run_example(&fp(), example("type1_d8").unwrap(), o).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.count(Verdict::Skipped), 0, "{rep}");
}

#[test]
fn perturbed_betti_fails_by_name() {
    let ex = example("type2_a3_b5").unwrap();
    let s = Surface::build(&fp(), &ex.family.kind()).unwrap();
    let mut a = Artifacts::compute(&s, opts()).unwrap();
    let b = a.betti.take().unwrap();
    let bumped = b.nonzero().map(|(i, j, v)| if (i, j) == (1, 1) { (i, j, v + 1) } else { (i, j, v) });
    a.betti = Some(BettiTable::from_entries(b.nvars(), bumped.collect::<Vec<_>>()));
    let rep = ex.verify(&s.spec, &a);
    let failed: Vec<_> = rep.failures().map(|c| c.claim.as_str()).collect();
    assert!(failed.contains(&"type2_a3_b5/table.betti"), "{failed:?}");
    assert!(failed.contains(&"type2_a3_b5/betti.comparison"), "{failed:?}");
    assert!(!rep.passed());
}

#[test]
fn missing_artifacts_are_skipped() {
    let ex = example("type2_a3_b5").unwrap();
    let s = Surface::build(&fp(), &ex.family.kind()).unwrap();
    let rep = ex.verify(&s.spec, &Artifacts::default());
    assert!(rep.claims.iter().all(|c| c.verdict == Verdict::Skipped), "{rep}");
    assert!(rep.passed());
}

#[test]
fn report_json_round_trips() {
    let rep = run_example(&fp(), example("type2_a3_b5").unwrap(), opts()).unwrap();
    let text = serde_json::to_string(&rep).unwrap();
    assert!(text.starts_with('['));
    let back: VerificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, rep);
}
