//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::time::Instant;

use secreg::catalog::{classification_checks, EXAMPLES};
use secreg::coeffs::PrimeField;
use secreg::formulas::type1_betti_formula;
use secreg::geom::{SecantLength, Surface};
use secreg::resolve::BettiTable;
use secreg::verify::{ArtifactOptions, Artifacts, Verdict, VerificationReport};

const SEED: u64 = 42;

struct Computed {
    artifacts: Artifacts,
    report: VerificationReport,
}

fn rows(b: &BettiTable) -> Vec<(i64, Vec<usize>)> {
    let cols = b.pd();
    (1..=b.reg()).map(|j| (j, b.row(j, cols))).filter(|(_, r)| r.iter().any(|&x| x > 0)).collect()
}

fn expect_rows(b: &BettiTable, want: &[(i64, &[usize])]) -> Result<(), String> {
    let got = rows(b);
    let want: Vec<(i64, Vec<usize>)> = want
        .iter()
        .map(|(j, r)| {
            let mut r = r.to_vec();
            r.resize(b.pd(), 0);
            (*j, r)
        })
        .collect();
    if got == want {
        Ok(())
    } else {
        Err(format!("betti rows {got:?}, expected {want:?}"))
    }
}

fn tau(c: &Computed) -> Option<(usize, usize)> {
    Some((c.artifacts.betti.as_ref()?.depth(), c.artifacts.union_betti.as_ref()?.depth()))
}

fn claims_pass(c: &Computed, id: &str, names: &[&str]) -> Result<(), String> {
    for n in names {
        let full = format!("{id}/{n}");
        match c.report.claims.iter().find(|x| x.claim == full) {
            Some(x) if x.verdict == Verdict::Pass => {}
            Some(x) => return Err(format!("{full}: {:?}, expected {} computed {}", x.verdict, x.expected, x.computed)),
            None => return Err(format!("{full}: missing")),
        }
    }
    Ok(())
}

fn all(results: impl IntoIterator<Item = Result<(), String>>) -> Result<(), String> {
    let errs: Vec<String> = results.into_iter().filter_map(|r| r.err()).collect();
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs.join("; "))
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn main() {
    let field = PrimeField::new(32003).unwrap();
    let opts = ArtifactOptions { secant_samples: 20, seed: SEED };
    let mut computed: BTreeMap<&str, Computed> = BTreeMap::new();
    let mut elapsed: BTreeMap<&str, f64> = BTreeMap::new();
    let mut setup_errors = Vec::new();
    for ex in EXAMPLES {
        let t = Instant::now();
        let r = Surface::build(&field, &ex.family.kind()).and_then(|s| {
            let a = Artifacts::compute(&s, opts)?;
            let report = ex.verify(&s.spec, &a);
            Ok(Computed { artifacts: a, report })
        });
        elapsed.insert(ex.id, t.elapsed().as_secs_f64());
        match r {
            Ok(c) => {
                computed.insert(ex.id, c);
            }
            Err(e) => setup_errors.push(format!("{}: {e}", ex.id)),
        }
    }
    let get = |id: &str| computed.get(id).ok_or_else(|| format!("{id} was not computed"));
    let secs = |ids: &[&str]| ids.iter().map(|i| elapsed.get(i).copied().unwrap_or(0.0)).sum::<f64>();

    let mut results: Vec<(u32, &str, Result<(), String>, f64)> = Vec::new();

    // 1
    let type1: [(&str, i64, &[usize]); 3] = [
        ("type1_d8", 8, &[21, 70, 87, 48, 10]),
        ("type1_d9", 9, &[28, 96, 123, 70, 15]),
        ("type1_d10", 10, &[36, 126, 165, 96, 21]),
    ];
    let r1 = all(type1.iter().map(|(id, d, strand)| {
        let c = get(id)?;
        let b = c.artifacts.betti.as_ref().ok_or("no betti")?;
        expect_rows(b, &[(1, &[3, 2]), (d - 3, strand)]).map_err(|e| format!("{id}: {e}"))?;
        let formula = type1_betti_formula(*d).map_err(|e| e.to_string())?;
        check(*b == formula, || format!("{id}: differs from the closed form"))
    }));
    results.push((1, "type I Betti tables, d = 8, 9, 10", r1, secs(&["type1_d8", "type1_d9", "type1_d10"])));

    // 2
    let r2 = (|| {
        let c = get("type1_d8")?;
        let t = c.artifacts.cohomology.as_ref().ok_or("no cohomology")?;
        let want = |j: i64| match j {
            1 => 4,
            2 => 9,
            3 => 12,
            4 => 10,
            _ => 0,
        };
        all([
            check(t.twists().all(|j| t.get(1, j) == want(j)), || format!("h1 = {:?}", t.h1)),
            check(t.h2.iter().all(|&v| v == 0), || format!("h2 = {:?}", t.h2)),
            check(t.normality == Some(4), || format!("N = {:?}", t.normality)),
            check(t.e == Some(0), || format!("e = {:?}", t.e)),
        ])
    })();
    results.push((2, "type I cohomology, d = 8", r2, secs(&["type1_d8"])));

    // 3
    let r3 = (|| {
        let c = get("type2_a3_b5")?;
        let b = c.artifacts.betti.as_ref().ok_or("no betti")?;
        all([
            expect_rows(b, &[(1, &[6, 8, 3]), (2, &[4, 12, 12, 4]), (4, &[1, 4, 6, 4, 1])]),
            check(b.pd() == 5, || format!("pd = {}", b.pd())),
            check(tau(c) == Some((2, 3)), || format!("tau = {:?}", tau(c))),
        ])
    })();
    results.push((3, "type II (a, b) = (3, 5): Betti table and τ", r3, secs(&["type2_a3_b5"])));

    // 4, 5
    type Row = (i64, &'static [usize]);
    let b8: [(&str, &[Row], (usize, usize)); 3] = [
        ("type2_a3_b8_f1", &[(1, &[6, 8, 3]), (3, &[4, 12, 12, 4]), (5, &[1, 4, 6, 4, 1]), (7, &[1, 4, 6, 4, 1])], (2, 2)),
        (
            "type2_a3_b8_f2",
            &[(1, &[5, 5]), (2, &[1, 0, 1]), (3, &[1, 9, 11, 4]), (4, &[4, 18, 32, 28, 12, 2]), (7, &[1, 4, 6, 4, 1])],
            (1, 1),
        ),
        ("type2_a3_b8_f3", &[(1, &[3, 2]), (2, &[10, 27, 24, 7]), (7, &[1, 4, 6, 4, 1])], (2, 3)),
    ];
    let b9: [(&str, &[Row], (usize, usize)); 2] = [
        (
            "type2_a3_b9_f1",
            &[(1, &[6, 8, 3]), (3, &[2, 4]), (4, &[1, 4, 10, 6, 1]), (6, &[1, 4, 6, 4, 1]), (8, &[1, 4, 6, 4, 1])],
            (2, 2),
        ),
        (
            "type2_a3_b9_f2",
            &[(1, &[5, 5]), (2, &[0, 0, 1]), (3, &[5, 15, 15, 5]), (5, &[5, 23, 42, 38, 17, 3]), (8, &[1, 4, 6, 4, 1])],
            (1, 1),
        ),
    ];
    let table = |set: &[(&str, &[Row], (usize, usize))]| {
        all(set.iter().map(|(id, want, t)| {
            let c = get(id)?;
            let b = c.artifacts.betti.as_ref().ok_or("no betti")?;
            expect_rows(b, want).map_err(|e| format!("{id}: {e}"))?;
            check(tau(c) == Some(*t), || format!("{id}: tau = {:?}", tau(c)))
        }))
    };
    let ids8: Vec<&str> = b8.iter().map(|x| x.0).collect();
    let ids9: Vec<&str> = b9.iter().map(|x| x.0).collect();
    results.push((4, "type II (3, 8), three forms: Betti tables and τ", table(&b8), secs(&ids8)));
    results.push((5, "type II (3, 9), two forms: Betti tables and τ", table(&b9), secs(&ids9)));

    // 6
    let r6 = (|| {
        let c = get("type2_a3_b5")?;
        let t = c.artifacts.cohomology.as_ref().ok_or("no cohomology")?;
        let h2 = |j: i64| match j {
            j if j <= 0 => 6,
            1 => 3,
            2 => 1,
            _ => 0,
        };
        all([
            check(t.e == Some(6), || format!("e = {:?}", t.e)),
            check(t.twists().all(|j| t.get(2, j) == h2(j)), || format!("h2 = {:?}", t.h2)),
            check(t.get(1, 1) == 0, || format!("h1(1) = {}", t.get(1, 1))),
            check(t.get(3, -2) == 7, || format!("h3(-2) = {}", t.get(3, -2))),
        ])
    })();
    results.push((6, "type II (3, 5) cohomology: e, h² column, h¹(1), h³(-2)", r6, secs(&["type2_a3_b5"])));

    // 7
    let r7 = all([("type2_a3_b5", 5u32), ("type1_d8", 6)].map(|(id, len)| {
        let c = get(id)?;
        let a = &c.artifacts;
        let l = a.secant_lengths.as_ref().ok_or("no secants")?;
        let o = a.secant_lengths_hilbert.as_ref().ok_or("no oracle")?;
        let sp = a.secant_span.as_ref().ok_or("no span")?;
        let (span, quadrics) = if id.starts_with("type1") { (5, Some(6)) } else { (2, None) };
        all([
            check(l.len() == 20 && l.iter().all(|&x| x == SecantLength::Finite(len)), || format!("{id}: lengths {l:?}")),
            check(l == o, || format!("{id}: oracle {o:?}")),
            check(sp.span_dim == span, || format!("{id}: span {}", sp.span_dim)),
            check(quadrics.is_none_or(|q| sp.quadric_dim == q && sp.quadric_check && sp.holdout > 0), || {
                format!("{id}: quadrics {} check {} holdout {}", sp.quadric_dim, sp.quadric_check, sp.holdout)
            }),
        ])
    }));
    results.push((7, "secant lengths, GCD vs Hilbert oracle, Plücker span", r7, secs(&["type2_a3_b5", "type1_d8"])));

    // 8
    let type2: Vec<&str> = EXAMPLES.iter().map(|e| e.id).filter(|i| i.starts_with("type2")).collect();
    let r8 = all(type2.iter().map(|id| {
        claims_pass(get(id)?, id, &["betti.comparison", "betti.equivalence", "k1.socle", "quadrics"])
    }));
    results.push((8, "structural identities on every type II example", r8, secs(&type2)));

    // 9
    let t = Instant::now();
    let r9 = match classification_checks(&field, SEED) {
        Ok(rep) => all(rep.claims.iter().map(|c| {
            check(c.verdict == Verdict::Pass, || format!("{}: expected {} computed {}", c.claim, c.expected, c.computed))
        })),
        Err(e) => Err(e.to_string()),
    };
    results.push((9, "degree r+1 classification (cases 8 and 9)", r9, t.elapsed().as_secs_f64()));

    // 10
    let t = Instant::now();
    let ids: Vec<&str> = EXAMPLES.iter().map(|e| e.id).collect();
    let props = all(ids.iter().map(|id| {
        claims_pass(get(id)?, id, &["gb.spairs", "resolution.exact", "resolution.euler", "depth", "parser.round_trip"])
    }));
    let dir = std::env::temp_dir().join(format!("secreg-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |name: &str| {
        let out = dir.join(name);
        let code = secreg::cli::run([
            "secreg",
            "demo-paper",
            "--seed",
            &SEED.to_string(),
            "--format",
            "json",
            "-o",
            out.to_str().unwrap(),
        ]);
        (code, std::fs::read(&out).unwrap_or_default())
    };
    let (c1, j1) = run("a.json");
    let (c2, j2) = run("b.json");
    let _ = std::fs::remove_dir_all(&dir);
    let r10 = all([
        props,
        check(c1 == 0 && c2 == 0, || format!("demo-paper exit codes {c1}, {c2}")),
        check(!j1.is_empty() && j1 == j2, || "demo-paper JSON differs between runs".into()),
    ]);
    results.push((10, "property suites on every example; demo-paper determinism", r10, t.elapsed().as_secs_f64()));

    for e in &setup_errors {
        println!("setup error: {e}");
    }
    let mut failed = 0;
    for (n, what, r, s) in &results {
        match r {
            Ok(()) => println!("criterion {n:>2}: PASS  {what} ({s:.1}s)"),
            Err(m) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL  {what} ({s:.1}s): {m}");
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 || !setup_errors.is_empty() {
        std::process::exit(1);
    }
}
