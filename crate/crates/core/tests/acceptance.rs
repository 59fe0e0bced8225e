//! Acceptance criteria 1-6, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always visible.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gradedepth::analysis::{analyze, analyze_at, chain_at};
use gradedepth::classify::{chain_a_tuple, classify_mu4_e3, TABLE};
use gradedepth::config::Config;
use gradedepth::corpus::{self, presentation};
use gradedepth::hilbert::{h_polynomial, hilbert_coefficients, zpoly};
use gradedepth::module::{Presentation, TruncModule};
use gradedepth::ring::TruncPoly;
use gradedepth::rr_depth::{chain_hilbert, depth_from_chain, rr_filtration, verify_exact_sequences};
use gradedepth::superficial::singh_check;

const EXAMPLES: [&str; 4] = ["ex1", "ex2", "ex3", "ex4"];
const SEEDS: [u64; 5] = [42, 1, 7, 2024, 31337];

type Outcome = Result<String, String>;

fn config(seed: u64) -> Config {
    Config::default().with_seed(seed)
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    for (name, want) in EXAMPLES.iter().zip(0u32..) {
        let t = Instant::now();
        let g = analyze(&presentation(name).map_err(|e| e.to_string())?, &config(42)).map_err(|e| format!("{name}: {e}"))?;
        let took = t.elapsed();
        let got = g.value.depth.depth;
        if got != want || g.cap > 10 || took > Duration::from_secs(60) {
            return Err(format!("{name}: depth {got} (want {want}), cap {}, {took:?}", g.cap));
        }
        notes.push(format!("{name}={got} ({} ms)", took.as_millis()));
    }
    Ok(notes.join(", "))
}

fn criterion_2() -> Outcome {
    let m = TruncModule::build(&presentation("ringA").map_err(|e| e.to_string())?, 7).map_err(|e| e.to_string())?;
    let h = h_polynomial(&m, None).map_err(|e| e.to_string())?;
    if h.h_coeffs == [1, 1, 1] && h.e[..3] == [3, 3, 1] {
        Ok(format!("h_A = {}, e = {:?}", zpoly::format(&h.h_coeffs), &h.e[..3]))
    } else {
        Err(format!("h_A = {:?}, e = {:?}", h.h_coeffs, h.e))
    }
}

fn criterion_3() -> Outcome {
    let mut seen = Vec::new();
    for entry in corpus::corpus().iter().filter(|e| e.expect.case_id.is_some()) {
        let pres = entry.presentation();
        let d = pres.spec().nvars() as u32 - 1;
        let a = analyze(&pres, &config(42)).map_err(|e| format!("{}: {e}", entry.name))?.value;
        let rec = a.classification.as_ref().ok_or(format!("{}: not classified", entry.name))?;
        let row = TABLE
            .iter()
            .find(|r| r.case_id == rec.case_id && r.h == rec.h.as_slice())
            .ok_or(format!("{}: case {} not in table", entry.name, rec.case_id))?;
        if Some(rec.case_id.as_str()) != entry.expect.case_id
            || !rec.theorem_ok
            || rec.depth + row.codepth != d
            || a.depth.depth + 3 < d
        {
            return Err(format!("{}: {:?}", entry.name, rec));
        }
        seen.push(format!("{}:{}", entry.name, rec.case_id));
    }
    let c4 = TABLE.iter().find(|r| r.case_id == "4c").unwrap();
    if c4.h != [4, 1, 3, -1] {
        return Err("row 4c".into());
    }
    Ok(seen.join(" "))
}

/// `P φ Q` for random invertible scalar matrices `P`, `Q`: an isomorphic
/// module with a different presentation.
fn scramble(pres: &Presentation, rng: &mut ChaCha8Rng) -> Presentation {
    let spec = pres.spec();
    let p = spec.field().p();
    let t = pres.rank();
    let random_invertible = |rng: &mut ChaCha8Rng| loop {
        let m: Vec<Vec<u32>> = (0..t).map(|_| (0..t).map(|_| rng.gen_range(0..p)).collect()).collect();
        let polys: Vec<Vec<TruncPoly>> =
            m.iter().map(|r| r.iter().map(|&c| TruncPoly::constant(spec, c)).collect()).collect();
        if det_scalar(spec.field(), &m) != 0 {
            return polys;
        }
    };
    let a = random_invertible(rng);
    let b = random_invertible(rng);
    let mul = |x: &[Vec<TruncPoly>], y: &[Vec<TruncPoly>]| -> Vec<Vec<TruncPoly>> {
        (0..t)
            .map(|i| {
                (0..t)
                    .map(|j| {
                        (0..t).fold(TruncPoly::zero(spec), |acc, k| acc.add(&x[i][k].mul(&y[k][j]).unwrap()).unwrap())
                    })
                    .collect()
            })
            .collect()
    };
    let phi = mul(&mul(&a, pres.rows()), &b);
    Presentation::new(spec, phi, pres.f().clone(), format!("{}~", pres.label())).expect("still minimal")
}

fn det_scalar(f: &gradedepth::arith::PrimeField, m: &[Vec<u32>]) -> u32 {
    let mut a = m.to_vec();
    let n = a.len();
    let mut det = 1;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i][k] != 0) else { return 0 };
        if piv != k {
            a.swap(piv, k);
            det = f.neg(det);
        }
        det = f.mul(det, a[k][k]);
        let inv = f.inv(a[k][k]);
        for i in k + 1..n {
            let c = f.mul(a[i][k], inv);
            for j in k..n {
                let v = f.mul(c, a[k][j]);
                a[i][j] = f.sub(a[i][j], v);
            }
        }
    }
    det
}

/// Every identity on one (instance, superficial sequence) pair.
fn check_pair(pres: &Presentation, seed: u64) -> Result<(), String> {
    let cap = 7;
    let chain = chain_at(pres, cap, seed, 50).map_err(|e| e.to_string())?;
    let d = chain.witnesses.len();
    let hil = chain_hilbert(&chain, None).map_err(|e| e.to_string())?;
    depth_from_chain(&chain, &hil).map_err(|e| e.to_string())?;
    for c in 0..d {
        let s = singh_check(&hil[c], &hil[c + 1], &chain.witnesses[c].b_vector);
        let named = [
            ("Singh equality", s.equality),
            ("e_i(M) = e_i(N), i < r", s.lower_coefficients_agree),
            ("e_r relation", s.top_coefficient_relation),
            ("b = 0 iff h equal", s.vanishing_criterion),
        ];
        if let Some((what, _)) = named.iter().find(|(_, ok)| !ok) {
            return Err(format!("stage {c}: {what}"));
        }
    }
    let mut rr = Vec::new();
    for (c, st) in chain.stages[..d].iter().enumerate() {
        let r = rr_filtration(&st.module, None).map_err(|e| e.to_string())?;
        let rebuilt = zpoly::add(&r.h_tilde, &zpoly::mul(&zpoly::one_minus_z_pow(hil[c].r + 1), &r.r_coeffs));
        if rebuilt != hil[c].h_coeffs {
            return Err(format!("stage {c}: Ratliff-Rush identity"));
        }
        rr.push(r);
    }
    let seq = verify_exact_sequences(&chain, &rr).map_err(|e| e.to_string())?;
    if seq.five_term.is_empty() || seq.five_term.iter().any(|c| c.alternating_sum != 0) {
        return Err("five-term alternating sum".into());
    }
    if seq.three_term.iter().any(|c| !c.holds) || seq.rr_sequences.iter().any(|c| !c.holds) {
        return Err("additivity along the chain".into());
    }
    let inv = pres.invariants().map_err(|e| e.to_string())?;
    let e = hilbert_coefficients(&hil[0].h_coeffs, hil[0].r)[0];
    if e < inv.e_bound as i64 {
        return Err(format!("e = {e} < μ·i = {}", inv.e_bound));
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let names = [
        "ex1",
        "ex2",
        "ex3",
        "ex4",
        "ulrich",
        "diag_x_x_x_x2",
        "diag_x_x2_x2_x2",
        "split",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut passed = 0;
    let mut failures = Vec::new();
    for name in names {
        let base = presentation(name).map_err(|e| e.to_string())?;
        for round in 0..3 {
            let pres = if round == 0 { base.clone() } else { scramble(&base, &mut rng) };
            let seed = rng.gen();
            match check_pair(&pres, seed) {
                Ok(()) => passed += 1,
                Err(e) => failures.push(format!("{}#{round}: {e}", name)),
            }
        }
    }
    if failures.is_empty() && passed >= 20 {
        Ok(format!("{passed} pairs, all identities hold"))
    } else {
        Err(format!("{passed} passed; {}", failures.join("; ")))
    }
}

fn criterion_5() -> Outcome {
    let mut worst_trials = 0;
    for name in EXAMPLES {
        let pres = presentation(name).map_err(|e| e.to_string())?;
        let mut reference = None;
        for seed in SEEDS {
            let chain = chain_at(&pres, 7, seed, 50).map_err(|e| format!("{name} seed {seed}: {e}"))?;
            worst_trials = worst_trials.max(chain.witnesses.iter().map(|w| w.trials_used).max().unwrap_or(0));
            let hil = chain_hilbert(&chain, None).map_err(|e| e.to_string())?;
            let dep = depth_from_chain(&chain, &hil).map_err(|e| e.to_string())?;
            let a = chain_a_tuple(&chain).map_err(|e| e.to_string())?;
            let key = (dep.depth, dep.h_chain.clone(), a);
            match &reference {
                None => reference = Some(key),
                Some(r) if *r != key => return Err(format!("{name}: seed {seed} gives {key:?}, seed 42 gives {r:?}")),
                Some(_) => {}
            }
        }
    }
    if worst_trials <= 50 {
        Ok(format!("{} seeds agree, at most {worst_trials} trials per element", SEEDS.len()))
    } else {
        Err(format!("{worst_trials} trials"))
    }
}

fn criterion_6() -> Outcome {
    let mut caps = Vec::new();
    for entry in corpus::corpus() {
        let pres = entry.presentation();
        let cfg = config(42);
        let g = analyze(&pres, &cfg).map_err(|e| format!("{}: {e}", entry.name))?;
        if g.cap > 9 {
            return Err(format!("{}: escalated to cap {}", entry.name, g.cap));
        }
        let here = analyze_at(&pres, g.cap, &cfg).map_err(|e| e.to_string())?;
        let next = analyze_at(&pres, g.cap + 1, &cfg).map_err(|e| e.to_string())?;
        if here.key() != next.key() {
            return Err(format!("{}: caps {} and {} disagree", entry.name, g.cap, g.cap + 1));
        }
        caps.push(g.cap);
    }
    // the a-tuple path used by classification agrees at the next cap too
    for name in EXAMPLES {
        let pres = presentation(name).map_err(|e| e.to_string())?;
        for cap in [7, 8] {
            let chain = chain_at(&pres, cap, 42, 50).map_err(|e| e.to_string())?;
            let hil = chain_hilbert(&chain, None).map_err(|e| e.to_string())?;
            let dep = depth_from_chain(&chain, &hil).map_err(|e| e.to_string())?;
            let a = chain_a_tuple(&chain).map_err(|e| e.to_string())?;
            classify_mu4_e3(&pres, &a, &hil[0], &hil[3], dep.depth).map_err(|e| e.to_string())?;
        }
    }
    Ok(format!("{} instances stable, max cap used {}", caps.len(), caps.iter().max().unwrap_or(&0)))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 6] = [
        ("depth 0,1,2,3 for ex1-ex4", criterion_1),
        ("h_A = 1 + z + z^2, e = (3, 3, 1)", criterion_2),
        ("classification table matches", criterion_3),
        ("randomized identity checks", criterion_4),
        ("seed independence", criterion_5),
        ("cap stability", criterion_6),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {title}: {detail} [{ms} ms]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {title}: {detail} [{ms} ms]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
