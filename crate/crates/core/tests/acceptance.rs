//! Acceptance suite. Prints one line per criterion and exits nonzero if any
//! criterion fails or overruns its time budget. All comparisons are exact:
//! lengths and ranks are integers, modules are compared by reduced GB.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use koszulkit::complexes::{homology, koszul_complex, mapping_cone, tensor_complex, FreeComplex};
use koszulkit::groebner::{ideal_groebner, Length};
use koszulkit::instances::{pullback_instances, regular_sequences, scaled_instances, square_instances, tensor_splits};
use koszulkit::multitor::{
    check_cartesian_square, check_cor_regular, check_prop_affine, check_pullback_square, is_regular_sequence,
    koszul_cycles_and_boundaries, serre_multiplicity, tor_pair, tor_report, verify_main_theorem_affine, Conclusion,
};
use koszulkit::ring::{parse_poly, Poly, PolyRing};

const SEED: u64 = 20240611;

type Outcome = Result<String, String>;

fn polys(r: &Arc<PolyRing>, src: &[&str]) -> Vec<Poly> {
    src.iter().map(|s| parse_poly(s, r).unwrap()).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn serre_two_planes() -> Outcome {
    let r = PolyRing::rational(&["x", "y", "z", "w"]);
    let i = polys(&r, &["x*z", "x*w", "y*z", "y*w"]);
    let j = polys(&r, &["x - z", "y - w"]);
    let report = tor_report(&r, &i, &j, 5).map_err(|e| e.to_string())?;
    let expected = [3, 1, 0, 0, 0, 0];
    for (q, want) in expected.iter().enumerate() {
        let got = report.length(q).unwrap();
        ensure(got == Length::Finite(*want), || format!("length Tor_{q} = {got}, expected {want}"))?;
        let swapped = tor_pair(&r, &j, &i, q).and_then(|m| Ok(m.length()?)).map_err(|e| e.to_string())?;
        ensure(swapped == got, || format!("swapped Tor_{q} has length {swapped}"))?;
    }
    let m = serre_multiplicity(&r, &i, &j).map_err(|e| e.to_string())?;
    ensure(m == 2, || format!("multiplicity {m}"))?;
    Ok("lengths 3 1 0 0, multiplicity 2, symmetric".into())
}

fn koszul_regular() -> Outcome {
    let seqs = regular_sequences(SEED, 50);
    for (r, f) in &seqs {
        ensure(f.len() <= 4 && r.nvars() <= 5, || "instance out of range".into())?;
        let k = koszul_complex(r, f);
        for q in 1..=f.len() {
            let h = homology(&k, -(q as i64)).map_err(|e| e.to_string())?;
            ensure(h.is_zero(), || format!("H^-{q} of K({f:?}) is nonzero"))?;
        }
        let h0 = homology(&k, 0).map_err(|e| e.to_string())?;
        ensure(h0.rels_gb() == ideal_groebner(r, f) && h0.gens_gb() == ideal_groebner(r, &[Poly::one(r)]), || {
            format!("H^0 of K({f:?}) differs from R/(f)")
        })?;
    }
    Ok(format!("{} regular sequences exact", seqs.len()))
}

fn prop_suite() -> Outcome {
    let insts = scaled_instances(SEED, 50);
    let irregular = insts.iter().filter(|i| !is_regular_sequence(&i.ring, &i.f).is_regular()).count();
    ensure(irregular >= 10, || format!("only {irregular} non-regular sequences generated"))?;
    let mut checked = 0;
    for inst in &insts {
        for q in 0..=inst.f.len() {
            let rep = check_prop_affine(&inst.ring, &inst.f, &inst.x, q).map_err(|e| e.to_string())?;
            ensure(rep.is_verified(), || rep.to_text())?;
            checked += 1;
        }
    }
    Ok(format!("{} instances ({irregular} non-regular), {checked} degrees verified", insts.len()))
}

fn cor_suite() -> Outcome {
    let insts = scaled_instances(SEED, 50);
    let regular: Vec<_> = insts.iter().filter(|i| is_regular_sequence(&i.ring, &i.f).is_regular()).collect();
    ensure(regular.len() >= 5, || format!("regular subset has {} instances", regular.len()))?;
    for inst in &regular {
        for q in 1..=inst.f.len() {
            let rep = check_cor_regular(&inst.ring, &inst.f, &inst.x, q).map_err(|e| e.to_string())?;
            ensure(rep.is_verified(), || rep.to_text())?;
        }
    }
    Ok(format!("{} regular instances certified bijective", regular.len()))
}

fn pullback_suite() -> Outcome {
    let r = PolyRing::rational(&["x", "y", "z", "w"]);
    let f = polys(&r, &["y*z", "y*w"]);
    let rep = check_pullback_square(&r, &f, &parse_poly("x", &r).unwrap(), 1).map_err(|e| e.to_string())?;
    ensure(rep.is_verified(), || rep.to_text())?;
    let insts = pullback_instances(SEED, 10);
    for inst in &insts {
        let rep = check_pullback_square(&inst.ring, &inst.f, &inst.x, inst.q).map_err(|e| e.to_string())?;
        ensure(rep.is_verified(), || rep.to_text())?;
    }
    let bad = check_pullback_square(&r, &f, &parse_poly("y", &r).unwrap(), 1).map_err(|e| e.to_string())?;
    match bad.conclusion() {
        Conclusion::PreconditionFailed(w) if w == "x_injective_on_homology: (w, -z)" => {}
        other => return Err(format!("x = y gave {other}")),
    }
    Ok(format!("(yz, yw)/x and {} generated instances Verified; x = y PreconditionFailed", insts.len()))
}

fn square_suite() -> Outcome {
    let insts = square_instances(SEED, 100);
    for s in &insts {
        let rep = check_cartesian_square(&s.n, &s.p, &s.q).map_err(|e| e.to_string())?;
        ensure(rep.is_verified(), || rep.to_text())?;
    }
    Ok(format!("{} squares cartesian", insts.len()))
}

fn profile(c: &FreeComplex) -> Result<Vec<(Length, usize)>, String> {
    (0..=c.length())
        .map(|q| {
            let h = homology(c, -(q as i64)).map_err(|e| e.to_string())?;
            Ok((h.vector_space_dim().map_err(|e| e.to_string())?, h.generic_rank()))
        })
        .collect()
}

fn tensor_suite() -> Outcome {
    let splits = tensor_splits(SEED, 20);
    for (r, f, split) in &splits {
        let direct = koszul_complex(r, f);
        let want = profile(&direct)?;
        let h0 = homology(&direct, 0).map_err(|e| e.to_string())?;
        let tensor =
            tensor_complex(&koszul_complex(r, &f[..*split]), &koszul_complex(r, &f[*split..])).map_err(|e| e.to_string())?;
        let cone = mapping_cone(&f[f.len() - 1], &koszul_complex(r, &f[..f.len() - 1]));
        for (name, c) in [("tensor", &tensor), ("cone", &cone)] {
            let h = homology(c, 0).map_err(|e| e.to_string())?;
            ensure(h.same_spans(&h0).map_err(|e| e.to_string())?, || format!("{name}: H^0 differs for {f:?}"))?;
            let got = profile(c)?;
            ensure(got == want, || format!("{name}: {got:?} against {want:?} for {f:?} split at {split}"))?;
        }
    }
    Ok(format!("{} splits and cones agree", splits.len()))
}

fn main_theorem() -> Outcome {
    let r = PolyRing::rational(&["x", "y", "z", "w"]);
    let x = parse_poly("x", &r).unwrap();
    for src in [&["y", "z"][..], &["y*z", "y*w"], &["y", "z", "w"]] {
        let f = polys(&r, src);
        let rep = verify_main_theorem_affine(&r, &f, &x, f.len()).map_err(|e| e.to_string())?;
        ensure(rep.is_verified(), || rep.to_text())?;
    }
    Ok("(y,z), (yz,yw), (y,z,w) with x Verified for q <= n".into())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn kernel_ranks() -> Outcome {
    let seqs = regular_sequences(SEED ^ 0x9e37, 30);
    for (r, f) in &seqs {
        let n = f.len();
        for q in 0..=n {
            let (ker, _) = koszul_cycles_and_boundaries(r, f, q).map_err(|e| e.to_string())?;
            let want = binomial(n - 1, q);
            ensure(ker.generic_rank() == want, || format!("rank ker d^-{q} = {} for {f:?}, expected {want}", ker.generic_rank()))?;
        }
    }
    Ok(format!("{} regular sequences", seqs.len()))
}

fn determinism() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut jobs: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "job"))
        .collect();
    jobs.sort();
    let run = |job: &Path| {
        Command::new(env!("CARGO_BIN_EXE_koszulkit")).args(["--seed", "7", "--job"]).arg(job).output().unwrap()
    };
    for job in &jobs {
        let (a, b) = (run(job), run(job));
        ensure(a.stdout == b.stdout && a.stderr == b.stderr && a.status == b.status, || {
            format!("{} differs between runs", job.display())
        })?;
    }
    Ok(format!("{} golden jobs byte-identical across runs", jobs.len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "serre two planes", budget: secs(5), run: serre_two_planes },
        Criterion { id: 2, name: "koszul regularity", budget: secs(30), run: koszul_regular },
        Criterion { id: 3, name: "scaled koszul model", budget: secs(60), run: prop_suite },
        Criterion { id: 4, name: "regular scaled model", budget: None, run: cor_suite },
        Criterion { id: 5, name: "pullback square", budget: None, run: pullback_suite },
        Criterion { id: 6, name: "cartesian squares", budget: None, run: square_suite },
        Criterion { id: 7, name: "tensor and cone", budget: None, run: tensor_suite },
        Criterion { id: 8, name: "main theorem affine", budget: secs(60), run: main_theorem },
        Criterion { id: 9, name: "koszul kernel ranks", budget: None, run: kernel_ranks },
        Criterion { id: 10, name: "cli determinism", budget: None, run: determinism },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (o, _) => o,
        };
        let budget = c.budget.map(|b| format!(" < {b:?}")).unwrap_or_default();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {}: PASS [{elapsed:.2?}{budget}] {detail}", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {}: FAIL [{elapsed:.2?}{budget}] {why}", c.id, c.name);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
