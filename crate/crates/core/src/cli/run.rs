use std::fmt::Write as _;

use super::{Command, Job, OutputFormat, VerifyCommand};
use crate::complexes::{free_resolution, homology, koszul_complex, FreeComplex};
use crate::instances::{pullback_instances, scaled_instances, square_instances};
use crate::multitor::{
    check_cartesian_square, check_cor_regular, check_prop_affine, check_pullback_square, check_tor_independence,
    multitor_hypersurfaces, serre_multiplicity, tor_report, verify_main_theorem_affine, MultitorError, VerifierReport,
};

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Seed for `verify fuzz`.
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub output: String,
    /// 0 success or `Verified`, 1 `Refuted` or `PreconditionFailed`, 2 error.
    pub exit_code: i32,
}

const FUZZ_DEFAULT: usize = 10;

/// Key/value or text lines, depending on the job's output format.
struct Out {
    structured: bool,
    text: String,
}

impl Out {
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        if self.structured {
            let _ = writeln!(self.text, "{key} = {value}");
        }
    }

    fn line(&mut self, value: impl std::fmt::Display) {
        if !self.structured {
            let _ = writeln!(self.text, "{value}");
        }
    }
}

fn joined(xs: &[usize]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn matrix_rows(c: &FreeComplex, q: usize) -> String {
    c.differential(q)
        .rows()
        .iter()
        .map(|row| format!("[{}]", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn run_job(job: &Job, options: RunOptions) -> RunOutcome {
    let mut out = Out { structured: job.output == OutputFormat::Structured, text: String::new() };
    out.kv("command", &job.command);
    out.kv("ring", &job.ring);
    match execute(job, options, &mut out) {
        Ok(code) => RunOutcome { output: out.text, exit_code: code },
        Err(e) => {
            out.kv("error", &e);
            out.line(format_args!("error: {e}"));
            RunOutcome { output: out.text, exit_code: 2 }
        }
    }
}

fn verdict(out: &mut Out, report: &VerifierReport) -> i32 {
    out.text.push_str(&if out.structured { report.to_key_values() } else { report.to_text() });
    i32::from(!report.is_verified())
}

fn execute(job: &Job, options: RunOptions, out: &mut Out) -> Result<i32, MultitorError> {
    let ring = &job.ring;
    match &job.command {
        Command::Serre { i, j } => {
            let m = serre_multiplicity(ring, job.polys(i), job.polys(j))?;
            let res = free_resolution(ring, job.polys(i), ring.nvars() + 2)?;
            let report = tor_report(ring, job.polys(i), job.polys(j), res.length())?;
            tor_lines(out, &report);
            out.kv("serre.multiplicity", m);
            out.line(format_args!("serre multiplicity: {m}"));
        }
        Command::Tor { i, j, qmax } => {
            let qmax = qmax.unwrap_or(ring.nvars());
            let report = tor_report(ring, job.polys(i), job.polys(j), qmax)?;
            tor_lines(out, &report);
        }
        Command::Multitor { seq, qmax } => {
            let f = job.polys(seq);
            for q in 0..=qmax.unwrap_or(f.len()) {
                let t = multitor_hypersurfaces(ring, f, q)?;
                let dim = t.vector_space_dim()?;
                out.kv(&format!("multitor.q{q}.dim"), dim);
                out.kv(&format!("multitor.q{q}.generic_rank"), t.generic_rank());
                out.line(format_args!("Tor_{q}: dim {dim}, generic rank {}", t.generic_rank()));
                for l in t.describe().lines() {
                    out.line(format_args!("  {l}"));
                }
            }
        }
        Command::Resolve { ideal, max_len } => {
            let res = free_resolution(ring, job.polys(ideal), max_len.unwrap_or(ring.nvars() + 2))?;
            out.kv("resolution.length", res.length());
            out.kv("resolution.ranks", joined(res.ranks()));
            for q in 1..=res.length() {
                out.kv(&format!("resolution.d{q}"), matrix_rows(&res, q));
            }
            out.line(res.report().trim_end());
        }
        Command::Koszul { seq } => {
            let k = koszul_complex(ring, job.polys(seq));
            out.kv("koszul.ranks", joined(k.ranks()));
            out.line(k.report().trim_end());
            for q in 0..=k.length() {
                let h = homology(&k, -(q as i64))?;
                let dim = h.vector_space_dim()?;
                out.kv(&format!("koszul.h{q}.dim"), dim);
                out.kv(&format!("koszul.h{q}.generic_rank"), h.generic_rank());
                out.line(format_args!("H^-{q}: dim {dim}, generic rank {}", h.generic_rank()));
            }
        }
        Command::Verify(v) => {
            let report = match v {
                VerifyCommand::Prop31 { seq, x, q } => check_prop_affine(ring, job.polys(seq), &x.value, *q)?,
                VerifyCommand::Cor32 { seq, x, q } => check_cor_regular(ring, job.polys(seq), &x.value, *q)?,
                VerifyCommand::Pullback { seq, x, q } => check_pullback_square(ring, job.polys(seq), &x.value, *q)?,
                VerifyCommand::TorInd { ideal, x } => check_tor_independence(ring, job.polys(ideal), &x.value)?,
                VerifyCommand::Main { seq, x, qmax } => verify_main_theorem_affine(ring, job.polys(seq), &x.value, *qmax)?,
                VerifyCommand::Fuzz { count } => fuzz(options.seed, count.unwrap_or(FUZZ_DEFAULT))?,
            };
            return Ok(verdict(out, &report));
        }
    }
    Ok(0)
}

fn tor_lines(out: &mut Out, report: &crate::multitor::TorReport) {
    out.kv("resolution.ranks", joined(&report.resolution_ranks));
    for e in &report.entries {
        out.kv(&format!("tor.q{}.length", e.q), e.length);
        out.kv(&format!("tor.q{}.generic_rank", e.q), e.generic_rank);
    }
    out.line(report.to_string().trim_end());
}

/// Seeded instances of the affine claims; the ring is fixed by the generators.
pub(crate) fn fuzz(seed: u64, count: usize) -> Result<VerifierReport, MultitorError> {
    let mut r = VerifierReport::new("fuzz", format!("seed {seed}, {count} instances per claim"));
    for (k, inst) in scaled_instances(seed, count).iter().enumerate() {
        r.absorb(&format!("prop31.{k}"), check_prop_affine(&inst.ring, &inst.f, &inst.x, inst.q)?);
    }
    for (k, inst) in pullback_instances(seed, count).iter().enumerate() {
        r.absorb(&format!("pullback.{k}"), check_pullback_square(&inst.ring, &inst.f, &inst.x, inst.q)?);
    }
    for (k, s) in square_instances(seed, count).iter().enumerate() {
        r.absorb(&format!("square.{k}"), check_cartesian_square(&s.n, &s.p, &s.q)?);
    }
    Ok(r)
}
