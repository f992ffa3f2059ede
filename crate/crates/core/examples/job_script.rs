//! Job scripts drive the same computations as the binary.
//!
//! cargo run --example job_script

use std::error::Error;

use koszulkit::cli::{parse_job, run_job, RunOptions};

const JOB: &str = "\
ring Q[x,y,z,w]
ideal I = x*z, x*w, y*z, y*w
ideal J = x - z, y - w
serre I J
output structured
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let job = parse_job(JOB)?;
    print!("canonical script:\n{}", job.to_script());
    let outcome = run_job(&job, RunOptions::default());
    print!("{}", outcome.output);
    assert_eq!(outcome.exit_code, 0);
    assert!(outcome.output.contains("serre.multiplicity = 2\n"));

    match parse_job("ring Q[x]\nideal I = x\nserre I K\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("K is undeclared"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("job_script");
}
