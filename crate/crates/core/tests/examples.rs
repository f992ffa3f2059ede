// Every example doubles as a test: each one asserts what it prints.

#[allow(dead_code)]
#[path = "../examples/serre_two_planes.rs"]
mod serre_two_planes;

#[test]
fn serre_two_planes_runs() {
    serre_two_planes::run_example().expect("serre_two_planes");
}

#[allow(dead_code)]
#[path = "../examples/groebner_basics.rs"]
mod groebner_basics;

#[test]
fn groebner_basics_runs() {
    groebner_basics::run_example().expect("groebner_basics");
}

#[allow(dead_code)]
#[path = "../examples/koszul_homology.rs"]
mod koszul_homology;

#[test]
fn koszul_homology_runs() {
    koszul_homology::run_example().expect("koszul_homology");
}

#[allow(dead_code)]
#[path = "../examples/free_resolution.rs"]
mod free_resolution;

#[test]
fn free_resolution_runs() {
    free_resolution::run_example().expect("free_resolution");
}

#[allow(dead_code)]
#[path = "../examples/subquotients.rs"]
mod subquotients;

#[test]
fn subquotients_runs() {
    subquotients::run_example().expect("subquotients");
}

#[allow(dead_code)]
#[path = "../examples/tensor_and_cone.rs"]
mod tensor_and_cone;

#[test]
fn tensor_and_cone_runs() {
    tensor_and_cone::run_example().expect("tensor_and_cone");
}

#[allow(dead_code)]
#[path = "../examples/scaled_koszul.rs"]
mod scaled_koszul;

#[test]
fn scaled_koszul_runs() {
    scaled_koszul::run_example().expect("scaled_koszul");
}

#[allow(dead_code)]
#[path = "../examples/pullback_square.rs"]
mod pullback_square;

#[test]
fn pullback_square_runs() {
    pullback_square::run_example().expect("pullback_square");
}

#[allow(dead_code)]
#[path = "../examples/tor_independence.rs"]
mod tor_independence;

#[test]
fn tor_independence_runs() {
    tor_independence::run_example().expect("tor_independence");
}

#[allow(dead_code)]
#[path = "../examples/main_theorem_affine.rs"]
mod main_theorem_affine;

#[test]
fn main_theorem_affine_runs() {
    main_theorem_affine::run_example().expect("main_theorem_affine");
}

#[allow(dead_code)]
#[path = "../examples/job_script.rs"]
mod job_script;

#[test]
fn job_script_runs() {
    job_script::run_example().expect("job_script");
}
