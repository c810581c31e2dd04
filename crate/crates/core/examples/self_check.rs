//! Runs the full self-check suite through the command-line entry point,
//! once normally and once with a corrupted BWB engine.
//!
//!     cargo run --release --example self_check

use grpf::cli::run;

fn main() {
    let out = run(["grpf", "verify-all", "--profile", "fast"]);
    print!("{}", out.stdout);
    println!("exit code {}\n", out.code);

    let out = run(["grpf", "verify-all", "--inject-fault", "rho"]);
    for line in out.stdout.lines().filter(|l| l.starts_with("FAIL")) {
        println!("{line}");
    }
    println!("exit code {} with the fault injected", out.code);
}
