use hopfcheck_core::scalar::FieldSpec;
use hopfcheck_core::suites::{run_suite, SuiteConfig};

fn main() {
    let cfg = SuiteConfig::default();
    let f7 = FieldSpec::prime_field(7).unwrap();
    for (n, field) in [(2, FieldSpec::Rational), (3, FieldSpec::Rational), (3, f7)] {
        let t = std::time::Instant::now();
        let rep = run_suite("all", n, field, &cfg).unwrap();
        println!("all n={} field={}: passed={} checks={} elapsed={:?}", n, field, rep.passed, rep.checks.len(), t.elapsed());
        for c in rep.checks.iter().filter(|c| !c.pass) {
            println!("  FAIL {}: {}", c.name, c.detail);
        }
    }
}
