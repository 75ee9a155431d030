//! Acceptance suite: eleven end-to-end checks, each against an oracle that
//! does not share code paths with the implementation under test.

use std::fmt;
use std::time::Instant;

pub mod criteria;
pub mod oracle;

pub const SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:>2} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

type Check = fn(u64) -> Result<String, String>;

pub const CRITERIA: [(u32, &str, Check); 11] = [
    (1, "smith-normal-form", criteria::smith_normal_form),
    (2, "hom-sets", criteria::hom_sets),
    (3, "homotopy-fiber", criteria::homotopy_fiber),
    (4, "xi-equivalence", criteria::xi_equivalence),
    (5, "mod-24-factorization", criteria::mod24_factorization),
    (6, "stokes-and-holonomy", criteria::stokes_and_holonomy),
    (7, "gauss-bonnet", criteria::gauss_bonnet),
    (8, "spin-table", criteria::spin_table),
    (9, "chern-simons-quadrature", criteria::chern_simons),
    (10, "psi-pipeline", criteria::psi_pipeline),
    (11, "su-mod-2", criteria::su_mod_2),
];

pub fn run_one(id: u32, seed: u64) -> Option<Outcome> {
    let &(id, name, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let result = std::panic::catch_unwind(|| check(seed.wrapping_add(u64::from(id))))
        .unwrap_or_else(|_| Err("panicked".into()));
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(Outcome {
        id,
        name,
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    })
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    CRITERIA.iter().filter_map(|c| run_one(c.0, seed)).collect()
}
