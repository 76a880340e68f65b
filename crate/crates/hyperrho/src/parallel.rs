//! Rayon-backed sweep executor.

use hyperrho_core::extremal::RowExecutor;
use hyperrho_core::{FamilySpec, SweepRow};
use rayon::prelude::*;

/// Solves sweep rows on the rayon thread pool. Output order matches input order.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rayon;

impl RowExecutor for Rayon {
    fn map_rows(&self, specs: &[FamilySpec], f: &(dyn Fn(&FamilySpec) -> SweepRow + Sync)) -> Vec<SweepRow> {
        specs.par_iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperrho_core::extremal::{family_sweep, Sequential, SweepOptions};
    use hyperrho_core::Family;

    #[test]
    fn matches_sequential() {
        let opts = SweepOptions::default();
        let a = family_sweep(9, 3, Family::C1, &opts, &Rayon).unwrap();
        let b = family_sweep(9, 3, Family::C1, &opts, &Sequential).unwrap();
        assert_eq!(a, b);
    }
}
