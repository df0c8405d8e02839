//! Closed-form optimal burning sequences for paths and cycles. Both
//! families burn in exactly ceil(sqrt(n)) steps; the construction tiles
//! the vertex line with balls of shrinking radius, largest first.

use crate::bounds::ceil_sqrt;
use crate::burn::BurningSequence;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathOrCycle {
    Path,
    Cycle,
}

/// Optimal sequence for the standard layouts produced by
/// `generate::path` / `generate::cycle` (vertices in line/ring order).
/// Source i sits at the center of the next segment of 2(k-i)+1 vertices,
/// clipped by whatever remains; leftover steps at the end just spread.
pub fn path_cycle_sequence(n: usize, kind: PathOrCycle) -> Result<BurningSequence> {
    if n == 0 {
        return Err(Error::BadParams("need n >= 1".into()));
    }
    if kind == PathOrCycle::Cycle && n < 3 {
        return Err(Error::BadParams("cycle needs n >= 3".into()));
    }
    let k = ceil_sqrt(n);
    let mut sources = Vec::new();
    let mut next = 0usize; // first vertex not yet assigned to a segment
    for i in 1..=k {
        if next >= n {
            break;
        }
        let seg = (2 * (k - i) + 1).min(n - next);
        sources.push(next + (seg - 1) / 2);
        next += seg;
    }
    debug_assert!(next >= n, "segments must exhaust the vertex line");
    BurningSequence::new(sources, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burn::validate;
    use crate::generate;

    #[test]
    fn hand_checked_layouts() {
        // n = 9: segments 5, 3, 1 centered at 2, 6, 8.
        let s = path_cycle_sequence(9, PathOrCycle::Path).unwrap();
        assert_eq!((s.sources(), s.horizon()), (&[2usize, 6, 8][..], 3));

        // n = 10: k = 4, segments 7 and 3 suffice, so t = 2 < k.
        let s = path_cycle_sequence(10, PathOrCycle::Path).unwrap();
        assert_eq!((s.sources(), s.horizon()), (&[3usize, 8][..], 4));

        let s = path_cycle_sequence(1, PathOrCycle::Path).unwrap();
        assert_eq!((s.sources(), s.horizon()), (&[0usize][..], 1));

        assert!(path_cycle_sequence(2, PathOrCycle::Cycle).is_err());
    }

    #[test]
    fn validates_on_both_families_up_to_60() {
        for n in 1..=60 {
            let s = path_cycle_sequence(n, PathOrCycle::Path).unwrap();
            assert_eq!(s.horizon(), ceil_sqrt(n));
            assert!(validate(&generate::path(n).unwrap(), &s).unwrap(), "path {n}");
            if n >= 3 {
                let s = path_cycle_sequence(n, PathOrCycle::Cycle).unwrap();
                assert!(validate(&generate::cycle(n).unwrap(), &s).unwrap(), "cycle {n}");
            }
        }
    }
}
