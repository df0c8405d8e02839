use std::path::Path;

use serde::Serialize;

/// Machine-readable record of one invocation. Everything except the
/// elapsed timings is deterministic for a fixed (input, seed, budget).
#[derive(Debug, Serialize)]
pub struct RunReport {
    /// The invocation as typed, without the binary name.
    pub command: String,
    /// FNV-1a/64 of the raw input file bytes, when a file was read.
    pub input_digest: Option<String>,
    pub seed: Option<u64>,
    /// Budget flag as given on the command line.
    pub budget: Option<String>,
    /// Command-specific values, witnesses, and pass/fail tables.
    pub results: serde_json::Value,
    /// Solver work actually spent, when the command ran a solver.
    pub consumed: Option<Consumed>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Default, Clone, Copy, Serialize)]
pub struct Consumed {
    pub expansions: u64,
    pub solver_ms: u128,
}

impl Consumed {
    pub fn add(&mut self, stats: &burnlab::solver::SearchStats) {
        self.expansions += stats.expansions;
        self.solver_ms += stats.elapsed_millis;
    }
}

impl RunReport {
    pub fn new(command: String) -> Self {
        RunReport {
            command,
            input_digest: None,
            seed: None,
            budget: None,
            results: serde_json::Value::Null,
            consumed: None,
            elapsed_ms: 0,
        }
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        std::fs::write(path, text)
    }
}

pub fn fnv1a_hex(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    format!("{h:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_stable_and_input_sensitive() {
        assert_eq!(fnv1a_hex(b""), "cbf29ce484222325");
        assert_eq!(fnv1a_hex(b"3 2\n0 1\n1 2\n"), fnv1a_hex(b"3 2\n0 1\n1 2\n"));
        assert_ne!(fnv1a_hex(b"3 2\n0 1\n1 2\n"), fnv1a_hex(b"3 2\n0 1\n0 2\n"));
    }
}
