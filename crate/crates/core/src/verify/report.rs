use std::fmt::Write as _;

/// Collected verification results, rendered as text or as `key=value` lines.
///
/// Absent fields were not requested and are omitted from the output.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub edges: Option<u64>,
    /// `2|E| = C(n, k)`
    pub balanced: Option<bool>,
    pub regular: Option<bool>,
    pub valence: Option<u64>,
    pub witness: Option<String>,
    pub antimorphism_ok: Option<bool>,
    pub antimorphism_witness: Option<String>,
    pub orbit_count: Option<OrbitCount>,
    pub euler_characteristic: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitCount {
    Exact(usize),
    Inconclusive,
}

impl std::fmt::Display for OrbitCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrbitCount::Exact(c) => write!(f, "{c}"),
            OrbitCount::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

impl VerificationReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        let mut push = |key, value: Option<String>| {
            if let Some(v) = value {
                out.push((key, v));
            }
        };
        push("edges", self.edges.map(|v| v.to_string()));
        push("balanced", self.balanced.map(|v| v.to_string()));
        push("regular", self.regular.map(|v| v.to_string()));
        push("valence", self.valence.map(|v| v.to_string()));
        push("witness", self.witness.clone());
        push(
            "antimorphism_ok",
            self.antimorphism_ok.map(|v| v.to_string()),
        );
        push("antimorphism_witness", self.antimorphism_witness.clone());
        push("orbit_count", self.orbit_count.map(|v| v.to_string()));
        push(
            "euler_characteristic",
            self.euler_characteristic.map(|v| v.to_string()),
        );
        out
    }

    /// One `key=value` fact per line.
    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        for (k, v) in self.fields() {
            let _ = writeln!(s, "{k}={v}");
        }
        s
    }

    pub fn to_text(&self) -> String {
        let fields = self.fields();
        let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut s = String::new();
        for (k, v) in fields {
            let _ = writeln!(s, "{k:<width$}  {v}");
        }
        s
    }

    /// False if any recorded check failed. Inconclusive results do not count as failures.
    pub fn all_passed(&self) -> bool {
        self.balanced != Some(false)
            && self.regular != Some(false)
            && self.antimorphism_ok != Some(false)
    }
}
