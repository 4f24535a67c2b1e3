use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use schyper::construct::{build_gamma, swap_antimorphism, ConstructionParams, Vertex};
use schyper::hypercore::{parse_edge_list, parse_permutation, to_edge_list};
use schyper::parity::{admissible, default_scan_bound, format_residues, residue_classes};
use schyper::search::{search_regular_sc, CapPolicy};
use schyper::verify::{
    automorphism_vertex_orbits, euler_characteristic_triangulation, find_antimorphism,
    t_subset_regularity, verify_antimorphism, vertex_invariant_k4, AntimorphismCheck,
    AntimorphismSearch, OrbitCount, Regularity, SearchLimits, Skeleton, VerificationReport,
    VertexOrbits,
};
use schyper::{Error, Hypergraph, KSubset, Permutation};

use crate::{Cli, Command, Format};

/// Exit status for a failed mathematical check.
pub const CHECK_FAILED: u8 = 1;
/// Exit status for bad arguments or unreadable input.
pub const USAGE: u8 = 2;

pub struct Output {
    pub stdout: String,
    pub status: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, status: 0 }
    }
}

pub struct Failure {
    pub status: u8,
    pub message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        status: USAGE,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        usage(e.to_string())
    }
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Construct { n, out } => construct(*n, out.as_deref(), fmt),
        Command::Verify {
            input,
            t,
            tau,
            budget,
            extended,
        } => verify(input, *t, tau, limits(*budget, *extended), fmt),
        Command::Invariants {
            input,
            budget,
            extended,
        } => invariants(input, limits(*budget, *extended), fmt),
        Command::Parity { n, k, t } => {
            let report = admissible(*n, *k, *t)?;
            Ok(Output {
                stdout: report.to_string(),
                status: if report.admissible() { 0 } else { CHECK_FAILED },
            })
        }
        Command::Residues {
            k,
            t,
            modulus,
            bound,
        } => {
            let bound = bound.unwrap_or_else(|| default_scan_bound(*k, *modulus));
            let set = residue_classes(*k, *t, *modulus, bound)?;
            let stdout = match fmt {
                Format::Text => format!("{}\n", format_residues(&set)),
                Format::Kv => format!("modulus={modulus}\nresidues={}\n", format_residues(&set)),
            };
            Ok(Output::ok(stdout))
        }
        Command::Search {
            n,
            k,
            t,
            tau,
            cap,
            truncate,
            emit,
            workers,
        } => {
            let tau = match tau.as_str() {
                "swap" => swap_antimorphism(*n)?,
                path => read_permutation(Path::new(path))?,
            };
            let policy = CapPolicy {
                cap: *cap,
                truncate: *truncate,
            };
            let summary =
                search_regular_sc(*n, *k, *t, &tau, policy, *workers).map_err(|e| match e {
                    Error::CapExceeded { orbits, cap } => usage(format!(
                        "{orbits} orbits give 2^{orbits} candidates, above --cap {cap}; \
                     rerun with --truncate to examine the first {cap}, or raise --cap"
                    )),
                    other => other.into(),
                })?;
            if let Some(dir) = emit {
                fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
                let width = summary.regular.len().to_string().len().max(4);
                for (i, h) in summary.regular.iter().enumerate() {
                    let path = dir.join(format!("sc-{:0width$}.hsc", i + 1));
                    let comment = format!("survivor {} of {}", i + 1, summary.regular.len());
                    write_file(&path, &to_edge_list(h, &[&comment]))?;
                }
            }
            let stdout = match fmt {
                Format::Text => format!("{summary}\n"),
                Format::Kv => summary
                    .to_string()
                    .split(' ')
                    .map(|f| format!("{f}\n"))
                    .collect(),
            };
            Ok(Output::ok(stdout))
        }
    }
}

fn limits(budget: Option<u64>, extended: bool) -> SearchLimits {
    let mut l = SearchLimits::default();
    if let Some(b) = budget {
        l.max_nodes = b;
    }
    l.extended = extended;
    l
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_permutation(path: &Path) -> Result<Permutation, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_permutation(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// `{0,1}`, followed by the side labels `{0_0,1_0}` in text output for even orders.
fn describe(s: &KSubset, n: usize, fmt: Format) -> String {
    if fmt == Format::Kv || !n.is_multiple_of(2) {
        return s.to_string();
    }
    let labels: Vec<String> = s
        .vertices()
        .iter()
        .map(|&v| Vertex::from_index(v, n / 2).to_string())
        .collect();
    format!("{s} = {{{}}}", labels.join(","))
}

fn construct(n: usize, out: Option<&Path>, fmt: Format) -> Result<Output, Failure> {
    let params = ConstructionParams::for_order(n)?;
    let g = build_gamma(n)?;
    let comment = format!("self-complementary 2-subset-regular 3-hypergraph of order {n}");
    let text = to_edge_list(&g, &[&comment]);
    let summary = match fmt {
        Format::Text => format!("edges={} valence={}\n", g.edge_count(), params.valence()),
        Format::Kv => format!("edges={}\nvalence={}\n", g.edge_count(), params.valence()),
    };
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(Output::ok(summary))
        }
        None => {
            eprint!("{summary}");
            Ok(Output::ok(text))
        }
    }
}

fn verify(
    input: &Path,
    t: usize,
    tau_spec: &str,
    limits: SearchLimits,
    fmt: Format,
) -> Result<Output, Failure> {
    let h = read_hypergraph(input)?;
    let n = h.order();
    let mut report = VerificationReport {
        edges: Some(h.edge_count() as u64),
        balanced: Some(2 * h.edge_count() as u64 == h.subset_count()),
        ..Default::default()
    };

    let reg = t_subset_regularity(&h, t)?;
    report.regular = Some(reg.is_regular());
    match &reg.outcome {
        Regularity::Regular { valence } => report.valence = Some(*valence),
        Regularity::Irregular {
            reference,
            reference_count,
            witness,
            witness_count,
        } => {
            report.witness = Some(format!(
                "{} in {witness_count} edges, {} in {reference_count}",
                describe(witness, n, fmt),
                describe(reference, n, fmt)
            ));
        }
    }

    let mut extra = String::new();
    let mut inconclusive = false;
    let tau = match tau_spec {
        "swap" => Some(swap_antimorphism(n)?),
        "identity" => Some(Permutation::identity(n)),
        "search" => match find_antimorphism(&h, limits)? {
            AntimorphismSearch::Found(p) => {
                let _ = writeln!(extra, "tau={p}");
                Some(p)
            }
            AntimorphismSearch::NoneExists => {
                report.antimorphism_ok = Some(false);
                report.antimorphism_witness = Some("no antimorphism exists".into());
                None
            }
            AntimorphismSearch::Inconclusive { nodes } => {
                inconclusive = true;
                report.antimorphism_witness = Some(format!(
                    "search inconclusive after {nodes} nodes (raise --budget)"
                ));
                None
            }
        },
        path => Some(read_permutation(Path::new(path))?),
    };
    if let Some(tau) = tau {
        match verify_antimorphism(&h, &tau)? {
            AntimorphismCheck::Holds => report.antimorphism_ok = Some(true),
            AntimorphismCheck::Violated { subset, is_edge } => {
                report.antimorphism_ok = Some(false);
                let what = if is_edge {
                    "are both edges"
                } else {
                    "are both non-edges"
                };
                let image = tau.apply(&subset)?;
                report.antimorphism_witness = Some(format!(
                    "{} and its image {} {what}",
                    describe(&subset, n, fmt),
                    describe(&image, n, fmt)
                ));
            }
        }
    }

    let mut stdout = match fmt {
        Format::Text => report.to_text(),
        Format::Kv => report.to_kv(),
    };
    stdout.push_str(&extra);
    let status = if report.all_passed() && !inconclusive {
        0
    } else {
        CHECK_FAILED
    };
    Ok(Output { stdout, status })
}

fn invariants(input: &Path, limits: SearchLimits, fmt: Format) -> Result<Output, Failure> {
    let h = read_hypergraph(input)?;
    let n = h.order();
    let mut out = String::new();

    if h.uniformity() == 3 {
        for v in 0..n {
            let c = vertex_invariant_k4(&h, v)?;
            match fmt {
                Format::Text if n % 2 == 0 => {
                    let _ = writeln!(out, "vertex {v} ({}) k4={c}", Vertex::from_index(v, n / 2));
                }
                Format::Text => {
                    let _ = writeln!(out, "vertex {v} k4={c}");
                }
                Format::Kv => {
                    let _ = writeln!(out, "k4.{v}={c}");
                }
            }
        }
    }

    let mut report = VerificationReport::default();
    let orbits = match automorphism_vertex_orbits(&h, limits) {
        Ok(VertexOrbits::Complete { orbits, .. }) => {
            for (i, o) in orbits.iter().enumerate() {
                let members: Vec<String> = o.iter().map(usize::to_string).collect();
                match fmt {
                    Format::Text => {
                        let _ = writeln!(out, "orbit {i}: {}", members.join(" "));
                    }
                    Format::Kv => {
                        let _ = writeln!(out, "orbit.{i}={}", members.join(","));
                    }
                }
            }
            OrbitCount::Exact(orbits.len())
        }
        Ok(VertexOrbits::Inconclusive { .. }) | Err(Error::Precondition(_)) => {
            OrbitCount::Inconclusive
        }
        Err(e) => return Err(e.into()),
    };
    report.orbit_count = Some(orbits);
    if h.uniformity() == 3 {
        report.euler_characteristic =
            euler_characteristic_triangulation(&h, Skeleton::CompleteGraph).ok();
    }

    match fmt {
        Format::Text => {
            let _ = write!(out, "orbits={orbits}");
            if let Some(chi) = report.euler_characteristic {
                let _ = write!(out, " euler={chi}");
            }
            out.push('\n');
        }
        Format::Kv => out.push_str(&report.to_kv()),
    }
    Ok(Output::ok(out))
}
