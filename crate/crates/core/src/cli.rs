//! Batch command-line front end: construction, certification, Takiffization,
//! genericity checks, contraction dimensions, and inequality sweeps, with
//! reproducible seeds and machine-readable output.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::builders::{
    build_descriptor, classical, semidirect, standard_involution, takiff, z2_contraction,
    ClassicalAlgebra, PairSpec,
};
use crate::error::{Error, Result};
use crate::invariants::{
    casimir_generators, independence_rank_sampled, is_invariant, takiffize_invariant,
};
use crate::orbits::{enumerate_partitions, matrix_oracle, not_vain_bounds, sweep, Inequality,
    OrbitRecord, Partition, SweepReport};
use crate::stabilizers::{
    adjoint_generic_check, coadjoint_generic_check, contraction_dims, sample_regular_covector,
    sample_regular_element,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// RNG seed for every sampled generic point; echoed in the output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of sampling trials.
    #[arg(long, global = true, default_value_t = 8)]
    trials: u32,
    /// Worker threads (falls back to TAKIFF_LAB_JOBS, then all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Debug, Parser)]
#[command(name = "takiff-lab", version, about = "Exact computational Lie theory")]
struct CliArgs {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Build an algebra from a descriptor and print its structure constants.
    Construct {
        #[arg(long)]
        algebra: String,
    },
    /// Check the Jacobi identity on a built algebra.
    Validate {
        #[arg(long)]
        algebra: String,
    },
    /// Compute the index (generic corank of the Kirillov form).
    Index {
        #[arg(long)]
        algebra: String,
    },
    /// Run a genericity criterion at a sampled generic point.
    Generic {
        #[arg(long)]
        algebra: String,
        /// Which action to test.
        #[arg(long, default_value = "adjoint")]
        space: String,
    },
    /// Expand every Casimir of a classical algebra to Takiff level n and
    /// certify all coefficients as invariants of the Takiff algebra.
    Takiffize {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 1)]
        level: usize,
    },
    /// List invariant generators of an algebra and optionally certify them.
    Invariants {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = false)]
        certify: bool,
    },
    /// Compare the two computations of the contraction quotient dimension.
    Contraction {
        /// Pair descriptor: "slso:N", "slsp:N", or "swap:DESC".
        #[arg(long)]
        pair: String,
    },
    /// Evaluate an inequality on every nilpotent orbit up to a rank bound.
    Sweep {
        /// "brilliant", "bril-takiff", or "not-vain".
        #[arg(long)]
        inequality: String,
        #[arg(long = "type")]
        type_tag: String,
        #[arg(long)]
        max_rank: usize,
        /// Number of copies for the "not-vain" condition.
        #[arg(long, default_value_t = 2)]
        copies: usize,
    },
    /// Cross-check the closed-form orbit invariants against the matrix model.
    Oracle {
        #[arg(long = "type")]
        type_tag: String,
        /// Comma-separated parts, e.g. "4,2,2"; omit to sweep a whole size.
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        size: Option<usize>,
    },
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match CliArgs::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    init_jobs(cli.common.jobs);
    match dispatch(&cli) {
        Ok(verified) => {
            if verified {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn init_jobs(jobs: Option<usize>) {
    let n = jobs.or_else(|| {
        std::env::var("TAKIFF_LAB_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(n) = n {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn parse_tag(s: &str) -> Result<char> {
    let tag = s.trim().to_ascii_uppercase();
    match tag.as_str() {
        "A" | "B" | "C" | "D" => Ok(tag.chars().next().unwrap()),
        _ => Err(Error::Parse(format!("unknown type {s:?}"))),
    }
}

fn parse_classical(desc: &str) -> Result<ClassicalAlgebra> {
    let mut chars = desc.chars();
    let tag = chars
        .next()
        .ok_or_else(|| Error::Parse("empty descriptor".into()))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("bad classical descriptor {desc:?}")))?;
    classical(tag.to_ascii_uppercase(), rank)
}

fn header(common: &Common) -> String {
    format!("# seed={} trials={}", common.seed, common.trials)
}

fn dispatch(cli: &CliArgs) -> Result<bool> {
    let common = &cli.common;
    match &cli.verb {
        Verb::Construct { algebra } => {
            let alg = build_descriptor(algebra)?;
            match common.format {
                Format::Json => println!("{}", alg.to_json()),
                Format::Tsv => {
                    println!("i\tj\tk\tc");
                    for (i, j, k, c) in alg.structure_entries() {
                        println!("{i}\t{j}\t{k}\t{}", crate::rational::format_q(&c));
                    }
                }
                Format::Text => {
                    println!("algebra {algebra}: dim {}", alg.dim);
                    println!("basis: {}", alg.basis_labels.join(" "));
                    for (i, j, k, c) in alg.structure_entries() {
                        println!(
                            "[{}, {}] += {} {}",
                            alg.basis_labels[i],
                            alg.basis_labels[j],
                            crate::rational::format_q(&c),
                            alg.basis_labels[k]
                        );
                    }
                }
            }
            Ok(true)
        }
        Verb::Validate { algebra } => {
            let alg = build_descriptor(algebra)?;
            let report = alg.check_jacobi();
            match common.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"algebra": algebra, "jacobi": report.ok,
                        "first_failure": report.first_failure})
                ),
                _ => println!("jacobi({algebra}) = {}", report.ok),
            }
            Ok(report.ok)
        }
        Verb::Index { algebra } => {
            let alg = build_descriptor(algebra)?;
            let ind = alg.index(common.trials, common.seed);
            match common.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"algebra": algebra, "index": ind,
                        "seed": common.seed, "trials": common.trials})
                ),
                _ => {
                    println!("{}", header(common));
                    println!("{ind}");
                }
            }
            Ok(true)
        }
        Verb::Generic { algebra, space } => {
            let alg = build_descriptor(algebra)?;
            let mut report = match space.as_str() {
                "adjoint" => {
                    let x = sample_regular_element(&alg, common.trials, common.seed);
                    adjoint_generic_check(&alg, &x)?
                }
                "coadjoint" => {
                    let xi = sample_regular_covector(&alg, common.trials, common.seed);
                    coadjoint_generic_check(&alg, &xi)?
                }
                other => return Err(Error::Parse(format!("unknown space {other:?}"))),
            };
            report.seed = Some(common.seed);
            let passed = report.passed();
            match common.format {
                Format::Json => println!("{}", report.to_json()),
                _ => {
                    println!("{}", header(common));
                    for (name, ok) in &report.checks {
                        println!("check {name}: {ok}");
                    }
                    for (name, d) in &report.dims {
                        println!("dim {name}: {d}");
                    }
                }
            }
            Ok(passed)
        }
        Verb::Takiffize { algebra, level } => {
            let ca = parse_classical(algebra)?;
            let t = takiff(&ca.base, *level);
            let ad = t.total.adjoint_rep();
            let mut coeffs = Vec::new();
            let mut all_ok = true;
            for f in casimir_generators(&ca)? {
                for c in takiffize_invariant(&f, *level).coefficients {
                    all_ok &= is_invariant(&ad, &c);
                    coeffs.push(c);
                }
            }
            let rank = independence_rank_sampled(&coeffs, common.trials, common.seed);
            let expected = (*level + 1) * ca.rank;
            match common.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"algebra": algebra, "level": level,
                        "generators": coeffs.len(), "all_invariant": all_ok,
                        "jacobian_rank": rank, "expected_rank": expected,
                        "seed": common.seed})
                ),
                _ => {
                    println!("{}", header(common));
                    println!("generators: {}", coeffs.len());
                    println!("all invariant: {all_ok}");
                    println!("jacobian rank: {rank} (expected {expected})");
                }
            }
            Ok(all_ok && rank == expected)
        }
        Verb::Invariants { algebra, certify } => {
            let (gens, rep, expected) = if let Some(rest) = algebra.strip_prefix("sd:") {
                let (inner, module) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("bad descriptor {algebra:?}")))?;
                if module != "adjoint" {
                    return Err(Error::Unsupported(
                        "invariant generators are implemented for the adjoint module".into(),
                    ));
                }
                let ca = parse_classical(inner)?;
                let sd = semidirect(&ca.base, &ca.base.adjoint_rep())?;
                let mut gens = Vec::new();
                for f in casimir_generators(&ca)? {
                    gens.extend(takiffize_invariant(&f, 1).coefficients);
                }
                (gens, sd.total.adjoint_rep(), 2 * ca.rank)
            } else {
                let ca = parse_classical(algebra)?;
                let gens = casimir_generators(&ca)?;
                (gens, ca.base.adjoint_rep(), ca.rank)
            };
            let mut all_ok = true;
            let mut lines = Vec::new();
            for (i, f) in gens.iter().enumerate() {
                let inv = if *certify { is_invariant(&rep, f) } else { true };
                all_ok &= inv;
                if *certify {
                    lines.push(format!(
                        "generator {i}: degree {}, invariant: {inv}",
                        f.total_degree()
                    ));
                } else {
                    lines.push(format!("generator {i}: degree {}", f.total_degree()));
                }
            }
            let rank = independence_rank_sampled(&gens, common.trials, common.seed);
            match common.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"algebra": algebra, "generators": gens.len(),
                        "degrees": gens.iter().map(|f| f.total_degree()).collect::<Vec<_>>(),
                        "all_invariant": all_ok, "jacobian_rank": rank,
                        "seed": common.seed})
                ),
                _ => {
                    println!("{}", header(common));
                    for l in lines {
                        println!("{l}");
                    }
                    println!("jacobian rank: {rank}");
                }
            }
            Ok(all_ok && rank == expected)
        }
        Verb::Contraction { pair } => {
            let spec = parse_pair(pair)?;
            let (ambient, inv) = standard_involution(&spec)?;
            let (g0, _) = inv.eigenspaces(&ambient);
            let sd = z2_contraction(&ambient, &inv)?;
            let cd = contraction_dims(&sd, &ambient, &g0, common.trials, common.seed)?;
            match common.format {
                Format::Json => println!("{}", cd.to_json()),
                _ => {
                    println!("{}", header(common));
                    println!("method torus: {}", cd.method_torus);
                    println!("method centralizer: {}", cd.method_centralizer);
                    println!("index: {}", cd.index_total);
                    println!("agree: {}", cd.agree());
                }
            }
            Ok(cd.agree())
        }
        Verb::Sweep {
            inequality,
            type_tag,
            max_rank,
            copies,
        } => {
            let tag = parse_tag(type_tag)?;
            let report = match inequality.as_str() {
                "not-vain" | "not_vain" => not_vain_bounds(tag, *max_rank, *copies)?,
                other => sweep(other.parse::<Inequality>()?, tag, *max_rank)?,
            };
            print_sweep(&report, common.format);
            Ok(report.violations.is_empty())
        }
        Verb::Oracle {
            type_tag,
            partition,
            size,
        } => {
            let tag = parse_tag(type_tag)?;
            let parts: Vec<Partition> = match (partition, size) {
                (Some(text), None) => vec![Partition::parse(tag, text)?],
                (None, Some(n)) => enumerate_partitions(tag, *n)?
                    .into_iter()
                    .filter(|p| !(tag == 'A' && p.parts == vec![1]))
                    .collect(),
                _ => {
                    return Err(Error::Parse(
                        "give exactly one of --partition or --size".into(),
                    ))
                }
            };
            let mut all_ok = true;
            let mut rows = Vec::new();
            for p in &parts {
                let formula = OrbitRecord::from_partition(p)?;
                let oracle = matrix_oracle(p)?;
                let ok = formula.centralizer_dim == oracle.centralizer_dim
                    && formula.rank_dpi == oracle.rank_dpi
                    && formula.stratum_index == oracle.stratum_index;
                all_ok &= ok;
                rows.push((p.clone(), formula, oracle, ok));
            }
            match common.format {
                Format::Json => {
                    let items: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(p, f, o, ok)| {
                            serde_json::json!({"partition": p.to_text(),
                                "formula": {"centralizer_dim": f.centralizer_dim,
                                    "rank_dpi": f.rank_dpi, "stratum": f.stratum_index},
                                "oracle": {"centralizer_dim": o.centralizer_dim,
                                    "rank_dpi": o.rank_dpi, "stratum": o.stratum_index},
                                "agree": ok})
                        })
                        .collect();
                    println!("{}", serde_json::json!({"cases": items, "all_agree": all_ok}));
                }
                Format::Tsv => {
                    println!("partition\tcentralizer_dim\trank_dpi\tstratum\tagree");
                    for (p, f, _, ok) in &rows {
                        println!(
                            "{p}\t{}\t{}\t{}\t{ok}",
                            f.centralizer_dim, f.rank_dpi, f.stratum_index
                        );
                    }
                }
                Format::Text => {
                    for (p, f, o, ok) in &rows {
                        println!(
                            "{p}: formula (z={}, dpi={}, stratum={}) oracle (z={}, dpi={}, stratum={}) agree={ok}",
                            f.centralizer_dim, f.rank_dpi, f.stratum_index,
                            o.centralizer_dim, o.rank_dpi, o.stratum_index
                        );
                    }
                }
            }
            Ok(all_ok)
        }
    }
}

fn parse_pair(desc: &str) -> Result<PairSpec> {
    let (kind, rest) = desc
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("bad pair descriptor {desc:?}")))?;
    match kind {
        "slso" => {
            let n: usize = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad pair size {rest:?}")))?;
            Ok(PairSpec::SlSo(n))
        }
        "slsp" => {
            let n: usize = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad pair size {rest:?}")))?;
            Ok(PairSpec::SlSp(n))
        }
        "swap" => Ok(PairSpec::Swap(build_descriptor(rest)?)),
        other => Err(Error::Parse(format!("unknown pair kind {other:?}"))),
    }
}

fn print_sweep(report: &SweepReport, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Tsv => {
            println!("partition\tcentralizer_dim\trank_dpi\tL\tstratum");
            for (_, rec) in &report.records {
                println!("{}", rec.tsv_row());
            }
        }
        Format::Text => {
            println!("orbits: {}", report.records.len());
            println!("violations: {}", report.violations.len());
            for (rank, p) in &report.violations {
                println!("violation at rank {rank}: {p}");
            }
            println!("equality cases: {}", report.equality_cases.len());
        }
    }
}
