//! Command-line interface: one binary, subcommand per capability, uniform
//! exit codes (1 usage, 2 budget, 3 parse/IO, 4 precondition), and
//! deterministic outputs with a provenance header in every file.
//!
//! Configuration precedence is flags > config file > defaults. Thread count
//! and output paths never enter output headers, so reruns with different
//! parallelism produce byte-identical files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::betti::{
    betti_table_ideal, betti_table_quotient, persistent_betti_table, Subject, DEFAULT_BUDGET,
};
use crate::complexes::{edge_ideal, independence_complex};
use crate::covers::{cover_barcode, DEFAULT_COVER_BUDGET};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::boundary_matrix_triplets;
use crate::io::{
    barcode_csv, barcode_json, betti_table_csv, betti_table_json, curves_csv, distances_csv,
    features_binary, features_csv, features_sidecar_json, metrics_json, parse_filtration_file,
    parse_labels_csv, persistent_splitting_json, persistent_splitting_text, persistent_table_csv,
    persistent_table_json, sha256_hex, splitting_report_json, OutputHeader,
};
use crate::pipelines::{
    genome_feature_matrix, molecule_betti_curves, nn_evaluate, pairwise_distances, parse_fasta,
    parse_xyz, vr_graph_filtration,
};
use crate::splitting::{
    check_persistent_splitting, check_vertex_splitting, vertex_split_filtration,
};

const DEFAULT_GENOME_RADII: [f64; 9] = [
    16.0, 32.0, 64.0, 128.0, 256.0, 512.0, 1024.0, 2048.0, 4096.0,
];

#[derive(Parser)]
#[command(
    name = "edge-ideals",
    version,
    about = "Graded and persistent Betti numbers of edge ideals, cover barcodes, and the genomic/molecular pipelines"
)]
struct Cli {
    /// Field characteristic: 0 for the rationals, otherwise a prime (default 2).
    #[arg(long, global = true)]
    field: Option<String>,

    /// Worker thread count (default: all cores). Does not affect output bytes.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Subset-enumeration ceiling per table request.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// JSON config file; command-line flags take precedence over its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical graded Betti table of an edge ideal or its quotient ring.
    Betti {
        /// Graph/filtration file (text or .json).
        #[arg(long)]
        input: PathBuf,
        /// `quotient` for S/I, `ideal` for I.
        #[arg(long)]
        subject: Option<String>,
        /// Filtration level to analyse (default 0).
        #[arg(long, default_value_t = 0)]
        level: usize,
        #[arg(long)]
        imax: Option<u32>,
        #[arg(long)]
        jmax: Option<u32>,
        /// Keep the multigraded refinement in the JSON output.
        #[arg(long)]
        multigraded: bool,
        /// Dump boundary matrices of the independence complex to stderr.
        #[arg(long)]
        verbose: bool,
        /// Output prefix; writes <out>.csv and <out>.json.
        #[arg(long)]
        out: PathBuf,
    },
    /// Persistent Betti table over all grid pairs of a filtration.
    PersistentBetti {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        subject: Option<String>,
        #[arg(long)]
        imax: Option<u32>,
        #[arg(long)]
        jmax: Option<u32>,
        /// Output prefix; writes <out>.csv and <out>.json.
        #[arg(long)]
        out: PathBuf,
    },
    /// Minimal vertex cover barcode and Π matrices of a filtration.
    Covers {
        #[arg(long)]
        input: PathBuf,
        /// Output prefix; writes <out>.bars.csv, <out>.pi.csv, <out>.json.
        #[arg(long)]
        out: PathBuf,
    },
    /// Vertex-splitting verification, classical or persistent.
    SplitCheck {
        #[arg(long)]
        input: PathBuf,
        /// Pivot vertex (1-indexed).
        #[arg(long)]
        pivot: usize,
        /// Check the persistent inequality across the whole filtration.
        #[arg(long)]
        persistent: bool,
        #[arg(long)]
        imax: Option<u32>,
        #[arg(long)]
        jmax: Option<u32>,
        /// Output prefix; writes <out>.json and <out>.txt.
        #[arg(long)]
        out: PathBuf,
    },
    /// Persistent Betti feature vectors of FASTA records.
    GenomeFeaturize {
        #[arg(long)]
        fasta: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated radius grid, e.g. `16,32,64`.
        #[arg(long)]
        radii: Option<String>,
        /// Output prefix; writes <out>.features.csv/.bin and a JSON sidecar.
        #[arg(long)]
        out: PathBuf,
    },
    /// Leave-one-out 1-NN classification of FASTA records.
    GenomeClassify {
        #[arg(long)]
        fasta: PathBuf,
        /// Labels CSV (`id,label`).
        #[arg(long)]
        labels: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        radii: Option<String>,
        /// Output prefix; writes <out>.distances.csv and <out>.metrics.json.
        #[arg(long)]
        out: PathBuf,
    },
    /// Graded Betti curves of a molecule under a Vietoris-Rips filtration.
    MoleculeCurves {
        #[arg(long)]
        xyz: PathBuf,
        /// Radius range as `min,max` in Å.
        #[arg(long)]
        vr_range: Option<String>,
        #[arg(long)]
        vr_steps: Option<usize>,
        /// Comma-separated diagonals d for the curves β_{i,i+d}.
        #[arg(long)]
        diagonals: Option<String>,
        /// Output prefix; writes <out>.curves.csv.
        #[arg(long)]
        out: PathBuf,
    },
}

/// Optional JSON config file, merged below flags and above defaults.
#[derive(Deserialize, Default, Clone)]
#[serde(default, deny_unknown_fields)]
struct FileConfig {
    field: Option<String>,
    threads: Option<usize>,
    budget: Option<u64>,
    subject: Option<String>,
    imax: Option<u32>,
    jmax: Option<u32>,
    k: Option<usize>,
    radii: Option<Vec<f64>>,
    vr_range: Option<[f64; 2]>,
    vr_steps: Option<usize>,
    diagonals: Option<Vec<u32>>,
}

struct Resolved {
    field: Field,
    budget: u64,
    file: FileConfig,
}

fn parse_radii_flag(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::parse(format!("bad radius value {t:?}")))
        })
        .collect()
}

fn parse_diagonals_flag(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::parse(format!("bad diagonal value {t:?}")))
        })
        .collect()
}

fn parse_subject(s: &str) -> Result<Subject> {
    match s {
        "quotient" => Ok(Subject::Quotient),
        "ideal" => Ok(Subject::Ideal),
        other => Err(Error::parse(format!(
            "subject must be `quotient` or `ideal`, got {other:?}"
        ))),
    }
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    std::fs::write(path, contents)?;
    Ok(())
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.file_name().unwrap_or_default().to_os_string();
    name.push(suffix);
    prefix.with_file_name(name)
}

fn header(
    subcommand: &str,
    field: Field,
    config: BTreeMap<String, Value>,
    inputs: &[(&str, &[u8])],
) -> OutputHeader {
    OutputHeader {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        subcommand: subcommand.to_string(),
        field_characteristic: field.characteristic(),
        config,
        input_digests: inputs
            .iter()
            .map(|(name, bytes)| (name.to_string(), sha256_hex(bytes)))
            .collect(),
    }
}

/// Entry point: returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's rendered help/version are success paths
            if e.use_stderr() {
                eprint!("{e}");
                return 1;
            }
            print!("{e}");
            return 0;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Budget { .. } => 2,
                Error::Parse(_) | Error::Io(_) => 3,
                Error::Precondition(_) | Error::Capacity { .. } => 4,
            }
        }
    }
}

fn execute(cli: Cli) -> Result<()> {
    let file: FileConfig = match &cli.config {
        Some(path) => {
            let bytes = std::fs::read(path)?;
            serde_json::from_slice(&bytes)
                .map_err(|e| Error::parse(format!("bad config file: {e}")))?
        }
        None => FileConfig::default(),
    };
    let field = match cli.field.as_deref().or(file.field.as_deref()) {
        Some(s) => s.parse::<Field>()?,
        None => Field::GF2,
    };
    let budget = cli.budget.or(file.budget).unwrap_or(DEFAULT_BUDGET);
    let resolved = Resolved {
        field,
        budget,
        file,
    };

    let threads = cli.threads.or(resolved.file.threads);
    match threads {
        Some(t) if t > 0 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::precondition(format!("cannot build thread pool: {e}")))?;
            pool.install(|| dispatch(cli.command, &resolved))
        }
        _ => dispatch(cli.command, &resolved),
    }
}

fn dispatch(command: Command, resolved: &Resolved) -> Result<()> {
    match command {
        Command::Betti {
            input,
            subject,
            level,
            imax,
            jmax,
            multigraded,
            verbose,
            out,
        } => {
            let bytes = std::fs::read(&input)?;
            let filtration = parse_filtration_file(&input)?;
            if level >= filtration.len() {
                return Err(Error::precondition(format!(
                    "level {level} out of range for a {}-level input",
                    filtration.len()
                )));
            }
            let g = filtration.level(level);
            let n = g.n() as u32;
            let subject = parse_subject(
                subject
                    .as_deref()
                    .or(resolved.file.subject.as_deref())
                    .unwrap_or("quotient"),
            )?;
            let i_max = imax.or(resolved.file.imax).unwrap_or(n);
            let j_max = jmax.or(resolved.file.jmax).unwrap_or(n);

            let complex = independence_complex(g);
            if verbose {
                for c in 0..=complex.dim().unwrap_or(-1) + 1 {
                    eprint!("{}", boundary_matrix_triplets(&complex, c));
                }
            }
            let table = match subject {
                Subject::Quotient => betti_table_quotient(
                    &complex,
                    resolved.field,
                    i_max,
                    j_max,
                    resolved.budget,
                    multigraded,
                )?,
                Subject::Ideal => betti_table_ideal(
                    &edge_ideal(g),
                    resolved.field,
                    i_max,
                    j_max,
                    resolved.budget,
                    multigraded,
                )?,
            };

            let mut config = BTreeMap::new();
            config.insert("subject".into(), json!(subject.to_string()));
            config.insert("level".into(), json!(level));
            config.insert("imax".into(), json!(i_max));
            config.insert("jmax".into(), json!(j_max));
            config.insert("budget".into(), json!(resolved.budget));
            config.insert("multigraded".into(), json!(multigraded));
            let header = header("betti", resolved.field, config, &[("input", &bytes)]);

            write_file(
                &with_suffix(&out, ".csv"),
                betti_table_csv(&table, &header).as_bytes(),
            )?;
            write_file(
                &with_suffix(&out, ".json"),
                serde_json::to_string_pretty(&betti_table_json(&table, &header))
                    .expect("tables serialize")
                    .as_bytes(),
            )?;
            Ok(())
        }

        Command::PersistentBetti {
            input,
            subject,
            imax,
            jmax,
            out,
        } => {
            let bytes = std::fs::read(&input)?;
            let filtration = parse_filtration_file(&input)?;
            let n = filtration.n() as u32;
            let subject = parse_subject(
                subject
                    .as_deref()
                    .or(resolved.file.subject.as_deref())
                    .unwrap_or("ideal"),
            )?;
            let i_max = imax.or(resolved.file.imax).unwrap_or(n);
            let j_max = jmax.or(resolved.file.jmax).unwrap_or(n);
            let table = persistent_betti_table(
                &filtration,
                subject,
                resolved.field,
                i_max,
                j_max,
                resolved.budget,
            )?;

            let mut config = BTreeMap::new();
            config.insert("subject".into(), json!(subject.to_string()));
            config.insert("imax".into(), json!(i_max));
            config.insert("jmax".into(), json!(j_max));
            config.insert("budget".into(), json!(resolved.budget));
            let header = header(
                "persistent-betti",
                resolved.field,
                config,
                &[("input", &bytes)],
            );

            write_file(
                &with_suffix(&out, ".csv"),
                persistent_table_csv(&table, &header).as_bytes(),
            )?;
            write_file(
                &with_suffix(&out, ".json"),
                serde_json::to_string_pretty(&persistent_table_json(&table, &header))
                    .expect("tables serialize")
                    .as_bytes(),
            )?;
            Ok(())
        }

        Command::Covers { input, out } => {
            let bytes = std::fs::read(&input)?;
            let filtration = parse_filtration_file(&input)?;
            let barcode = cover_barcode(&filtration, DEFAULT_COVER_BUDGET.min(resolved.budget.max(1)))?;

            let mut config = BTreeMap::new();
            config.insert("budget".into(), json!(resolved.budget));
            let header = header("covers", resolved.field, config, &[("input", &bytes)]);

            write_file(
                &with_suffix(&out, ".bars.csv"),
                barcode_csv(&barcode, &header).as_bytes(),
            )?;
            write_file(
                &with_suffix(&out, ".pi.csv"),
                crate::io::pi_matrix_csv(&barcode, &header).as_bytes(),
            )?;
            write_file(
                &with_suffix(&out, ".json"),
                serde_json::to_string_pretty(&barcode_json(&barcode, &header))
                    .expect("barcodes serialize")
                    .as_bytes(),
            )?;
            Ok(())
        }

        Command::SplitCheck {
            input,
            pivot,
            persistent,
            imax,
            jmax,
            out,
        } => {
            let bytes = std::fs::read(&input)?;
            let filtration = parse_filtration_file(&input)?;
            let n = filtration.n() as u32;
            let i_max = imax.or(resolved.file.imax).unwrap_or(n);
            let j_max = jmax.or(resolved.file.jmax).unwrap_or(n);

            let mut config = BTreeMap::new();
            config.insert("pivot".into(), json!(pivot));
            config.insert("persistent".into(), json!(persistent));
            config.insert("imax".into(), json!(i_max));
            config.insert("jmax".into(), json!(j_max));
            config.insert("budget".into(), json!(resolved.budget));
            let header = header("split-check", resolved.field, config, &[("input", &bytes)]);

            if persistent {
                let (totals, lefts, rights) = vertex_split_filtration(&filtration, pivot)?;
                let report = check_persistent_splitting(
                    &totals,
                    &lefts,
                    &rights,
                    resolved.field,
                    i_max,
                    j_max,
                    resolved.budget,
                )?;
                write_file(
                    &with_suffix(&out, ".json"),
                    serde_json::to_string_pretty(&persistent_splitting_json(&report, &header))
                        .expect("reports serialize")
                        .as_bytes(),
                )?;
                write_file(
                    &with_suffix(&out, ".txt"),
                    persistent_splitting_text(&report).as_bytes(),
                )?;
            } else {
                let report = check_vertex_splitting(
                    filtration.level(0),
                    pivot,
                    resolved.field,
                    i_max,
                    j_max,
                    resolved.budget,
                )?;
                write_file(
                    &with_suffix(&out, ".json"),
                    serde_json::to_string_pretty(&splitting_report_json(&report, &header))
                        .expect("reports serialize")
                        .as_bytes(),
                )?;
                write_file(&with_suffix(&out, ".txt"), report.to_text_table().as_bytes())?;
            }
            Ok(())
        }

        Command::GenomeFeaturize {
            fasta,
            k,
            radii,
            out,
        } => {
            let bytes = std::fs::read(&fasta)?;
            let records = parse_fasta(&bytes)?;
            let k = k.or(resolved.file.k).unwrap_or(4);
            let radii = match radii {
                Some(s) => parse_radii_flag(&s)?,
                None => resolved
                    .file
                    .radii
                    .clone()
                    .unwrap_or_else(|| DEFAULT_GENOME_RADII.to_vec()),
            };
            let vectors = genome_feature_matrix(&records, k, &radii)?;
            let ids: Vec<String> = records.iter().map(|r| r.id.clone()).collect();

            let mut config = BTreeMap::new();
            config.insert("k".into(), json!(k));
            config.insert("radii".into(), json!(radii));
            let header = header(
                "genome-featurize",
                resolved.field,
                config,
                &[("fasta", &bytes)],
            );

            write_file(
                &with_suffix(&out, ".features.csv"),
                features_csv(&ids, &vectors, &header)?.as_bytes(),
            )?;
            write_file(&with_suffix(&out, ".features.bin"), &features_binary(&vectors))?;
            write_file(
                &with_suffix(&out, ".features.json"),
                serde_json::to_string_pretty(&features_sidecar_json(&ids, &vectors, &header))
                    .expect("sidecars serialize")
                    .as_bytes(),
            )?;
            Ok(())
        }

        Command::GenomeClassify {
            fasta,
            labels,
            k,
            radii,
            out,
        } => {
            let fasta_bytes = std::fs::read(&fasta)?;
            let label_bytes = std::fs::read(&labels)?;
            let records = parse_fasta(&fasta_bytes)?;
            let label_rows = parse_labels_csv(
                std::str::from_utf8(&label_bytes)
                    .map_err(|_| Error::parse("labels CSV is not UTF-8"))?,
            )?;
            let label_map: BTreeMap<&str, &str> = label_rows
                .iter()
                .map(|(id, label)| (id.as_str(), label.as_str()))
                .collect();
            let labels_in_order: Vec<String> = records
                .iter()
                .map(|r| {
                    label_map
                        .get(r.id.as_str())
                        .map(|l| l.to_string())
                        .ok_or_else(|| Error::precondition(format!("no label for record {}", r.id)))
                })
                .collect::<Result<_>>()?;

            let k = k.or(resolved.file.k).unwrap_or(4);
            let radii = match radii {
                Some(s) => parse_radii_flag(&s)?,
                None => resolved
                    .file
                    .radii
                    .clone()
                    .unwrap_or_else(|| DEFAULT_GENOME_RADII.to_vec()),
            };
            let vectors = genome_feature_matrix(&records, k, &radii)?;
            let distances = pairwise_distances(&vectors)?;
            let metrics = nn_evaluate(&labels_in_order, &distances)?;
            let ids: Vec<String> = records.iter().map(|r| r.id.clone()).collect();

            let mut config = BTreeMap::new();
            config.insert("k".into(), json!(k));
            config.insert("radii".into(), json!(radii));
            let header = header(
                "genome-classify",
                resolved.field,
                config,
                &[("fasta", &fasta_bytes), ("labels", &label_bytes)],
            );

            write_file(
                &with_suffix(&out, ".distances.csv"),
                distances_csv(&ids, &distances, &header).as_bytes(),
            )?;
            write_file(
                &with_suffix(&out, ".metrics.json"),
                serde_json::to_string_pretty(&metrics_json(&metrics, &header))
                    .expect("metrics serialize")
                    .as_bytes(),
            )?;
            Ok(())
        }

        Command::MoleculeCurves {
            xyz,
            vr_range,
            vr_steps,
            diagonals,
            out,
        } => {
            let bytes = std::fs::read(&xyz)?;
            let points = parse_xyz(&bytes)?;
            let (r_min, r_max) = match vr_range {
                Some(s) => {
                    let parts = parse_radii_flag(&s)?;
                    if parts.len() != 2 {
                        return Err(Error::parse("--vr-range expects `min,max`"));
                    }
                    (parts[0], parts[1])
                }
                None => resolved
                    .file
                    .vr_range
                    .map(|[a, b]| (a, b))
                    .unwrap_or((0.0, 5.0)),
            };
            let steps = vr_steps.or(resolved.file.vr_steps).unwrap_or(64);
            let diagonals = match diagonals {
                Some(s) => parse_diagonals_flag(&s)?,
                None => resolved.file.diagonals.clone().unwrap_or_else(|| vec![2, 3]),
            };
            let filtration = vr_graph_filtration(&points, r_min, r_max, steps)?;
            let curves = molecule_betti_curves(
                &filtration,
                &diagonals,
                resolved.field,
                resolved.budget,
                false,
            )?;
            let entity = xyz
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "molecule".to_string());

            let mut config = BTreeMap::new();
            config.insert("vr_range".into(), json!([r_min, r_max]));
            config.insert("vr_steps".into(), json!(steps));
            config.insert("diagonals".into(), json!(diagonals));
            config.insert("budget".into(), json!(resolved.budget));
            let header = header(
                "molecule-curves",
                resolved.field,
                config,
                &[("xyz", &bytes)],
            );

            write_file(
                &with_suffix(&out, ".curves.csv"),
                curves_csv(&entity, &curves, &header).as_bytes(),
            )?;
            Ok(())
        }
    }
}
