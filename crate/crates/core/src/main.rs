use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use partgraph::atlas::{export_tables, render_atlas, AtlasMode};
use partgraph::pipeline::{compute_range, load_profile, with_jobs, Computed, VERIFIED_MAX_N};
use partgraph::{verify, Error, TransferGraph};

#[derive(Debug, Parser)]
#[command(name = "partgraph", version, about = "Simplicial thickness of partition transfer graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct RangeArgs {
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long, default_value_t = 30)]
    n_max: usize,
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Permit n_max above 30.
    #[arg(long)]
    allow_beyond_verified_range: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute graphs, profiles and zone decompositions and write them to disk.
    Compute {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Write the first-occurrence, summary and maximal-locus tables.
    Tables {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Fail instead of computing profiles missing from the output directory.
        #[arg(long)]
        no_compute: bool,
    },
    /// Render an SVG atlas page for one n.
    Atlas {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "thickness")]
        mode: String,
        #[arg(long, default_value = "out")]
        out: PathBuf,
        #[arg(long)]
        allow_beyond_verified_range: bool,
    },
    /// Run the structural checks and reference comparisons.
    Verify {
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Print the edge list of G_n, one "λ<TAB>μ" line per edge.
    GraphDump {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSize(_) | Error::UnknownMode(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

fn check_n(n: usize, allow_beyond: bool) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    if n > VERIFIED_MAX_N {
        if !allow_beyond {
            return Err(Failure::Usage(format!(
                "n = {n} is beyond the verified range n <= {VERIFIED_MAX_N}; \
                 pass --allow-beyond-verified-range to compute anyway"
            )));
        }
        eprintln!("warning: n = {n} is beyond the verified range; results are extrapolation");
    }
    Ok(())
}

impl RangeArgs {
    fn validate(&self) -> Result<(), Failure> {
        if self.n_min < 1 || self.n_min > self.n_max {
            return Err(Failure::Usage(format!(
                "invalid range {}..={} (need 1 <= n_min <= n_max)",
                self.n_min, self.n_max
            )));
        }
        check_n(self.n_max, self.allow_beyond_verified_range)
    }
}

fn write_tables(computed: &[Computed], out: &Path) -> Result<(), Failure> {
    let profiles: Vec<_> = computed.iter().map(|c| c.profile.clone()).collect();
    export_tables(&profiles)?.write_to(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute { range, out } => {
            range.validate()?;
            // Range tables need every n from 1; only n_min.. is written per n.
            let all = with_jobs(range.jobs, || compute_range(1, range.n_max, true))?;
            for c in all.iter().filter(|c| c.n() >= range.n_min) {
                let dir = c.write_artifacts(&out)?;
                println!(
                    "n = {:2}: p(n) = {:5}, tau_max = {}, |M_n| = {:3} -> {}",
                    c.n(),
                    c.graph.vertex_count(),
                    c.profile.tau_max(),
                    c.profile.max_locus().len(),
                    dir.display()
                );
            }
            write_tables(&all, &out)?;
        }
        Command::Tables {
            range,
            out,
            no_compute,
        } => {
            range.validate()?;
            let mut profiles = Vec::with_capacity(range.n_max);
            for n in 1..=range.n_max {
                let profile = match load_profile(&out, n)? {
                    Some(p) => p,
                    None if no_compute => {
                        return Err(Failure::Runtime(Error::IncompleteRange(format!(
                            "no stored profile for n = {n} under {}",
                            out.display()
                        ))))
                    }
                    None => with_jobs(range.jobs, || Computed::new(n, true))?.profile,
                };
                profiles.push(profile);
            }
            let tables = export_tables(&profiles)?;
            tables.write_to(&out)?;
            print!("{}", tables.first_occurrence_csv);
        }
        Command::Atlas {
            n,
            mode,
            out,
            allow_beyond_verified_range,
        } => {
            check_n(n, allow_beyond_verified_range)?;
            let mode: AtlasMode = mode.parse()?;
            let c = Computed::new(n, true)?;
            let svg = render_atlas(
                &c.graph,
                &c.framework,
                &c.profile,
                mode,
                Some(c.profile.max_locus()),
            )?;
            fs::create_dir_all(&out)?;
            let path = out.join(format!("atlas_n{n}_{}.svg", mode.as_str()));
            fs::write(&path, svg)?;
            println!("{}", path.display());
        }
        Command::Verify { range } => {
            range.validate()?;
            let report = verify::run(range.n_min, range.n_max, range.jobs)?;
            println!("{report}");
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
        Command::GraphDump { n, out } => {
            check_n(n, true)?;
            let g = TransferGraph::build(n)?;
            match out {
                Some(path) => g.write_edge_list(fs::File::create(path)?)?,
                None => g.write_edge_list(std::io::stdout().lock())?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
