use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rackinv_core::cohomology::{enumerate_reduced_cocycles, MATERIALIZE_CAP};
use rackinv_core::coloring::enumerate_colorings;
use rackinv_core::invariants::{
    cocycle_invariant, framing_counts, polynomial_counting, InvariantError,
};
use rackinv_core::{GaussDiagram, RackError};
use thiserror::Error;

use crate::formats::{self, FormatError};

#[derive(Debug, Parser)]
#[command(
    name = "rackinv",
    version,
    about = "Rack counting and cocycle invariants of links"
)]
pub struct Cli {
    /// Print only the headline: the first line of each report.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a rack file and print its profile.
    RackCheck { rack: PathBuf },
    /// Find the N-reduced 2-cocycles of a rack over Z_m.
    RackCocycles {
        rack: PathBuf,
        #[arg(long = "mod", value_name = "M", value_parser = clap::value_parser!(u32).range(2..))]
        modulus: u32,
        /// List up to K solutions instead of a generating set.
        #[arg(long, value_name = "K")]
        all_up_to: Option<usize>,
    },
    /// Print writhes, linking numbers and arc count of a Gauss code.
    LinkInfo {
        link: PathBuf,
        /// Also dump every coloring of the diagram by this rack.
        #[arg(long, value_name = "RACK")]
        colorings: Option<PathBuf>,
    },
    /// Compute IR, PR or the cocycle invariant.
    Invariant {
        kind: Kind,
        rack: PathBuf,
        link: PathBuf,
        #[arg(long, value_name = "FILE", required_if_eq("kind", "phi"))]
        cocycle: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Ir,
    Pr,
    Phi,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("invalid rack: {0}")]
    InvalidRack(RackError),
    #[error("inadmissible cocycle: {0}")]
    Inadmissible(#[from] InvariantError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    TooLarge(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Format(e) if e.is_domain() => 1,
            CliError::Format(_) | CliError::Usage(_) => 2,
            CliError::InvalidRack(_) | CliError::Inadmissible(_) | CliError::TooLarge(_) => 1,
        }
    }
}

/// A successful report, or a domain refusal that still has something to say
/// on stdout.
pub struct Report {
    pub text: String,
    pub code: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let report = match &cli.command {
        Command::RackCheck { rack } => rack_check(rack)?,
        Command::RackCocycles {
            rack,
            modulus,
            all_up_to,
        } => rack_cocycles(rack, *modulus, *all_up_to)?,
        Command::LinkInfo { link, colorings } => link_info(link, colorings.as_deref())?,
        Command::Invariant {
            kind,
            rack,
            link,
            cocycle,
        } => invariant(*kind, rack, link, cocycle.as_deref())?,
    };
    Ok(if cli.quiet {
        let first = report.text.lines().next().unwrap_or("");
        Report {
            text: format!("{first}\n"),
            code: report.code,
        }
    } else {
        report
    })
}

fn rack_check(path: &Path) -> Result<Report, CliError> {
    let rack = match formats::load_rack(path) {
        Ok(r) => r,
        Err(FormatError::Rack(RackError::Axioms(violations))) => {
            let mut text = format!("invalid rack, {} axiom violation(s)\n", violations.len());
            for v in violations.iter().take(20) {
                let _ = writeln!(text, "  {v}");
            }
            if violations.len() > 20 {
                let _ = writeln!(text, "  ...");
            }
            return Ok(Report { text, code: 1 });
        }
        Err(FormatError::Rack(e)) => return Err(CliError::InvalidRack(e)),
        Err(e) => return Err(e.into()),
    };
    let p = rack.profile();
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut text = format!(
        "valid rack, n={}, quandle={}, N={}\n",
        rack.order(),
        yes_no(p.is_quandle),
        p.rank
    );
    let _ = writeln!(text, "diagonal: {}", p.diagonal);
    let classes: Vec<String> = p
        .operator_classes
        .iter()
        .map(|c| {
            let members: Vec<String> = c.iter().map(ToString::to_string).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let _ = writeln!(text, "operator classes: {}", classes.join(" "));
    Ok(Report::ok(text))
}

fn rack_cocycles(path: &Path, modulus: u32, all_up_to: Option<usize>) -> Result<Report, CliError> {
    let rack = formats::load_rack(path).map_err(reject_rack)?;
    let space =
        enumerate_reduced_cocycles(&rack, modulus).map_err(|e| CliError::Usage(e.to_string()))?;
    let count = match space.cardinality() {
        Some(c) => c.to_string(),
        None => "more than 2^128".to_owned(),
    };
    let mut text = format!("solutions={count} ({space}), N={}\n", rack.rank());
    match all_up_to {
        None => {
            let gens = space.generators();
            if gens.is_empty() {
                text.push_str("# only the zero cochain\n");
            }
            for (i, g) in gens.iter().enumerate() {
                let _ = writeln!(text, "# generator {}", i + 1);
                text.push_str(&formats::write_cochain(g));
            }
        }
        Some(k) => {
            let k = k.min(MATERIALIZE_CAP);
            let listed = space.materialize(k);
            for (i, phi) in listed.iter().enumerate() {
                let _ = writeln!(text, "# solution {}", i + 1);
                text.push_str(&formats::write_cochain(phi));
            }
        }
    }
    Ok(Report::ok(text))
}

/// `lk(i,j)`, written as a fraction when a virtual diagram gives an odd
/// signed count.
fn linking(diagram: &GaussDiagram, i: usize, j: usize) -> String {
    let signed: i64 = diagram
        .crossings()
        .values()
        .filter(|c| {
            let pair = (c.over_component, c.under_component);
            pair == (i, j) || pair == (j, i)
        })
        .map(|c| c.sign.value())
        .sum();
    if signed % 2 == 0 {
        (signed / 2).to_string()
    } else {
        format!("{signed}/2")
    }
}

fn link_info(path: &Path, colorings: Option<&Path>) -> Result<Report, CliError> {
    let diagram = formats::load_link(path)?;
    let c = diagram.component_count();
    let sw: Vec<String> = diagram.self_writhe().iter().map(i64::to_string).collect();
    let mut fields = vec![format!("components={c}"), format!("sw=({})", sw.join(","))];
    for i in 0..c {
        for j in i + 1..c {
            fields.push(format!(
                "lk({},{})={}",
                i + 1,
                j + 1,
                linking(&diagram, i, j)
            ));
        }
    }
    fields.push(format!("arcs={}", diagram.arcs().arc_count));
    let mut text = fields.join(", ");
    text.push('\n');
    if let Some(rack_path) = colorings {
        let rack = formats::load_rack(rack_path).map_err(reject_rack)?;
        let all = enumerate_colorings(&diagram, &rack);
        let _ = writeln!(text, "# {} coloring(s)", all.len());
        text.push_str(&formats::write_colorings(&all));
    }
    Ok(Report::ok(text))
}

fn invariant(
    kind: Kind,
    rack_path: &Path,
    link_path: &Path,
    cocycle: Option<&Path>,
) -> Result<Report, CliError> {
    let rack = formats::load_rack(rack_path).map_err(reject_rack)?;
    let diagram = formats::load_link(link_path)?;
    check_framing_size(rack.rank(), diagram.component_count())?;
    let text = match kind {
        Kind::Ir => {
            let counts = framing_counts(&diagram, &rack);
            let total: u64 = counts.iter().map(|(_, c)| c).sum();
            let mut text = format!("{total}\n");
            for (w, c) in counts {
                let _ = writeln!(text, "{w} 0 {c}");
            }
            text
        }
        Kind::Pr => {
            let p = polynomial_counting(&diagram, &rack);
            format!("{p}\n{}", p.machine_block())
        }
        Kind::Phi => {
            let path = cocycle.ok_or_else(|| CliError::Usage("phi needs --cocycle".into()))?;
            let phi = formats::load_cochain(path)?;
            let p = cocycle_invariant(&diagram, &rack, &phi)?;
            format!("{p}\n{}", p.machine_block())
        }
    };
    Ok(Report::ok(text))
}

/// Most framing classes (`N^c`) an invariant is computed over.
pub const FRAMING_LIMIT: u128 = 1 << 16;

fn check_framing_size(rank: u64, components: usize) -> Result<(), CliError> {
    let framings = (rank as u128).checked_pow(components as u32);
    match framings {
        Some(f) if f <= FRAMING_LIMIT && rank as u128 <= FRAMING_LIMIT => Ok(()),
        _ => Err(CliError::TooLarge(format!(
            "rack rank N={rank} with {components} component(s) gives more than {FRAMING_LIMIT} framing classes"
        ))),
    }
}

fn reject_rack(e: FormatError) -> CliError {
    match e {
        FormatError::Rack(r) => CliError::InvalidRack(r),
        other => other.into(),
    }
}
