//! inertia: exact inertial and Chen-Ruan cohomology of torus quotients.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use inertia_core::arith::{parse_rat, rat_int};
use inertia_core::check::run_property_suite;
use inertia_core::error::Error;
use inertia_core::flag::{gamma_flag, parse_type, root_system_data, special_classes};
use inertia_core::inertial::{nh_presentation, smile_structure_constant};
use inertia_core::input::{parse_input, Instance};
use inertia_core::kirwan::{
    graded_groups_z, hcr_presentation, kernel_polynomials, kirwan_kernel_generators,
    poincare_series_q,
};
use inertia_core::sectors::{gamma_table, parse_sector_name};
use report::{Format, Report};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "inertia",
    about = "Inertial and Chen-Ruan cohomology of symplectic torus quotients, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Coeff {
    Q,
    Z,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Twisted sectors: the box, Gamma, logweights, and ages
    Sectors {
        /// Input file, or `-` for standard input
        file: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Inertial cohomology presentation and the full product table
    Inertial {
        file: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Chen-Ruan cohomology of the quotient: presentation, kernel, series
    Cohomology {
        file: String,
        /// q: rational ranks only; z: also integral groups with torsion
        #[arg(long, value_enum, default_value = "q")]
        coeff: Coeff,
        /// Real-degree cutoff for series and graded groups
        #[arg(long, default_value = "20")]
        max_degree: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// One structure constant, with both derivations shown
    Multiply {
        file: String,
        g: String,
        h: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Special conjugacy classes and finite stabilizers of K/T
    Flag {
        /// Root system, e.g. G2, B2, A3
        system: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Run the property suite against an input
    Check {
        file: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("cannot read standard input: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
    }
}

fn load(path: &str) -> Result<Instance, Error> {
    parse_input(&read_input(path)?)
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::DisconnectedK | Error::IntegralUnsupported => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<(Report, Format), Error> {
    match cli.command {
        Command::Sectors { file, format } => {
            let inst = load(&file)?;
            let gamma = gamma_table(&inst)?;
            Ok((report::sectors_report(&inst, &gamma), format.into()))
        }
        Command::Inertial { file, format } => {
            let inst = load(&file)?;
            let gamma = gamma_table(&inst)?;
            let pres = nh_presentation(&inst, &gamma)?;
            Ok((report::inertial_report(&inst, &gamma, &pres), format.into()))
        }
        Command::Cohomology {
            file,
            coeff,
            max_degree,
            format,
        } => {
            let inst = load(&file)?;
            let cutoff = parse_rat(&max_degree)
                .filter(|d| d > &rat_int(0))
                .ok_or_else(|| Error::Parse(format!("bad max degree {max_degree}")))?;
            let gamma = gamma_table(&inst)?;
            let pres = hcr_presentation(&inst, &gamma)?;
            let kernel = kirwan_kernel_generators(&inst, &gamma)?;
            let nh = nh_presentation(&inst, &gamma)?;
            let kernel_polys = kernel_polynomials(&nh, &kernel);
            let series = poincare_series_q(&inst, &gamma, &cutoff)?;
            let groups = match coeff {
                Coeff::Q => None,
                Coeff::Z => Some(graded_groups_z(&inst, &gamma, &cutoff)?),
            };
            Ok((
                report::cohomology_report(
                    &inst,
                    &gamma,
                    &pres,
                    &kernel,
                    &kernel_polys,
                    &series,
                    groups.as_ref(),
                    &cutoff,
                ),
                format.into(),
            ))
        }
        Command::Multiply { file, g, h, format } => {
            let inst = load(&file)?;
            let gamma = gamma_table(&inst)?;
            let ge = parse_sector_name(&inst, &g)?;
            let he = parse_sector_name(&inst, &h)?;
            if gamma.index_of(&ge).is_none() {
                return Err(Error::NotInGamma(g));
            }
            if gamma.index_of(&he).is_none() {
                return Err(Error::NotInGamma(h));
            }
            let pres = nh_presentation(&inst, &gamma)?;
            let (_, smile) = smile_structure_constant(&inst, &ge, &he);
            Ok((
                report::multiply_report(&inst, &gamma, &pres, &ge, &he, &smile),
                format.into(),
            ))
        }
        Command::Flag { system, format } => {
            let (rtype, rank) = parse_type(&system)?;
            let data = root_system_data(rtype, rank)?;
            let classes = special_classes(&data);
            let gamma = gamma_flag(&data);
            Ok((
                report::flag_report(&system, &data, &classes, &gamma),
                format.into(),
            ))
        }
        Command::Check { file, format } => {
            let inst = load(&file)?;
            let suite = run_property_suite(&inst, &rat_int(16))?;
            Ok((report::check_report(&inst, &suite), format.into()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, format)) => {
            report.print(format);
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
