use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use minaff::charalg::tensor_decompose;
use minaff::graded::{classify_psi, graded_char_m, LambdaE6};
use minaff::lweight::{min_aff_lweight, Orientation};
use minaff::output::{
    render, CharPayload, Document, Format, GradedPayload, MinAffPayload, PsiPayload, Render, RootsPayload,
    TensorPayload, TextStyle, VerifyPayload,
};
use minaff::rootsys::e6_coords_from_bourbaki;
use minaff::verify::{self, Suite, VerifyOptions};
use minaff::{DynkinDiagram, Error, WeightVec};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "minaff", version, about = "Root data, characters and graded characters for simply laced Lie algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,

    /// Wrap width for text output.
    #[arg(long, env = "MINAFF_WIDTH", default_value_t = 100, global = true)]
    width: usize,

    /// Colour text output.
    #[arg(long, env = "MINAFF_COLOR", value_enum, default_value_t = ColorArg::Auto, global = true)]
    color: ColorArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorArg {
    Auto,
    #[value(alias = "1")]
    Always,
    #[value(alias = "0")]
    Never,
}

#[derive(Args)]
struct TypeArg {
    /// Diagram: E6, An, Dn, E7, E8 or `edges:1-2,2-3,...`.
    #[arg(long = "type", default_value = "E6")]
    type_spec: String,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots.
    Roots {
        #[command(flatten)]
        ty: TypeArg,
        /// Skip the simple roots.
        #[arg(long)]
        only_nonsimple: bool,
        /// Print E6 coordinates in Bourbaki order.
        #[arg(long)]
        bourbaki: bool,
    },
    /// Character of an irreducible module.
    Char {
        #[command(flatten)]
        ty: TypeArg,
        /// Highest weight, comma separated.
        #[arg(long, value_parser = parse_coords, allow_hyphen_values = true)]
        hw: Coords,
        /// Report only the multiplicity of this weight.
        #[arg(long, value_parser = parse_coords, allow_hyphen_values = true)]
        wt: Option<Coords>,
        /// Weights are given in Bourbaki order (E6 only).
        #[arg(long)]
        bourbaki: bool,
    },
    /// Graded character of the E6 module M(lambda).
    Graded {
        #[arg(long, value_parser = parse_coords)]
        lambda: Coords,
        /// Include the dimension polynomial.
        #[arg(long)]
        dims: bool,
        /// Include per-degree weight multiplicities.
        #[arg(long)]
        expand: bool,
        #[arg(long)]
        bourbaki: bool,
    },
    /// Classify the root set Psi^lambda for E6.
    Psi {
        #[arg(long, value_parser = parse_coords)]
        lambda: Coords,
        #[arg(long)]
        bourbaki: bool,
    },
    /// Highest l-weight of a minimal affinization.
    Minaff {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_parser = parse_coords)]
        lambda: Coords,
        /// Step sign between consecutive centres, 1 or -1.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        orientation: i64,
        /// Centre of the first node on the path.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        base: i64,
        #[arg(long)]
        bourbaki: bool,
    },
    /// Decompose a tensor product of two irreducible modules.
    Tensor {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_parser = parse_coords)]
        left: Coords,
        #[arg(long, value_parser = parse_coords)]
        right: Coords,
        #[arg(long)]
        bourbaki: bool,
    },
    /// Run a self-check suite.
    Verify {
        #[arg(long, value_parser = ["roots", "characters", "multiplicity_free", "ab_bijection", "psi", "lweight", "all"])]
        suite: String,
        /// Coordinate bound for the weight sweeps.
        #[arg(long, default_value_t = 2)]
        max_coord: i64,
    },
}

/// Comma-separated integer coordinates.
#[derive(Clone, Debug)]
struct Coords(Vec<i64>);

fn parse_coords(s: &str) -> Result<Coords, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("bad coordinate `{x}`: {e}")))
        .collect::<Result<_, _>>()
        .map(Coords)
}

fn diagram(ty: &TypeArg) -> Result<DynkinDiagram, Error> {
    DynkinDiagram::from_type_spec(&ty.type_spec)
}

/// Reorders Bourbaki-ordered E6 input into the crate's labelling.
fn relabel(d: &DynkinDiagram, coords: &Coords, bourbaki: bool) -> Result<WeightVec, Error> {
    let coords = &coords.0;
    if !bourbaki {
        return Ok(WeightVec(coords.clone()));
    }
    if !d.is_e6_preset() {
        return Err(Error::Precondition("--bourbaki applies to E6 only".into()));
    }
    if coords.len() != 6 {
        return Err(Error::LengthMismatch {
            expected: 6,
            found: coords.len(),
        });
    }
    Ok(WeightVec(e6_coords_from_bourbaki(coords)))
}

fn emit<P: Serialize + Render>(cli: &Cli, command: &str, payload: P) {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Latex => Format::Latex,
    };
    let color = match cli.color {
        ColorArg::Always => true,
        ColorArg::Never => false,
        ColorArg::Auto => std::io::stdout().is_terminal(),
    };
    let style = TextStyle { width: cli.width, color };
    let out = render(&Document::new(command, payload), format, &style);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Roots {
            ty,
            only_nonsimple,
            bourbaki,
        } => {
            let d = diagram(ty)?;
            emit(cli, "roots", RootsPayload::build(&d, *only_nonsimple, *bourbaki)?);
        }
        Command::Char { ty, hw, wt, bourbaki } => {
            let d = diagram(ty)?;
            let lambda = relabel(&d, hw, *bourbaki)?;
            let mu = wt.as_ref().map(|w| relabel(&d, w, *bourbaki)).transpose()?;
            emit(cli, "char", CharPayload::build(&d, &lambda, mu.as_ref())?);
        }
        Command::Graded {
            lambda,
            dims,
            expand,
            bourbaki,
        } => {
            let e6 = DynkinDiagram::e6();
            let l = LambdaE6::from_weight(&relabel(&e6, lambda, *bourbaki)?)?;
            emit(cli, "graded", GradedPayload::build(&graded_char_m(&l), *dims, *expand)?);
        }
        Command::Psi { lambda, bourbaki } => {
            let e6 = DynkinDiagram::e6();
            let l = LambdaE6::from_weight(&relabel(&e6, lambda, *bourbaki)?)?;
            emit(cli, "psi", PsiPayload::build(&l.m, &classify_psi(&l)?));
        }
        Command::Minaff {
            ty,
            lambda,
            orientation,
            base,
            bourbaki,
        } => {
            let d = diagram(ty)?;
            let l = relabel(&d, lambda, *bourbaki)?;
            let eps = Orientation::from_sign(*orientation)?;
            let ma = min_aff_lweight(&d, &l, eps, *base)?;
            emit(cli, "minaff", MinAffPayload::build(&d, &l, eps, *base, &ma));
        }
        Command::Tensor {
            ty,
            left,
            right,
            bourbaki,
        } => {
            let d = diagram(ty)?;
            let a = relabel(&d, left, *bourbaki)?;
            let b = relabel(&d, right, *bourbaki)?;
            let list = tensor_decompose(&d, &a, &b)?;
            emit(cli, "tensor", TensorPayload::build(&d, &a, &b, &list)?);
        }
        Command::Verify { suite, max_coord } => {
            let opts = VerifyOptions { max_coord: *max_coord };
            let reports = if suite == "all" {
                verify::run_all(&opts)?
            } else {
                vec![verify::run(suite.parse::<Suite>()?, &opts)?]
            };
            let payload = VerifyPayload::new(*max_coord, reports);
            let passed = payload.passed;
            emit(cli, "verify", payload);
            if !passed {
                return Ok(ExitCode::from(EXIT_VERIFY_FAILED));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
