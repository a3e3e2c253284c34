mod input;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hypergroup_core::constructions::{
    left_coset_hypergroup, right_coset_hypergroup, s_family, s_family_class, stabilizer_hypergroup, utumi,
    SFamilySizes, UtumiInput,
};
use hypergroup_core::format::{multistructure_to_json, parse_classes, print_trame};
use hypergroup_core::groups::{cyclic_group, dihedral_group, symmetric_group, DEFAULT_GROUP_CAP};
use hypergroup_core::presentations::{
    canonical_presentation, is_adequate, is_invariant_modulo_equiv, presentation_simplicity, DEFAULT_TRAME_CAP,
};
use hypergroup_core::simplicity::{
    invariant_modulo_subgroups, reflets, simplicity, SearchMethod, DEFAULT_SIMPLICITY_CAP,
};
use hypergroup_core::{find_isomorphism, Error, Hypergroup};

use crate::input::{parse_group, parse_subgroup, read_hypergroup, read_multistructure, read_trame};

#[derive(Parser)]
#[command(name = "hypergroup", version, about = "Construct, verify and decompose finite hypergroups")]
struct Cli {
    /// Largest carrier for congruence enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_SIMPLICITY_CAP)]
    cap_n: usize,
    /// Largest group order for subgroup enumeration and symmetric groups
    #[arg(long, global = true, default_value_t = DEFAULT_GROUP_CAP)]
    cap_group: usize,
    /// Largest trame for the canonical presentation
    #[arg(long, global = true, default_value_t = DEFAULT_TRAME_CAP)]
    cap_trame: usize,
    /// Seed for randomized generators
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated structure as JSON
    #[command(subcommand)]
    Gen(Gen),
    /// Check associativity, reproductivity and nonempty products
    Verify { file: String },
    /// Decide simplicity by enumerating reflector congruences
    Simple {
        file: String,
        #[arg(long, value_enum, default_value_t = Method::Pruned)]
        method: Method,
    },
    /// Decide simplicity of G/H from the subgroups invariant modulo H
    SimpleCoset { group: String, subgroup: String },
    /// List the reflets up to isomorphism
    Reflets { file: String },
    /// Find an isomorphism between two structures
    Iso { file1: String, file2: String },
    /// Print the opposite structure
    Opposite { file: String },
    /// Classify the structure S(n, p1, ...) from its block sizes
    ClassifyS {
        #[arg(required = true)]
        sizes: Vec<usize>,
    },
    /// Work with trame files
    #[command(subcommand)]
    Trame(TrameCmd),
}

#[derive(Subcommand)]
enum Gen {
    /// Symmetric group Sym(M)
    Sym { m: usize },
    /// Cyclic group Z/M
    Cyc { m: usize },
    /// Dihedral group of order 2M
    Dih { m: usize },
    /// Coset hypergroup of a group by a subgroup
    Coset {
        group: String,
        subgroup: String,
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
    },
    /// Stabilizer hypergroup on ALPHA elements
    Stab { alpha: usize },
    /// The structure S(n, p1, ...) with block sizes P0 P1 ...
    SFamily {
        #[arg(required = true)]
        sizes: Vec<usize>,
    },
    /// Utumi structure x.y = x + class(y)
    Utumi { group: String, classes: String, zero: String },
    /// Canonical presentation of a structure
    Canon {
        file: String,
        /// print the trame instead of its quotient
        #[arg(long)]
        trame: bool,
    },
    /// Random trame on T elements (uses --seed)
    RandomTrame {
        t: usize,
        /// probability that a pair is composable
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
}

#[derive(Subcommand)]
enum TrameCmd {
    /// Print the quotient structure
    Quotient { file: String },
    /// Check the adequacy conditions
    Adequate { file: String },
    /// Check whether an equivalence is invariant modulo the trame's classes
    Invariant {
        file: String,
        #[arg(long = "s")]
        s: String,
    },
    /// Decide simplicity from the equivalences invariant modulo the trame's classes
    Simple { file: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Pruned,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Right,
    Left,
}

/// What a verb produced: text for standard output and whether a predicate held.
struct Outcome {
    text: String,
    verdict: bool,
}

impl Outcome {
    fn computed(text: String) -> Self {
        Outcome { text, verdict: true }
    }

    fn verdict(text: String, verdict: bool) -> Self {
        Outcome { text, verdict }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Gen(gen) => run_gen(cli, gen),
        Command::Verify { file } => {
            let m = read_multistructure(file)?;
            let report = m.verify_axioms();
            let ok = report.is_hypergroup();
            Ok(Outcome::verdict(output::axiom_report(&m, &report), ok))
        }
        Command::Simple { file, method } => {
            let h = read_hypergroup(file)?;
            let method = match method {
                Method::Pruned => SearchMethod::Pruned,
                Method::Brute => SearchMethod::Brute,
            };
            let v = simplicity(&h, method, cli.cap_n)?;
            Ok(Outcome::verdict(output::simplicity(&h, &v), v.simple))
        }
        Command::SimpleCoset { group, subgroup } => {
            let g = parse_group(group, cli.cap_group)?;
            let h = parse_subgroup(&g, subgroup)?;
            let inv = invariant_modulo_subgroups(&g, &h, cli.cap_group)?;
            let simple = h.order() != g.order() && inv.len() == 2;
            Ok(Outcome::verdict(output::coset_simplicity(&g, simple, &inv), simple))
        }
        Command::Reflets { file } => {
            let h = read_hypergroup(file)?;
            let list = reflets(&h, cli.cap_n)?;
            let items: Vec<String> = list.iter().map(|q| multistructure_to_json(q)).collect();
            Ok(Outcome::computed(format!("[{}]", items.join(","))))
        }
        Command::Iso { file1, file2 } => {
            let a = read_multistructure(file1)?;
            let b = read_multistructure(file2)?;
            Ok(match find_isomorphism(&a, &b) {
                Some(g) => Outcome::computed(output::bijection(&a, &b, &g)),
                None => Outcome::verdict("none".into(), false),
            })
        }
        Command::Opposite { file } => {
            let m = read_multistructure(file)?;
            Ok(Outcome::computed(multistructure_to_json(&m.opposite())))
        }
        Command::ClassifyS { sizes } => {
            let sizes = SFamilySizes::new(sizes.clone())?;
            let c = s_family_class(&sizes);
            Ok(Outcome::computed(output::classification(&s_family(&sizes), &c)))
        }
        Command::Trame(cmd) => run_trame(cli, cmd),
    }
}

fn run_gen(cli: &Cli, gen: &Gen) -> Result<Outcome, Error> {
    let m = match gen {
        Gen::Sym { m } => symmetric_group(*m, cli.cap_group)?.as_multistructure()?,
        Gen::Cyc { m } => cyclic_group(*m)?.as_multistructure()?,
        Gen::Dih { m } => dihedral_group(*m)?.as_multistructure()?,
        Gen::Coset { group, subgroup, side } => {
            let g = parse_group(group, cli.cap_group)?;
            let h = parse_subgroup(&g, subgroup)?;
            match side {
                Side::Right => right_coset_hypergroup(&g, &h)?,
                Side::Left => left_coset_hypergroup(&g, &h)?,
            }
            .into_multistructure()
        }
        Gen::Stab { alpha } => stabilizer_hypergroup(*alpha)?.into_multistructure(),
        Gen::SFamily { sizes } => s_family(&SFamilySizes::new(sizes.clone())?),
        Gen::Utumi { group, classes, zero } => {
            let g = parse_group(group, cli.cap_group)?;
            let base = Hypergroup::new(g.as_multistructure()?)?;
            let partition = parse_classes(classes, g.names())?;
            let zero = input::resolve_element(g.names(), zero)?;
            utumi(&UtumiInput::new(base, partition, zero)?)
        }
        Gen::Canon { file, trame } => {
            let m = read_multistructure(file)?;
            let p = canonical_presentation(&m, cli.cap_trame)?;
            if *trame {
                return Ok(Outcome::computed(print_trame(&p).trim_end().to_string()));
            }
            p.quotient()?.with_names(m.names().to_vec())
        }
        Gen::RandomTrame { t, density } => {
            let p = input::random_trame(*t, *density, cli.seed)?;
            return Ok(Outcome::computed(print_trame(&p).trim_end().to_string()));
        }
    };
    Ok(Outcome::computed(multistructure_to_json(&m)))
}

fn run_trame(cli: &Cli, cmd: &TrameCmd) -> Result<Outcome, Error> {
    match cmd {
        TrameCmd::Quotient { file } => {
            let p = read_trame(file)?;
            Ok(Outcome::computed(multistructure_to_json(&p.quotient()?)))
        }
        TrameCmd::Adequate { file } => {
            let p = read_trame(file)?;
            let report = is_adequate(&p)?;
            Ok(Outcome::verdict(output::adequacy(&p, &report), report.is_adequate()))
        }
        TrameCmd::Invariant { file, s } => {
            let p = read_trame(file)?;
            let s = parse_classes(s, p.trame.names())?;
            let report = is_invariant_modulo_equiv(&p.trame, &p.r, &s)?;
            Ok(Outcome::verdict(output::invariance(&p, &report), report.holds()))
        }
        TrameCmd::Simple { file } => {
            let p = read_trame(file)?;
            let v = presentation_simplicity(&p, cli.cap_n)?;
            Ok(Outcome::verdict(serde_json::to_string(&v)?, v.simple))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", outcome.text);
            ExitCode::from(if outcome.verdict { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap() { 3 } else { 2 })
        }
    }
}
