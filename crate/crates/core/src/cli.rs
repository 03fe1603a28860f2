//! The `latder` command line. Every subcommand loads its inputs, calls one
//! library operation and prints the result.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bounded::{
    construct_strict_facet_labelling, facets, is_bounded, is_lower_bounded, is_upper_bounded,
    verify_strict_facet_labelling,
};
use crate::cover::{is_pushup, Cover, CoverPoset};
use crate::derived::iterate_derive;
use crate::error::{Error, Result};
use crate::generators as gen;
use crate::io::{
    derived_provenance, labels_to_string, lattice_to_string, parse_lattice, quotient_provenance, CoversFile,
    Provenance, ToDot,
};
use crate::iso::{are_isomorphic, is_regular};
use crate::order::FiniteLattice;
use crate::quotient::{congruence_generated, quotient};
use crate::sd::{is_semidistributive, sd_report, SdReport};

#[derive(Parser, Debug)]
#[command(name = "latder", version, about = "Finite lattices, covers and derived lattices")]
struct Cli {
    /// Print reports as JSON documents.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a lattice file.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Semidistributivity and boundedness report.
    Check {
        file: Option<PathBuf>,
        /// Exit with status 1 unless the property holds. Repeatable.
        #[arg(long = "assert", value_enum)]
        asserts: Vec<Property>,
    },
    /// The poset of covers.
    Covers {
        file: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The derived lattice `Cov(L, γ)`; repeat `--cover` to iterate.
    Derive {
        file: Option<PathBuf>,
        #[arg(long = "cover", value_parser = parse_pair, required = true)]
        covers: Vec<(usize, usize)>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Construct and verify a strict facet labelling.
    Label {
        file: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List facets with their interior covers.
    Facets { file: Option<PathBuf> },
    /// Decide whether two lattices are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
    /// Quotient by the congruence generated by the given pairs.
    Quotient {
        file: Option<PathBuf>,
        #[arg(long = "pair", value_parser = parse_pair, required = true)]
        pairs: Vec<(usize, usize)>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Whether all derived lattices at atomic covers are isomorphic.
    Regular { file: Option<PathBuf> },
    /// Graphviz rendering of the lattice, or of its poset of covers.
    Dot {
        file: Option<PathBuf>,
        #[arg(long)]
        covers: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    Permutohedron {
        n: usize,
    },
    Tamari {
        n: usize,
    },
    Boolean {
        n: usize,
    },
    Chain {
        n: usize,
    },
    Pentagon,
    Diamond,
    /// Letter multiplicities, e.g. `2,2,1`.
    Multinomial {
        #[arg(value_delimiter = ',', required = true)]
        profile: Vec<usize>,
    },
    /// Dedekind-MacNeille completion of a random poset.
    RandomDm {
        #[arg(long)]
        elements: usize,
        #[arg(long)]
        density: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Property {
    SdJoin,
    SdMeet,
    Semidistributive,
    CreatesPullbacks,
    Pushdown,
    Pushup,
    LowerBounded,
    UpperBounded,
    Bounded,
    Distributive,
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected LO,HI, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

#[derive(Serialize)]
struct CheckReport {
    #[serde(flatten)]
    sd: SdReport,
    pushup: bool,
    lower_bounded: bool,
    upper_bounded: bool,
    bounded: bool,
    distributive: bool,
}

impl CheckReport {
    fn of(l: &FiniteLattice) -> Self {
        CheckReport {
            sd: sd_report(l),
            pushup: is_pushup(l),
            lower_bounded: is_lower_bounded(l),
            upper_bounded: is_upper_bounded(l),
            bounded: is_bounded(l),
            distributive: l.is_distributive(),
        }
    }

    fn holds(&self, p: Property) -> bool {
        match p {
            Property::SdJoin => self.sd.sd_join_direct,
            Property::SdMeet => self.sd.sd_meet_direct,
            Property::Semidistributive => self.sd.sd_join_direct && self.sd.sd_meet_direct,
            Property::CreatesPullbacks => self.sd.creates_pullbacks,
            Property::Pushdown => self.sd.pushdown,
            Property::Pushup => self.pushup,
            Property::LowerBounded => self.lower_bounded,
            Property::UpperBounded => self.upper_bounded,
            Property::Bounded => self.bounded,
            Property::Distributive => self.distributive,
        }
    }

    fn text(&self) -> String {
        let mut s = self.sd.to_text();
        for (k, v) in [
            ("pushup", self.pushup),
            ("lower-bounded", self.lower_bounded),
            ("upper-bounded", self.upper_bounded),
            ("bounded", self.bounded),
            ("distributive", self.distributive),
        ] {
            let _ = writeln!(s, "{k}: {v}");
        }
        s
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stdin_used: bool,
}

impl Io<'_> {
    fn read(&mut self, path: Option<&PathBuf>) -> Result<String> {
        match path {
            Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
            _ => {
                if std::mem::replace(&mut self.stdin_used, true) {
                    return Err(Error::Invalid("standard input can be read only once".into()));
                }
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                Ok(s)
            }
        }
    }

    fn lattice(&mut self, path: Option<&PathBuf>) -> Result<FiniteLattice> {
        Ok(parse_lattice(&self.read(path)?)?.0)
    }

    fn emit(&mut self, output: Option<&PathBuf>, text: &str) -> Result<()> {
        match output {
            Some(p) if p.as_os_str() != "-" => std::fs::write(p, text)?,
            _ => self.stdout.write_all(text.as_bytes())?,
        }
        Ok(())
    }

    fn print(&mut self, text: &str) -> Result<()> {
        self.emit(None, text)
    }
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn covers_of(pairs: &[(usize, usize)]) -> Vec<Cover> {
    pairs.iter().map(|&(a, b)| Cover::new(a, b)).collect()
}

fn generate(family: &Family) -> Result<(FiniteLattice, Provenance)> {
    let n_param = |name: &str, n: usize| Provenance::new(name, json!({ "n": n }));
    Ok(match *family {
        Family::Permutohedron { n } => (gen::permutohedron(n)?, n_param("permutohedron", n)),
        Family::Tamari { n } => (gen::tamari(n)?, n_param("tamari", n)),
        Family::Boolean { n } => (gen::boolean(n)?, n_param("boolean", n)),
        Family::Chain { n } => (gen::chain(n)?, n_param("chain", n)),
        Family::Pentagon => (gen::pentagon(), Provenance::new("pentagon", serde_json::Value::Null)),
        Family::Diamond => (gen::diamond(), Provenance::new("diamond", serde_json::Value::Null)),
        Family::Multinomial { ref profile } => (
            gen::multinomial(profile)?,
            Provenance::new("multinomial", json!({ "profile": profile })),
        ),
        Family::RandomDm {
            elements,
            density,
            seed,
        } => {
            let p = gen::random_poset(elements, density, seed)?;
            let mut prov = Provenance::new("random-dm", json!({ "elements": elements, "density": density }));
            prov.seed = Some(seed);
            (gen::dedekind_macneille(&p)?, prov)
        }
    })
}

/// Returns the exit status: 0 success, 1 a negative answer, 2 an error.
fn execute(cli: &Cli, io: &mut Io<'_>, stderr: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Gen { family, output } => {
            let (l, prov) = generate(family)?;
            io.emit(output.as_ref(), &lattice_to_string(&l, Some(prov)))?;
        }
        Command::Check { file, asserts } => {
            let l = io.lattice(file.as_ref())?;
            let report = CheckReport::of(&l);
            io.print(&if cli.json { to_json(&report) } else { report.text() })?;
            let failed: Vec<Property> = asserts.iter().copied().filter(|&p| !report.holds(p)).collect();
            if !failed.is_empty() {
                for p in failed {
                    let name = p.to_possible_value().expect("no skipped variants");
                    writeln!(stderr, "assertion failed: {}", name.get_name())?;
                }
                return Ok(1);
            }
        }
        Command::Covers { file, output } => {
            let l = io.lattice(file.as_ref())?;
            let text = CoversFile::from_cover_poset(&CoverPoset::new(&l)).to_canonical_string();
            io.emit(output.as_ref(), &text)?;
        }
        Command::Derive { file, covers, output } => {
            let l = io.lattice(file.as_ref())?;
            let seeds = covers_of(covers);
            let d = iterate_derive(&l, &seeds)?;
            io.emit(
                output.as_ref(),
                &lattice_to_string(&d, Some(derived_provenance(&l, &seeds))),
            )?;
        }
        Command::Label { file, output } => {
            let l = io.lattice(file.as_ref())?;
            let f = construct_strict_facet_labelling(&l).ok_or(Error::NotBounded)?;
            let check = verify_strict_facet_labelling(&l, &f)?;
            if !check.is_valid() {
                return Err(Error::LabellingInvalid(check.violations.len()));
            }
            io.emit(output.as_ref(), &labels_to_string(&f))?;
        }
        Command::Facets { file } => {
            let l = io.lattice(file.as_ref())?;
            if !is_semidistributive(&l) {
                return Err(Error::NotSemidistributive);
            }
            let fs = facets(&l);
            let text = if cli.json {
                to_json(&fs)
            } else {
                let mut s = String::new();
                for f in &fs {
                    let interiors: Vec<String> = f.interiors.iter().map(Cover::to_string).collect();
                    let _ = writeln!(
                        s,
                        "delta {} delta' {} gamma {} gamma' {} interiors [{}]",
                        f.delta,
                        f.delta_p,
                        f.gamma,
                        f.gamma_p,
                        interiors.join(" ")
                    );
                }
                let _ = writeln!(s, "facets: {}", fs.len());
                s
            };
            io.print(&text)?;
        }
        Command::Iso { first, second } => {
            let a = io.lattice(Some(first))?;
            let b = io.lattice(Some(second))?;
            let r = are_isomorphic(a.poset(), b.poset());
            let text = if cli.json {
                to_json(&r)
            } else if let Some(m) = &r.mapping {
                let pairs: Vec<String> = m.iter().enumerate().map(|(x, y)| format!("{x}->{y}")).collect();
                format!("isomorphic\nmapping: {}\n", pairs.join(" "))
            } else {
                "not isomorphic\n".to_string()
            };
            io.print(&text)?;
            return Ok(if r.found { 0 } else { 1 });
        }
        Command::Quotient { file, pairs, output } => {
            let l = io.lattice(file.as_ref())?;
            let theta = congruence_generated(&l, pairs)?;
            let q = quotient(&l, &theta)?;
            io.emit(
                output.as_ref(),
                &lattice_to_string(&q, Some(quotient_provenance(&l, &theta))),
            )?;
        }
        Command::Regular { file } => {
            let l = io.lattice(file.as_ref())?;
            let r = is_regular(&l)?;
            let text = if cli.json {
                to_json(&r)
            } else {
                let mut s = String::from(if r.regular { "regular\n" } else { "not regular\n" });
                for a in &r.atoms {
                    let _ = writeln!(
                        s,
                        "atom {}: size {} edges {} height {} join-irreducibles {}",
                        a.cover, a.size, a.edges, a.height, a.join_irreducibles
                    );
                }
                if let Some((x, y)) = r.witness {
                    let _ = writeln!(s, "witness: {x} {y}");
                }
                s
            };
            io.print(&text)?;
            return Ok(if r.regular { 0 } else { 1 });
        }
        Command::Dot { file, covers, output } => {
            let l = io.lattice(file.as_ref())?;
            let text = if *covers {
                CoverPoset::new(&l).to_dot()
            } else {
                l.to_dot()
            };
            io.emit(output.as_ref(), &text)?;
        }
    }
    Ok(0)
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                2
            } else {
                let _ = write!(stdout, "{}", e.render());
                0
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stdin_used: false,
    };
    match execute(&cli, &mut io, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
