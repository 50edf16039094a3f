use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superhecke::checks::{self, Check};
use superhecke::domains::{tau_minus, tau_plus, Family};
use superhecke::dynkin::{diagram_dot, dynkin_diagram, full_dot, orbit_edges};
use superhecke::groupoid::{all_reduced_words, braid_connected, is_reduced, length, word_to_element, Groupoid, Word};
use superhecke::hecke::HeckeAlgebra;
use superhecke::rootsys::{build_root_system, RootSystemData};
use superhecke::scalar::{format_rational, parse_rational, Specialize};
use superhecke::superreps::{big_map, dimension_formula, verify_isomorphism};
use superhecke::weylreps::{irreps, WeylType};
use superhecke::{output, Error, LaurentPoly, Rational};

#[derive(Parser)]
#[command(name = "superhecke", version, about = "Coxeter groupoids and Hecke algebras of basic classical Lie superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the domains of a family with their block-sorting permutations.
    Domains(FamilyArgs),
    /// Dynkin diagrams of every domain and the graph of domains.
    Dynkin(FamilyArgs),
    /// All groupoid elements with lengths and canonical reduced words.
    Enumerate(FamilyArgs),
    /// Number of nonzero groupoid elements, compared with the closed formula.
    Dim(FamilyArgs),
    /// Check every defining relation of the Hecke algebra and the root-system axioms.
    Verify(FamilyArgs),
    /// Dump the structure constants of the Hecke algebra.
    Structconst(FamilyArgs),
    /// Length, reducedness and reduced words of a word.
    Word(WordArgs),
    /// Poincare polynomial of a classical Weyl group.
    Poincare(WeylArgs),
    /// Seminormal irreducible representations of a classical Hecke algebra.
    Irreps(WeylArgs),
    /// Representations of the groupoid Hecke algebra built from classical irreps.
    Reps {
        #[command(subcommand)]
        action: RepsAction,
    },
    /// Run every check that applies to one family.
    VerifyAll(FamilyArgs),
}

#[derive(Subcommand)]
enum RepsAction {
    /// Summands and block dimensions.
    Build(FamilyArgs),
    /// Check relations and the rank of the direct sum.
    Verify(FamilyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "CD")]
    Cd,
    #[value(name = "C")]
    C,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scalar {
    Poly,
    Eval,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeKind {
    /// `--n` is the rank, so A with n = 3 is S_4.
    #[value(name = "A")]
    A,
    /// Symmetric group S_n.
    #[value(name = "S")]
    S,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "D")]
    D,
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Specialisation of q, as NUM or NUM/DEN; 2 where one is needed.
    #[arg(long)]
    q: Option<String>,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// For `--family C`, the rank of C(n).
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "poly")]
    scalar: Scalar,
    #[arg(long, default_value_t = superhecke::groupoid::DEFAULT_MAX_ELEMENTS)]
    max_elements: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct WordArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Base domain, by its label or its 0-based index.
    #[arg(long)]
    base: String,
    /// Comma-separated 1-based generators, leftmost first.
    #[arg(long, allow_hyphen_values = true)]
    letters: String,
}

#[derive(Args, Clone)]
struct WeylArgs {
    #[arg(long = "type", value_enum)]
    kind: TypeKind,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    common: Common,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) | Error::SplitBudgetExhausted | Error::SizeCapExceeded(_) => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Text to print and whether every check in it passed.
struct Report {
    body: String,
    ok: bool,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, ok: true }
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn q_value(c: &Common) -> Result<Rational, Failure> {
    parse_rational(c.q.as_deref().unwrap_or("2")).map_err(|e| Failure::Usage(e.to_string()))
}

impl FamilyArgs {
    fn family(&self) -> Result<Family, Error> {
        match self.family {
            FamilyKind::A => Family::gl(self.m, self.n),
            FamilyKind::B => Family::osp_odd(self.m, self.n),
            FamilyKind::Cd => Family::osp_even(self.m, self.n),
            FamilyKind::C => Family::c(self.n),
        }
    }

    fn root_system(&self) -> Result<Arc<RootSystemData>, Error> {
        Ok(Arc::new(build_root_system(self.family()?)?))
    }

    fn groupoid(&self) -> Result<Arc<Groupoid>, Error> {
        Ok(Arc::new(Groupoid::enumerate(self.root_system()?, self.max_elements)?))
    }

    fn q0(&self) -> Result<Rational, Failure> {
        let q = q_value(&self.common)?;
        if self.scalar == Scalar::Eval && q == Rational::from_integer(0.into()) {
            return Err(Failure::Usage("q must be nonzero in eval mode".into()));
        }
        Ok(q)
    }
}

impl WeylArgs {
    fn weyl(&self) -> Result<WeylType, Error> {
        match self.kind {
            TypeKind::A => Ok(WeylType::A(self.n)),
            TypeKind::S => WeylType::symmetric(self.n),
            TypeKind::B | TypeKind::C => Ok(WeylType::B(self.n)),
            TypeKind::D => WeylType::D(self.n).validate(),
        }
    }
}

fn checks_report(title: &str, list: &[Check], format: Format) -> Report {
    let ok = list.iter().all(|c| c.passed);
    let body = match format {
        Format::Json => json_text(&json!({
            "subject": title,
            "passed": ok,
            "checks": list.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = String::new();
            for c in list {
                writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
            }
            let passed = list.iter().filter(|c| c.passed).count();
            writeln!(s, "{}: {}/{} checks passed", title, passed, list.len()).unwrap();
            s
        }
    };
    Report { body, ok }
}

fn cmd_domains(a: &FamilyArgs) -> Result<Report, Failure> {
    let family = a.family()?;
    let rs = a.root_system()?;
    let mut v = output::domains(&rs);
    let mut text = String::new();
    for (k, d) in rs.domains().iter().enumerate() {
        let (tp, tm) = (tau_plus(family, d)?, tau_minus(family, d)?);
        v["domains"][k]["tau_plus"] = json!(tp.one_line());
        v["domains"][k]["tau_minus"] = json!(tm.one_line());
        writeln!(text, "{}\t{}\t{}\t{}", k, d, tp, tm).unwrap();
    }
    Ok(Report::ok(match a.common.format {
        Format::Json => json_text(&v),
        _ => text,
    }))
}

fn cmd_dynkin(a: &FamilyArgs) -> Result<Report, Failure> {
    let rs = a.root_system()?;
    Ok(Report::ok(match a.common.format {
        Format::Json => json_text(&output::dynkin(&rs)),
        Format::Dot => full_dot(&rs),
        Format::Text => {
            let mut s = String::new();
            for (x, y, i) in orbit_edges(&rs) {
                writeln!(s, "{} --{}-- {}", rs.domain(x), i, rs.domain(y)).unwrap();
            }
            for k in 0..rs.num_domains() {
                s.push_str(&diagram_dot(&dynkin_diagram(&rs, k)));
            }
            s
        }
    }))
}

fn cmd_enumerate(a: &FamilyArgs) -> Result<Report, Failure> {
    let g = a.groupoid()?;
    let rs = g.root_system();
    Ok(Report::ok(match a.common.format {
        Format::Json => json_text(&output::elements(&g)),
        _ => {
            let mut s = String::new();
            for k in 0..g.len() {
                let w = g.element(k);
                writeln!(s, "{}\t{} -> {}\t{}\t{}", k, rs.domain(w.source), rs.domain(w.target), g.length_of(k), g.canonical_word(k))
                    .unwrap();
            }
            s
        }
    }))
}

fn cmd_dim(a: &FamilyArgs) -> Result<Report, Failure> {
    let family = a.family()?;
    let n = a.groupoid()?.len();
    let formula = dimension_formula(family);
    let ok = formula == n.into();
    let body = match a.common.format {
        Format::Json => json_text(&json!({
            "family": family.to_string(),
            "superalgebra": family.superalgebra(),
            "enumerated": n,
            "formula": formula.to_string(),
            "passed": ok,
        })),
        _ if ok => format!("{}\n", n),
        _ => format!("{} (formula gives {})\n", n, formula),
    };
    Ok(Report { body, ok })
}

fn cmd_verify(a: &FamilyArgs) -> Result<Report, Failure> {
    let g = a.groupoid()?;
    let axioms = g.root_system().check_axioms();
    let pres = match a.scalar {
        Scalar::Poly => HeckeAlgebra::new(g.clone(), LaurentPoly::q()).verify_presentation(),
        Scalar::Eval => HeckeAlgebra::new(g.clone(), a.q0()?).verify_presentation(),
    };
    let ok = axioms.all_passed() && pres.passed();
    let body = match a.common.format {
        Format::Json => json_text(&json!({
            "family": g.root_system().label(),
            "passed": ok,
            "axioms": output::axioms(&axioms),
            "presentation": output::presentation(&pres),
        })),
        _ => {
            let mut s = String::new();
            for r in &axioms.results {
                writeln!(s, "{} axiom {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.axiom, r.description).unwrap();
                if let Some(w) = &r.witness {
                    writeln!(s, "  witness: {}", w).unwrap();
                }
            }
            writeln!(
                s,
                "{} presentation: {} general and {} family relation instances",
                if pres.passed() { "PASS" } else { "FAIL" },
                pres.general_checked,
                pres.family_checked
            )
            .unwrap();
            for f in pres.general_failures.iter().chain(&pres.family_failures).chain(&pres.length_mismatches) {
                writeln!(s, "  {}", f).unwrap();
            }
            s
        }
    };
    Ok(Report { body, ok })
}

fn cmd_structconst(a: &FamilyArgs) -> Result<Report, Failure> {
    let g = a.groupoid()?;
    let v = match a.scalar {
        Scalar::Poly => output::structure_constants_poly(&g, &HeckeAlgebra::new(g.clone(), LaurentPoly::q()).structure_constants()),
        Scalar::Eval => {
            let h = HeckeAlgebra::new(g.clone(), a.q0()?);
            output::structure_constants_eval(&g, &h.structure_constants())
        }
    };
    Ok(Report::ok(json_text(&v)))
}

fn cmd_word(a: &WordArgs) -> Result<Report, Failure> {
    let rs = a.family.root_system()?;
    let base = match a.base.parse::<usize>() {
        Ok(k) if k < rs.num_domains() => k,
        Ok(k) => return Err(Failure::Usage(format!("domain index {} out of range", k))),
        Err(_) => (0..rs.num_domains())
            .find(|&k| rs.domain(k).to_string() == a.base)
            .ok_or_else(|| Failure::Usage(format!("unknown domain {}", a.base)))?,
    };
    let mut letters = Vec::new();
    for t in a.letters.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match t.parse::<usize>() {
            Ok(i) if (1..=rs.rank()).contains(&i) => letters.push(i - 1),
            _ => return Err(Failure::Usage(format!("bad generator {}", t))),
        }
    }
    let w = Word::new(base, letters);
    let el = word_to_element(&rs, &w)?;
    let reduced = is_reduced(&rs, &w)?;
    let words = all_reduced_words(&rs, &el, 100_000)?;
    let connected = braid_connected(&rs, &words, 1_000_000)?;
    let v = json!({
        "word": output::word(&rs, &w),
        "element": output::element(&rs, &el),
        "length": length(&rs, &el),
        "reduced": reduced,
        "reduced_words": words.iter().map(|x| output::word(&rs, x)).collect::<Vec<_>>(),
        "braid_connected": connected,
    });
    Ok(Report {
        body: match a.family.common.format {
            Format::Json => json_text(&v),
            _ => {
                let mut s = format!("length {}\nreduced {}\nbraid connected {}\n", v["length"], reduced, connected);
                for x in &words {
                    writeln!(s, "{}", x).unwrap();
                }
                s
            }
        },
        ok: connected,
    })
}

fn cmd_poincare(a: &WeylArgs) -> Result<Report, Failure> {
    let t = a.weyl()?;
    let p = t.poincare();
    let value = match a.common.q {
        Some(_) => Some(p.eval_at(&q_value(&a.common)?).map_err(|e| Failure::Usage(e.to_string()))?),
        None => None,
    };
    Ok(Report::ok(match a.common.format {
        Format::Json => json_text(&json!({
            "type": t.to_string(),
            "order": t.order().to_string(),
            "poincare": output::laurent(&p),
            "value": value.as_ref().map(output::rational),
        })),
        _ => match value {
            Some(v) => format!("{}\n", format_rational_plain(&v)),
            None => format!("{}\n", p),
        },
    }))
}

fn format_rational_plain(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format_rational(r)
    }
}

fn cmd_irreps(a: &WeylArgs) -> Result<Report, Failure> {
    let t = a.weyl()?;
    let q0 = q_value(&a.common)?;
    let reps = irreps(t, &q0)?;
    Ok(Report::ok(match a.common.format {
        Format::Json => json_text(&json!({
            "type": t.to_string(),
            "q": output::rational(&q0),
            "irreps": reps.iter().map(output::irrep).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = String::new();
            for r in &reps {
                writeln!(s, "{}\tdim {}", r.label, r.dim).unwrap();
            }
            s
        }
    }))
}

fn cmd_reps_build(a: &FamilyArgs) -> Result<Report, Failure> {
    let family = a.family()?;
    let q0 = a.q0()?;
    let (reps, sum) = big_map(family, &q0)?;
    let list: Vec<Value> = reps
        .iter()
        .map(|r| json!({"left": r.left.to_string(), "right": r.right.to_string(), "block_dim": r.block_dim, "dim": r.matrices.dim}))
        .collect();
    Ok(Report::ok(match a.common.format {
        Format::Json => json_text(&json!({
            "family": family.to_string(),
            "q": output::rational(&q0),
            "summands": list,
            "total_dim": sum.dim,
        })),
        _ => {
            let mut s = String::new();
            for r in &reps {
                writeln!(s, "{} x {}\tblock {}\tdim {}", r.left, r.right, r.block_dim, r.matrices.dim).unwrap();
            }
            writeln!(s, "direct sum dim {}", sum.dim).unwrap();
            s
        }
    }))
}

fn cmd_reps_verify(a: &FamilyArgs) -> Result<Report, Failure> {
    let r = verify_isomorphism(a.family()?, &a.q0()?)?;
    let ok = r.passed();
    Ok(Report {
        body: match a.common.format {
            Format::Json => json_text(&output::isomorphism(&r)),
            _ => {
                let mut s = format!(
                    "{} {} at q={}: image rank {}, dimension {}, formula {}\n",
                    if ok { "PASS" } else { "FAIL" },
                    r.family.superalgebra(),
                    format_rational_plain(&r.q0),
                    r.image_rank,
                    r.algebra_dim,
                    r.formula
                );
                if let Some(w) = r.witness() {
                    writeln!(s, "  {}", w).unwrap();
                }
                s
            }
        },
        ok,
    })
}

fn cmd_verify_all(a: &FamilyArgs) -> Result<Report, Failure> {
    let family = a.family()?;
    let list = checks::family_suite(family, &a.q0()?, a.common.seed);
    Ok(checks_report(&family.superalgebra(), &list, a.common.format))
}

fn common(c: &Command) -> &Common {
    match c {
        Command::Domains(a)
        | Command::Dynkin(a)
        | Command::Enumerate(a)
        | Command::Dim(a)
        | Command::Verify(a)
        | Command::Structconst(a)
        | Command::VerifyAll(a)
        | Command::Reps { action: RepsAction::Build(a) | RepsAction::Verify(a) } => &a.common,
        Command::Word(a) => &a.family.common,
        Command::Poincare(a) | Command::Irreps(a) => &a.common,
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let fmt = common(&cli.command).format;
    let dot_ok = matches!(cli.command, Command::Dynkin(_));
    if fmt == Format::Dot && !dot_ok {
        return Err(Failure::Usage("--format dot is only available for dynkin".into()));
    }
    match &cli.command {
        Command::Domains(a) => cmd_domains(a),
        Command::Dynkin(a) => cmd_dynkin(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Dim(a) => cmd_dim(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Structconst(a) => cmd_structconst(a),
        Command::Word(a) => cmd_word(a),
        Command::Poincare(a) => cmd_poincare(a),
        Command::Irreps(a) => cmd_irreps(a),
        Command::Reps { action: RepsAction::Build(a) } => cmd_reps_build(a),
        Command::Reps { action: RepsAction::Verify(a) } => cmd_reps_verify(a),
        Command::VerifyAll(a) => cmd_verify_all(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|r| {
        match &common(&cli.command).output {
            Some(p) => std::fs::write(p, &r.body)?,
            None => std::io::stdout().write_all(r.body.as_bytes())?,
        }
        Ok(r.ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Verification(e)) => {
            eprintln!("error: {}", e);
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
