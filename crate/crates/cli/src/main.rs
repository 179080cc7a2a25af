//! Command-line front door for exact MV-algebra and state computations.
//!
//! Every command prints one JSON report to standard output and exits with
//! 0 when the checked property holds (or the construction succeeds), 1
//! when the property fails (the report carries a witness), and 2 on a
//! malformed input. Identical invocations produce byte-identical reports.

mod dsl;
mod io;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use mvstates::algebra::{check_mv_axioms, DEFAULT_IDENTITY_CAP};
use mvstates::gamma_xi::{epsilon, gamma_of, phi};
use mvstates::geometry::{delta_k, is_regular_simplex, points_with_denominator_dividing};
use mvstates::state::{
    check_state_additive, check_state_axioms, enumerate_states, extend_from_atoms, StateTable,
};
use mvstates::universal::{
    affine_rep_compare, colimit_chain_check, dual_of_hom, verify_universal_property,
    UniversalState,
};
use mvstates::{Error, FiniteMvAlgebra, MvElement};

#[derive(Parser)]
#[command(name = "mvstates", version, about = "Exact finite MV-algebra and state computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustively check the MV-algebra identities on an algebra.
    AlgebraCheck {
        /// Algebra literal like "M2*M3" or JSON {"chains":[2,3]}.
        #[arg(long)]
        algebra: String,
        /// Cap on enumerated tuples per identity.
        #[arg(long, default_value_t = DEFAULT_IDENTITY_CAP)]
        cap: u128,
    },
    /// Check a state table against both state definitions.
    StateCheck {
        /// State table JSON (inline, a path, or `-` for stdin).
        #[arg(long)]
        state: String,
    },
    /// Enumerate all states between two finite algebras.
    StateEnumerate {
        #[arg(long)]
        domain: String,
        #[arg(long)]
        codomain: String,
    },
    /// Extend atom values to a state, checking the partition of unity.
    StateExtend {
        #[arg(long)]
        domain: String,
        #[arg(long)]
        codomain: String,
        /// Atom values as numerator arrays, e.g. "[[1],[1]]".
        #[arg(long)]
        atom_values: String,
    },
    /// Build the universal state of an algebra as affine functions on its
    /// dual simplex.
    UniversalBuild {
        #[arg(long)]
        algebra: String,
    },
    /// Verify the bijection between states and dual point tuples.
    UniversalVerify {
        #[arg(long)]
        domain: String,
        #[arg(long)]
        codomain: String,
    },
    /// Dualize a homomorphism table into a vertex map of dual points.
    DualMap {
        /// Homomorphism JSON (inline, a path, or `-`).
        #[arg(long)]
        hom: String,
    },
    /// Check a chain of embeddings: injectivity certificates throughout.
    ChainCheck {
        /// JSON array of homomorphism documents (inline, a path, or `-`).
        #[arg(long)]
        chain: String,
    },
    /// Exact rational geometry queries.
    Geometry {
        #[command(subcommand)]
        query: GeometryQuery,
    },
    /// Round-trip checks between constructions.
    Roundtrip {
        #[command(subcommand)]
        which: RoundtripWhich,
    },
    /// Compare state-space evaluation with the affine assignment on a
    /// denominator grid.
    AffineCompare {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 6)]
        max_den: i64,
    },
    /// Parse a term and evaluate it under variable bindings.
    TermEval {
        #[arg(long)]
        algebra: String,
        /// Term text, e.g. "neg(x1) (+) x2".
        #[arg(long)]
        term: String,
        /// Bindings name=[numerators]; repeatable.
        #[arg(long = "bind")]
        bindings: Vec<String>,
    },
}

#[derive(Subcommand)]
enum GeometryQuery {
    /// Denominator of a rational point.
    Den {
        /// Point as a JSON array of "p/q" strings.
        #[arg(long)]
        point: String,
    },
    /// Regularity (unimodularity) of a rational simplex.
    Regular {
        /// Simplex as a JSON array of vertex arrays.
        #[arg(long)]
        simplex: String,
    },
    /// Rational points of a dual simplex with denominator dividing t.
    Points {
        /// Algebra whose dual simplex to enumerate, e.g. "M1*M1".
        #[arg(long)]
        delta: String,
        #[arg(long)]
        den_dividing: i64,
    },
}

#[derive(Subcommand)]
enum RoundtripWhich {
    /// Element and vector round trips through good sequences.
    GammaXi(GammaXiArgs),
}

#[derive(Args)]
struct GammaXiArgs {
    #[arg(long)]
    algebra: String,
    /// Bound on vector coordinates for the group-side round trip.
    #[arg(long, default_value_t = 10)]
    vector_bound: i64,
}

enum Outcome {
    Pass(Value),
    Fail(Value),
}

type CommandResult = Result<Outcome, String>;

#[derive(Serialize)]
struct Report<'a> {
    command: &'a str,
    status: &'a str,
    payload: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_name = command_name(&cli.command);
    match run(cli.command) {
        Ok(Outcome::Pass(payload)) => {
            print_report(&command_name, "pass", payload);
            ExitCode::from(0)
        }
        Ok(Outcome::Fail(payload)) => {
            print_report(&command_name, "fail", payload);
            ExitCode::from(1)
        }
        Err(message) => {
            print_report(&command_name, "error", json!({ "message": message }));
            ExitCode::from(2)
        }
    }
}

fn print_report(command: &str, status: &str, payload: Value) {
    let report = Report { command, status, payload };
    println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
}

fn command_name(c: &Command) -> String {
    match c {
        Command::AlgebraCheck { .. } => "algebra-check".into(),
        Command::StateCheck { .. } => "state-check".into(),
        Command::StateEnumerate { .. } => "state-enumerate".into(),
        Command::StateExtend { .. } => "state-extend".into(),
        Command::UniversalBuild { .. } => "universal-build".into(),
        Command::UniversalVerify { .. } => "universal-verify".into(),
        Command::DualMap { .. } => "dual-map".into(),
        Command::ChainCheck { .. } => "chain-check".into(),
        Command::Geometry { query: GeometryQuery::Den { .. } } => "geometry den".into(),
        Command::Geometry { query: GeometryQuery::Regular { .. } } => "geometry regular".into(),
        Command::Geometry { query: GeometryQuery::Points { .. } } => "geometry points".into(),
        Command::Roundtrip { which: RoundtripWhich::GammaXi(_) } => "roundtrip gamma-xi".into(),
        Command::AffineCompare { .. } => "affine-compare".into(),
        Command::TermEval { .. } => "term-eval".into(),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payloads serialize")
}

fn algebra_json(a: &FiniteMvAlgebra) -> Value {
    json!({ "chains": a.chains() })
}

fn state_json(t: &StateTable) -> Value {
    json!({
        "domain": algebra_json(t.domain()),
        "codomain": algebra_json(t.codomain()),
        "atom_values": to_value(&t.atom_values()),
    })
}

fn run(command: Command) -> CommandResult {
    match command {
        Command::AlgebraCheck { algebra, cap } => {
            let a = io::parse_algebra_arg(&algebra)?;
            let report = check_mv_axioms(&a, cap).map_err(|e| e.to_string())?;
            let payload = json!({
                "algebra": algebra_json(&a),
                "report": to_value(&report),
            });
            Ok(if report.passed() { Outcome::Pass(payload) } else { Outcome::Fail(payload) })
        }

        Command::StateCheck { state } => {
            let text = io::read_document(&state)?;
            let table = io::parse_state_table(&text)?;
            let axioms = check_state_axioms(&table);
            let additive = check_state_additive(&table);
            let verdict = |r: &Result<(), mvstates::state::StateViolation>| match r {
                Ok(()) => json!({ "status": "pass" }),
                Err(v) => json!({ "status": "fail", "axiom": v.axiom, "witness": to_value(&v.witness) }),
            };
            let payload = json!({
                "state": state_json(&table),
                "axioms": verdict(&axioms),
                "additive": verdict(&additive),
                "definitions_agree": axioms.is_ok() == additive.is_ok(),
            });
            Ok(if axioms.is_ok() && additive.is_ok() {
                Outcome::Pass(payload)
            } else {
                Outcome::Fail(payload)
            })
        }

        Command::StateEnumerate { domain, codomain } => {
            let d = io::parse_algebra_arg(&domain)?;
            let c = io::parse_algebra_arg(&codomain)?;
            let states = enumerate_states(&d, &c).map_err(|e| e.to_string())?;
            Ok(Outcome::Pass(json!({
                "domain": algebra_json(&d),
                "codomain": algebra_json(&c),
                "count": states.len(),
                "states": states.iter().map(state_json).collect::<Vec<Value>>(),
            })))
        }

        Command::StateExtend { domain, codomain, atom_values } => {
            let d = io::parse_algebra_arg(&domain)?;
            let c = io::parse_algebra_arg(&codomain)?;
            let rows = io::parse_numerator_rows(&atom_values)?;
            let values = rows
                .into_iter()
                .map(|nums| c.element(nums).map_err(|e| e.to_string()))
                .collect::<Result<Vec<MvElement>, String>>()?;
            match extend_from_atoms(&d, &c, &values) {
                Ok(table) => Ok(Outcome::Pass(state_json(&table))),
                Err(Error::PartitionOfUnityViolation { sum, unit }) => {
                    Ok(Outcome::Fail(json!({
                        "error": "partition of unity violated",
                        "sum": sum,
                        "unit": unit,
                    })))
                }
                Err(e) => Err(e.to_string()),
            }
        }

        Command::UniversalBuild { algebra } => {
            let a = io::parse_algebra_arg(&algebra)?;
            let u = UniversalState::new(&a).map_err(|e| e.to_string())?;
            let assignment: Vec<Value> = a
                .elements()
                .map(|x| {
                    let f = u.assign(&x);
                    json!([to_value(&x), to_value(&f)])
                })
                .collect();
            Ok(Outcome::Pass(json!({
                "chains": a.chains(),
                "simplex": to_value(u.simplex()),
                "assignment": assignment,
            })))
        }

        Command::UniversalVerify { domain, codomain } => {
            let d = io::parse_algebra_arg(&domain)?;
            let c = io::parse_algebra_arg(&codomain)?;
            let report = verify_universal_property(&d, &c).map_err(|e| e.to_string())?;
            let payload = to_value(&report);
            Ok(if report.passed() { Outcome::Pass(payload) } else { Outcome::Fail(payload) })
        }

        Command::DualMap { hom } => {
            let text = io::read_document(&hom)?;
            let h = io::parse_hom(&text)?;
            let dual = dual_of_hom(&h).map_err(|e| e.to_string())?;
            let target = delta_k(h.domain().chains()).map_err(|e| e.to_string())?;
            let points: Vec<Value> = dual
                .factor_to_atom
                .iter()
                .map(|&i| to_value(&target.vertices()[i]))
                .collect();
            Ok(Outcome::Pass(json!({
                "domain": algebra_json(h.domain()),
                "codomain": algebra_json(h.codomain()),
                "factor_to_atom": dual.factor_to_atom,
                "points": points,
            })))
        }

        Command::ChainCheck { chain } => {
            let text = io::read_document(&chain)?;
            let homs = io::parse_hom_chain(&text)?;
            for h in &homs {
                if !h.is_injective() {
                    return Err("chain transitions must be injective".into());
                }
            }
            let report = colimit_chain_check(&homs).map_err(|e| e.to_string())?;
            let payload = to_value(&report);
            Ok(if report.passed() { Outcome::Pass(payload) } else { Outcome::Fail(payload) })
        }

        Command::Geometry { query } => run_geometry(query),

        Command::Roundtrip { which: RoundtripWhich::GammaXi(args) } => {
            let a = io::parse_algebra_arg(&args.algebra)?;
            run_gamma_xi_roundtrip(&a, args.vector_bound)
        }

        Command::AffineCompare { algebra, max_den } => {
            let a = io::parse_algebra_arg(&algebra)?;
            let report = affine_rep_compare(&a, max_den).map_err(|e| e.to_string())?;
            let payload = to_value(&report);
            Ok(if report.passed() { Outcome::Pass(payload) } else { Outcome::Fail(payload) })
        }

        Command::TermEval { algebra, term, bindings } => {
            let a = io::parse_algebra_arg(&algebra)?;
            let parsed = dsl::parse_term(&term).map_err(|e| e.to_string())?;
            let mut env = BTreeMap::new();
            for b in &bindings {
                let (name, nums) = io::parse_binding(b)?;
                let value = a.element(nums).map_err(|e| e.to_string())?;
                env.insert(name, value);
            }
            let result = parsed.eval(&a, &env).map_err(|e| e.to_string())?;
            Ok(Outcome::Pass(json!({
                "algebra": algebra_json(&a),
                "term": term,
                "value": to_value(&result),
                "value_display": result.value_string(&a),
            })))
        }
    }
}

fn run_geometry(query: GeometryQuery) -> CommandResult {
    match query {
        GeometryQuery::Den { point } => {
            let p = io::parse_point(&point)?;
            Ok(Outcome::Pass(json!({
                "point": to_value(&p),
                "den": p.den(),
            })))
        }
        GeometryQuery::Regular { simplex } => {
            let text = io::read_document(&simplex)?;
            let s = io::parse_simplex(&text)?;
            let regular = is_regular_simplex(&s);
            let payload = json!({
                "simplex": to_value(&s),
                "regular": regular,
            });
            Ok(if regular { Outcome::Pass(payload) } else { Outcome::Fail(payload) })
        }
        GeometryQuery::Points { delta, den_dividing } => {
            let a = io::parse_algebra_arg(&delta)?;
            if a.is_terminal() {
                return Err("the terminal algebra has no dual simplex".into());
            }
            if den_dividing < 1 {
                return Err("--den-dividing must be at least 1".into());
            }
            let points = points_with_denominator_dividing(a.chains(), den_dividing);
            Ok(Outcome::Pass(json!({
                "delta": algebra_json(&a),
                "den_dividing": den_dividing,
                "count": points.len(),
                "points": to_value(&points),
            })))
        }
    }
}

/// Element and vector round trips on one algebra: embed every element and
/// read it back, split every small vector and re-sum it.
fn run_gamma_xi_roundtrip(a: &FiniteMvAlgebra, bound: i64) -> CommandResult {
    if bound < 0 {
        return Err("--vector-bound must be nonnegative".into());
    }
    let recovered = gamma_of(a.chains()).map_err(|e| e.to_string())?;
    let mut elements_checked = 0u64;
    for x in a.elements() {
        let v = phi(a, &x).canonical_vector();
        let back = recovered.element(v).map_err(|e| e.to_string())?;
        if back != x {
            return Ok(Outcome::Fail(json!({
                "algebra": algebra_json(a),
                "witness_element": to_value(&x),
            })));
        }
        elements_checked += 1;
    }

    let n = a.dim();
    let mut vectors_checked = 0u64;
    if n > 0 && n <= 4 {
        let mut v = vec![-bound; n];
        loop {
            let (pos, neg) = epsilon(a, &v).map_err(|e| e.to_string())?;
            let diff: Vec<i64> = pos
                .entry_sum()
                .iter()
                .zip(neg.entry_sum())
                .map(|(&p, q)| p - q)
                .collect();
            if diff != v {
                return Ok(Outcome::Fail(json!({
                    "algebra": algebra_json(a),
                    "witness_vector": v,
                })));
            }
            vectors_checked += 1;
            let mut idx = n;
            loop {
                if idx == 0 {
                    break;
                }
                idx -= 1;
                v[idx] += 1;
                if v[idx] <= bound {
                    break;
                }
                v[idx] = -bound;
            }
            if v.iter().all(|&c| c == -bound) {
                break;
            }
        }
    }
    Ok(Outcome::Pass(json!({
        "algebra": algebra_json(a),
        "elements_checked": elements_checked,
        "vectors_checked": vectors_checked,
        "vector_bound": bound,
    })))
}
