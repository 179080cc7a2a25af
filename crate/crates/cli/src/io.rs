//! Input document parsing shared by the commands.
//!
//! Inputs that name an algebra accept either the literal form `"M2*M3"` or
//! the JSON object form `{"chains": [2, 3]}`. Larger documents (state
//! tables, homomorphism tables, chains) are JSON; command arguments accept
//! inline JSON, a file path, or `-` for standard input.

use std::fs;
use std::io::Read;

use serde::Deserialize;

use mvstates::geometry::{RationalPoint, RationalSimplex};
use mvstates::state::StateTable;
use mvstates::{FiniteMvAlgebra, MvElement, MvHom};

pub type InputResult<T> = Result<T, String>;

/// Resolve an argument to document text: inline JSON when it looks like
/// JSON, `-` for stdin, anything else as a path.
pub fn read_document(arg: &str) -> InputResult<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("failed to read standard input: {e}"))?;
        return Ok(buf);
    }
    fs::read_to_string(arg).map_err(|e| format!("failed to read `{arg}`: {e}"))
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Literal(String),
    Chains { chains: Vec<i64> },
}

impl AlgebraRef {
    pub fn resolve(&self) -> InputResult<FiniteMvAlgebra> {
        match self {
            AlgebraRef::Literal(s) => {
                FiniteMvAlgebra::parse_literal(s).map_err(|e| e.to_string())
            }
            AlgebraRef::Chains { chains } => {
                FiniteMvAlgebra::new(chains.clone()).map_err(|e| e.to_string())
            }
        }
    }
}

pub fn parse_algebra_arg(arg: &str) -> InputResult<FiniteMvAlgebra> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') {
        let r: AlgebraRef =
            serde_json::from_str(arg).map_err(|e| format!("bad algebra JSON: {e}"))?;
        r.resolve()
    } else {
        FiniteMvAlgebra::parse_literal(arg).map_err(|e| e.to_string())
    }
}

fn elements_from(
    algebra: &FiniteMvAlgebra,
    raw: &[Vec<i64>],
) -> InputResult<Vec<MvElement>> {
    raw.iter()
        .map(|nums| algebra.element(nums.clone()).map_err(|e| e.to_string()))
        .collect()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateTableDoc {
    pub domain: AlgebraRef,
    pub codomain: AlgebraRef,
    #[serde(default)]
    pub atom_values: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub values: Option<Vec<Vec<i64>>>,
}

/// Load a state table. Either a full `values` table (domain element order)
/// or `atom_values` to be expanded linearly over the carrier.
pub fn parse_state_table(text: &str) -> InputResult<StateTable> {
    let doc: StateTableDoc =
        serde_json::from_str(text).map_err(|e| format!("bad state table JSON: {e}"))?;
    let domain = doc.domain.resolve()?;
    let codomain = doc.codomain.resolve()?;
    match (&doc.values, &doc.atom_values) {
        (Some(values), None) => {
            let values = elements_from(&codomain, values)?;
            StateTable::new(domain, codomain, values).map_err(|e| e.to_string())
        }
        (None, Some(atoms)) => {
            let atoms = elements_from(&codomain, atoms)?;
            mvstates::state::extend_from_atoms(&domain, &codomain, &atoms)
                .map_err(|e| e.to_string())
        }
        (Some(_), Some(_)) => Err("give either `values` or `atom_values`, not both".into()),
        (None, None) => Err("a state table needs `values` or `atom_values`".into()),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub domain: AlgebraRef,
    pub codomain: AlgebraRef,
    pub values: Vec<Vec<i64>>,
}

impl HomDoc {
    pub fn resolve(&self) -> InputResult<MvHom> {
        let domain = self.domain.resolve()?;
        let codomain = self.codomain.resolve()?;
        let values = elements_from(&codomain, &self.values)?;
        MvHom::new(domain, codomain, values).map_err(|e| e.to_string())
    }
}

pub fn parse_hom(text: &str) -> InputResult<MvHom> {
    let doc: HomDoc =
        serde_json::from_str(text).map_err(|e| format!("bad homomorphism JSON: {e}"))?;
    doc.resolve()
}

pub fn parse_hom_chain(text: &str) -> InputResult<Vec<MvHom>> {
    let docs: Vec<HomDoc> =
        serde_json::from_str(text).map_err(|e| format!("bad chain JSON: {e}"))?;
    docs.iter().map(HomDoc::resolve).collect()
}

pub fn parse_point(text: &str) -> InputResult<RationalPoint> {
    let coords: Vec<String> =
        serde_json::from_str(text).map_err(|e| format!("bad point JSON: {e}"))?;
    let refs: Vec<&str> = coords.iter().map(String::as_str).collect();
    RationalPoint::parse(&refs).map_err(|e| e.to_string())
}

pub fn parse_simplex(text: &str) -> InputResult<RationalSimplex> {
    let rows: Vec<Vec<String>> =
        serde_json::from_str(text).map_err(|e| format!("bad simplex JSON: {e}"))?;
    let vertices = rows
        .iter()
        .map(|row| {
            let refs: Vec<&str> = row.iter().map(String::as_str).collect();
            RationalPoint::parse(&refs).map_err(|e| e.to_string())
        })
        .collect::<InputResult<Vec<RationalPoint>>>()?;
    RationalSimplex::new(vertices).map_err(|e| e.to_string())
}

/// Parse numerator arrays from inline JSON: `[[1],[0,2]]`.
pub fn parse_numerator_rows(text: &str) -> InputResult<Vec<Vec<i64>>> {
    serde_json::from_str(text).map_err(|e| format!("bad element array JSON: {e}"))
}

/// One `name=[numerators]` binding for term evaluation.
pub fn parse_binding(arg: &str) -> InputResult<(String, Vec<i64>)> {
    let (name, value) = arg
        .split_once('=')
        .ok_or_else(|| format!("binding `{arg}` is not of the form name=[...]"))?;
    let nums: Vec<i64> = serde_json::from_str(value.trim())
        .map_err(|e| format!("bad numerators in binding `{arg}`: {e}"))?;
    Ok((name.trim().to_string(), nums))
}
