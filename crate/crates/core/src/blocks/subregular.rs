//! Bundled dataset: generalized Springer correspondence for local systems
//! on the subregular unipotent class of each simply connected quasi-simple
//! type. Rank-dependent entries are templates evaluated at the rank.

use std::sync::OnceLock;

use serde_json::Value;

use crate::error::{Error, Result};

const BUNDLED: &str = include_str!("../../data/subregular.json");
pub const SUBREGULAR_SCHEMA: &str = "greenfn-subregular/1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubregularSystem {
    pub local_system: String,
    /// Type of the Levi subgroup carrying the cuspidal datum (`T` for a
    /// maximal torus, `G` for the group itself).
    pub levi: String,
    /// Coxeter type of the relative Weyl group `W_G(L)`.
    pub relative_weyl: String,
    /// Character of `W_G(L)` in the customary notation.
    pub phi: String,
    /// Character label in this library's tables, where one exists.
    pub phi_label: Option<String>,
    pub degree: u64,
    /// The character is the reflection character of `W_G(T)`.
    pub standard: bool,
    pub cuspidal: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubregularRecord {
    /// E.g. `B3`.
    pub group: String,
    pub class: String,
    pub dynkin_richardson: String,
    pub a_u: String,
    pub systems: Vec<SubregularSystem>,
}

/// Parsed dataset with unevaluated templates.
#[derive(Debug, Clone)]
pub struct SubregularDataset {
    version: u64,
    rows: Vec<Value>,
}

impl SubregularDataset {
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::parse(format!("line {}", e.line()), e.to_string()))?;
        if v.get("schema").and_then(Value::as_str) != Some(SUBREGULAR_SCHEMA) {
            return Err(Error::parse(
                "schema",
                format!("expected {SUBREGULAR_SCHEMA:?}"),
            ));
        }
        let version = v
            .get("version")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::parse("version", "missing"))?;
        let rows = v
            .get("records")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::parse("records", "missing"))?
            .clone();
        let ds = SubregularDataset { version, rows };
        // every row must evaluate at its smallest rank
        for (i, r) in ds.rows.iter().enumerate() {
            let min = r
                .get("min_rank")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::parse(format!("records[{i}].min_rank"), "missing"))?;
            let n = (min..min + 2).find(|&n| row_matches(r, n)).unwrap_or(min);
            evaluate_row(r, n as i64)
                .map_err(|e| Error::parse(format!("records[{i}]"), e.to_string()))?;
        }
        Ok(ds)
    }

    pub fn version(&self) -> u64 {
        self.version
    }

    /// Record for the simply connected group of type `family` (one of
    /// `A B C D E F G`) and rank `rank`.
    pub fn lookup(&self, family: &str, rank: usize) -> Result<SubregularRecord> {
        let fam = family.trim().to_ascii_uppercase();
        let hits: Vec<&Value> = self
            .rows
            .iter()
            .filter(|r| {
                r.get("family").and_then(Value::as_str) == Some(fam.as_str())
                    && row_matches(r, rank as u64)
            })
            .collect();
        match hits.as_slice() {
            [r] => evaluate_row(r, rank as i64).map(|mut rec| {
                rec.group = format!("{fam}{rank}");
                rec
            }),
            [] => Err(Error::UncoveredType(format!("{fam}{rank}"))),
            _ => Err(Error::parse(
                "records",
                format!("several rows match {fam}{rank}"),
            )),
        }
    }
}

fn row_matches(r: &Value, n: u64) -> bool {
    let min = r.get("min_rank").and_then(Value::as_u64).unwrap_or(1);
    let max = r
        .get("max_rank")
        .and_then(Value::as_u64)
        .unwrap_or(u64::MAX);
    let parity_ok = match r.get("parity").and_then(Value::as_str) {
        Some("even") => n.is_multiple_of(2),
        Some("odd") => n % 2 == 1,
        _ => true,
    };
    (min..=max).contains(&n) && parity_ok
}

fn field(v: &Value, f: &str) -> Result<String> {
    v.get(f)
        .and_then(Value::as_str)
        .map(str::to_string)
        .ok_or_else(|| Error::parse(f, "missing string field"))
}

fn evaluate_row(r: &Value, n: i64) -> Result<SubregularRecord> {
    let systems = r
        .get("systems")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("systems", "missing"))?
        .iter()
        .map(|s| {
            let phi = expand(&field(s, "phi")?, n)?;
            let levi = field(s, "levi")?;
            let relative_weyl = normalize_type(&expand(&field(s, "relative_weyl")?, n)?);
            let degree = expand(&field(s, "degree")?, n)?
                .parse::<u64>()
                .map_err(|_| Error::parse("degree", "not a non-negative integer"))?;
            Ok(SubregularSystem {
                local_system: field(s, "local_system")?,
                standard: phi == "r" && levi == "T",
                phi_label: s
                    .get("phi_label")
                    .and_then(Value::as_str)
                    .map(|t| expand(t, n).map(|l| normalize_label(&l, &relative_weyl)))
                    .transpose()?,
                relative_weyl,
                cuspidal: s
                    .get("cuspidal")
                    .and_then(Value::as_str)
                    .map(str::to_string),
                levi,
                phi,
                degree,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubregularRecord {
        group: String::new(),
        class: expand(&field(r, "class")?, n)?,
        dynkin_richardson: field(r, "dynkin_richardson")?,
        a_u: field(r, "a_u")?,
        systems,
    })
}

/// Rank-0 classical types denote the trivial group.
fn normalize_type(t: &str) -> String {
    match t {
        "B0" | "C0" | "D0" => "A0".into(),
        _ => t.to_string(),
    }
}

/// Drops zero parts left by evaluating templates at small ranks.
fn normalize_label(label: &str, relative_weyl: &str) -> String {
    if relative_weyl == "A0" {
        return "1".into();
    }
    let parts = |s: &str, sep: char| -> String {
        let mut v: Vec<u64> = s
            .split(sep)
            .filter_map(|p| p.trim().parse().ok())
            .filter(|&p| p > 0)
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        if v.is_empty() {
            "-".into()
        } else {
            v.iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(&sep.to_string())
        }
    };
    match label
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .and_then(|t| t.split_once('|'))
    {
        Some((a, b)) => format!("({}|{})", parts(a, '.'), parts(b, '.')),
        None if label.contains('+') => parts(label, '+'),
        None => label.to_string(),
    }
}

/// Replaces every `{expr}` by the value of the integer expression `expr` in
/// the variable `n`.
fn expand(template: &str, n: i64) -> Result<String> {
    let mut out = String::new();
    let mut rest = template;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .ok_or_else(|| Error::parse(template, "unbalanced brace"))?
            + open;
        out.push_str(&eval_expr(&rest[open + 1..close], n)?.to_string());
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

/// Integer expressions with `+ - * /` (exact division), parentheses,
/// literals and the variable `n`.
pub(crate) fn eval_expr(src: &str, n: i64) -> Result<i64> {
    let toks: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        n,
        src,
    };
    let v = p.sum()?;
    if p.pos != toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    toks: &'a [char],
    pos: usize,
    n: i64,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, m: &str) -> Error {
        Error::parse(self.src, m)
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<i64> {
        let mut v = self.product()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let r = self.product()?;
            v = if c == '+' { v + r } else { v - r };
        }
        Ok(v)
    }

    fn product(&mut self) -> Result<i64> {
        let mut v = self.atom()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let r = self.atom()?;
            v = if c == '*' {
                v * r
            } else {
                if r == 0 || v % r != 0 {
                    return Err(self.err("inexact division"));
                }
                v / r
            };
        }
        Ok(v)
    }

    fn atom(&mut self) -> Result<i64> {
        match self.peek() {
            Some('n') => {
                self.pos += 1;
                Ok(self.n)
            }
            Some('-') => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some('(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected )"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                self.toks[start..self.pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| self.err("bad literal"))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

/// The dataset bundled with the library.
pub fn subregular_dataset() -> &'static SubregularDataset {
    static DS: OnceLock<SubregularDataset> = OnceLock::new();
    DS.get_or_init(|| {
        SubregularDataset::parse(BUNDLED).expect("bundled subregular dataset is valid")
    })
}

/// Looks up the bundled record for type `family` and rank `rank`.
pub fn subregular_lookup(family: &str, rank: usize) -> Result<SubregularRecord> {
    subregular_dataset().lookup(family, rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        assert_eq!(eval_expr("n-3", 7).unwrap(), 4);
        assert_eq!(eval_expr("(n-5)/2", 9).unwrap(), 2);
        assert_eq!(eval_expr("2*n-1", 3).unwrap(), 5);
        assert!(eval_expr("(n-5)/2", 8).is_err());
        assert!(eval_expr("n+", 1).is_err());
        assert_eq!(expand("B{n-2}", 5).unwrap(), "B3");
    }

    #[test]
    fn g2_record() {
        let r = subregular_lookup("G", 2).unwrap();
        assert_eq!(r.class, "G2(a1)");
        assert_eq!(r.a_u, "W(A2)");
        let ls: Vec<_> = r.systems.iter().map(|s| s.local_system.as_str()).collect();
        assert_eq!(ls, ["1", "r", "eps"]);
        assert!(r.systems[0].standard);
        assert_eq!(r.systems[2].levi, "G");
    }

    #[test]
    fn classical_records() {
        let b = subregular_lookup("B", 4).unwrap();
        assert_eq!(b.a_u, "W(A1)");
        assert_eq!(b.systems[1].phi, "(1.3,-)");
        assert_eq!(b.systems[1].degree, 3);
        let d = subregular_lookup("D", 7).unwrap();
        assert_eq!(d.a_u, "Z/4Z");
        let ls: Vec<_> = d.systems.iter().map(|s| s.local_system.as_str()).collect();
        assert_eq!(ls, ["1", "-1", "i", "-i"]);
        assert_eq!(d.systems[2].relative_weyl, "B1");
        assert_eq!(
            subregular_lookup("D", 5).unwrap().systems[2].relative_weyl,
            "A0"
        );
        assert!(matches!(
            subregular_lookup("D", 3),
            Err(Error::UncoveredType(_))
        ));
        assert!(matches!(
            subregular_lookup("H", 3),
            Err(Error::UncoveredType(_))
        ));
    }
}
