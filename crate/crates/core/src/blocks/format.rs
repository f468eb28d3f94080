//! JSON block-descriptor format.
//!
//! ```json
//! {
//!   "schema": "greenfn-block/1",
//!   "name": "GL2",
//!   "coxeter": "A1",
//!   "pairs": [
//!     {"id": "1+1", "support": "1+1", "phi": "1+1", "c": "1", "a": 1, "dual": "2", "eps": 1},
//!     {"id": "2", "support": "2", "phi": "2", "c": "0", "a": 1, "dual": "1+1", "eps": 1}
//!   ],
//!   "closure_order": [["1+1", "2"]],
//!   "total_order": ["1+1", "2"],
//!   "dims": {"l": 1, "dimZL": 2, "central_rank": 1, "rank": 2},
//!   "y_table": [
//!     {"support": "2", "classes": ["1"], "conductor": 1, "rows": [{"pair": "2", "values": ["1"]}]}
//!   ]
//! }
//! ```
//!
//! `c` is a rational string (half-integers allowed). Y-table values are
//! rational strings when `conductor` is 1 and otherwise arrays of rational
//! strings giving coordinates in the power basis of the `conductor`-th
//! cyclotomic field. `closure_order` lists covering relations
//! `[lower, upper]` between supports; `y_table` may be omitted.

use serde_json::{json, Map, Value};

use super::{BlockDescriptor, Dims, RawBlock, RawPair, RawYTable};
use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, rational_to_string, ExactScalar, Json};

pub const BLOCK_SCHEMA: &str = "greenfn-block/1";

fn scalar_to_json(x: &ExactScalar, conductor: u32) -> Value {
    if conductor == 1 {
        return x.as_rational().expect("rational table").to_json();
    }
    let lifted = x.lift(conductor);
    Value::Array(
        lifted
            .iter()
            .map(|c| Value::String(rational_to_string(c)))
            .collect(),
    )
}

pub fn block_to_json(b: &BlockDescriptor) -> Value {
    raw_to_json(&b.to_raw())
}

pub fn raw_to_json(raw: &RawBlock) -> Value {
    let pairs: Vec<Value> = raw
        .pairs
        .iter()
        .map(|p| {
            json!({
                "id": p.id, "support": p.support, "phi": p.phi, "c": rational_to_string(&p.c),
                "a": p.a, "dual": p.dual, "eps": p.eps,
            })
        })
        .collect();
    let mut m = Map::new();
    m.insert("schema".into(), json!(BLOCK_SCHEMA));
    m.insert("name".into(), json!(raw.name));
    m.insert("coxeter".into(), json!(raw.coxeter));
    m.insert("pairs".into(), Value::Array(pairs));
    m.insert(
        "closure_order".into(),
        json!(raw
            .closure_order
            .iter()
            .map(|(a, b)| vec![a, b])
            .collect::<Vec<_>>()),
    );
    m.insert("total_order".into(), json!(raw.total_order));
    m.insert(
        "dims".into(),
        json!({"l": raw.dims.l, "dimZL": raw.dims.dim_zl, "central_rank": raw.dims.central_rank, "rank": raw.dims.rank}),
    );
    if !raw.y_table.is_empty() {
        let tables: Vec<Value> = raw
            .y_table
            .iter()
            .map(|t| {
                let conductor = t.rows.iter().flat_map(|(_, v)| v).map(|x| x.conductor()).fold(1, lcm);
                json!({
                    "support": t.support,
                    "classes": t.classes,
                    "conductor": conductor,
                    "rows": t.rows.iter().map(|(id, v)| json!({
                        "pair": id,
                        "values": v.iter().map(|x| scalar_to_json(x, conductor)).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        m.insert("y_table".into(), Value::Array(tables));
    }
    Value::Object(m)
}

fn lcm(a: u32, b: u32) -> u32 {
    use num_integer::Integer;
    a.lcm(&b)
}

struct Fields<'a> {
    path: String,
    map: &'a Map<String, Value>,
}

impl<'a> Fields<'a> {
    fn new(path: &str, v: &'a Value) -> Result<Self> {
        match v {
            Value::Object(map) => Ok(Fields {
                path: path.to_string(),
                map,
            }),
            _ => Err(Error::parse(path, "expected an object")),
        }
    }

    fn at(&self, f: &str) -> String {
        if self.path.is_empty() {
            f.to_string()
        } else {
            format!("{}.{f}", self.path)
        }
    }

    fn get(&self, f: &str) -> Result<&'a Value> {
        self.map
            .get(f)
            .ok_or_else(|| Error::parse(self.at(f), "missing field"))
    }

    fn str(&self, f: &str) -> Result<String> {
        self.get(f)?
            .as_str()
            .map(str::to_string)
            .ok_or_else(|| Error::parse(self.at(f), "expected a string"))
    }

    fn uint(&self, f: &str) -> Result<u64> {
        self.get(f)?
            .as_u64()
            .ok_or_else(|| Error::parse(self.at(f), "expected a non-negative integer"))
    }

    fn int(&self, f: &str) -> Result<i64> {
        self.get(f)?
            .as_i64()
            .ok_or_else(|| Error::parse(self.at(f), "expected an integer"))
    }

    fn array(&self, f: &str) -> Result<&'a Vec<Value>> {
        self.get(f)?
            .as_array()
            .ok_or_else(|| Error::parse(self.at(f), "expected an array"))
    }

    fn strings(&self, f: &str) -> Result<Vec<String>> {
        self.array(f)?
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.as_str().map(str::to_string).ok_or_else(|| {
                    Error::parse(format!("{}[{i}]", self.at(f)), "expected a string")
                })
            })
            .collect()
    }
}

fn parse_scalar(v: &Value, conductor: u32, path: &str) -> Result<ExactScalar> {
    match v {
        Value::Array(cs) => {
            let coeffs = cs
                .iter()
                .enumerate()
                .map(|(i, c)| match c {
                    Value::String(s) => parse_rational(s)
                        .map_err(|e| Error::parse(format!("{path}[{i}]"), e.to_string())),
                    other => crate::exactalg::Rational::from_json(other)
                        .map_err(|e| Error::parse(format!("{path}[{i}]"), e.to_string())),
                })
                .collect::<Result<Vec<_>>>()?;
            if coeffs.len() > crate::exactalg::cyclotomic_polynomial(conductor).len() - 1 {
                return Err(Error::parse(
                    path,
                    "too many power-basis coordinates for the conductor",
                ));
            }
            Ok(ExactScalar::from_power_basis(conductor, coeffs))
        }
        other => crate::exactalg::Rational::from_json(other)
            .map(ExactScalar::rational)
            .map_err(|e| Error::parse(path, e.to_string())),
    }
}

/// Parses a descriptor without validating its invariants.
pub fn raw_from_json(v: &Value) -> Result<RawBlock> {
    let top = Fields::new("", v)?;
    if let Some(s) = top.map.get("schema") {
        if s.as_str() != Some(BLOCK_SCHEMA) {
            return Err(Error::parse("schema", format!("expected {BLOCK_SCHEMA:?}")));
        }
    }
    let name = match top.map.get("name") {
        Some(_) => top.str("name")?,
        None => String::new(),
    };
    let pairs = top
        .array("pairs")?
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let f = Fields::new(&format!("pairs[{i}]"), p)?;
            let c = match f.get("c")? {
                Value::String(s) => {
                    parse_rational(s).map_err(|e| Error::parse(f.at("c"), e.to_string()))?
                }
                Value::Number(_) => crate::exactalg::Rational::from_integer(f.int("c")?.into()),
                _ => return Err(Error::parse(f.at("c"), "expected a rational")),
            };
            Ok(RawPair {
                id: f.str("id")?,
                support: f.str("support")?,
                phi: f.str("phi")?,
                c,
                a: f.uint("a")?,
                dual: f.str("dual")?,
                eps: f.int("eps")?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let closure_order = top
        .array("closure_order")?
        .iter()
        .enumerate()
        .map(|(i, r)| match r.as_array().map(|a| a.as_slice()) {
            Some([Value::String(a), Value::String(b)]) => Ok((a.clone(), b.clone())),
            _ => Err(Error::parse(
                format!("closure_order[{i}]"),
                "expected [lower, upper]",
            )),
        })
        .collect::<Result<Vec<_>>>()?;
    let total_order = top.strings("total_order")?;
    let d = Fields::new("dims", top.get("dims")?)?;
    let dims = Dims {
        l: d.uint("l")? as usize,
        dim_zl: d.uint("dimZL")? as usize,
        central_rank: d.uint("central_rank")? as usize,
        rank: d.uint("rank")? as usize,
    };
    let y_table = match top.map.get("y_table") {
        None | Some(Value::Null) => Vec::new(),
        Some(_) => top
            .array("y_table")?
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let f = Fields::new(&format!("y_table[{k}]"), t)?;
                let conductor = match f.map.get("conductor") {
                    Some(_) => f.uint("conductor")? as u32,
                    None => 1,
                };
                if conductor == 0 {
                    return Err(Error::parse(
                        f.at("conductor"),
                        "conductor must be positive",
                    ));
                }
                let rows = f
                    .array("rows")?
                    .iter()
                    .enumerate()
                    .map(|(r, row)| {
                        let g = Fields::new(&format!("{}[{r}]", f.at("rows")), row)?;
                        let vals = g
                            .array("values")?
                            .iter()
                            .enumerate()
                            .map(|(i, v)| {
                                parse_scalar(v, conductor, &format!("{}[{i}]", g.at("values")))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Ok((g.str("pair")?, vals))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(RawYTable {
                    support: f.str("support")?,
                    classes: f.strings("classes")?,
                    rows,
                })
            })
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(RawBlock {
        name,
        coxeter: top.str("coxeter")?,
        pairs,
        closure_order,
        total_order,
        dims,
        y_table,
    })
}

pub fn block_from_json(v: &Value) -> Result<BlockDescriptor> {
    BlockDescriptor::from_raw(&raw_from_json(v)?)
}

/// Parses and validates a descriptor document.
pub fn load_block(text: &str) -> Result<BlockDescriptor> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {}", e.line()), e.to_string()))?;
    block_from_json(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{gl_principal_block, sl_block_with_y};

    #[test]
    fn round_trip() {
        for b in [
            gl_principal_block(3).unwrap(),
            sl_block_with_y(4, 4, 3).unwrap(),
        ] {
            let text = serde_json::to_string_pretty(&block_to_json(&b)).unwrap();
            let back = load_block(&text).unwrap();
            assert_eq!(back, b);
            assert_eq!(
                serde_json::to_string_pretty(&block_to_json(&back)).unwrap(),
                text
            );
        }
    }

    #[test]
    fn order_violation_is_reported() {
        let b = gl_principal_block(3).unwrap();
        let mut v = block_to_json(&b);
        v["total_order"] = json!(["3", "2+1", "1+1+1"]);
        match block_from_json(&v) {
            Err(Error::Invariant { path, .. }) => assert_eq!(path, "total_order"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_unitary_y_row_is_reported() {
        let b = gl_principal_block(2).unwrap();
        let mut v = block_to_json(&b);
        v["y_table"][0]["rows"][0]["values"] = json!(["2"]);
        match block_from_json(&v) {
            Err(Error::Invariant { path, message }) => {
                assert_eq!(path, "y_table[0].rows[0]");
                assert!(message.contains("orthonormal"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_paths() {
        let b = gl_principal_block(2).unwrap();
        let mut v = block_to_json(&b);
        v["pairs"][1]["a"] = json!("x");
        match block_from_json(&v) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "pairs[1].a"),
            other => panic!("{other:?}"),
        }
    }
}
