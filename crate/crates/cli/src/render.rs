use invkostka::{ChainStep, Partition, UniPolynomial};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Everything a subcommand produces, ready for any output format.
pub struct Output {
    pub query: Value,
    pub result: Value,
    pub plain: String,
    pub csv_header: Vec<String>,
    pub csv: Vec<Vec<String>>,
    /// Exit with the verification-failure status.
    pub failed: bool,
}

impl Output {
    pub fn poly(query: Value, poly: &UniPolynomial) -> Output {
        Output {
            query,
            result: poly_json(poly),
            plain: format!("{poly}\n"),
            csv_header: vec!["power".into(), "coeff".into()],
            csv: poly
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| vec![i.to_string(), c.to_string()])
                .collect(),
            failed: false,
        }
    }
}

/// Big integers go out as decimal strings.
pub fn int(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

pub fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn expansion_json(terms: &[(Partition, String)]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|(p, c)| json!({"partition": p.parts(), "coeff": c}))
            .collect(),
    )
}

fn poly_json(poly: &UniPolynomial) -> Value {
    json!({"coeffs": poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()})
}

pub fn chain_json(steps: &[ChainStep], values: &[usize], sign: i8) -> Value {
    let steps: Vec<Value> = steps
        .iter()
        .map(|s| json!({"partition": s.partition.parts(), "index": s.index}))
        .collect();
    json!({"steps": steps, "values": values, "sign": sign})
}
