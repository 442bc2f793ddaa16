use std::io::Write;
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use foulkes::basis::{BasisCoords, BasisTag};
use foulkes::lattice::{fundamental_domain, params_from_theta, theta_from_params, ParamVector};
use foulkes::oracle::{is_genuine_character, CharacterCertificate, CharacterTable};
use foulkes::product::c_formula_tensor;
use foulkes::rational::{is_integral, parse_pq, to_pq, Rational};

/// Failures of the non-verification commands, split by exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommandError {
    /// Malformed input; exit 2.
    Usage(String),
    /// Input is well formed but fails certification; exit 1.
    Certification(String),
}

impl CommandError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::Usage(_) => 2,
            CommandError::Certification(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CommandError::Usage(m) | CommandError::Certification(m) => m,
        }
    }
}

pub type CommandResult<T> = std::result::Result<T, CommandError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Phi,
    Gamma,
    Psi,
    Omega,
    Irr,
    #[value(name = "c-tensor")]
    CTensor,
}

/// Largest `n` accepted by `export`.
pub const EXPORT_MAX_N: usize = 30;

/// Largest fundamental domain `enumerate` will stream.
pub const ENUMERATE_MAX_SIZE: u64 = 1_000_000;

fn big(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

fn pq_list(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(|r| Value::String(to_pq(r))).collect())
}

/// `{partition: multiplicity}` in canonical order; integers as numbers.
fn multiplicity_map(cert: &CharacterCertificate) -> Value {
    let mut map = Map::new();
    for (lambda, m) in &cert.multiplicities {
        let v = if is_integral(m) { big(m.numer()) } else { Value::String(to_pq(m)) };
        map.insert(lambda.to_string(), v);
    }
    Value::Object(map)
}

fn character_record(a: &ParamVector, theta: &BasisCoords) -> Value {
    let values = theta.to_length_vector();
    let cert = is_genuine_character(&values.lift());
    json!({
        "a": a.entries(),
        "phi_coords": pq_list(&theta.coords),
        "length_values": pq_list(values.values()),
        "multiplicities": multiplicity_map(&cert),
    })
}

fn check_n(n: usize, hi: usize) -> CommandResult<()> {
    if n == 0 || n > hi {
        return Err(CommandError::Usage(format!("n = {n} is outside the supported range [1, {hi}]")));
    }
    Ok(())
}

/// Streams one JSON line per fundamental-domain element; returns the count.
pub fn cmd_enumerate(n: usize, out: &mut impl Write) -> CommandResult<usize> {
    check_n(n, usize::MAX)?;
    let size = foulkes::lattice::lattice_index(n);
    if size > BigInt::from(ENUMERATE_MAX_SIZE) {
        return Err(CommandError::Usage(format!(
            "fundamental domain at n = {n} has {size} elements, limit is {ENUMERATE_MAX_SIZE}"
        )));
    }
    let domain = fundamental_domain(n);
    for e in &domain {
        writeln!(out, "{}", character_record(&e.params, &e.theta)).map_err(io)?;
    }
    Ok(domain.len())
}

fn io(e: std::io::Error) -> CommandError {
    CommandError::Usage(format!("write failed: {e}"))
}

/// Splits `1,2,3`, `[1, 2, 3]` or `["1/3","0"]` into trimmed items.
pub fn split_list(s: &str) -> Vec<String> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.trim().is_empty() {
        return Vec::new();
    }
    inner
        .split(',')
        .map(|t| t.trim().trim_matches('"').trim().to_string())
        .collect()
}

fn expect_len(found: usize, n: Option<usize>) -> CommandResult<usize> {
    if found == 0 {
        return Err(CommandError::Usage("empty vector".into()));
    }
    match n {
        Some(n) if n != found => Err(CommandError::Usage(format!("--n {n} but the vector has {found} entries"))),
        _ => Ok(found),
    }
}

pub fn parse_params(s: &str, n: Option<usize>) -> CommandResult<ParamVector> {
    let items = split_list(s);
    expect_len(items.len(), n)?;
    let a = items
        .iter()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| CommandError::Usage(format!("parameter entry {t:?} is not an integer")))
        })
        .collect::<CommandResult<Vec<i64>>>()?;
    ParamVector::from_signed(&a).map_err(|e| CommandError::Usage(e.to_string()))
}

pub fn parse_coords(s: &str, n: Option<usize>) -> CommandResult<BasisCoords> {
    let items = split_list(s);
    expect_len(items.len(), n)?;
    let coords = items
        .iter()
        .map(|t| parse_pq(t).ok_or_else(|| CommandError::Usage(format!("{t:?} is not a rational p/q"))))
        .collect::<CommandResult<Vec<Rational>>>()?;
    Ok(BasisCoords::new(BasisTag::Phi, coords))
}

/// `theta_a` for a parameter vector, with its certificate.
pub fn cmd_to_theta(a: &ParamVector) -> Value {
    let theta = theta_from_params(a);
    let mut record = character_record(a, &theta);
    record
        .as_object_mut()
        .expect("object")
        .insert("n".into(), json!(a.n()));
    reorder_n_first(record)
}

/// The unique `a` with `theta_a = theta`; fails with exit 1 on a non-character.
pub fn cmd_from_theta(theta: &BasisCoords) -> CommandResult<Value> {
    let a = params_from_theta(theta).map_err(|e| CommandError::Certification(e.to_string()))?;
    Ok(reorder_n_first(json!({
        "n": a.n(),
        "a": a.entries(),
        "phi_coords": pq_list(&theta.coords),
        "length_values": pq_list(theta.to_length_vector().values()),
        "multiplicities": multiplicity_map(&is_genuine_character(&theta.to_length_vector().lift())),
    })))
}

fn reorder_n_first(record: Value) -> Value {
    let Value::Object(map) = record else { return record };
    let mut out = Map::new();
    if let Some(n) = map.get("n") {
        out.insert("n".into(), n.clone());
    }
    for (k, v) in map {
        if k != "n" {
            out.insert(k, v);
        }
    }
    Value::Object(out)
}

fn basis_tag(table: Table) -> Option<BasisTag> {
    match table {
        Table::Phi => Some(BasisTag::Phi),
        Table::Gamma => Some(BasisTag::Gamma),
        Table::Psi => Some(BasisTag::Psi),
        Table::Omega => Some(BasisTag::Omega),
        Table::Irr | Table::CTensor => None,
    }
}

fn table_name(table: Table) -> &'static str {
    match basis_tag(table) {
        Some(tag) => tag.name(),
        None if table == Table::Irr => "irr",
        None => "c-tensor",
    }
}

/// Renders a table; the result ends with a newline.
pub fn cmd_export(table: Table, n: usize, format: Format) -> CommandResult<String> {
    check_n(n, EXPORT_MAX_N)?;
    match (basis_tag(table), format) {
        (Some(tag), Format::Json) => {
            let rows: Vec<Value> = tag.vectors(n).iter().map(|v| pq_list(v.values())).collect();
            let record = json!({
                "table": tag.name(),
                "n": n,
                "row_labels": (0..n).map(|i| format!("{tag}_{i}")).collect::<Vec<_>>(),
                "lengths": (1..=n).collect::<Vec<_>>(),
                "rows": rows,
            });
            Ok(format!("{record}\n"))
        }
        (Some(tag), Format::Csv) => {
            let mut header = vec!["vector".to_string()];
            header.extend((1..=n).map(|l| format!("l={l}")));
            let vectors = tag.vectors(n);
            let rows = vectors.iter().enumerate().map(|(i, v)| {
                let mut row = vec![format!("{tag}_{i}")];
                row.extend(v.values().iter().map(to_pq));
                row
            });
            write_csv(header, rows)
        }
        (None, format) if table == Table::Irr => {
            let t = CharacterTable::of(n);
            let labels: Vec<String> = t.partitions().iter().map(ToString::to_string).collect();
            match format {
                Format::Json => {
                    let record = json!({
                        "table": "irr",
                        "n": n,
                        "partitions": labels,
                        "class_sizes": t.class_sizes().iter().map(big).collect::<Vec<_>>(),
                        "rows": t.rows(),
                    });
                    Ok(format!("{record}\n"))
                }
                Format::Csv => {
                    let mut header = vec!["lambda\\mu".to_string()];
                    header.extend(labels.iter().cloned());
                    let rows = labels.iter().zip(t.rows()).map(|(lambda, row)| {
                        let mut r = vec![lambda.clone()];
                        r.extend(row.iter().map(ToString::to_string));
                        r
                    });
                    write_csv(header, rows)
                }
            }
        }
        (None, format) => {
            let c = c_formula_tensor(n).map_err(|e| CommandError::Usage(e.to_string()))?;
            match format {
                Format::Json => {
                    let tensor: Vec<Value> = (0..n)
                        .map(|i| {
                            Value::Array(
                                (0..n)
                                    .map(|j| Value::Array(c.row(i, j).iter().map(big).collect()))
                                    .collect(),
                            )
                        })
                        .collect();
                    let record = json!({ "table": table_name(table), "n": n, "c": tensor });
                    Ok(format!("{record}\n"))
                }
                Format::Csv => {
                    let header = ["i", "j", "k", "c"].map(String::from).to_vec();
                    let rows = (0..n).flat_map(|i| {
                        let c = &c;
                        (0..n).flat_map(move |j| {
                            (0..n).map(move |k| {
                                vec![i.to_string(), j.to_string(), k.to_string(), c.get(i, j, k).to_string()]
                            })
                        })
                    });
                    write_csv(header, rows)
                }
            }
        }
    }
}

fn write_csv(header: Vec<String>, rows: impl Iterator<Item = Vec<String>>) -> CommandResult<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let fail = |e: csv::Error| CommandError::Usage(format!("csv: {e}"));
    w.write_record(&header).map_err(fail)?;
    for row in rows {
        w.write_record(&row).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| CommandError::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_parsing_accepts_several_spellings() {
        assert_eq!(split_list("0,1,0"), ["0", "1", "0"]);
        assert_eq!(split_list("[0, 1, 0]"), ["0", "1", "0"]);
        assert_eq!(split_list(r#"["1/3","0","0"]"#), ["1/3", "0", "0"]);
        assert!(split_list("[]").is_empty());
    }

    #[test]
    fn to_theta_example() {
        let a = parse_params("[0,1,0]", Some(3)).unwrap();
        let v = cmd_to_theta(&a);
        assert_eq!(v["phi_coords"], json!(["0", "1/2", "0"]));
        assert_eq!(v["multiplicities"]["(2,1)"], json!(1));
    }

    #[test]
    fn from_theta_examples() {
        let theta = parse_coords(r#"["1","1","1"]"#, None).unwrap();
        assert_eq!(cmd_from_theta(&theta).unwrap()["a"], json!([1, 2, 1]));
        let bad = parse_coords("1/3,0,0", Some(3)).unwrap();
        let e = cmd_from_theta(&bad).unwrap_err();
        assert_eq!(e.exit_code(), 1);
        assert!(e.message().contains("multiplicity"), "{}", e.message());
    }

    #[test]
    fn malformed_input_is_a_usage_error() {
        assert_eq!(parse_params("0,x", None).unwrap_err().exit_code(), 2);
        assert_eq!(parse_params("0,-1", None).unwrap_err().exit_code(), 2);
        assert_eq!(parse_coords("1,1", Some(3)).unwrap_err().exit_code(), 2);
        assert_eq!(cmd_export(Table::Irr, 0, Format::Json).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn enumerate_small() {
        let mut buf = Vec::new();
        assert_eq!(cmd_enumerate(3, &mut buf).unwrap(), 2);
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(
            lines[1],
            r#"{"a":[0,1,0],"phi_coords":["0","1/2","0"],"length_values":["-1","0","2"],"multiplicities":{"(3)":0,"(2,1)":1,"(1,1,1)":0}}"#
        );
    }

    #[test]
    fn exports() {
        let phi = cmd_export(Table::Phi, 3, Format::Csv).unwrap();
        assert_eq!(phi, "vector,l=1,l=2,l=3\nphi_0,1,1,1\nphi_1,-2,0,4\nphi_2,1,-1,1\n");
        let c = cmd_export(Table::CTensor, 2, Format::Json).unwrap();
        assert!(c.starts_with(r#"{"table":"c-tensor","n":2,"c":[[[1,"#), "{c}");
        let irr = cmd_export(Table::Irr, 4, Format::Json).unwrap();
        let v: Value = serde_json::from_str(&irr).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 5);
        assert!(v["rows"].as_array().unwrap().iter().all(|r| r.as_array().unwrap().len() == 5));
    }
}
