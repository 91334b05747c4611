//! Per-semigroup queries rendered as ordered key/value records.

use std::io::Write;

use serde_json::{json, Value};

use crate::error::Result;
use crate::herzog::{self, CmVerdict};
use crate::hilbert;
use crate::semigroup::NumericalSemigroup;

/// Ordered `(key, value)` pairs; the order is kept in every format.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Record(pub Vec<(&'static str, Value)>);

impl Record {
    fn push(&mut self, key: &'static str, value: impl Into<Value>) {
        self.0.push((key, value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        Value::Object(
            self.0
                .iter()
                .map(|(k, v)| ((*k).to_owned(), v.clone()))
                .collect(),
        )
    }

    pub fn write_table<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let width = self.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.0 {
            writeln!(out, "{k:<width$}  {}", plain(v))?;
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut out, &self.to_json())?;
        writeln!(out)
    }

    /// One header line and one value line; lists are space separated.
    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(self.0.iter().map(|(k, _)| *k))?;
        w.write_record(self.0.iter().map(|(_, v)| plain(v)))?;
        w.flush()
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(" "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", plain(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn herzog_value(h: &NumericalSemigroup) -> Result<Option<Value>> {
    if h.embedding_dimension() != 3 || h.is_symmetric() {
        return Ok(None);
    }
    let p = herzog::herzog_parameters(h)?;
    Ok(Some(json!({
        "alpha": p.alpha,
        "beta": p.beta,
        "gamma": p.gamma,
        "alpha_p": p.alpha_p,
        "beta_p": p.beta_p,
        "gamma_p": p.gamma_p,
    })))
}

pub fn info(h: &NumericalSemigroup) -> Result<Record> {
    let mut r = Record::default();
    r.push("generators", h.generators().to_vec());
    r.push("multiplicity", h.multiplicity());
    r.push("embedding_dimension", h.embedding_dimension());
    r.push("frobenius", h.frobenius());
    r.push("genus", h.genus());
    r.push("gaps", h.gaps());
    r.push("symmetric", h.is_symmetric());
    r.extend_e1(h)?;
    r.push("blowup", hilbert::blowup(h).generators().to_vec());
    r.push("herzog", herzog_value(h)?);
    r.push("cm", herzog::graded_cm_oracle(h));
    Ok(r)
}

impl Record {
    fn extend_e1(&mut self, h: &NumericalSemigroup) -> Result<()> {
        let summary = hilbert::e1_by_hilbert_poly(h)?;
        self.push("e1", summary.e1);
        self.push("e1_by_genus", hilbert::e1_by_genus(h));
        self.push("e1_by_apery_delta", hilbert::e1_by_apery_delta(h)?);
        self.push("e1_by_hilbert_poly", summary.e1);
        self.push("hilbert_stabilization", summary.stabilization_index);
        Ok(())
    }
}

pub fn apery(h: &NumericalSemigroup, base: Option<i64>) -> Result<Record> {
    let base = base.unwrap_or_else(|| h.multiplicity());
    let table = h.apery_set(base)?;
    let mut r = Record::default();
    r.push("generators", h.generators().to_vec());
    r.push("base", base);
    r.push("apery", table.omegas().to_vec());
    r.push("max", table.max());
    r.push("sum", table.sum()?);
    Ok(r)
}

pub fn frobenius(h: &NumericalSemigroup) -> Record {
    let mut r = Record::default();
    r.push("generators", h.generators().to_vec());
    r.push("frobenius", h.frobenius());
    r
}

pub fn genus(h: &NumericalSemigroup) -> Record {
    let mut r = Record::default();
    r.push("generators", h.generators().to_vec());
    r.push("genus", h.genus());
    r.push("gaps", h.gaps());
    r
}

pub fn e1(h: &NumericalSemigroup) -> Result<Record> {
    let mut r = Record::default();
    r.push("generators", h.generators().to_vec());
    r.extend_e1(h)?;
    let (lo, hi) = hilbert::kirby_bounds(h);
    r.push("kirby_bounds", vec![lo, hi]);
    r.push("blowup", hilbert::blowup(h).generators().to_vec());
    Ok(r)
}

pub fn herzog(h: &NumericalSemigroup) -> Result<Record> {
    let mut r = Record::default();
    r.push("generators", h.generators().to_vec());
    if h.embedding_dimension() != 3 {
        return Err(crate::Error::NotThreeGenerated(h.embedding_dimension()));
    }
    if h.is_symmetric() {
        return Err(crate::Error::SymmetricInput);
    }
    let p = herzog::herzog_parameters(h)?;
    r.push("herzog", herzog_value(h)?);
    r.push("c", vec![p.c1(), p.c2(), p.c3()]);
    r.push(
        "frobenius_from_parameters",
        herzog::frobenius_from_parameters(h, &p).ok(),
    );
    r.push(
        "genus_from_parameters",
        herzog::genus_from_parameters(h, &p).ok(),
    );
    r.push(
        "cm_from_parameters",
        herzog::graded_cm_from_parameters(&p).as_str(),
    );
    Ok(r)
}

pub fn cm(h: &NumericalSemigroup) -> Result<Record> {
    let mut r = Record::default();
    r.push("generators", h.generators().to_vec());
    r.push("cm", herzog::graded_cm_oracle(h));
    let verdict = if h.embedding_dimension() == 3 && !h.is_symmetric() {
        herzog::graded_cm_from_parameters(&herzog::herzog_parameters(h)?)
    } else {
        CmVerdict::Undetermined
    };
    r.push("cm_from_parameters", verdict.as_str());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn info_5_6_8() {
        let r = info(&sg(&[5, 6, 8])).unwrap();
        assert_eq!(r.get("frobenius"), Some(&json!(9)));
        assert_eq!(r.get("genus"), Some(&json!(6)));
        assert_eq!(r.get("e1"), Some(&json!(6)));
        assert_eq!(r.get("cm"), Some(&json!(true)));
    }

    #[test]
    fn info_2_3() {
        let r = info(&sg(&[2, 3])).unwrap();
        assert_eq!(r.get("frobenius"), Some(&json!(1)));
        assert_eq!(r.get("genus"), Some(&json!(1)));
        assert_eq!(r.get("e1"), Some(&json!(1)));
        assert_eq!(r.get("herzog"), Some(&Value::Null));
    }

    #[test]
    fn csv_and_table_rendering() {
        let r = genus(&sg(&[3, 5]));
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "generators,genus,gaps\n3 5,4,1 2 4 7\n"
        );
        let mut buf = Vec::new();
        r.write_table(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "generators  3 5\ngenus       4\ngaps        1 2 4 7\n"
        );
    }

    #[test]
    fn herzog_rejects_symmetric() {
        assert!(herzog(&sg(&[3, 4, 5])).is_ok());
        assert!(matches!(
            herzog(&sg(&[4, 5, 6])),
            Err(crate::Error::SymmetricInput)
        ));
    }
}
