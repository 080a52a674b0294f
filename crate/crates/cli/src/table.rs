use std::io::Write;

use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Real(f64),
    Empty,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    pub fn as_real(&self) -> Option<f64> {
        match self {
            Cell::Real(v) => Some(*v),
            Cell::Int(v) => Some(*v as f64),
            _ => None,
        }
    }

    /// Reals carry 17 significant digits so they round-trip.
    fn to_csv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format!("{v:.16e}"),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(v) => Value::from(*v),
            Cell::Real(v) => Value::from(*v),
            Cell::Empty => Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| *c == name)
    }

    pub fn get(&self, row: usize, name: &str) -> Option<&Cell> {
        self.column(name).map(|c| &self.rows[row][c])
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_csv))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let record: Map<String, Value> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| ((*c).to_owned(), v.to_json()))
                        .collect();
                    Value::Object(record)
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_round_trip_through_csv() {
        let mut t = Table::new(&["name", "x"]);
        for v in [0.1, 1.0 / 3.0, 6.02214076e23, -2.2250738585072014e-308] {
            t.push(vec![Cell::text("a,b"), Cell::Real(v)]);
        }
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let mut reader = csv::Reader::from_reader(buf.as_slice());
        for (rec, row) in reader.records().zip(&t.rows) {
            let rec = rec.unwrap();
            assert_eq!(&rec[0], "a,b");
            assert_eq!(rec[1].parse::<f64>().unwrap(), row[1].as_real().unwrap());
        }
    }

    #[test]
    fn json_keeps_column_order() {
        let mut t = Table::new(&["z", "a"]);
        t.push(vec![Cell::Int(1), Cell::Empty]);
        assert_eq!(t.to_json().to_string(), r#"[{"z":1,"a":null}]"#);
    }
}
