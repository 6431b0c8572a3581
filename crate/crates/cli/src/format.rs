//! Fixed, byte-stable rendering of result tables.

use serde_json::Value;

/// Rounds to 12 significant digits and prints the shortest decimal that
/// reads back to the rounded value; scientific notation outside
/// `[1e-4, 1e12)`.
pub fn fmt_float(y: f64) -> String {
    if !y.is_finite() {
        return format!("{y}");
    }
    let rounded = round12(y);
    let mag = rounded.abs();
    if mag == 0.0 {
        "0".into()
    } else if (1e-4..1e12).contains(&mag) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

/// `y` rounded to 12 significant digits, with `-0` folded into `0`.
pub fn round12(y: f64) -> f64 {
    if y == 0.0 {
        return 0.0;
    }
    if !y.is_finite() {
        return y;
    }
    format!("{y:.11e}").parse().expect("round trip of formatted float")
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Cell {
    Int(usize),
    Num(f64),
    Text(&'static str),
    Empty,
}

impl Cell {
    fn render(&self) -> String {
        match *self {
            Cell::Int(k) => k.to_string(),
            Cell::Num(y) => fmt_float(y),
            Cell::Text(t) => t.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(self) -> Value {
        match self {
            Cell::Int(k) => Value::from(k),
            Cell::Num(y) if y.is_finite() => Value::from(round12(y)),
            Cell::Text(t) => Value::from(t),
            Cell::Num(_) | Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(y: f64) -> Self {
        Cell::Num(y)
    }
}

impl From<usize> for Cell {
    fn from(k: usize) -> Self {
        Cell::Int(k)
    }
}

impl From<Option<f64>> for Cell {
    fn from(y: Option<f64>) -> Self {
        y.map_or(Cell::Empty, Cell::Num)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self.rows.iter().map(|r| r.iter().map(|c| c.to_json()).collect()).collect();
        serde_json::json!({ "columns": self.columns, "rows": rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_rendering() {
        assert_eq!(fmt_float(1.0), "1");
        assert_eq!(fmt_float(-0.0), "0");
        assert_eq!(fmt_float(0.1 + 0.2), "0.3");
        assert_eq!(fmt_float(std::f64::consts::PI), "3.14159265359");
        assert_eq!(fmt_float(2.0 / 3.0 * 1e-7), "6.66666666667e-8");
        assert_eq!(fmt_float(1.5e15), "1.5e15");
        assert_eq!(fmt_float(123456.7890123456), "123456.789012");
        assert_eq!(fmt_float(1e-4), "0.0001");
    }

    #[test]
    fn rendering_is_stable_under_reparse() {
        for &y in &[0.123456789012345, -7.77e-12, 31.0 / 64.0, 1e300] {
            let once = fmt_float(y);
            assert_eq!(fmt_float(once.parse().unwrap()), once);
        }
    }

    #[test]
    fn csv_layout() {
        let mut t = Table::new(&["level", "prob", "a3"]);
        t.push(vec![3usize.into(), 1.0.into(), None.into()]);
        assert_eq!(t.to_csv(), "level,prob,a3\n3,1,\n");
        assert_eq!(t.to_json()["rows"][0][2], Value::Null);
    }
}
