//! Tables rebuilt from library calls.

use std::fmt;
use std::str::FromStr;

use complab::bijection::{
    arndt_to_odd, even_length_step, even_length_step_inverse, odd_length_step, u_fixed_expand,
    v_fixed_expand, CopyIndex, Direction, SplitOrigin, SplitSource, TwoCopyElement, UFixedSource,
    VFixedSource,
};
use complab::count::{count_arndt, count_fixed};
use complab::verify::Permutation;
use complab::{enumerate, h_statistic, Composition, FamilyId, GeneratorSpec};
use serde::Serialize;

use crate::{CliError, OutputFormat};

/// One table cell. Lists hold compositions and serialize as JSON arrays.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Text(String),
    List(Vec<String>),
}

impl Cell {
    fn text(value: impl ToString) -> Self {
        Cell::Text(value.to_string())
    }

    fn list(items: impl IntoIterator<Item = Composition>) -> Self {
        Cell::List(items.into_iter().map(|c| c.to_string()).collect())
    }

    /// Plain rendering; an empty list shows as `{}`.
    pub fn plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::List(items) if items.is_empty() => "{}".to_string(),
            Cell::List(items) => items.join(", "),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::List(items) => items.join(" "),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableId {
    Numbered(u8),
    UExpand,
    VExpand,
}

impl TableId {
    pub const ALL: [TableId; 11] = [
        TableId::Numbered(1),
        TableId::Numbered(2),
        TableId::Numbered(3),
        TableId::Numbered(4),
        TableId::Numbered(5),
        TableId::Numbered(6),
        TableId::Numbered(7),
        TableId::Numbered(8),
        TableId::Numbered(9),
        TableId::UExpand,
        TableId::VExpand,
    ];
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableId::Numbered(i) => write!(f, "{i}"),
            TableId::UExpand => f.write_str("uex"),
            TableId::VExpand => f.write_str("vex"),
        }
    }
}

impl FromStr for TableId {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "uex" => Ok(TableId::UExpand),
            "vex" => Ok(TableId::VExpand),
            other => match other.parse::<u8>() {
                Ok(i @ 1..=9) => Ok(TableId::Numbered(i)),
                _ => Err(CliError::Usage(format!(
                    "unknown table {other:?}; expected 1 to 9, uex or vex"
                ))),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub id: String,
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(id: TableId, title: &str, columns: &[&str]) -> Self {
        Self {
            id: id.to_string(),
            title: title.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Column `j` as plain strings, skipping blank padding cells.
    pub fn column(&self, j: usize) -> Vec<String> {
        self.rows
            .iter()
            .map(|row| row[j].plain())
            .filter(|s| !s.is_empty())
            .collect()
    }

    pub fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::Plain => Ok(self.render_plain()),
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::csv))?;
                }
                let bytes = w.into_inner().map_err(|e| e.into_error())?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
            OutputFormat::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
        }
    }

    fn render_plain(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Cell::plain).collect())
            .collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &cells {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |row: &[String]| {
            let padded: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:<w$}"))
                .collect();
            padded.join(" | ").trim_end().to_string()
        };
        let mut out = format!("Table {}: {}\n", self.id, self.title);
        out.push_str(&line(&self.columns));
        out.push('\n');
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        out.push_str(&rule.join("-+-"));
        out.push('\n');
        for row in &cells {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }
}

fn members(family: FamilyId, n: u32) -> Vec<Composition> {
    enumerate(GeneratorSpec::new(family, n)).collect()
}

pub fn build(id: TableId) -> Result<Table, CliError> {
    match id {
        TableId::Numbered(1) => arndt_listing(id),
        TableId::Numbered(2) => arndt_to_odd_table(id),
        TableId::Numbered(3) => permutation_by_h(id, Permutation::U),
        TableId::Numbered(4) => fixed_listing(id, FamilyId::UFixed),
        TableId::Numbered(5) => permutation_by_h(id, Permutation::V),
        TableId::Numbered(6) => fixed_listing(id, FamilyId::VFixed),
        TableId::Numbered(7) => count_grid(id),
        TableId::Numbered(8) => odd_step_table(id),
        TableId::Numbered(9) => even_step_table(id),
        TableId::UExpand => u_expand_table(id),
        TableId::VExpand => v_expand_table(id),
        TableId::Numbered(other) => Err(CliError::Usage(format!("unknown table {other}"))),
    }
}

fn arndt_listing(id: TableId) -> Result<Table, CliError> {
    let mut t = Table::new(
        id,
        "Arndt compositions A(n) and their counts",
        &["n", "A(n)", "a(n)"],
    );
    for n in 1..=7u32 {
        t.rows.push(vec![
            Cell::text(n),
            Cell::list(members(FamilyId::Arndt(0), n)),
            Cell::text(count_arndt(n.into(), 0)?),
        ]);
    }
    Ok(t)
}

fn arndt_to_odd_table(id: TableId) -> Result<Table, CliError> {
    let mut t = Table::new(id, "Correspondence A(6) -> C_odd(6)", &["A(6)", "C_odd(6)"]);
    for c in members(FamilyId::Arndt(0), 6) {
        let image = arndt_to_odd(&c)?;
        t.rows.push(vec![Cell::text(c), Cell::text(image)]);
    }
    Ok(t)
}

fn permutation_by_h(id: TableId, perm: Permutation) -> Result<Table, CliError> {
    // U buckets h by [2j-2, 2j), V by [2j-1, 2j+1); both start below the first cut
    let (name, first_cut) = match perm {
        Permutation::U => ("U", 0i64),
        Permutation::V => ("V", 1i64),
    };
    let bucket = |h: i64| {
        if h < first_cut {
            0
        } else {
            ((h - first_cut) / 2 + 1) as usize
        }
    };
    let mut columns: Vec<Vec<String>> = Vec::new();
    for c in members(FamilyId::All, 5) {
        let h = h_statistic(&c)?;
        let image = perm.apply(&c);
        let b = bucket(h);
        if columns.len() <= b {
            columns.resize(b + 1, Vec::new());
        }
        columns[b].push(format!("{c} -> {image}"));
    }
    let headers: Vec<String> = (0..columns.len())
        .map(|b| {
            if b == 0 {
                format!("h(c) < {first_cut}")
            } else {
                let lo = first_cut + 2 * (b as i64 - 1);
                format!("{lo} <= h(c) < {}", lo + 2)
            }
        })
        .collect();
    let header_refs: Vec<&str> = headers.iter().map(String::as_str).collect();
    let title = format!("Permutation {name} on C(5) grouped by h");
    let mut t = Table::new(id, &title, &header_refs);
    let height = columns.iter().map(Vec::len).max().unwrap_or(0);
    for i in 0..height {
        t.rows.push(
            columns
                .iter()
                .map(|col| Cell::text(col.get(i).map(String::as_str).unwrap_or("")))
                .collect(),
        );
    }
    Ok(t)
}

fn fixed_listing(id: TableId, family: FamilyId) -> Result<Table, CliError> {
    let (title, cols) = match family {
        FamilyId::UFixed => (
            "Compositions fixed by U and their counts",
            ["n", "C^U(n)", "c^U(n)"],
        ),
        _ => (
            "Compositions fixed by V and their counts",
            ["n", "C^V(n)", "c^V(n)"],
        ),
    };
    let mut t = Table::new(id, title, &cols);
    for n in 1..=10u32 {
        t.rows.push(vec![
            Cell::text(n),
            Cell::list(members(family, n)),
            Cell::text(count_fixed(n.into(), family)?),
        ]);
    }
    Ok(t)
}

fn count_grid(id: TableId) -> Result<Table, CliError> {
    let mut t = Table::new(id, "Generalized Arndt counts a(n,k)", &["k\\n"]);
    t.columns.extend((1..=10).map(|n: i64| n.to_string()));
    for k in (-3..=3i64).rev() {
        let mut row = vec![Cell::text(k)];
        for n in 1..=10 {
            row.push(Cell::text(count_arndt(n, k)?));
        }
        t.rows.push(row);
    }
    Ok(t)
}

fn odd_step_table(id: TableId) -> Result<Table, CliError> {
    let mut t = Table::new(
        id,
        "Odd-length step A^o(6,-1) -> A(5,-1)",
        &["A^o(6,-1)", "A(5,-1)"],
    );
    for c in members(FamilyId::Arndt(-1), 6)
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
    {
        let image = odd_length_step(&c, -1, Direction::Forward)?;
        t.rows.push(vec![Cell::text(c), Cell::text(image)]);
    }
    Ok(t)
}

/// Each row pairs a left element with a copy of `A(4,-1)`; forward rows run
/// over the left side, reverse rows over the two copies.
fn even_step_table(id: TableId) -> Result<Table, CliError> {
    const K: i64 = -1;
    const N: u32 = 6;
    let mut t = Table::new(
        id,
        "Even-length step A^e(6,-1) u A(3,-1) <-> 2A(4,-1)",
        &["side", "left block", "left", "copy", "right"],
    );
    let block_name = |origin: SplitOrigin| match origin {
        SplitOrigin::EvenPart => "A^e(6,-1)",
        SplitOrigin::ShiftPart => "A(3,-1)",
    };
    let evens = members(FamilyId::Arndt(K), N)
        .into_iter()
        .filter(|c| c.len() % 2 == 0)
        .map(SplitSource::even);
    let shifts = members(FamilyId::Arndt(K), (i64::from(N) - 2 + K) as u32)
        .into_iter()
        .map(SplitSource::shift);
    for src in evens.chain(shifts) {
        let image = even_length_step(&src, K)?;
        t.rows.push(vec![
            Cell::text("forward"),
            Cell::text(block_name(src.origin)),
            Cell::text(&src.value),
            Cell::text(image.copy.number()),
            Cell::text(&image.value),
        ]);
    }
    for copy in [CopyIndex::First, CopyIndex::Second] {
        for value in members(FamilyId::Arndt(K), N - 2) {
            let element = TwoCopyElement { copy, value };
            let src = even_length_step_inverse(&element, K, N.into())?;
            t.rows.push(vec![
                Cell::text("reverse"),
                Cell::text(block_name(src.origin)),
                Cell::text(&src.value),
                Cell::text(copy.number()),
                Cell::text(&element.value),
            ]);
        }
    }
    Ok(t)
}

fn u_expand_table(id: TableId) -> Result<Table, CliError> {
    let mut t = Table::new(
        id,
        "Fixed-point expansion C^U(8) u C^U(7) -> C^U(10)",
        &["source block", "source", "C^U(10)"],
    );
    let sources = members(FamilyId::UFixed, 8)
        .into_iter()
        .map(UFixedSource::TwoLess)
        .chain(
            members(FamilyId::UFixed, 7)
                .into_iter()
                .map(UFixedSource::ThreeLess),
        );
    for src in sources {
        let block = match src {
            UFixedSource::TwoLess(_) => "C^U(8)",
            UFixedSource::ThreeLess(_) => "C^U(7)",
        };
        let image = u_fixed_expand(&src)?;
        t.rows.push(vec![
            Cell::text(block),
            Cell::text(src.value()),
            Cell::text(image),
        ]);
    }
    Ok(t)
}

fn v_expand_table(id: TableId) -> Result<Table, CliError> {
    let mut t = Table::new(
        id,
        "Fixed-point expansion C^V(6) u C^V(4) -> C^V(8)",
        &["source block", "source", "C^V(8)"],
    );
    let sources = members(FamilyId::VFixed, 6)
        .into_iter()
        .map(VFixedSource::TwoLess)
        .chain(
            members(FamilyId::VFixed, 4)
                .into_iter()
                .map(VFixedSource::FourLess),
        );
    for src in sources {
        let block = match src {
            VFixedSource::TwoLess(_) => "C^V(6)",
            VFixedSource::FourLess(_) => "C^V(4)",
        };
        let image = v_fixed_expand(&src)?;
        t.rows.push(vec![
            Cell::text(block),
            Cell::text(src.value()),
            Cell::text(image),
        ]);
    }
    Ok(t)
}
