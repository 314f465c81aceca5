//! Frieze tables as staggered ASCII, JSON or LaTeX.

use serde::Serialize;

use crate::cyclo::{Generator, RingElement, Renderer};
use crate::frieze::FriezePattern;
use crate::scalar::Coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Ascii,
    Json,
    Latex,
}

#[derive(Clone, Debug, Default)]
pub struct RenderOptions {
    pub format: Format,
    /// Append decimal approximations with this many fractional digits.
    pub numeric: Option<usize>,
}

/// Row labels in display order: the top row of zeros is -1, then `0..=w+2`.
fn row_labels(width: usize) -> impl Iterator<Item = isize> {
    -1..=(width as isize + 2)
}

struct Table {
    /// `cells[r][j]`, one period, rows in `row_labels` order.
    cells: Vec<Vec<String>>,
    width: usize,
}

fn entry_text<T: Coefficient>(r: &Renderer<T>, e: &RingElement<T>, numeric: Option<usize>) -> String {
    let text = r.render(e);
    match numeric {
        Some(digits) if e.as_integer().is_none() => format!("{text} ({})", e.approximate(digits)),
        _ => text,
    }
}

fn table<T: Coefficient>(f: &FriezePattern<T>, r: &Renderer<T>, numeric: Option<usize>) -> Table {
    let zero = r.render(&f.ring().zero());
    let cells = row_labels(f.width())
        .map(|i| {
            (0..f.m())
                .map(|j| if i < 0 { zero.clone() } else { entry_text(r, f.entry(i as usize, j), numeric) })
                .collect()
        })
        .collect();
    Table { cells, width: f.width() }
}

/// Staggered table over two periods; row `i` starts `i + 1` half-cells in,
/// matching half-column `2j + i` of `E(i, j)`.
pub fn render_ascii<T: Coefficient>(f: &FriezePattern<T>, r: &Renderer<T>, numeric: Option<usize>) -> String {
    let t = table(f, r, numeric);
    let longest = t.cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let cell = (longest + 2).next_multiple_of(2);
    let half = cell / 2;
    let mut out = String::new();
    for (r_idx, row) in t.cells.iter().enumerate() {
        let mut line = " ".repeat(r_idx * half);
        for j in 0..2 * row.len() {
            let s = &row[j % row.len()];
            let len = s.chars().count();
            let left = (cell - len) / 2;
            line.push_str(&" ".repeat(left));
            line.push_str(s);
            line.push_str(&" ".repeat(cell - len - left));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    debug_assert_eq!(t.cells.len(), t.width + 4);
    out
}

#[derive(Serialize)]
struct JsonFrieze<'a> {
    m: usize,
    width: usize,
    conductor: usize,
    minpoly: Vec<String>,
    generators: &'a [Generator],
    row_labels: Vec<isize>,
    rows: Vec<Vec<String>>,
    coefficients: Vec<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    numeric: Option<Vec<Vec<String>>>,
}

/// One period per row; coefficients are decimal strings in the power basis of `c`.
pub fn render_json<T: Coefficient>(f: &FriezePattern<T>, r: &Renderer<T>, numeric: Option<usize>) -> String {
    let ring = f.ring();
    let zero = ring.zero();
    let entries: Vec<Vec<&RingElement<T>>> = row_labels(f.width())
        .map(|i| (0..f.m()).map(|j| if i < 0 { &zero } else { f.entry(i as usize, j) }).collect())
        .collect();
    let doc = JsonFrieze {
        m: f.m(),
        width: f.width(),
        conductor: ring.conductor(),
        minpoly: ring.minpoly().coeffs().iter().map(ToString::to_string).collect(),
        generators: r.generators(),
        row_labels: row_labels(f.width()).collect(),
        rows: entries.iter().map(|row| row.iter().map(|e| r.render(e)).collect()).collect(),
        coefficients: entries
            .iter()
            .map(|row| row.iter().map(|e| e.coeffs().iter().map(ToString::to_string).collect()).collect())
            .collect(),
        numeric: numeric.map(|d| entries.iter().map(|row| row.iter().map(|e| e.approximate(d)).collect()).collect()),
    };
    serde_json::to_string_pretty(&doc).expect("frieze serializes") + "\n"
}

fn latex_entry(s: &str) -> String {
    format!("${}$", s.replace("√2", "\\sqrt 2").replace('·', ""))
}

/// `tabular` with one column per half-step, as in hand-typeset frieze tables.
pub fn render_latex<T: Coefficient>(f: &FriezePattern<T>, r: &Renderer<T>, numeric: Option<usize>) -> String {
    let t = table(f, r, numeric);
    let rows = t.cells.len();
    let per_row = 2 * f.m();
    let columns = 2 * per_row + rows - 1;
    let mut out = String::new();
    out.push_str("{\\scriptsize\\begin{tabular}{");
    out.push_str(&"c".repeat(columns));
    out.push_str("}\n");
    for (r_idx, row) in t.cells.iter().enumerate() {
        let mut cols = vec![String::new(); columns];
        for j in 0..per_row {
            cols[r_idx + 2 * j] = latex_entry(&row[j % row.len()]);
        }
        out.push_str(&cols.join("&"));
        out.push_str("\\\\\n");
    }
    out.push_str("\\end{tabular}}\n");
    out
}

pub fn render_frieze<T: Coefficient>(f: &FriezePattern<T>, r: &Renderer<T>, options: &RenderOptions) -> String {
    match options.format {
        Format::Ascii => render_ascii(f, r, options.numeric),
        Format::Json => render_json(f, r, options.numeric),
        Format::Latex => render_latex(f, r, options.numeric),
    }
}
