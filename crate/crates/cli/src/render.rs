//! Output rendering: genus display modes, aligned markdown/CSV tables,
//! and the ASCII diagram of the two-parameter chamber decomposition.

use clap::ValueEnum;
use num::{One, Zero};

use curvestab::walls::ChamberDecomposition;
use curvestab::{GenusPoly, Rat};

/// Output document format.
#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    /// Aligned markdown tables (the default).
    Md,
    /// Comma-separated values.
    Csv,
    /// Pretty-printed JSON.
    Json,
}

/// Whether dimensions print as polynomials in `g` or as integers at a
/// fixed genus. JSON output always stays symbolic.
#[derive(Debug, Copy, Clone)]
pub(crate) enum GenusMode {
    Symbolic,
    At(i64),
}

impl GenusMode {
    pub(crate) fn poly(&self, p: &GenusPoly) -> String {
        match self {
            GenusMode::Symbolic => p.to_string(),
            GenusMode::At(g) => p.eval(*g).to_string(),
        }
    }

    /// `P^(9g-6)` in symbolic mode, `P^12` at a fixed genus; exponents
    /// other than a plain number or the bare `g` get parentheses.
    pub(crate) fn projective(&self, p: &GenusPoly) -> String {
        let s = self.poly(p);
        if s == "g" || s.chars().all(|c| c.is_ascii_digit()) {
            format!("P^{s}")
        } else {
            format!("P^({s})")
        }
    }
}

/// `1/4` for a single coordinate, `(1/10, 3/40)` for several.
pub(crate) fn rat_tuple(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    if parts.len() == 1 {
        parts.into_iter().next().expect("nonempty tuple")
    } else {
        format!("({})", parts.join(", "))
    }
}

/// A rectangular table rendered as aligned markdown or as CSV.
pub(crate) struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub(crate) fn new(headers: &[&str]) -> Table {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub(crate) fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub(crate) fn markdown(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let line = |cells: &[String]| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(cell, width)| format!("{cell:<width$}"))
                .collect();
            format!("| {} |\n", padded.join(" | "))
        };
        let mut out = line(&self.headers);
        let dashes: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        out.push_str(&format!("|-{}-|\n", dashes.join("-|-")));
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }

    pub(crate) fn csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.headers).expect("csv record");
        for row in &self.rows {
            writer.write_record(row).expect("csv record");
        }
        String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv utf8")
    }
}

const DIAGRAM_W: usize = 48;
const DIAGRAM_H: usize = 24;

/// ASCII picture of the triangle `d1, d2 > 0`, `d1 + d2 < 1`: wall `k`
/// draws as the digit `k` (1-based), the hypotenuse as `\`, chamber
/// interiors as `.` with the chamber labels overlaid at their samples.
pub(crate) fn triangle_diagram(dec: &ChamberDecomposition) -> String {
    use curvestab::rat::rat;
    let (w, h) = (DIAGRAM_W as i64, DIAGRAM_H as i64);
    let mut grid = vec![vec![' '; DIAGRAM_W]; DIAGRAM_H];

    for (j, row) in grid.iter_mut().enumerate() {
        for (i, cell) in row.iter_mut().enumerate() {
            // cell (i, j) covers [i/w, (i+1)/w] x [j/h, (j+1)/h]
            let center = (rat(2 * i as i64 + 1, 2 * w), rat(2 * j as i64 + 1, 2 * h));
            if &center.0 + &center.1 >= Rat::one() {
                continue;
            }
            *cell = '.';
            let corners = [
                (rat(i as i64, w), rat(j as i64, h)),
                (rat(i as i64 + 1, w), rat(j as i64, h)),
                (rat(i as i64, w), rat(j as i64 + 1, h)),
                (rat(i as i64 + 1, w), rat(j as i64 + 1, h)),
            ];
            if corners.iter().any(|(x, y)| x + y >= Rat::one()) {
                *cell = '\\';
            }
            // later walls first so that wall 1 wins on overlaps
            for (k, wall) in dec.walls.iter().enumerate().rev() {
                let values: Vec<Rat> = corners
                    .iter()
                    .map(|(x, y)| wall.hyperplane.eval(&[x.clone(), y.clone()]))
                    .collect();
                let positive = values.iter().any(|v| v > &Rat::zero());
                let negative = values.iter().any(|v| v < &Rat::zero());
                let zero = values.iter().any(|v| v.is_zero());
                if (positive && negative) || zero {
                    *cell = char::from_digit((k as u32 + 1).min(35), 36).expect("wall digit");
                }
            }
        }
    }

    for chamber in &dec.chambers {
        let col = (&chamber.sample[0] * rat(w, 1)).floor().to_integer();
        let row = (&chamber.sample[1] * rat(h, 1)).floor().to_integer();
        let col = usize::try_from(col).unwrap_or(0).min(DIAGRAM_W - 1);
        let row = usize::try_from(row).unwrap_or(0).min(DIAGRAM_H - 1);
        let label: Vec<char> = chamber.label.chars().collect();
        let start = col.min(DIAGRAM_W - label.len());
        for (offset, ch) in label.into_iter().enumerate() {
            grid[row][start + offset] = ch;
        }
    }

    let mut out = String::from("d2\n");
    for j in (0..DIAGRAM_H).rev() {
        let row: String = grid[j].iter().collect();
        out.push('|');
        out.push_str(row.trim_end());
        out.push('\n');
    }
    out.push('+');
    out.push_str(&"-".repeat(DIAGRAM_W));
    out.push_str("> d1\n");
    out
}
