//! Standard Young tableaux of rectangular shape `(w, .., w)` with `d` rows.

use serde::{Deserialize, Serialize};

/// A standard filling of the `rows x cols` rectangle with `1..=rows*cols`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RectTableau {
    rows: usize,
    cols: usize,
    /// Row-major entries.
    entries: Vec<usize>,
}

impl RectTableau {
    /// Validates standardness and the entry set.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return None;
        }
        let t = Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        };
        t.is_standard().then_some(t)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Rows increase left to right, columns increase downwards, and the
    /// entries are exactly `1..=rows*cols`.
    pub fn is_standard(&self) -> bool {
        let n = self.rows * self.cols;
        let mut seen = vec![false; n + 1];
        for &e in &self.entries {
            if e == 0 || e > n || seen[e] {
                return false;
            }
            seen[e] = true;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.entry(r, c);
                if c + 1 < self.cols && self.entry(r, c + 1) <= e {
                    return false;
                }
                if r + 1 < self.rows && self.entry(r + 1, c) <= e {
                    return false;
                }
            }
        }
        true
    }

    /// Columns, each read top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.cols)
            .map(|c| (0..self.rows).map(|r| self.entry(r, c)).collect())
            .collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<usize>> {
        self.entries
            .chunks(self.cols)
            .map(<[usize]>::to_vec)
            .collect()
    }
}

/// All standard tableaux of the `d x w` rectangle, sorted by their
/// row-major entry arrays.
pub fn enumerate_standard(d: usize, w: usize) -> Vec<RectTableau> {
    if d == 0 || w == 0 {
        return Vec::new();
    }
    let n = d * w;
    let mut fill = vec![0usize; n];
    // number of cells filled in each row
    let mut lengths = vec![0usize; d];
    let mut out = Vec::new();
    place(1, n, w, &mut lengths, &mut fill, &mut out);
    let mut tableaux: Vec<RectTableau> = out
        .into_iter()
        .map(|entries| RectTableau {
            rows: d,
            cols: w,
            entries,
        })
        .collect();
    tableaux.sort();
    tableaux
}

// Places `next` at the end of any row that keeps the shape a partition.
fn place(
    next: usize,
    n: usize,
    w: usize,
    lengths: &mut [usize],
    fill: &mut [usize],
    out: &mut Vec<Vec<usize>>,
) {
    if next > n {
        out.push(fill.to_vec());
        return;
    }
    for r in 0..lengths.len() {
        let len = lengths[r];
        if len == w || (r > 0 && lengths[r - 1] <= len) {
            continue;
        }
        fill[r * w + len] = next;
        lengths[r] += 1;
        place(next + 1, n, w, lengths, fill, out);
        lengths[r] -= 1;
    }
}
